"""Mechanised case analysis for homomorphisms A_RW(T) -> A(T), T the 6-vertex
diameter-3 tree (leaves 1, 2 on hub 5; leaves 3, 4 on hub 6; 5 - 6).

The homomorphism equations are generated symbolically from the two algebras.
The hand-derived equation families are then checked to be literal
consequences of them, and the case split on ``t55 * t65 = 0`` is replayed:

* zeros are propagated with two real-closed rules: a monomial equal to zero
  kills its variable, and a sign-definite sum of even powers kills every
  variable in it;
* residual ideals are handled with Groebner bases, with ``t65 != 0``
  encoded by the Rabinowitsch variable ``w`` (``w * t65 - 1``).

All labels below use the 1-based vertex names ``t_ik``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from .algebra import from_graph, from_random_walk
from .graph import double_star_tree
from .linalg import rref
from .radical import RadicalScalar

N = 6
SYM = [[sp.Symbol(f"t{i + 1}{k + 1}") for k in range(N)] for i in range(N)]
ALL_VARS = [x for row in SYM for x in row]


def t(i: int, k: int) -> sp.Symbol:
    """1-based accessor."""
    return SYM[i - 1][k - 1]


def homomorphism_equations() -> dict[tuple[int, int, int], sp.Expr]:
    """``(i, j, r) -> [f(e_i) f(e_j) - f(e_i e_j)]_r`` for i <= j, 1-based, nonzero only."""
    g = double_star_tree(2, 2)
    src = from_random_walk(g).C
    dst = from_graph(g).C
    out = {}
    for i in range(N):
        for j in range(i, N):
            for r in range(N):
                lhs = sum(SYM[i][k] * SYM[j][k] * dst[k][r] for k in range(N))
                rhs = sum(sp.Rational(src[i][k].numerator, src[i][k].denominator) * SYM[k][r] for k in range(N)) if i == j else 0
                p = sp.expand(lhs - rhs)
                if p != 0:
                    out[(i + 1, j + 1, r + 1)] = p
    return out


def labelled_equations() -> dict[str, list[sp.Expr]]:
    """The hand-derived families, each as a list of ``lhs - rhs`` instances."""
    fam: dict[str, list[sp.Expr]] = {f"exT{n}": [] for n in range(1, 13)}
    pairs = [(i, j) for i in range(1, 7) for j in range(1, 7) if i < j]
    for i, j in pairs:
        for k in (5, 6):
            fam["exT1"].append(t(i, k) * t(j, k))
        for k in (1, 3):
            fam["exT2"].append(t(i, k) * t(j, k) + t(i, k + 1) * t(j, k + 1))
    for k, ells in ((5, (1, 2)), (6, (3, 4))):
        for ell in ells:
            fam["exT3"].append(t(k, 5) - (t(ell, 1) ** 2 + t(ell, 2) ** 2 + t(ell, 6) ** 2))
            fam["exT4"].append(t(k, 6) - (t(ell, 3) ** 2 + t(ell, 4) ** 2 + t(ell, 5) ** 2))
            fam["exT5"].append(t(k, 1) - t(ell, 5) ** 2)
            fam["exT5"].append(t(k, 2) - t(ell, 5) ** 2)
            fam["exT6"].append(t(k, 3) - t(ell, 6) ** 2)
            fam["exT6"].append(t(k, 4) - t(ell, 6) ** 2)
            fam["exT7"].append(3 * t(5, k) ** 2 - (t(1, ell) + t(2, ell) + t(6, ell)))
            fam["exT10"].append(3 * t(6, k) ** 2 - (t(3, ell) + t(4, ell) + t(5, ell)))
    fam["exT8"].append(3 * (t(5, 1) ** 2 + t(5, 2) ** 2 + t(5, 6) ** 2) - (t(1, 5) + t(2, 5) + t(6, 5)))
    fam["exT9"].append(3 * (t(5, 3) ** 2 + t(5, 4) ** 2 + t(5, 5) ** 2) - (t(1, 6) + t(2, 6) + t(6, 6)))
    fam["exT11"].append(3 * (t(6, 1) ** 2 + t(6, 2) ** 2 + t(6, 6) ** 2) - (t(3, 5) + t(4, 5) + t(5, 5)))
    fam["exT12"].append(3 * (t(6, 3) ** 2 + t(6, 4) ** 2 + t(6, 5) ** 2) - (t(3, 6) + t(4, 6) + t(5, 6)))
    return fam


class LinearSpan:
    """Q-linear span of polynomials, for repeated membership tests."""

    def __init__(self, basis: list[sp.Expr]):
        polys = [dict(sp.Poly(b, *ALL_VARS).terms()) for b in basis]
        self.monos = sorted({m for p in polys for m in p})
        self.index = {m: c for c, m in enumerate(self.monos)}
        rows = [[p.get(m, 0) for m in self.monos] for p in polys]
        reduced, self.pivots = rref(rows)
        self.rows = reduced[: len(self.pivots)]

    def __contains__(self, target: sp.Expr) -> bool:
        terms = dict(sp.Poly(target, *ALL_VARS).terms())
        if any(m not in self.index for m in terms):
            return False
        v = [Fraction(int(sp.numer(terms.get(m, 0))), int(sp.denom(terms.get(m, 0)))) for m in self.monos]
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        return not any(v)


def _sign_definite_even(p: sp.Poly) -> bool:
    coeffs = p.coeffs()
    if not (all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs)):
        return False
    return all(all(e % 2 == 0 for e in m) for m in p.monoms())


def propagate_zeros(eqs: list[sp.Expr], known: dict[sp.Symbol, sp.Expr]) -> tuple[dict, list[str], bool]:
    """Real-closed zero propagation to a fixpoint; returns (known, log, infeasible)."""
    known = dict(known)
    log: list[str] = []
    changed = True
    while changed:
        changed = False
        for e in eqs:
            s = sp.expand(e.subs(known))
            if s == 0:
                continue
            if s.is_number:
                log.append(f"{sp.sstr(e)} reduces to {sp.sstr(s)} = 0, impossible")
                return known, log, True
            free = sorted(s.free_symbols, key=str)
            p = sp.Poly(s, *free)
            if _sign_definite_even(p):
                if p.TC() != 0:
                    log.append(f"{sp.sstr(s)} = 0 has no real solution")
                    return known, log, True
                for v in free:
                    known[v] = sp.Integer(0)
                log.append(f"{sp.sstr(s)} = 0, a sign-definite sum of even powers  =>  {', '.join(map(str, free))} = 0")
                changed = True
            elif len(p.terms()) == 1 and len(free) == 1:
                known[free[0]] = sp.Integer(0)
                log.append(f"{sp.sstr(s)} = 0  =>  {free[0]} = 0")
                changed = True
    return known, log, False


@dataclass
class CaseResult:
    name: str
    assumption: str
    zeros: list[str]
    groebner: list[str]
    consistent: bool
    null_map: bool
    log: list[str] = field(default_factory=list)


def _run_case(name, assumption, eqs, known, nonzero=None) -> CaseResult:
    known, log, infeasible = propagate_zeros(eqs, known)
    zeros = sorted(str(v) for v in known if known[v] == 0)
    if infeasible or (nonzero is not None and known.get(nonzero) == 0):
        if not infeasible:
            log.append(f"{nonzero} = 0 contradicts the case assumption")
        return CaseResult(name, assumption, zeros, ["1"], False, False, log)
    rest = sorted({r for r in (sp.expand(e.subs(known)) for e in eqs) if r != 0}, key=sp.default_sort_key)
    if not rest:
        null = all(known.get(v) == 0 for v in ALL_VARS)
        return CaseResult(name, assumption, zeros, [], True, null, log)
    gens = sorted({v for r in rest for v in r.free_symbols}, key=str)
    if nonzero is not None:
        w = sp.Symbol("w")
        rest, gens = rest + [w * nonzero - 1], gens + [w]
    basis = [sp.sstr(b) for b in sp.groebner(rest, *gens, order="grevlex").exprs]
    return CaseResult(name, assumption, zeros, basis, basis != ["1"], False, log)


@dataclass
class TreeReport:
    derived_count: int
    labels_checked: dict[str, bool]
    product_split: bool
    exT13: bool
    cases: list[CaseResult]
    t56: RadicalScalar
    t65_route1: RadicalScalar
    t65_route2: RadicalScalar
    published_t56: RadicalScalar
    published_t65_route1: RadicalScalar
    published_t65_route2: RadicalScalar
    slip_member: bool
    correct_member: bool
    null_only: bool
    transcript: list[str]

    @property
    def published_t56_matches(self) -> bool:
        return self.t56 == self.published_t56

    @property
    def contradiction(self) -> bool:
        return self.t65_route1 != self.t65_route2

    def to_json(self) -> dict:
        return {
            "labels_checked": self.labels_checked,
            "t56": str(self.t56),
            "t65_route1": str(self.t65_route1),
            "t65_route2": str(self.t65_route2),
            "published_t56": str(self.published_t56),
            "published_t65": [str(self.published_t65_route1), str(self.published_t65_route2)],
            "published_t56_matches": self.published_t56_matches,
            "contradiction": self.contradiction,
            "null_only": self.null_only,
        }


def _exT13_certificates(fam) -> bool:
    """x**4 lies in the ideal of exT1 (k = 5, 6), exT5, exT6 for the 16 mixed entries."""
    gens = fam["exT1"] + fam["exT5"] + fam["exT6"]
    used = sorted({v for e in gens for v in e.free_symbols}, key=str)
    G = sp.groebner(gens, *used, order="grevlex")
    targets = [t(k, i) for k in (5, 6) for i in (1, 2, 3, 4)] + [t(i, k) for k in (5, 6) for i in (1, 2, 3, 4)]
    return all(G.reduce(x**4)[1] == 0 for x in targets)


def _case2_t56_relation(fam) -> tuple[bool, bool]:
    """Within the cited premises (exT2 k=3, exT4 k=5, exT7 k=6 plus exT13 zeros) test
    membership of 2 t56 - 18 t56^4 (what follows) and 2 t56 - 9 t56^4 (what was printed)."""
    zero = {t(k, i): 0 for k in (5, 6) for i in (1, 2, 3, 4)}
    zero.update({t(i, k): 0 for k in (5, 6) for i in (1, 2, 3, 4)})
    prem = [
        t(1, 3) * t(2, 3) + t(1, 4) * t(2, 4),
        t(5, 6) - (t(1, 3) ** 2 + t(1, 4) ** 2),
        t(5, 6) - (t(2, 3) ** 2 + t(2, 4) ** 2),
        3 * t(5, 6) ** 2 - (t(1, 3) + t(2, 3) + t(6, 3)),
        3 * t(5, 6) ** 2 - (t(1, 4) + t(2, 4) + t(6, 4)),
    ]
    prem = [sp.expand(p.subs(zero)) for p in prem]
    gens = sorted({v for p in prem for v in p.free_symbols}, key=str)
    G = sp.groebner(prem, *gens, order="lex")
    x = t(5, 6)
    return G.reduce(2 * x - 18 * x**4)[1] == 0, G.reduce(2 * x - 9 * x**4)[1] == 0


def verify_tree_example() -> TreeReport:
    lines: list[str] = []
    derived = homomorphism_equations()
    eqs = list(derived.values())
    lines.append(f"derived {len(eqs)} nonzero homomorphism equations from A_RW(T) -> A(T)")

    fam = labelled_equations()
    span = LinearSpan(eqs)
    checked = {name: all(e in span for e in inst) for name, inst in fam.items()}
    for name, ok in checked.items():
        lines.append(f"{name}: {len(fam[name])} instance(s) in the span of the derived set: {ok}")

    split = t(5, 5) * t(6, 5) in span
    lines.append(f"t55*t65 = 0 is a derived equation: {split}; cases t55 = t65 = 0 / t55 = 0 != t65 / t55 != 0 = t65")

    cert = _exT13_certificates(fam)
    lines.append(f"exT13 (16 mixed entries vanish): x^4 in the ideal for each: {cert}")
    zeros13 = {t(k, i): sp.Integer(0) for k in (5, 6) for i in (1, 2, 3, 4)}
    zeros13.update({t(i, k): sp.Integer(0) for k in (5, 6) for i in (1, 2, 3, 4)})

    cases = [
        _run_case("case 1", "t55 = t65 = 0", eqs, {**zeros13, t(5, 5): 0, t(6, 5): 0}),
        _run_case("case 2", "t55 = 0, t65 != 0", eqs, {**zeros13, t(5, 5): 0}, nonzero=t(6, 5)),
        _run_case("case 3", "t65 = 0, t55 != 0", eqs, {**zeros13, t(6, 5): 0}, nonzero=t(5, 5)),
    ]
    for c in cases:
        lines.append(f"{c.name} ({c.assumption}):")
        lines.extend(f"  {step}" for step in c.log)
        if c.groebner:
            lines.append(f"  groebner basis of the remainder: {c.groebner}")
        lines.append(f"  consistent: {c.consistent}; forces the null map: {c.null_map}")

    correct, slip = _case2_t56_relation(fam)
    lines.append(f"case 2 premises give 2 t56 = 18 t56^4: {correct}; give 2 t56 = 9 t56^4: {slip}")

    # 18 x^3 = 2  ->  x = 9^(-1/3); route 1: t65 = 3 t56^2; route 2: 3 t65^2 = t56
    t56 = RadicalScalar(Fraction(1, 9)).root(3)
    r1 = 3 * t56 * t56
    r2 = (t56 / 3).root(2)
    p56 = RadicalScalar(Fraction(2, 9)).root(3)
    p1 = 3 * p56 * p56
    p2 = (p56 / 3).root(2)
    lines.append(f"t56 = {t56}; t65 = 3 t56^2 = {r1}; t65 = sqrt(t56/3) = {r2}; equal: {r1 == r2}")
    lines.append(f"printed values: t56 = {p56}, t65 = {p1} vs {p2}")
    lines.append(f"printed t56 agrees with the derivation: {t56 == p56}")

    null_only = all(c.null_map or not c.consistent for c in cases)
    lines.append(f"conclusion: {'only the null map' if null_only else 'nonzero homomorphisms possible'}")
    return TreeReport(
        derived_count=len(eqs),
        labels_checked=checked,
        product_split=split,
        exT13=cert,
        cases=cases,
        t56=t56,
        t65_route1=r1,
        t65_route2=r2,
        published_t56=p56,
        published_t65_route1=p1,
        published_t65_route2=p2,
        slip_member=slip,
        correct_member=correct,
        null_only=null_only,
        transcript=lines,
    )
