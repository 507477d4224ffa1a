"""Exact real numbers of the form  sum_j  q_j * prod_p p**r_pj.

Each term is a rational coefficient times a product of primes raised to
fractional exponents in (0, 1). Distinct such radical monomials are linearly
independent over Q, so the dictionary representation below is canonical and
``==`` is exact. Products of monomials stay monomials; sums may mix them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

RadicalKey = tuple[tuple[int, Fraction], ...]
Scalar = Union[int, Fraction, "RadicalScalar"]

_ONE_KEY: RadicalKey = ()


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of a positive integer."""
    out = []
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        from sympy import factorint

        out.extend(sorted(factorint(n).items()))
    return tuple(out)


def _factor_fraction(q: Fraction) -> dict[int, int]:
    exps: dict[int, int] = {}
    for p, e in _factor(q.numerator):
        exps[p] = exps.get(p, 0) + e
    for p, e in _factor(q.denominator):
        exps[p] = exps.get(p, 0) - e
    return exps


def _split(exps: dict[int, Fraction]) -> tuple[Fraction, RadicalKey]:
    """Turn prime -> rational exponent into (rational coefficient, radical key)."""
    coeff = Fraction(1)
    key = []
    for p in sorted(exps):
        e = exps[p]
        whole = math.floor(e)
        frac = e - whole
        if whole > 0:
            coeff *= p**whole
        elif whole < 0:
            coeff /= p ** (-whole)
        if frac:
            key.append((p, frac))
    return coeff, tuple(key)


def _mul_keys(k1: RadicalKey, k2: RadicalKey) -> tuple[int, RadicalKey]:
    """Multiply two radical parts; returns (integer carry, radical key)."""
    if not k1:
        return 1, k2
    if not k2:
        return 1, k1
    merged = dict(k1)
    for p, e in k2:
        merged[p] = merged.get(p, 0) + e
    carry = 1
    key = []
    for p in sorted(merged):
        e = merged[p]
        if e >= 1:
            carry *= p
            e -= 1
        if e:
            key.append((p, e))
    return carry, tuple(key)


class RadicalScalar:
    """Exact scalar in the field generated by rational powers of primes."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value: Scalar = 0):
        if isinstance(value, RadicalScalar):
            self._terms = value._terms
        else:
            q = Fraction(value)
            self._terms = {_ONE_KEY: q} if q else {}
        self._hash = None

    @classmethod
    def _from_terms(cls, terms: dict[RadicalKey, Fraction]) -> "RadicalScalar":
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def power(cls, base: int | Fraction, exponent: int | Fraction) -> "RadicalScalar":
        """``base ** exponent`` for rational base and exponent (real branch)."""
        return cls(base) ** Fraction(exponent)

    @classmethod
    def sqrt(cls, x: int | Fraction) -> "RadicalScalar":
        return cls.power(x, Fraction(1, 2))

    @classmethod
    def cbrt(cls, x: int | Fraction) -> "RadicalScalar":
        return cls.power(x, Fraction(1, 3))

    # ------------------------------------------------------------ queries

    def terms(self) -> list[tuple[Fraction, RadicalKey]]:
        return [(c, k) for k, c in sorted(self._terms.items())]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ONE_KEY in self._terms)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self._terms.get(_ONE_KEY, Fraction(0))

    def sign(self) -> int:
        if not self._terms:
            return 0
        if self.is_monomial:
            (c,) = self._terms.values()
            return 1 if c > 0 else -1
        v = float(self)
        if v == 0:
            raise ValueError("cannot decide the sign of a cancelling sum numerically")
        return 1 if v > 0 else -1

    def exponents(self) -> dict[int, Fraction]:
        """Prime -> total exponent of a monomial's absolute value."""
        if not self.is_monomial:
            raise ValueError("exponents() requires a single nonzero term")
        ((key, c),) = self._terms.items()
        exps: dict[int, Fraction] = {p: Fraction(e) for p, e in _factor_fraction(abs(c)).items()}
        for p, e in key:
            exps[p] = exps.get(p, 0) + e
        return {p: e for p, e in exps.items() if e}

    # --------------------------------------------------------- arithmetic

    def __add__(self, other: Scalar) -> "RadicalScalar":
        if not isinstance(other, RadicalScalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return self
                terms = dict(self._terms)
                terms[_ONE_KEY] = terms.get(_ONE_KEY, 0) + other
                return RadicalScalar._from_terms(terms)
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return RadicalScalar._from_terms(terms)

    __radd__ = __add__

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar._from_terms({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "RadicalScalar":
        return self

    def __sub__(self, other: Scalar) -> "RadicalScalar":
        if not isinstance(other, (RadicalScalar, int, Fraction)):
            return NotImplemented
        return self + (-RadicalScalar(other))

    def __rsub__(self, other: Scalar) -> "RadicalScalar":
        return RadicalScalar(other) - self

    def __mul__(self, other: Scalar) -> "RadicalScalar":
        if not isinstance(other, RadicalScalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return _ZERO
                if other == 1:
                    return self
                return RadicalScalar._from_terms({k: c * other for k, c in self._terms.items()})
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        terms: dict[RadicalKey, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                carry, k = _mul_keys(k1, k2)
                terms[k] = terms.get(k, 0) + c1 * c2 * carry
        return RadicalScalar._from_terms(terms)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalScalar":
        if self.is_zero:
            raise ZeroDivisionError("division by zero")
        if not self.is_monomial:
            raise ValueError("inverse of a sum of radicals is not supported")
        return self ** -1

    def __truediv__(self, other: Scalar) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "RadicalScalar":
        return RadicalScalar(other) * self.inverse()

    def __pow__(self, exponent: int | Fraction) -> "RadicalScalar":
        exponent = Fraction(exponent)
        if exponent.denominator == 1 and exponent >= 0 and not self.is_monomial:
            result = RadicalScalar(1)
            base = self
            k = int(exponent)
            while k:
                if k & 1:
                    result = result * base
                base = base * base
                k >>= 1
            return result
        if self.is_zero:
            if exponent > 0:
                return _ZERO
            raise ZeroDivisionError("zero to a non-positive power")
        if not self.is_monomial:
            raise ValueError("rational powers are only defined for monomials")
        ((key, c),) = self._terms.items()
        negative = c < 0
        if negative and exponent.denominator % 2 == 0:
            raise ValueError(f"even root of negative number {self}")
        exps = {p: e * exponent for p, e in self.exponents().items()}
        coeff, new_key = _split(exps)
        if negative and exponent.numerator % 2:
            coeff = -coeff
        return RadicalScalar._from_terms({new_key: coeff})

    def root(self, m: int) -> "RadicalScalar":
        """Real m-th root (principal, non-negative for positive input)."""
        return self ** Fraction(1, m)

    # -------------------------------------------------------- comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({_ONE_KEY: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational:
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __float__(self) -> float:
        total = 0.0
        for key, c in self._terms.items():
            v = float(c)
            for p, e in key:
                v *= float(p) ** float(e)
            total += v
        return total

    # ------------------------------------------------------------ display

    def __repr__(self) -> str:
        return f"RadicalScalar({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for c, key in self.terms():
            rad = "*".join(f"{p}^({e})" for p, e in key)
            if not rad:
                parts.append(str(c))
            elif c == 1:
                parts.append(rad)
            elif c == -1:
                parts.append("-" + rad)
            else:
                parts.append(f"({c})*{rad}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        """``{coeff, radicals}`` for monomials and zero, ``{terms: [...]}`` otherwise."""
        if len(self._terms) <= 1:
            if not self._terms:
                return {"coeff": "0/1", "radicals": []}
            ((key, c),) = self._terms.items()
            return _term_json(c, key)
        return {"terms": [_term_json(c, k) for c, k in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "RadicalScalar":
        if "terms" in data:
            return sum((cls.from_json(t) for t in data["terms"]), _ZERO)
        c = Fraction(data["coeff"])
        if not c:
            return _ZERO
        key = tuple((int(p), Fraction(e)) for p, e in data.get("radicals", []))
        return cls._from_terms({key: c})


def _term_json(c: Fraction, key: RadicalKey) -> dict:
    return {
        "coeff": f"{c.numerator}/{c.denominator}",
        "radicals": [[p, f"{e.numerator}/{e.denominator}"] for p, e in key],
    }


_ZERO = RadicalScalar(0)


def as_radical(x: Scalar) -> RadicalScalar:
    return x if isinstance(x, RadicalScalar) else RadicalScalar(x)


def rsum(values: Iterable[Scalar]) -> RadicalScalar:
    total = _ZERO
    for v in values:
        total = total + v
    return total
