"""Write every connected graph on 2..7 vertices (networkx atlas) as graph6 lines."""

import sys
from pathlib import Path

import networkx as nx

out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_n2_7.g6")
lines = []
for g in nx.graph_atlas_g():
    if g.number_of_nodes() >= 2 and nx.is_connected(g):
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
out.write_text("\n".join(lines) + "\n")
print(f"{len(lines)} graphs -> {out}")
