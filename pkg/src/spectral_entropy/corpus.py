"""Fixed graphs and seeded corpora used by ``verify`` and the test-suite."""

from __future__ import annotations

from .graph import Graph, build_graph, complete, complete_bipartite, cycle, erdos_renyi, path

# Two non-isomorphic 8-vertex graphs sharing the L-spectrum {0,0,0,1,1,3,3,4}.
L_COSPECTRAL_PAIR: tuple[Graph, Graph] = (
    build_graph(8, [(0, 1), (1, 2), (4, 5), (5, 6), (5, 3), (4, 6)]),
    build_graph(8, [(0, 1), (1, 2), (4, 5), (5, 6), (1, 7), (4, 6)]),
)

# Triangle plus an isolated vertex, and the star K_{1,3}: Q-spectrum {0,1,1,4}.
Q_COSPECTRAL_PAIR: tuple[Graph, Graph] = (
    build_graph(4, [(0, 3), (0, 2), (3, 2)]),
    build_graph(4, [(0, 3), (3, 1), (3, 2)]),
)

PRODUCT_FACTORS = {
    "K2": complete(2),
    "K3": complete(3),
    "C4": cycle(4),
    "C5": cycle(5),
    "P3": path(3),
}


def named_families(max_n: int = 10) -> dict[str, Graph]:
    out = {}
    for n in range(2, max_n + 1):
        out[f"complete:{n}"] = complete(n)
        out[f"path:{n}"] = path(n)
        if n >= 3:
            out[f"cycle:{n}"] = cycle(n)
        for p in range(1, n // 2 + 1):
            out[f"bipartite:{p},{n - p}"] = complete_bipartite(p, n - p)
    return out


def er_corpus(count: int = 200, max_n: int = 12, base_seed: int = 20240601) -> list[Graph]:
    """``count`` Erdos-Renyi graphs with 2 <= n <= max_n and at least one edge.

    Candidate ``k`` uses seed ``base_seed + k``, ``n = 2 + k % (max_n - 1)`` and
    ``p`` cycling through 0.15, 0.3, 0.5, 0.7, 0.9. Edgeless draws are skipped.
    """
    probs = (0.15, 0.3, 0.5, 0.7, 0.9)
    out = []
    k = 0
    while len(out) < count:
        g = erdos_renyi(2 + k % (max_n - 1), probs[k % len(probs)], base_seed + k)
        if g.m:
            out.append(g)
        k += 1
    return out
