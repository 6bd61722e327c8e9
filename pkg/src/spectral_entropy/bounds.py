"""Entropy bounds from graph parameters, with their prerequisites.

Every entropy bound here comes from a bound B on the moment sum S_q. The map
S -> (S**((1-r)/(1-q)) - 1)/(1-r) is increasing in S when q < 1 and
decreasing when q > 1. So a moment upper bound becomes an entropy upper bound
only for 0 < q < 1; for q > 1 it is a lower bound. Bounds are computed for
every q. The report marks which ones are in the verified regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .entropy import LIMIT_TOL, EntropyParams, Family, entropy
from .errors import (
    EmptyGraph,
    NotBipartite,
    NotConnected,
    NotRegular,
    ParameterAtLimit,
    SpectralEntropyError,
    TooLarge,
    TooManyEdges,
    TooSmall,
)
from .graph import Graph, MatrixKind, degrees, is_bipartite, is_connected, is_regular
from .spectra import density_spectrum, graph_spectrum

CLIQUE_MAX_N = 64
SUBGRAPH_MAX_M = 20


def _need_edges(g: Graph) -> None:
    if g.m < 1:
        raise EmptyGraph("bound needs at least one edge")


def entropy_from_moment(s_q: float, q: float, r: float, limit_tol: float = LIMIT_TOL) -> float:
    """Apply the Sharma-Mittal transform (or its r -> 1 Renyi limit) to a moment value."""
    if abs(q - 1.0) <= limit_tol:
        raise ParameterAtLimit("moment-based bounds are undefined at q = 1")
    if abs(r - 1.0) <= limit_tol:
        return math.log2(s_q) / (1.0 - q)
    return math.expm1((1.0 - r) / (1.0 - q) * math.log(s_q)) / (1.0 - r)


# -- L-spectrum bounds -----------------------------------------------------------

def max_adjacent_degree_sum(g: Graph) -> int:
    """max over edges uv of d_u + d_v; an upper bound on the largest L eigenvalue."""
    _need_edges(g)
    deg = degrees(g)
    return max(deg[u] + deg[v] for u, v in g.edges)


def sm_upper_L(g: Graph, q: float, r: float) -> float:
    _need_edges(g)
    x = max_adjacent_degree_sum(g) / (2 * g.m)
    return entropy_from_moment(g.n * x ** q, q, r)


def sm_upper_regular(g: Graph, q: float, r: float) -> float:
    k = is_regular(g)
    if k is None:
        raise NotRegular("graph is not regular")
    _need_edges(g)
    if abs(r - 1.0) <= LIMIT_TOL:
        return entropy_from_moment(2.0 ** q * g.n ** (1.0 - q), q, r)
    return (2.0 ** (q * (1.0 - r) / (1.0 - q)) * g.n ** (1.0 - r) - 1.0) / (1.0 - r)


def _bareiss_det(a: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in a]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: the (0, 0) cofactor of L(G), computed exactly."""
    if g.n < 2:
        raise TooSmall("spanning tree count needs n >= 2")
    deg = degrees(g)
    lap = [[0] * g.n for _ in range(g.n)]
    for i, d in enumerate(deg):
        lap[i][i] = d
    for u, v in g.edges:
        lap[u][v] = lap[v][u] = -1
    return _bareiss_det([row[1:] for row in lap[1:]])


def bipartite_moment_lower(g: Graph, q: float) -> float:
    """Lower bound on sum(lambda**q) for a connected bipartite graph:
    (sum d**2 / m)**q + (n - 2) * (t n m / sum d**2) ** (q / (n - 2))."""
    if g.n < 3:
        raise TooSmall("bound needs n >= 3")
    if not is_bipartite(g)[0]:
        raise NotBipartite("graph is not bipartite")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    sq = sum(d * d for d in degrees(g))
    t = spanning_tree_count(g)
    m, n = g.m, g.n
    return (sq / m) ** q + (n - 2) * (t * n * m / sq) ** (q / (n - 2))


def bipartite_lower_L(g: Graph, q: float, r: float) -> float:
    rhs = bipartite_moment_lower(g, q)
    return entropy_from_moment(rhs / (2 * g.m) ** q, q, r)


# -- Q-spectrum bounds -----------------------------------------------------------

def q_max_edge_bound(g: Graph) -> float:
    """sqrt(4m + 2(n-1)(n-2)), an upper bound on the largest Q eigenvalue."""
    return math.sqrt(4 * g.m + 2 * (g.n - 1) * (g.n - 2))


def q_upper_edge_bound(g: Graph, q: float, r: float) -> float:
    _need_edges(g)
    return entropy_from_moment(g.n * (q_max_edge_bound(g) / (2 * g.m)) ** q, q, r)


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound with greedy colouring bounds."""
    if g.n > CLIQUE_MAX_N:
        raise TooLarge(f"clique search is limited to n <= {CLIQUE_MAX_N}")
    nbr = [sum(1 << v for v in g.neighbours[u]) for u in range(g.n)]
    best = 0

    def colour_order(cand: int) -> list[tuple[int, int]]:
        # (vertex, colour number) sorted by colour; colour bounds the clique size
        out = []
        uncoloured, colour = cand, 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~nbr[v]
                uncoloured &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(size: int, cand: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_order(cand)):
            if size + colour <= best:
                return
            new = cand & nbr[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def q_max_clique_bound(g: Graph) -> float:
    """Maximum degree + n(1 - 1/w), an upper bound on the largest Q eigenvalue."""
    w = clique_number(g)
    return max(degrees(g)) + g.n * (1.0 - 1.0 / w)


def q_upper_clique_bound(g: Graph, q: float, r: float) -> float:
    _need_edges(g)
    return entropy_from_moment(g.n / (2 * g.m) ** q * q_max_clique_bound(g) ** q, q, r)


@dataclass(frozen=True)
class Mu1Bound:
    value: float
    subgraph_sum: int
    mu1: float
    applicable: bool
    note: str


def spanning_subgraph_sum(g: Graph, base: int = 4) -> int:
    """Sum of base**nc(S) over all 2**m spanning subgraphs S.

    Depth-first over edges with a union-find that is rolled back on return;
    union by size, no path compression, so every undo is O(1).
    """
    if g.m > SUBGRAPH_MAX_M:
        raise TooManyEdges(f"enumeration is limited to m <= {SUBGRAPH_MAX_M}")
    parent = list(range(g.n))
    size = [1] * g.n
    edges = g.edges

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i: int, comps: int) -> int:
        if i == len(edges):
            return base ** comps
        total = walk(i + 1, comps)  # edge left out
        a, b = find(edges[i][0]), find(edges[i][1])
        if a == b:
            return total + walk(i + 1, comps)
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        total += walk(i + 1, comps - 1)
        size[a] -= size[b]
        parent[b] = b
        return total

    return walk(0, g.n)


def spanning_subgraph_mu1_lower(g: Graph) -> Mu1Bound:
    """((n-1)/2m)**(n-1) * sum_S 4**nc(S), checked against the actual smallest Q eigenvalue.

    The expression is evaluated exactly as stated, but it is not a valid bound in
    general; K_2 gives 10 while mu_1 = 0. ``applicable`` records whether it
    holds for this graph.
    """
    _need_edges(g)
    total = spanning_subgraph_sum(g)
    value = float(Fraction(g.n - 1, 2 * g.m) ** (g.n - 1) * total)
    mu1 = float(graph_spectrum(g, MatrixKind.SIGNLESS_LAPLACIAN).values[0])
    holds = value <= mu1 + 1e-9
    note = "holds for this graph" if holds else f"violated: bound {value:.6g} > mu_1 {mu1:.6g}"
    return Mu1Bound(value, total, mu1, holds, note)


# -- report -------------------------------------------------------------------------

class Side(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class BoundEntry:
    name: str
    side: Side
    value: float | None
    applicable: bool
    regime_valid: bool
    reason: str = ""
    prerequisites: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SpectralCheck:
    name: str
    bound: float
    actual: float

    @property
    def holds(self) -> bool:
        return self.actual <= self.bound + 1e-9


@dataclass(frozen=True)
class BoundReport:
    kind: MatrixKind
    q: float
    r: float
    measured: float
    entries: tuple[BoundEntry, ...]
    spectral: tuple[SpectralCheck, ...]

    def entry(self, name: str) -> BoundEntry:
        return next(e for e in self.entries if e.name == name)

    def violations(self, slack: float = 1e-9) -> list[BoundEntry]:
        """Applicable entries in the verified regime that fail to bracket ``measured``."""
        bad = []
        for e in self.entries:
            if not (e.applicable and e.regime_valid) or e.value is None:
                continue
            if e.side is Side.UPPER and e.value < self.measured - slack:
                bad.append(e)
            if e.side is Side.LOWER and e.value > self.measured + slack:
                bad.append(e)
        return bad


def _entry(name: str, side: Side, fn, regime_valid: bool, prereq=None) -> BoundEntry:
    try:
        value = fn()
    except SpectralEntropyError as exc:
        return BoundEntry(name, side, None, False, regime_valid,
                          f"{type(exc).__name__}: {exc}", prereq or {})
    reason = "" if regime_valid else "q >= 1: moment bound does not transfer in this direction"
    return BoundEntry(name, side, value, True, regime_valid, reason, prereq or {})


def bound_report(g: Graph, q: float, r: float,
                 kind: MatrixKind = MatrixKind.LAPLACIAN) -> BoundReport:
    _need_edges(g)
    spec = graph_spectrum(g, kind)
    measured = entropy(density_spectrum(spec, g.m), EntropyParams(Family.SHARMA_MITTAL, q, r))
    top = float(spec.values[-1])
    in_regime = 0 < q < 1
    entries = []
    spectral = []
    deg = degrees(g)

    if kind is MatrixKind.LAPLACIAN:
        bound = max_adjacent_degree_sum(g)
        spectral.append(SpectralCheck("lambda_max <= max(d_u + d_v)", bound, top))
        entries.append(_entry("sm_upper_L", Side.UPPER, lambda: sm_upper_L(g, q, r), in_regime,
                              {"max_adjacent_degree_sum": bound}))
        entries.append(_entry("sm_upper_regular", Side.UPPER, lambda: sm_upper_regular(g, q, r),
                              in_regime, {"regularity": is_regular(g)}))
        prereq = {}
        if g.n >= 2:
            prereq["spanning_trees"] = spanning_tree_count(g)
        prereq["sum_degree_squares"] = sum(d * d for d in deg)
        entries.append(_entry("bipartite_lower_L", Side.LOWER, lambda: bipartite_lower_L(g, q, r),
                              in_regime, prereq))
    else:
        edge_bound = q_max_edge_bound(g)
        spectral.append(SpectralCheck("mu_max <= sqrt(4m + 2(n-1)(n-2))", edge_bound, top))
        entries.append(_entry("q_upper_edge_bound", Side.UPPER,
                              lambda: q_upper_edge_bound(g, q, r), in_regime,
                              {"mu_max_bound": edge_bound}))
        try:
            w = clique_number(g)
        except TooLarge as exc:
            entries.append(BoundEntry("q_upper_clique_bound", Side.UPPER, None, False, in_regime,
                                      f"TooLarge: {exc}"))
        else:
            clique_bound = q_max_clique_bound(g)
            spectral.append(SpectralCheck("mu_max <= delta + n(1 - 1/w)", clique_bound, top))
            entries.append(_entry("q_upper_clique_bound", Side.UPPER,
                                  lambda: q_upper_clique_bound(g, q, r), in_regime,
                                  {"clique_number": w, "max_degree": max(deg)}))
        entries.append(_mu1_entry(g, q, r, in_regime))

    return BoundReport(kind, q, r, measured, tuple(entries), tuple(spectral))


def _mu1_entry(g: Graph, q: float, r: float, in_regime: bool) -> BoundEntry:
    name = "spanning_subgraph_lower_Q"
    try:
        mb = spanning_subgraph_mu1_lower(g)
    except SpectralEntropyError as exc:
        return BoundEntry(name, Side.LOWER, None, False, in_regime, f"{type(exc).__name__}: {exc}")
    prereq = {"mu1_bound": mb.value, "mu1": mb.mu1, "subgraph_sum": mb.subgraph_sum}
    # S_q >= n * (mu_1 / 2m)**q is what the moment step needs
    try:
        value = entropy_from_moment(g.n / (2 * g.m) ** q * mb.value ** q, q, r)
    except (ValueError, OverflowError) as exc:
        return BoundEntry(name, Side.LOWER, None, False, in_regime, f"not evaluable: {exc}", prereq)
    reason = "NOT VERIFIED; " + mb.note
    return BoundEntry(name, Side.LOWER, value, mb.applicable, in_regime, reason, prereq)
