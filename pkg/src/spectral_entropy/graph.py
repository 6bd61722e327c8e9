"""Simple undirected graphs, standard families, matrices and graph products.

Vertices are ``0..n-1``. Edges are stored once as ``(u, v)`` with ``u < v``,
sorted lexicographically, so two graphs compare equal iff they have the same
vertex count and the same labelled edge set.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    InvalidCount,
    InvalidParameter,
    ParseError,
    SelfLoop,
    SizeCapExceeded,
)

DEFAULT_VERTEX_CAP = 20_000
VERTEX_CAP_ENV = "SPECTRAL_ENTROPY_VERTEX_CAP"


class MatrixKind(Enum):
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"

    @classmethod
    def parse(cls, text: str) -> "MatrixKind":
        key = text.strip().upper()
        for kind in cls:
            if key in (kind.value, kind.name):
                return kind
        raise InvalidParameter(f"unknown matrix kind {text!r} (expected L or Q)")


class ProductKind(Enum):
    CARTESIAN = "cartesian"
    KRONECKER = "kronecker"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    CORONA = "corona"

    @classmethod
    def parse(cls, text: str) -> "ProductKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise InvalidParameter(f"unknown product {text!r} (expected one of {names})") from None


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbours[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalise an edge list; duplicate edges are merged."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise InvalidCount(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    canon = set()
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


# -- families -----------------------------------------------------------------

class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014); 64-bit state, 64-bit output.

    Used for the ``er`` family so that seeded corpora can be regenerated
    bit-for-bit in any language: draw ``next_u64()``, keep its top 53 bits,
    and scale by 2**-53 to get a double in [0, 1).
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidParameter(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    # K_1 is allowed: it is the canonical edgeless input for empty-graph handling.
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InvalidParameter(f"bipartite needs p, q >= 1, got {p}, {q}")
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one SplitMix64 draw per vertex pair in lexicographic order."""
    if n < 1:
        raise InvalidParameter(f"er needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"er edge probability must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.uniform() < p])


def _ints(args: list[str], count: int, family: str) -> list[int]:
    if len(args) != count:
        raise ParseError(f"{family} expects {count} argument(s), got {len(args)}")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise ParseError(f"{family}: non-integer argument in {args}") from None


def parse_family(spec: str) -> tuple[str, tuple]:
    """Split ``"name:a,b,..."`` into the family name and typed arguments."""
    name, sep, rest = spec.strip().partition(":")
    name = name.strip().lower()
    if not sep:
        raise ParseError(f"generator spec {spec!r} must look like family:args")
    args = [a.strip() for a in rest.split(",")] if rest.strip() else []
    if name in ("cycle", "path", "complete"):
        return name, tuple(_ints(args, 1, name))
    if name == "bipartite":
        return name, tuple(_ints(args, 2, name))
    if name == "er":
        if len(args) != 3:
            raise ParseError("er expects n,p,seed")
        try:
            return name, (int(args[0]), float(args[1]), int(args[2]))
        except ValueError:
            raise ParseError(f"er: bad arguments {args}") from None
    raise ParseError(f"unknown graph family {name!r}")


def generate(spec: str) -> Graph:
    """Build a named graph from a spec string.

    Recognised: ``cycle:n``, ``path:n``, ``complete:n``, ``bipartite:p,q``
    and ``er:n,p,seed``.
    """
    name, args = parse_family(spec)
    if name == "cycle":
        return cycle(*args)
    if name == "path":
        return path(*args)
    if name == "complete":
        return complete(*args)
    if name == "bipartite":
        return complete_bipartite(*args)
    return erdos_renyi(*args)


# -- structural queries --------------------------------------------------------

def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_regular(g: Graph) -> int | None:
    """Common degree ``k`` if every vertex has degree ``k``, else ``None``."""
    deg = degrees(g)
    return deg[0] if all(d == deg[0] for d in deg) else None


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """BFS 2-colouring; returns ``(True, colours)`` or ``(False, None)``."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbours[u]:
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False, None
    return True, colour


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.neighbours[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.edges:
        idx = np.array(g.edges)
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def matrix(g: Graph, kind: MatrixKind = MatrixKind.LAPLACIAN) -> np.ndarray:
    """``D - A`` for the Laplacian, ``D + A`` for the signless Laplacian."""
    a = adjacency(g)
    d = np.diag(a.sum(axis=1))
    return d - a if kind is MatrixKind.LAPLACIAN else d + a


# -- products -----------------------------------------------------------------

def product_vertex_count(n1: int, n2: int, kind: ProductKind) -> int:
    return n1 * (1 + n2) if kind is ProductKind.CORONA else n1 * n2


def _pair_edges(g1: Graph, g2: Graph, kind: ProductKind) -> Iterator[tuple[int, int]]:
    n2 = g2.n
    # (i, j) -> i * n2 + j
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG, ProductKind.LEXICOGRAPHIC):
        # same G1 vertex, adjacent in G2
        for i in range(g1.n):
            for a, b in g2.edges:
                yield i * n2 + a, i * n2 + b
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG):
        # adjacent in G1, same G2 vertex
        for a, b in g1.edges:
            for j in range(n2):
                yield a * n2 + j, b * n2 + j
    if kind in (ProductKind.KRONECKER, ProductKind.STRONG):
        # adjacent in both
        for a, b in g1.edges:
            for c, e in g2.edges:
                yield a * n2 + c, b * n2 + e
                yield a * n2 + e, b * n2 + c
    if kind is ProductKind.LEXICOGRAPHIC:
        # adjacent in G1, any pair of G2 vertices
        for a, b in g1.edges:
            for j in range(n2):
                for s in range(n2):
                    yield a * n2 + j, b * n2 + s


def _corona_edges(g1: Graph, g2: Graph) -> Iterator[tuple[int, int]]:
    n1, n2 = g1.n, g2.n
    yield from g1.edges
    for i in range(n1):
        base = n1 + i * n2
        for a, b in g2.edges:
            yield base + a, base + b
        for j in range(n2):
            yield i, base + j


def product(g1: Graph, g2: Graph, kind: ProductKind) -> Graph:
    """Graph product with a fixed labelling.

    Cartesian, Kronecker, strong and lexicographic products map ``(i, j)`` to
    ``i * g2.n + j``. The corona product keeps ``g1``'s vertices first and then
    appends the copy of ``g2`` attached to vertex ``i`` at offset
    ``g1.n + i * g2.n``.
    """
    if kind is ProductKind.CORONA:
        edges = _corona_edges(g1, g2)
    else:
        edges = _pair_edges(g1, g2, kind)
    return build_graph(product_vertex_count(g1.n, g2.n, kind), edges)


def vertex_cap() -> int:
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None:
        return DEFAULT_VERTEX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidParameter(f"{VERTEX_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise InvalidParameter(f"{VERTEX_CAP_ENV} must be positive")
    return cap


def corona_vertex_count(n: int, iterations: int) -> int:
    return n * (1 + n) ** iterations


def corona_iterate(seed: Graph, iterations: int, cap: int | None = None) -> Graph:
    """``G(k+1) = G(k) o seed`` applied ``iterations`` times."""
    if iterations < 0:
        raise InvalidParameter(f"iterations must be >= 0, got {iterations}")
    cap = vertex_cap() if cap is None else cap
    size = corona_vertex_count(seed.n, iterations)
    if size > cap:
        raise SizeCapExceeded(
            f"corona graph after {iterations} iterations has {size} vertices (cap {cap})"
        )
    g = seed
    for _ in range(iterations):
        g = product(g, seed, ProductKind.CORONA)
    return g


# -- edge-list text format ----------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse ``# comments``, a header ``n <N>`` and ``<u> <v>`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <N>', got {line!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
    if n is None:
        raise ParseError("missing 'n <N>' header")
    return build_graph(n, edges)


def read_edgelist(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edgelist(g, comment))
