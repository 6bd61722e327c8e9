"""Eigenvalue spectra of L(G) and Q(G): numeric, closed-form and product formulas.

All spectra are plain ascending arrays with eigenvalues repeated according to
multiplicity. The numeric route is a cyclic Jacobi eigensolver, which serves
as the reference every formula is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    EmptyGraph,
    InvalidParameter,
    MissingAux,
    NoConvergence,
    NonPositiveQ,
    NotPositiveSemidefinite,
    NotSymmetric,
    RegularityRequired,
    SizeCapExceeded,
    UnsupportedCombination,
)
from .graph import (
    Graph,
    MatrixKind,
    ProductKind,
    corona_iterate,
    corona_vertex_count,
    degrees,
    is_regular,
    matrix,
    parse_family,
    product_vertex_count,
    vertex_cap,
)

DEFAULT_TOL = 1e-10
PSD_HARD_FLOOR = -1e-6
DENSITY_SUM_TOL = 1e-9
# numeric corona validation builds and eigensolves the whole graph
DEFAULT_VALIDATE_CAP = 256


class Source(Enum):
    NUMERIC = "numeric"
    CLOSED_FORM = "closed-form"
    PRODUCT_FORMULA = "product-formula"


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    kind: MatrixKind
    source: Source
    diagnostic: str | None = None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def trace(self) -> float:
        return float(np.sum(self.values))

    def tolist(self) -> list[float]:
        return [float(v) for v in self.values]


def make_spectrum(values, kind: MatrixKind, source: Source, tol: float = DEFAULT_TOL,
                  diagnostic: str | None = None) -> Spectrum:
    """Sort, reject clearly negative values and clamp round-off to zero."""
    vals = np.sort(np.asarray(values, dtype=float))
    if vals.size and vals[0] < PSD_HARD_FLOOR:
        raise NotPositiveSemidefinite(
            f"eigenvalue {vals[0]:.3e} is below {PSD_HARD_FLOOR}; matrix is not PSD"
        )
    vals = np.where((vals < 0) | (np.abs(vals) < tol), 0.0, vals)
    return Spectrum(_frozen(vals), kind, source, diagnostic)


@dataclass(frozen=True, eq=False)
class DensitySpectrum:
    probs: np.ndarray

    def __len__(self) -> int:
        return len(self.probs)

    def tolist(self) -> list[float]:
        return [float(p) for p in self.probs]


# -- Jacobi eigensolver ----------------------------------------------------------

def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Disjoint pair sets covering every (p, q) once per sweep (circle method)."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigenvalues(m: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int | None = None
                       ) -> tuple[np.ndarray, int]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once in round-robin order, so the
    n/2 rotations of a round touch disjoint rows and columns and are applied
    together. Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol`` (or below the round-off floor ``64 * eps * ||M||_F`` when that is
    larger). Returns the ascending eigenvalues and the number of sweeps used.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n and np.max(np.abs(a - a.T)) > tol:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    a = 0.5 * (a + a.T)
    if n <= 1:
        return np.sort(np.diag(a)), 0

    max_sweeps = 100 * n * n if max_sweeps is None else max_sweeps
    floor = 64 * np.finfo(float).eps * float(np.linalg.norm(a))
    target = max(tol, floor)
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) < target:
            return np.sort(np.diag(a)), sweep
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not np.any(active):
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rows_p, rows_q = a[p, :].copy(), a[q, :]
            a[p, :] = c[:, None] * rows_p - s[:, None] * rows_q
            a[q, :] = s[:, None] * rows_p + c[:, None] * rows_q
            cols_p, cols_q = a[:, p].copy(), a[:, q]
            a[:, p] = cols_p * c - cols_q * s
            a[:, q] = cols_p * s + cols_q * c
            a[p, q] = 0.0
            a[q, p] = 0.0
    raise NoConvergence(f"Jacobi did not converge within {max_sweeps} sweeps")


def eig_symmetric(m: np.ndarray, tol: float = DEFAULT_TOL,
                  kind: MatrixKind = MatrixKind.LAPLACIAN) -> Spectrum:
    values, _ = jacobi_eigenvalues(m, tol)
    return make_spectrum(values, kind, Source.NUMERIC, tol)


def graph_spectrum(g: Graph, kind: MatrixKind = MatrixKind.LAPLACIAN,
                   tol: float = DEFAULT_TOL) -> Spectrum:
    return eig_symmetric(matrix(g, kind), tol, kind)


def max_deviation(a, b) -> float:
    """Largest gap between two spectra compared as sorted multisets."""
    x = np.sort(np.asarray(getattr(a, "values", a), dtype=float))
    y = np.sort(np.asarray(getattr(b, "values", b), dtype=float))
    if x.shape != y.shape:
        return math.inf
    return float(np.max(np.abs(x - y))) if x.size else 0.0


# -- density spectra -------------------------------------------------------------

def density_spectrum(s: Spectrum, m: int) -> DensitySpectrum:
    """Eigenvalues of rho = M / (2m)."""
    if m < 1:
        raise EmptyGraph("graph has no edges; the density matrix M/2m is undefined")
    d = 2 * m
    probs = np.asarray(s.values, dtype=float) / d
    total = float(np.sum(probs))
    if abs(total - 1.0) > DENSITY_SUM_TOL:
        raise InvalidParameter(
            f"spectrum trace {s.trace:.12g} does not match 2m = {d}; wrong edge count?"
        )
    return DensitySpectrum(_frozen(np.clip(probs, 0.0, 1.0)))


def graph_density(g: Graph, kind: MatrixKind = MatrixKind.LAPLACIAN) -> DensitySpectrum:
    return density_spectrum(graph_spectrum(g, kind), g.m)


def moment_sum(ds: DensitySpectrum, q: float) -> float:
    """S_q = sum of p**q over the nonzero entries (0**q is taken as 0)."""
    if not q > 0:
        raise NonPositiveQ(f"q must be positive, got {q}")
    p = ds.probs[ds.probs > 0]
    return float(np.sum(p ** q))


def power_sum(s: Spectrum, q: float) -> float:
    """Unnormalised sum of eigenvalue**q (zeros skipped)."""
    if not q > 0:
        raise NonPositiveQ(f"q must be positive, got {q}")
    v = s.values[s.values > 0]
    return float(np.sum(v ** q))


# -- closed forms ------------------------------------------------------------------

def closed_form_spectrum(family: str, kind: MatrixKind = MatrixKind.LAPLACIAN) -> Spectrum:
    """Known spectra of cycles, paths, complete and complete bipartite graphs.

    Two commonly quoted variants fail the trace identity trace = 2m and are
    not used. The path Laplacian is 2 - 2cos(pi j / n); the variant
    2 - cos(pi j / n) has trace 2n - 1 instead of 2(n - 1). For K_{p,q}, the
    eigenvalue p has multiplicity q - 1 and q has multiplicity p - 1; the
    swapped multiplicities have trace p**2 + q**2 instead of 2pq.
    """
    name, args = parse_family(family)
    if name == "cycle":
        (n,) = args
        if n < 3:
            raise InvalidParameter(f"cycle needs n >= 3, got {n}")
        j = np.arange(n)
        sign = -1.0 if kind is MatrixKind.LAPLACIAN else 1.0
        values = 2.0 + sign * 2.0 * np.cos(2.0 * np.pi * j / n)
    elif name == "path":
        (n,) = args
        if n < 2:
            raise InvalidParameter(f"path needs n >= 2, got {n}")
        # bipartite, so the Q multiset equals the L multiset
        values = 2.0 - 2.0 * np.cos(np.pi * np.arange(n) / n)
    elif name == "complete":
        (n,) = args
        if n < 1:
            raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
        if kind is MatrixKind.LAPLACIAN:
            values = [0.0] + [float(n)] * (n - 1)
        else:
            values = [2.0 * (n - 1)] + [float(n - 2)] * (n - 1) if n > 1 else [0.0]
    elif name == "bipartite":
        p, q = args
        if p < 1 or q < 1:
            raise InvalidParameter(f"bipartite needs p, q >= 1, got {p}, {q}")
        if kind is not MatrixKind.LAPLACIAN:
            raise UnsupportedCombination("closed form for K_{p,q} is provided for L only")
        values = [0.0, float(p + q)] + [float(p)] * (q - 1) + [float(q)] * (p - 1)
    else:
        raise InvalidParameter(f"no closed-form spectrum for family {name!r}")
    return make_spectrum(values, kind, Source.CLOSED_FORM)


# -- product formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class ProductContext:
    """Graph data the product formulas need beyond the two factor spectra."""

    regularity1: int | None = None
    regularity2: int | None = None
    degrees1: tuple[int, ...] | None = None
    n2: int | None = None

    @classmethod
    def from_graphs(cls, g1: Graph, g2: Graph) -> "ProductContext":
        return cls(is_regular(g1), is_regular(g2), tuple(degrees(g1)), g2.n)


def f_l_roots(x: float, n: int) -> tuple[float, float]:
    """Both roots of t**2 - (x + n + 1) t + x = 0, smaller first."""
    b = x + n + 1.0
    big = 0.5 * (b + math.sqrt(max(b * b - 4.0 * x, 0.0)))
    # Vieta avoids cancellation in the small root
    return x / big, big


def _f_l_all(xs: np.ndarray, n: int) -> np.ndarray:
    b = xs + n + 1.0
    big = 0.5 * (b + np.sqrt(np.maximum(b * b - 4.0 * xs, 0.0)))
    return np.concatenate([xs / big, big])


def _require(aux: ProductContext | None, kind: ProductKind) -> ProductContext:
    if aux is None:
        raise MissingAux(f"{kind.value} product formula needs a ProductContext")
    return aux


def product_spectrum(s1: Spectrum, s2: Spectrum, kind: ProductKind,
                     aux: ProductContext | None = None) -> Spectrum:
    """Spectrum of a graph product from the spectra of its factors.

    Laplacian spectra are supported for all five products. Signless spectra
    are supported for the Cartesian product, and for the corona product when
    the second factor is regular.
    """
    if s1.kind is not s2.kind:
        raise UnsupportedCombination("factor spectra must be of the same matrix kind")
    mkind = s1.kind
    l1, l2 = np.asarray(s1.values), np.asarray(s2.values)
    n1, n2 = len(l1), len(l2)

    if kind is ProductKind.CARTESIAN:
        values = (l1[:, None] + l2[None, :]).ravel()
    elif mkind is MatrixKind.SIGNLESS_LAPLACIAN and kind is not ProductKind.CORONA:
        raise UnsupportedCombination(f"no signless formula for the {kind.value} product")
    elif kind in (ProductKind.KRONECKER, ProductKind.STRONG):
        aux = _require(aux, kind)
        k, s = aux.regularity1, aux.regularity2
        if k is None or s is None:
            raise RegularityRequired(f"{kind.value} product formula needs both factors regular")
        x, y = l1[:, None], l2[None, :]
        if kind is ProductKind.KRONECKER:
            values = (k * y + s * x - x * y).ravel()
        else:
            values = ((1 + s) * x + (1 + k) * y - x * y).ravel()
    elif kind is ProductKind.LEXICOGRAPHIC:
        aux = _require(aux, kind)
        if aux.degrees1 is None:
            raise MissingAux("lexicographic formula needs the degree list of the first factor")
        d1 = np.asarray(aux.degrees1, dtype=float)
        if len(d1) != n1:
            raise InvalidParameter("degree list length does not match the first spectrum")
        # drop one zero of L(G2); eigenvectors orthogonal to the all-ones vector survive
        rest = np.sort(l2)[1:]
        values = np.concatenate([l1 * n2, (rest[None, :] + n2 * d1[:, None]).ravel()])
    elif kind is ProductKind.CORONA:
        if aux is not None and aux.n2 is not None and aux.n2 != n2:
            raise InvalidParameter(f"aux n2={aux.n2} but second spectrum has {n2} values")
        if mkind is MatrixKind.LAPLACIAN:
            rest = np.sort(l2)[1:]
            values = np.concatenate([_f_l_all(l1, n2), np.tile(rest + 1.0, n1)])
        else:
            values = _corona_signless(l1, l2, _require(aux, kind))
    else:  # pragma: no cover - enum exhausted
        raise InvalidParameter(str(kind))

    expected = product_vertex_count(n1, n2, kind)
    assert len(values) == expected, (len(values), expected)
    return make_spectrum(values, mkind, Source.PRODUCT_FORMULA)


def _corona_signless(q1: np.ndarray, q2: np.ndarray, aux: ProductContext) -> np.ndarray:
    """Q-spectrum of G1 o G2 for a K-regular G2.

    Each mu of Q(G1) gives the two roots of
    t**2 - (mu + n2 + 2K + 1) t + (mu + n2)(2K + 1) - n2 = 0, whose discriminant
    is ((mu + n2) - (2K + 1))**2 + 4 n2. The other eigenvalues of Q(G2), i.e.
    all but one copy of 2K, each shifted by 1, occur n1 times.
    """
    k = aux.regularity2
    if k is None:
        raise RegularityRequired("signless corona formula needs a regular second factor")
    n1, n2 = len(q1), len(q2)
    srt = np.sort(q2)
    if abs(srt[-1] - 2 * k) > 1e-6:
        raise InvalidParameter(f"largest Q eigenvalue of G2 is {srt[-1]}, expected 2K = {2 * k}")
    rest = srt[:-1]
    u = q1 + n2
    c = 2.0 * k + 1.0
    root = np.sqrt((u - c) ** 2 + 4.0 * n2)
    return np.concatenate([0.5 * (u + c + root), 0.5 * (u + c - root), np.tile(rest + 1.0, n1)])


def product_spectrum_of(g1: Graph, g2: Graph, kind: ProductKind,
                        mkind: MatrixKind = MatrixKind.LAPLACIAN) -> Spectrum:
    """Formula spectrum of ``product(g1, g2, kind)`` from eigensolved factors."""
    return product_spectrum(graph_spectrum(g1, mkind), graph_spectrum(g2, mkind), kind,
                            ProductContext.from_graphs(g1, g2))


# -- corona graphs -------------------------------------------------------------------

def corona_graph_values(seed_values, iterations: int) -> np.ndarray:
    """Unrolled L-spectrum of the m-fold corona graph of an n-vertex seed.

    With f^0(x) = x + 1 and f^j = f_L(f^(j-1)) (set valued: each f_L step
    yields both roots), the spectrum consists of
      * f^j(lambda_i) for i >= 2, 0 <= j < m, each value n (n+1)**(m-j-1) times;
      * f_L applied m times to every seed eigenvalue, each value once.
    """
    lam = np.sort(np.asarray(seed_values, dtype=float))
    n = len(lam)
    parts = []
    chain = lam[1:] + 1.0
    for j in range(iterations):
        parts.append(np.repeat(chain, n * (n + 1) ** (iterations - j - 1)))
        chain = _f_l_all(chain, n)
    top = lam
    for _ in range(iterations):
        top = _f_l_all(top, n)
    parts.append(top)
    return np.concatenate(parts)


def corona_graph_spectrum(seed_spectrum: Spectrum, n: int, iterations: int,
                          seed: Graph | None = None, cap: int | None = None,
                          validate_cap: int = DEFAULT_VALIDATE_CAP,
                          tol: float = 1e-8) -> Spectrum:
    """L-spectrum of the corona graph ``G(m)``, cross-checked when small.

    If ``seed`` is given and ``G(m)`` has at most ``validate_cap`` vertices,
    the graph is built and eigensolved. On disagreement beyond ``tol`` the
    numeric spectrum is returned, with the deviation recorded in
    ``diagnostic``.
    """
    if iterations < 1:
        raise InvalidParameter(f"iterations must be >= 1, got {iterations}")
    if seed_spectrum.kind is not MatrixKind.LAPLACIAN:
        raise UnsupportedCombination("corona graph recursion is for Laplacian spectra")
    if len(seed_spectrum) != n:
        raise InvalidParameter(f"seed spectrum has {len(seed_spectrum)} values, n = {n}")
    cap = vertex_cap() if cap is None else cap
    size = corona_vertex_count(n, iterations)
    if size > cap:
        raise SizeCapExceeded(f"G({iterations}) has {size} vertices (cap {cap})")

    formula = make_spectrum(corona_graph_values(seed_spectrum.values, iterations),
                            MatrixKind.LAPLACIAN, Source.PRODUCT_FORMULA)
    if seed is None or size > validate_cap:
        return formula
    numeric = graph_spectrum(corona_iterate(seed, iterations, cap))
    dev = max_deviation(formula, numeric)
    if dev > tol:
        return make_spectrum(numeric.values, MatrixKind.LAPLACIAN, Source.NUMERIC,
                             diagnostic=f"formula deviates from eigensolve by {dev:.3e}; "
                                        "numeric spectrum returned")
    return make_spectrum(formula.values, MatrixKind.LAPLACIAN, Source.PRODUCT_FORMULA,
                         diagnostic=f"validated against eigensolve (max deviation {dev:.3e})")
