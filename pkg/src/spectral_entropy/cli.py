"""Command-line front end.

Verbs: entropy, spectrum, bounds, product, grow, verify. Exit codes: 0 ok,
1 verification failure, 2 input/parse error, 3 empty graph, 4 parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bounds as bd
from .corpus import L_COSPECTRAL_PAIR, PRODUCT_FACTORS, Q_COSPECTRAL_PAIR, er_corpus, named_families
from .entropy import EntropyParams, Family, all_entropies, entropy
from .errors import (
    EmptyGraph,
    IndexOutOfRange,
    InvalidCount,
    ParseError,
    SelfLoop,
    SizeCapExceeded,
    SpectralEntropyError,
)
from .graph import (
    Graph,
    MatrixKind,
    ProductKind,
    complete,
    corona_vertex_count,
    cycle,
    generate,
    is_regular,
    parse_family,
    path,
    product,
    read_edgelist,
    vertex_cap,
)
from .spectra import (
    Source,
    closed_form_spectrum,
    corona_graph_spectrum,
    density_spectrum,
    graph_spectrum,
    max_deviation,
    power_sum,
    product_spectrum_of,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_EMPTY, EXIT_PARAM = 0, 1, 2, 3, 4


# -- output helpers -----------------------------------------------------------------

def _num(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return "null"
    text = format(x, ".17g")
    # keep floats recognisable as floats
    return text if any(c in text for c in ".en") else text + ".0"


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, str):
        import json
        return json.dumps(obj)
    if isinstance(obj, (bool, int, float, np.integer, np.floating, np.bool_)):
        return _num(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{to_json(str(k))}: {to_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in seq):
            return "[" + ", ".join(to_json(v) for v in seq) + "]"
        return "[\n" + ",\n".join(inner + to_json(v, indent, _level + 1) for v in seq) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) if not isinstance(v, str) else v for v in row])
    return buf.getvalue()


def _emit(report: dict, fmt: str, flat: list[str] | None = None) -> str:
    if fmt == "json":
        return to_json(report) + "\n"
    keys = flat or [k for k, v in report.items() if not isinstance(v, (dict, list))]
    if fmt == "csv":
        return _csv(keys, [[report[k] for k in keys]])
    return "".join(f"{k}: {report[k] if isinstance(report[k], str) else _num(report[k])}\n"
                   for k in keys)


# -- configuration ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphSource:
    path: str | None = None
    spec: str | None = None

    def __post_init__(self):
        if (self.path is None) == (self.spec is None):
            raise ParseError("give exactly one of --file or --spec")

    def load(self) -> Graph:
        if self.spec is not None:
            return generate(self.spec)
        try:
            return read_edgelist(self.path)
        except OSError as exc:
            raise ParseError(f"cannot read {self.path}: {exc.strerror}") from None


@dataclass(frozen=True)
class RunConfig:
    matrix: MatrixKind = MatrixKind.LAPLACIAN
    family: Family = Family.SHARMA_MITTAL
    q: float = 2.0
    r: float = 2.0
    tol: float = 1e-10
    output: str = "json"

    @property
    def params(self) -> EntropyParams:
        return EntropyParams(self.family, self.q, self.r)


def _config(args) -> RunConfig:
    return RunConfig(
        matrix=MatrixKind.parse(args.matrix),
        family=Family.parse(args.family),
        q=args.q,
        r=args.r,
        tol=args.tol,
        output=args.output or "json",
    )


def _source(args, file_attr="file", spec_attr="spec") -> GraphSource:
    return GraphSource(getattr(args, file_attr), getattr(args, spec_attr))


def parse_grid(text: str) -> list[tuple[float, float]]:
    grid = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            q, r = item.split(":")
            grid.append((float(q), float(r)))
        except ValueError:
            raise ParseError(f"bad grid point {item!r}; expected q:r") from None
    if not grid:
        raise ParseError("empty --grid")
    return grid


# -- commands -----------------------------------------------------------------------

def cmd_entropy(src: GraphSource, cfg: RunConfig) -> str:
    g = src.load()
    spec = graph_spectrum(g, cfg.matrix, cfg.tol)
    ds = density_spectrum(spec, g.m)
    value = entropy(ds, cfg.params)
    report = {
        "graph": {"n": g.n, "m": g.m},
        "matrix": cfg.matrix.value,
        "family": cfg.family.value,
        "q": cfg.q,
        "r": cfg.r,
        "value": value,
        "spectrum": spec.tolist(),
        "density": ds.tolist(),
    }
    return _emit(report, cfg.output, ["matrix", "family", "q", "r", "value"])


def cmd_spectrum(src: GraphSource, cfg: RunConfig, closed_form: bool = False) -> str:
    g = src.load()
    spec = None
    if closed_form and src.spec is not None and parse_family(src.spec)[0] != "er":
        try:
            spec = closed_form_spectrum(src.spec, cfg.matrix)
        except SpectralEntropyError as exc:
            print(f"warning: closed form unavailable ({exc}); eigensolving", file=sys.stderr)
    if spec is None:
        spec = graph_spectrum(g, cfg.matrix, cfg.tol)
    ds = density_spectrum(spec, g.m)
    report = {
        "graph": {"n": g.n, "m": g.m},
        "matrix": cfg.matrix.value,
        "source": spec.source.value,
        "spectrum": spec.tolist(),
        "density": ds.tolist(),
    }
    if cfg.output == "json":
        return to_json(report) + "\n"
    if cfg.output == "csv":
        return _csv(["index", "eigenvalue", "density"],
                    [[i, v, p] for i, (v, p) in enumerate(zip(spec.values, ds.probs))])
    return ("spectrum: " + " ".join(_num(v) for v in spec.values) + "\n"
            "density: " + " ".join(_num(p) for p in ds.probs) + "\n")


def _bound_dict(report: bd.BoundReport) -> dict:
    return {
        "matrix": report.kind.value,
        "q": report.q,
        "r": report.r,
        "measured": report.measured,
        "entries": [
            {
                "name": e.name,
                "side": e.side.value,
                "value": e.value,
                "applicable": e.applicable,
                "regime_valid": e.regime_valid,
                "reason": e.reason,
                "prerequisites": e.prerequisites,
            }
            for e in report.entries
        ],
        "spectral": [
            {"name": s.name, "bound": s.bound, "actual": s.actual, "holds": s.holds}
            for s in report.spectral
        ],
    }


def cmd_bounds(src: GraphSource, cfg: RunConfig) -> str:
    g = src.load()
    report = bd.bound_report(g, cfg.q, cfg.r, cfg.matrix)
    out = _bound_dict(report)
    out = {"graph": {"n": g.n, "m": g.m}, **out}
    if cfg.output == "json":
        return to_json(out) + "\n"
    rows = [[e.name, e.side.value, "" if e.value is None else _num(e.value), _num(e.applicable),
             _num(e.regime_valid), e.reason] for e in report.entries]
    if cfg.output == "csv":
        return _csv(["name", "side", "value", "applicable", "regime_valid", "reason"], rows)
    lines = [f"measured: {_num(report.measured)}"]
    lines += [" ".join(str(c) for c in row[:5]) + (f"  ({row[5]})" if row[5] else "") for row in rows]
    return "\n".join(lines) + "\n"


def cmd_product(src1: GraphSource, src2: GraphSource, kind: ProductKind, cfg: RunConfig) -> str:
    g1, g2 = src1.load(), src2.load()
    g = product(g1, g2, kind)
    numeric = graph_spectrum(g, cfg.matrix, cfg.tol)
    report = {
        "a": {"n": g1.n, "m": g1.m},
        "b": {"n": g2.n, "m": g2.m},
        "kind": kind.value,
        "product": {"n": g.n, "m": g.m},
        "matrix": cfg.matrix.value,
        "family": cfg.family.value,
        "q": cfg.q,
        "r": cfg.r,
        "value": entropy(density_spectrum(numeric, g.m), cfg.params) if g.m else None,
        "numeric_spectrum": numeric.tolist(),
        "formula_spectrum": None,
        "max_deviation": None,
        "formula_error": None,
    }
    try:
        formula = product_spectrum_of(g1, g2, kind, cfg.matrix)
    except SpectralEntropyError as exc:
        report["formula_error"] = f"{type(exc).__name__}: {exc}"
    else:
        report["formula_spectrum"] = formula.tolist()
        report["max_deviation"] = max_deviation(formula, numeric)
    return _emit(report, cfg.output, ["kind", "matrix", "value", "max_deviation"])


GROW_HEADER = ["iteration", "n", "m", "q", "r", "sharma_mittal", "renyi", "tsallis", "von_neumann"]


def cmd_grow(seed_src: GraphSource, iterations: int, cfg: RunConfig,
             grid: list[tuple[float, float]]) -> str:
    """Entropies of the corona graphs G(1)..G(iterations) grown from the seed."""
    seed = seed_src.load()
    if seed.m < 1:
        raise EmptyGraph("seed graph has no edges")
    cap = vertex_cap()
    seed_spec = graph_spectrum(seed, MatrixKind.LAPLACIAN, cfg.tol)
    rows = []
    n_k, m_k = seed.n, seed.m
    for k in range(1, iterations + 1):
        m_k += n_k * (seed.m + seed.n)
        n_k = corona_vertex_count(seed.n, k)
        try:
            spec = corona_graph_spectrum(seed_spec, seed.n, k, seed=seed, cap=cap)
        except SizeCapExceeded as exc:
            print(f"warning: stopping before iteration {k}: {exc}", file=sys.stderr)
            break
        if spec.source is Source.NUMERIC and spec.diagnostic:
            print(f"warning: iteration {k}: {spec.diagnostic}", file=sys.stderr)
        ds = density_spectrum(spec, m_k)
        for q, r in grid:
            e = all_entropies(ds, q, r)
            rows.append([k, n_k, m_k, q, r, e["sharma_mittal"], e["renyi"], e["tsallis"],
                         e["von_neumann"]])
    if cfg.output == "json":
        return to_json([dict(zip(GROW_HEADER, row)) for row in rows]) + "\n"
    return _csv(GROW_HEADER, rows)


# -- verify -------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    informational: bool = False


def _closed_form_checks(n_max: int, tol: float) -> list[Check]:
    worst, failures, count = 0.0, [], 0
    for n in range(3, n_max + 1):
        cases = [(f"cycle:{n}", cycle(n)), (f"path:{n}", path(n)), (f"complete:{n}", complete(n))]
        for fam, g in cases:
            for kind in MatrixKind:
                dev = max_deviation(closed_form_spectrum(fam, kind), graph_spectrum(g, kind))
                worst, count = max(worst, dev), count + 1
                if dev > tol:
                    failures.append(f"{fam}/{kind.value}")
        for p in sorted({1, n // 2}):
            fam = f"bipartite:{p},{n - p}"
            dev = max_deviation(closed_form_spectrum(fam), graph_spectrum(generate(fam)))
            worst, count = max(worst, dev), count + 1
            if dev > tol:
                failures.append(fam)
    return [Check("closed-form vs eigensolve", not failures,
                  f"{count} cases, max deviation {worst:.2e}" + (f"; failed {failures}" if failures else ""))]


def _product_checks(tol: float) -> list[Check]:
    out = []
    for kind in ProductKind:
        worst, count, failures = 0.0, 0, []
        for a, g1 in PRODUCT_FACTORS.items():
            for b, g2 in PRODUCT_FACTORS.items():
                if kind in (ProductKind.KRONECKER, ProductKind.STRONG) and (
                        is_regular(g1) is None or is_regular(g2) is None):
                    continue
                dev = max_deviation(product_spectrum_of(g1, g2, kind),
                                    graph_spectrum(product(g1, g2, kind)))
                worst, count = max(worst, dev), count + 1
                if dev > tol:
                    failures.append(f"{a}x{b}")
        out.append(Check(f"product formula ({kind.value})", not failures,
                         f"{count} pairs, max deviation {worst:.2e}"
                         + (f"; failed {failures}" if failures else "")))
    return out


def _cospectral_checks() -> list[Check]:
    grid = [0.5, 2.0, 3.0]
    out = []
    for label, pair, kind in (("L", L_COSPECTRAL_PAIR, MatrixKind.LAPLACIAN),
                              ("Q", Q_COSPECTRAL_PAIR, MatrixKind.SIGNLESS_LAPLACIAN)):
        d1, d2 = (density_spectrum(graph_spectrum(g, kind), g.m) for g in pair)
        worst = 0.0
        for q in grid:
            for r in grid:
                e1, e2 = all_entropies(d1, q, r), all_entropies(d2, q, r)
                worst = max(worst, max(abs(e1[k] - e2[k]) for k in e1))
        out.append(Check(f"cospectral {label}-pair entropies equal", worst <= 1e-12,
                         f"max difference {worst:.2e}"))
    return out


def _moment_checks() -> list[Check]:
    graphs = list(named_families(10).values()) + er_corpus(200)
    out = []
    for q in (0.5, 1.5, 2.0, 3.0):
        bad = 0
        for g in graphs:
            s_l = power_sum(graph_spectrum(g, MatrixKind.LAPLACIAN), q)
            s_q = power_sum(graph_spectrum(g, MatrixKind.SIGNLESS_LAPLACIAN), q)
            if s_q < s_l - 1e-9 * max(1.0, s_l):
                bad += 1
        # counterexamples exist for 1 < q < 2, so that row is reported but not gated
        informational = 1 < q < 2
        out.append(Check(f"S_Q,q >= S_L,q (q={q})", bad == 0,
                         f"{bad}/{len(graphs)} graphs violate", informational))
    return out


def _corona_checks(tol: float) -> list[Check]:
    out = []
    for name, seed in (("K2", complete(2)), ("K3", complete(3)), ("P3", path(3)), ("C4", cycle(4))):
        for k in (1, 2):
            if corona_vertex_count(seed.n, k) > 100:
                continue
            spec = corona_graph_spectrum(graph_spectrum(seed), seed.n, k, seed=seed)
            ok = spec.source is Source.PRODUCT_FORMULA
            out.append(Check(f"corona recursion {name}, m={k}", ok, spec.diagnostic or ""))
    return out


def cmd_verify(cfg: RunConfig, n_max: int = 30) -> tuple[str, bool]:
    checks: list[Check] = []
    checks += _closed_form_checks(n_max, 1e-8)
    checks += _product_checks(1e-8)
    checks += _cospectral_checks()
    checks += _moment_checks()
    checks += _corona_checks(1e-8)
    ok = all(c.passed for c in checks if not c.informational)
    if cfg.output == "json":
        text = to_json({"passed": ok, "checks": [c.__dict__ for c in checks]}) + "\n"
    else:
        lines = []
        for c in checks:
            status = "PASS" if c.passed else ("INFO" if c.informational else "FAIL")
            lines.append(f"{status:4}  {c.name}: {c.detail}")
        lines.append("ALL PASS" if ok else "FAILURES PRESENT")
        text = "\n".join(lines) + "\n"
    return text, ok


# -- argument parsing ---------------------------------------------------------------

def _common(p: argparse.ArgumentParser, source: bool = True, output: str | None = "json") -> None:
    if source:
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--file", help="edge-list file")
        grp.add_argument("--spec", help="generator spec, e.g. cycle:6 or er:10,0.3,7")
    p.add_argument("--matrix", default="L", help="L (Laplacian) or Q (signless Laplacian)")
    p.add_argument("--family", default="sm", help="sm | renyi | tsallis | vn")
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--r", type=float, default=2.0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--output", choices=["json", "csv", "plain"], default=output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectral-entropy",
                                     description="Generalised entropies of graph Laplacian states.")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("entropy", help="entropy of one graph"))
    sp = sub.add_parser("spectrum", help="raw and density spectrum")
    _common(sp)
    sp.add_argument("--closed-form", action="store_true",
                    help="use the closed-form spectrum for cycle/path/complete/bipartite specs")
    _common(sub.add_parser("bounds", help="entropy bounds report"))

    pp = sub.add_parser("product", help="graph product with formula-vs-numeric check")
    _common(pp, source=False)
    ga = pp.add_mutually_exclusive_group(required=True)
    ga.add_argument("--a", help="first factor spec")
    ga.add_argument("--a-file", help="first factor edge-list file")
    gb = pp.add_mutually_exclusive_group(required=True)
    gb.add_argument("--b", help="second factor spec")
    gb.add_argument("--b-file", help="second factor edge-list file")
    pp.add_argument("--kind", required=True, help="cartesian | kronecker | strong | lexicographic | corona")

    gp = sub.add_parser("grow", help="entropies along corona growth")
    _common(gp, output="csv")
    gp.add_argument("--iterations", type=int, default=3)
    gp.add_argument("--grid", default="0.5:0.5,0.5:2,2:0.5,2:2",
                    help='comma-separated q:r points, e.g. "2:0.5,0.5:2"')

    vp = sub.add_parser("verify", help="formula-vs-eigensolver self checks")
    _common(vp, source=False, output="plain")
    vp.add_argument("--n-max", type=int, default=30)
    return parser


def _exit_code(exc: SpectralEntropyError) -> int:
    if isinstance(exc, EmptyGraph):
        return EXIT_EMPTY
    if isinstance(exc, (ParseError, IndexOutOfRange, SelfLoop, InvalidCount)):
        return EXIT_PARSE
    return EXIT_PARAM


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "entropy":
            text = cmd_entropy(_source(args), cfg)
        elif args.command == "spectrum":
            text = cmd_spectrum(_source(args), cfg, args.closed_form)
        elif args.command == "bounds":
            text = cmd_bounds(_source(args), cfg)
        elif args.command == "product":
            text = cmd_product(GraphSource(args.a_file, args.a), GraphSource(args.b_file, args.b),
                               ProductKind.parse(args.kind), cfg)
        elif args.command == "grow":
            if args.iterations < 1:
                raise ParseError("--iterations must be >= 1")
            text = cmd_grow(_source(args), args.iterations, cfg, parse_grid(args.grid))
        else:
            text, ok = cmd_verify(cfg, args.n_max)
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_FAIL
    except SpectralEntropyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc)
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
