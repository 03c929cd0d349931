"""Command-line front end.

Vertex labels are 1-based on the command line, in ``.hg`` files and in every
report; the library works 0-based and the conversion happens only here.

Exit status: 0 on success, 1 when ``audit --fail-on-violation`` finds a
violated must-hold bound, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Any, Sequence

import numpy as np

from . import bounds, curvature, families, hgio, oracles, report, walks
from ._version import __version__
from .errors import HypergraphError
from .operators import adjacency, laplacian, normalized_laplacian, transition_kernel
from .spectra import (
    adjacency_spectrum,
    clusters,
    laplacian_spectrum,
    normalized_spectrum,
    spectrum_residuals,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

#: Detail keys of bound reports that hold vertex labels.
VERTEX_KEYS = frozenset({"S", "V1", "V2", "witness", "weak_cut", "kappa_pair"})


class InputError(Exception):
    pass


def _one_based(obj: Any) -> Any:
    if isinstance(obj, (list, tuple)):
        return [_one_based(v) for v in obj]
    return int(obj) + 1


def _vertex(g, label: int, what: str = "vertex") -> int:
    if not 1 <= label <= g.n:
        raise InputError(f"{what} {label} outside 1..{g.n}")
    return label - 1


def _dimension(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"dimension must be a number or 'inf', got {text!r}") from None


def _labels(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex labels, got {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperspec", description="Spectral analysis and bound audits for hypergraphs.")
    p.add_argument("--version", action="version", version=f"hyperspec {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", default="-", help="hypergraph file in .hg format ('-' for stdin, the default)")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        return sp

    g = sub.add_parser("gen", help="write a named family in .hg format")
    g.add_argument("--family", required=True,
                   choices=("complete", "bipartite", "cube", "fano", "bowtie", "chain", "empty", "random"))
    g.add_argument("--n", type=int, help="vertices (complete, empty, random) or dimension (cube)")
    g.add_argument("--m", type=int, default=3, help="edge cardinality")
    g.add_argument("--n1", type=int)
    g.add_argument("--n2", type=int)
    g.add_argument("--length", type=int, help="number of edges in a chain")
    g.add_argument("--edges", type=int, help="number of edges for the random family")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--connected", action="store_true", help="redraw random hypergraphs until connected")
    g.add_argument("--output", help="file to write (default stdout)")

    s = with_input(sub.add_parser("spectrum", help="eigenvalues of a connectivity matrix"))
    s.add_argument("--matrix", choices=("adjacency", "laplacian", "normalized", "transition"), default="laplacian")

    mx = sub.add_parser("matrix", help="dense matrix export, 17 significant digits")
    mx.add_argument("--input", default="-")
    mx.add_argument("--matrix", choices=("adjacency", "laplacian", "normalized", "transition"), default="laplacian")

    a = with_input(sub.add_parser("audit", help="evaluate spectral bounds"))
    a.add_argument("--bounds", nargs="+", default=["all"], help="bound ids or 'all'")
    a.add_argument("--seed", type=int, default=0, help="seed for sampled subsets and pairs")
    a.add_argument("--fail-on-violation", action="store_true", help="exit 1 if a must-hold bound is violated")
    a.add_argument("--subset", type=_labels, help="S for LAP-3 / LAP-9")
    a.add_argument("--v1", type=_labels, help="V1 for LAP-7 / NRM-5")
    a.add_argument("--v2", type=_labels, help="V2 for LAP-7 / NRM-5")
    a.add_argument("--n1", type=int, help="first part size for STR-4")
    a.add_argument("--n2", type=int, help="second part size for STR-4")
    a.add_argument("--dimension", type=_dimension, help="m for CRV-2 (default 2)")
    a.add_argument("--curvature", type=float, help="K for CRV-2 (default: best K)")

    c = with_input(sub.add_parser("cheeger", help="exact Cheeger constant"))
    c.add_argument("--measure", choices=("counting", "volume"), default="counting")

    w = with_input(sub.add_parser("walk", help="random walk sampling or convergence certificates"))
    w.add_argument("--start", type=int, default=1)
    w.add_argument("--steps", type=int, default=1000)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--certificate", type=int, metavar="T", help="certify ||P^t f - fbar|| <= rho^t ||f|| for t = 1..T")
    w.add_argument("--function", type=_floats, help="f for --certificate (default: indicator of --start)")

    cv = with_input(sub.add_parser("curvature", help="Ollivier and Bakry-Emery curvature"))
    mode = cv.add_mutually_exclusive_group(required=True)
    mode.add_argument("--ollivier", action="store_true", help="kappa(x, y) for --pair, or for all adjacent pairs")
    mode.add_argument("--scalar", action="store_true", help="scalar curvature of --vertex, or of every vertex")
    mode.add_argument("--cd", nargs=2, metavar=("M", "K"), help="check CD(M, K)")
    mode.add_argument("--best-k", type=_dimension, metavar="M", help="largest K with CD(M, K)")
    mode.add_argument("--audit", action="store_true", help="curvature-spectral bounds")
    cv.add_argument("--pair", nargs=2, type=int, metavar=("X", "Y"))
    cv.add_argument("--vertex", type=int)
    cv.add_argument("--plans", action="store_true", help="include transport plans")
    return p


# ---------------------------------------------------------------- commands


def _read_input(path: str) -> tuple[bytes, str]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return data, path


def _cmd_gen(args) -> str:
    fam = args.family

    def need(*names):
        missing = [f"--{k}" for k in names if getattr(args, k) is None]
        if missing:
            raise InputError(f"family {fam!r} needs {', '.join(missing)}")

    if fam == "complete":
        need("n")
        g = families.complete_uniform(args.n, args.m)
    elif fam == "bipartite":
        need("n1", "n2")
        g = families.complete_bipartite_uniform(args.n1, args.n2, args.m)
    elif fam == "cube":
        need("n")
        g = families.cube_hypergraph(args.n, args.m)
    elif fam == "fano":
        g = families.fano_plane()
    elif fam == "bowtie":
        g = families.bowtie()
    elif fam == "chain":
        need("length")
        g = families.uniform_chain(args.length, args.m)
    elif fam == "empty":
        need("n")
        g = families.empty_uniform(args.n)
    else:
        need("n", "edges")
        g = families.random_uniform(args.n, args.m, args.edges, args.seed, connected=args.connected)
    text = hgio.format_hg(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _matrix(g, name: str) -> np.ndarray:
    if name == "adjacency":
        return adjacency(g)
    if name == "laplacian":
        return laplacian(g)
    if name == "normalized":
        return normalized_laplacian(g)[0]
    return transition_kernel(g)


def _cmd_spectrum(g, args) -> dict:
    if args.matrix == "adjacency":
        spec, M = adjacency_spectrum(g), adjacency(g)
    elif args.matrix == "laplacian":
        spec, M = laplacian_spectrum(g), laplacian(g)
    else:
        spec, M = normalized_spectrum(g), normalized_laplacian(g)[1]
    values = spec.eigenvalues
    if args.matrix == "transition":
        # P = I - Delta shares Delta's eigenvalues up to lambda -> 1 - lambda
        values = np.sort(1.0 - values)
    res = spectrum_residuals(spec, M)
    groups = clusters(spec)
    if args.matrix == "transition":
        groups = sorted((1.0 - v, k) for v, k in groups)
    return {
        "kind": "spectrum", "matrix": args.matrix, "eigenvalues": values,
        "multiplicities": [[v, k] for v, k in groups], "residuals": res,
    }


def _report_dict(r) -> dict:
    d = r.as_dict()
    d["details"] = {k: (_one_based(v) if k in VERTEX_KEYS else v) for k, v in d["details"].items()}
    if "parts" in d["details"]:
        d["details"]["parts"] = [dict(p) for p in d["details"]["parts"]]
    return d


def _cmd_audit(g, args) -> tuple[dict, int]:
    ids = list(bounds.BOUND_IDS) if args.bounds == ["all"] else args.bounds
    for b in ids:
        if b not in bounds.CATALOG:
            raise InputError(f"unknown bound id {b!r}; known ids: {', '.join(bounds.BOUND_IDS)}")
    options: dict[str, Any] = {}
    if args.subset:
        options["S"] = [_vertex(g, v) for v in args.subset]
    if args.v1:
        options["V1"] = [_vertex(g, v) for v in args.v1]
    if args.v2:
        options["V2"] = [_vertex(g, v) for v in args.v2]
    for key in ("n1", "n2"):
        if getattr(args, key) is not None:
            options[key] = getattr(args, key)
    if args.dimension is not None:
        options["m"] = args.dimension
    if args.curvature is not None:
        options["K"] = args.curvature
    if options:
        reports = [bounds.evaluate(g, b, options) for b in ids]
    else:
        reports = bounds.audit_all(g, seed=args.seed, bound_ids=ids)
    counts = {v: sum(r.verdict == v for r in reports) for v in ("holds", "violated", "not-applicable")}
    broken = [r.bound_id for r in reports if r.verdict == "violated" and r.must_hold]
    payload = {
        "kind": "audit", "seed": args.seed, "reports": [_report_dict(r) for r in reports],
        "summary": {**counts, "violated_must_hold": broken},
    }
    status = EXIT_VIOLATION if args.fail_on_violation and broken else EXIT_OK
    return payload, status


def _cmd_cheeger(g, args) -> dict:
    res = oracles.cheeger(g, args.measure)
    return {
        "kind": "cheeger", "measure": res.measure, "value": res.value, "boundary": res.boundary,
        "denominator": res.denominator, "witness": _one_based(sorted(res.witness)),
    }


def _cmd_walk(g, args) -> dict:
    start = _vertex(g, args.start, "start vertex")
    an = walks.analyze(g)
    base = {
        "kind": "walk", "rho": an.rho, "stationary": an.stationary,
        "possibly_periodic": an.possibly_periodic,
    }
    if args.certificate is not None:
        if args.function is not None:
            if len(args.function) != g.n:
                raise InputError(f"--function needs {g.n} values, got {len(args.function)}")
            f = np.asarray(args.function)
        else:
            f = np.zeros(g.n)
            f[start] = 1.0
        curve = walks.convergence_curve(g, f, args.certificate)
        base["certificates"] = [{"t": c.t, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds} for c in curve]
        return base
    path = walks.simulate(g, start, args.steps, args.seed)
    base.update(seed=args.seed, steps=args.steps, path=_one_based(path.tolist()),
                frequencies=walks.visit_frequencies(g, path))
    return base


def _pair_dict(res, plans: bool) -> dict:
    d = {"pair": _one_based(list(res.pair)), "kappa": res.kappa, "w1": res.w1}
    if plans:
        d["transport_plan"] = res.transport_plan
    return d


def _cmd_curvature(g, args) -> dict:
    out: dict[str, Any] = {"kind": "curvature"}
    if args.ollivier:
        if args.pair:
            x, y = (_vertex(g, v) for v in args.pair)
            pairs = [(x, y)]
        else:
            pairs = [(x, y) for x in range(g.n) for y in sorted(g.neighbors[x]) if y > x]
        out["pairs"] = [_pair_dict(curvature.ollivier_kappa(g, x, y), args.plans) for x, y in pairs]
    elif args.scalar:
        verts = [_vertex(g, args.vertex)] if args.vertex is not None else range(g.n)
        out["scalar"] = [{"vertex": v + 1, "kappa": curvature.scalar_curvature(g, v)} for v in verts]
    elif args.cd:
        m = _dimension(args.cd[0])
        try:
            K = float(args.cd[1])
        except ValueError:
            raise InputError(f"K must be a number, got {args.cd[1]!r}") from None
        cert = curvature.cd_check(g, m, K)
        out["cd"] = {"m": cert.m, "K": cert.K, "holds": cert.holds,
                     "worst_vertex": cert.worst_vertex + 1, "min_eigenvalue": cert.min_eigenvalue}
    elif args.best_k is not None:
        out["best_K"] = {"m": args.best_k, "K": curvature.best_K(g, args.best_k), "d_star": curvature.d_star(g)}
    else:
        out["reports"] = [_report_dict(r) for r in curvature.curvature_spectral_audit(g)]
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Execute a command; returns ``(exit status, stdout text, stderr text)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if args.command == "gen":
            return EXIT_OK, _cmd_gen(args), ""
        data, source = _read_input(args.input)
        g = hgio.parse_hg(data.decode("utf-8"))
        if args.command == "matrix":
            return EXIT_OK, hgio.format_matrix(_matrix(g, args.matrix)), ""
        status = EXIT_OK
        params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "input", "format")}
        if args.command == "spectrum":
            payload = _cmd_spectrum(g, args)
        elif args.command == "audit":
            payload, status = _cmd_audit(g, args)
        elif args.command == "cheeger":
            payload = _cmd_cheeger(g, args)
        elif args.command == "walk":
            payload = _cmd_walk(g, args)
        else:
            payload = _cmd_curvature(g, args)
        rep = report.envelope(args.command, argv, params, source, data, payload)
        return status, report.render(rep, args.format), ""
    except (InputError, HypergraphError, UnicodeDecodeError) as exc:
        return EXIT_INPUT, "", f"hyperspec: error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
