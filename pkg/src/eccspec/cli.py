"""Command-line interface: ``eccspec report | verify | sweep``.

All output is JSON on stdout (errors as JSON on stderr).  Exit codes:
0 success, 1 usage or parse error, 2 disconnected graph, 3 verification failure.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from eccspec import __version__, kernels
from eccspec import graph as gmod
from eccspec.graph import Graph, GraphFormatError
from eccspec.linalg import Spectrum, auxiliary_eigenvalues, char_poly_exact, energy, sym_eigenvalues
from eccspec.metrics import DisconnectedGraphError
from eccspec.verify import (
    CHECK_IDS,
    DEFAULT_TOL,
    GRAPH_CHECKS,
    Analysis,
    Verdict,
    check_closed_forms,
    run_checks,
    run_sweep,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# --------------------------------------------------------------------------
# JSON helpers


def _clean(obj: Any) -> Any:
    """Round floats to 12 significant digits and make containers JSON-ready."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        x = float(f"{obj:.12g}")
        return 0.0 if x == 0 else x
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_clean(v) for v in items]
    if hasattr(obj, "item"):  # numpy scalars
        return _clean(obj.item())
    return str(obj)


def dumps(payload: dict[str, Any], pretty: bool = False) -> str:
    return json.dumps(_clean(payload), sort_keys=True, indent=2 if pretty else None, allow_nan=False)


def _emit(payload: dict[str, Any], args: argparse.Namespace) -> None:
    if not getattr(args, "no_timestamp", False):
        payload["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    print(dumps(payload, getattr(args, "pretty", False)))


def _error(kind: str, message: str, code: int, **extra: Any) -> int:
    print(json.dumps({"error": kind, "message": message, "exit_code": code, **extra}, sort_keys=True), file=sys.stderr)
    return code


# --------------------------------------------------------------------------
# input handling


def _parse_params(tokens: Sequence[str] | None) -> tuple[int, ...]:
    out: list[int] = []
    for tok in tokens or ():
        for part in str(tok).replace(",", " ").split():
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"bad family parameter {part!r}") from None
    return tuple(out)


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if hi_i < lo_i:
        raise UsageError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def _read_graph_source(source: str, fmt: str | None) -> tuple[Graph, str]:
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        kind = fmt or _sniff(text)
        if kind == "graph6":
            first = next((ln for ln in text.splitlines() if ln.strip()), "")
            return gmod.parse_graph6(first), f"graph6:{source}"
        return gmod.parse_edge_list(text), f"edgelist:{source}"
    if fmt == "edgelist":
        raise UsageError(f"edge-list file {source!r} not found")
    return gmod.parse_graph6(source), "graph6"


def _sniff(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return "edgelist" if line.isdigit() else "graph6"
    return "edgelist"


def load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    given = [x for x in (args.input, args.graph6, args.family) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of INPUT, --graph6 or --family")
    if args.graph6:
        return gmod.parse_graph6(args.graph6), "graph6"
    if args.family:
        params = _parse_params(args.params)
        try:
            G = gmod.generate(args.family, *params)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return G, f"family:{args.family}" + (f"({','.join(map(str, params))})" if params else "")
    return _read_graph_source(args.input, args.format)


# --------------------------------------------------------------------------
# report


def _spectrum_json(spec: Spectrum) -> dict[str, Any]:
    return {
        "values": list(spec.values),
        "groups": [{"value": v, "multiplicity": m} for v, m in spec.groups],
    }


def build_report(G: Graph, source: str, tol: float = DEFAULT_TOL, verify: Sequence[str] = ()) -> dict[str, Any]:
    a = Analysis(G)
    dp = a.profile  # raises DisconnectedGraphError
    cl = a.classes
    st = a.stats
    group_tol = {name: tol * max(1.0, M.frobenius_norm()) for name, M in (("E", a.E), ("EL", a.EL), ("EQ", a.EQ))}
    spectra = {
        "E": sym_eigenvalues(a.E, group_tol=group_tol["E"]),
        "EL": sym_eigenvalues(a.EL, group_tol=group_tol["EL"]),
        "EQ": sym_eigenvalues(a.EQ, group_tol=group_tol["EQ"]),
    }
    bp = a.bipartition
    report: dict[str, Any] = {
        "input": {"source": source, "graph6": a.graph6, "n": G.n, "m": G.m},
        "metrics": {
            "diameter": dp.diameter,
            "radius": dp.radius,
            "eccentricities": list(dp.ecc),
            "degrees": list(cl.degrees),
            "universal": sorted(cl.universal),
            "central": sorted(cl.central),
            "periphery": sorted(cl.periphery),
        },
        "ecc": {
            "transmission": list(st.tr),
            "tr_min": st.tr_min,
            "tr_max": st.tr_max,
            "tr_avg": str(st.tr_avg),
            "wiener": st.wiener,
            "sq_sum": st.sq_sum,
            "regular_degree": st.regular_degree,
        },
        "spectra": {k: _spectrum_json(v) for k, v in spectra.items()},
        "energies": {
            "E": energy(spectra["E"].values),
            "EL": energy(auxiliary_eigenvalues(spectra["EL"], st.tr_avg)),
        },
        "polynomials": {
            name: [str(c) for c in char_poly_exact(M).coeffs] for name, M in (("E", a.E), ("EL", a.EL), ("EQ", a.EQ))
        },
        "structure": {
            "irreducible": a.irreducible,
            "ecc_bipartite": bp is not None,
            "partition": [list(bp.part_a), list(bp.part_b)] if bp is not None else None,
        },
        "backend": kernels.BACKEND,
        "version": __version__,
    }
    if verify:
        report["verdicts"] = [v.to_dict() for v in run_checks(a, verify, tol=tol)]
    return report


def cmd_report(args: argparse.Namespace) -> int:
    G, source = load_graph(args)
    checks = _resolve_checks(args.verify) if args.verify else ()
    report = build_report(G, source, args.tol, checks)
    _emit(report, args)
    if any(v["passed"] is False for v in report.get("verdicts", [])):
        return EXIT_FAILED
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _resolve_checks(ids: Sequence[str]) -> list[str]:
    out: list[str] = []
    for cid in ids:
        for part in cid.split(","):
            part = part.strip()
            if not part:
                continue
            if part == "all":
                out.extend(GRAPH_CHECKS)
            elif part in CHECK_IDS:
                out.append(part)
            else:
                raise UsageError(f"unknown check id {part!r}; choose from {', '.join(CHECK_IDS)} or all")
    return list(dict.fromkeys(out))


def _family_param_sets(family: str, params: tuple[int, ...], rng: range | None) -> list[tuple[int, ...]]:
    if rng is None:
        return [params]
    if family == "complete_bipartite" and not params:
        return [(m, n) for m in rng for n in rng]
    return [(k,) + params for k in rng]


def cmd_verify(args: argparse.Namespace) -> int:
    checks = _resolve_checks(args.checks)
    rng = _parse_range(args.range) if args.range else None
    if rng is not None and not args.family:
        raise UsageError("--range needs --family")
    if "closed-forms" in checks and not args.family:
        raise UsageError("closed-forms needs --family")
    verdicts: list[Verdict] = []
    if args.family:
        params = _parse_params(args.params)
        for ps in _family_param_sets(args.family, params, rng):
            graph_checks = [c for c in checks if c != "closed-forms"]
            if "closed-forms" in checks:
                verdicts.append(check_closed_forms(args.family, *ps))
            if graph_checks:
                try:
                    G = gmod.generate(args.family, *ps)
                except ValueError as exc:
                    verdicts.extend(
                        Verdict(c, None, details={"family": args.family, "params": list(ps)}, skipped_reason=str(exc))
                        for c in graph_checks
                    )
                    continue
                for v in run_checks(G, graph_checks, tol=args.tol):
                    v.details.setdefault("family", args.family)
                    v.details.setdefault("params", list(ps))
                    verdicts.append(v)
    else:
        G, _ = load_graph(args)
        verdicts = run_checks(G, checks, tol=args.tol)
    summary = {
        "passed": sum(1 for v in verdicts if v.passed is True),
        "failed": sum(1 for v in verdicts if v.passed is False),
        "skipped": sum(1 for v in verdicts if v.skipped),
    }
    _emit({"checks": checks, "summary": summary, "verdicts": [v.to_dict() for v in verdicts]}, args)
    return EXIT_FAILED if summary["failed"] else EXIT_OK


# --------------------------------------------------------------------------
# sweep


def cmd_sweep(args: argparse.Namespace) -> int:
    checks = _resolve_checks(args.checks or ["all"])
    if "closed-forms" in checks:
        raise UsageError("closed-forms is family based and cannot run in a sweep")
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.mode == "exhaustive" and args.n_max > 6:
        raise UsageError("exhaustive sweeps support --n-max <= 6; use --mode sample beyond")
    if args.mode == "sample" and args.count < 1:
        raise UsageError("--mode sample needs --count >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = run_sweep(args.n_max, checks, mode=args.mode, count=args.count, seed=args.seed, jobs=args.jobs)
    payload = report.to_dict()
    payload["backend"] = kernels.BACKEND
    _emit(payload, args)
    return EXIT_OK if report.ok else EXIT_FAILED


# --------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="spectral tolerance (default 1e-6)")
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (edge list or graph6) or inline graph6 string")
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--format", choices=("graph6", "edgelist"), help="format of INPUT (sniffed if omitted)")
    p.add_argument("--family", choices=gmod.FAMILIES, help="generate a standard graph instead of reading one")
    p.add_argument("--params", nargs="*", default=[], help="family parameters, e.g. --params 2 3")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eccspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"eccspec {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("report", help="full JSON report for one graph")
    _add_input(p)
    _add_common(p)
    p.add_argument("--verify", nargs="*", metavar="CHECK", help="also run these checks (or 'all')")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run theorem checks on a graph or a family range")
    p.add_argument("checks", nargs="+", metavar="CHECK", help=f"one or more of: {', '.join(CHECK_IDS)}, all")
    p.add_argument("--input", dest="input", help="graph file or inline graph6 string")
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--format", choices=("graph6", "edgelist"))
    p.add_argument("--family", choices=gmod.FAMILIES)
    p.add_argument("--params", nargs="*", default=[])
    p.add_argument("--range", help="first family parameter range A..B (both parameters for complete_bipartite)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run checks over all (or sampled) connected graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int, default=0, help="sample size at order n-max (sample mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checks", nargs="*", help="check ids (default all)")
    _add_common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing command (report, verify or sweep)")
        return args.func(args)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except GraphFormatError as exc:
        return _error("parse", str(exc), EXIT_USAGE)
    except DisconnectedGraphError as exc:
        return _error("disconnected", str(exc), EXIT_DOMAIN, pair=list(exc.pair))
    except OSError as exc:
        return _error("io", str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
