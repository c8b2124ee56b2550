"""Command-line interface.

Subcommands: toughness, gen, minimal, certify, search, orbits.  All output on
stdout is byte-deterministic given (input, flags, seed, threads); timing and
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure or
parse error, 2 inconclusive.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .families import GENERATORS, LabeledFamily
from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .invariants import edge_orbits
from .search import SearchOptions, filter_counterexamples
from .toughness import (
    STEPS_PER_BUDGET_SECOND,
    CutCertificate,
    EngineConfig,
    LimitExceeded,
    is_minimally_tough,
    parse_certificate,
    toughness_exact,
    toughness_upper_search,
    verify_certificate,
    write_certificate,
)


def _default_threads() -> int:
    env = os.environ.get("TOUGHNESS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            print(f"ignoring bad TOUGHNESS_THREADS={env!r}", file=sys.stderr)
    return os.cpu_count() or 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None, help="worker count")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument(
        "--budget-secs", type=int, default=60,
        help="heuristic budget; converted to a deterministic step count",
    )
    parser.add_argument("--exhaustive-limit", type=int, default=26)


def _config(args) -> EngineConfig:
    threads = args.threads if args.threads is not None else _default_threads()
    return EngineConfig(
        exhaustive_limit=args.exhaustive_limit,
        workers=max(1, threads),
        seed=args.seed,
        budget_steps=max(1, args.budget_secs) * STEPS_PER_BUDGET_SECOND,
    )


def _load_graph(args) -> Graph:
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    text = Path(args.file).read_text()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith(">>"):
            return parse_graph6(line)
    raise ValueError(f"no graph6 line found in {args.file}")


def _cmd_toughness(args) -> int:
    cfg = _config(args)
    try:
        g = _load_graph(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.upper:
        cert = toughness_upper_search(g, cfg.budget_steps, seed=cfg.seed)
        print(f"t <= {cert.ratio}")
        if args.cert:
            Path(args.cert).write_text(write_certificate(g, cert))
        return 0
    try:
        result = toughness_exact(g, cfg)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"t = {result.value}")
    if args.cert and result.witness is not None:
        Path(args.cert).write_text(write_certificate(g, result.witness))
    return 0


def _write_family_files(fam: LabeledFamily, args) -> None:
    from .graph import delete_edge

    if args.certs:
        outdir = Path(args.certs)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "base.cert").write_text(
            write_certificate(fam.graph, fam.base_certificate)
        )
        for (u, v), cert in sorted(fam.edge_certificates.items()):
            (outdir / f"edge-{u}-{v}.cert").write_text(
                write_certificate(delete_edge(fam.graph, (u, v)), cert)
            )
    if args.rotation:
        if fam.rotation is None:
            raise ValueError(f"family {fam.tag} has no rotation system")
        Path(args.rotation).write_text(fam.rotation.to_text())
    if args.labels:
        Path(args.labels).write_text(fam.label_map_text())


def _cmd_gen(args) -> int:
    try:
        if args.family == "planar-chain":
            fam = GENERATORS["planar-chain"](args.m)
        elif args.family == "knp2-minus-matching":
            fam = GENERATORS["knp2-minus-matching"](args.n, args.m)
        elif args.family == "knp3":
            fam = GENERATORS["knp3"](args.n, regularized=args.regularized)
        else:
            fam = GENERATORS["square-lsk4"]()
        _write_family_files(fam, args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(write_graph6(fam.graph))
    return 0


def _load_hints(g: Graph, hints_dir: str) -> dict[tuple[int, int], CutCertificate]:
    hints: dict[tuple[int, int], CutCertificate] = {}
    for path in sorted(Path(hints_dir).glob("edge-*.cert")):
        parts = path.stem.split("-")
        if len(parts) != 3:
            continue
        try:
            u, v = int(parts[1]), int(parts[2])
            _, cert = parse_certificate(path.read_text())
        except ValueError:
            continue
        hints[(min(u, v), max(u, v))] = cert
    return hints


def _cmd_minimal(args) -> int:
    cfg = _config(args)
    try:
        g = _load_graph(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.heuristic_only:
        cfg = cfg.with_options(allow_exhaustive_edges=False)
    hints = _load_hints(g, args.hints) if args.hints else None
    try:
        report = is_minimally_tough(g, cfg, hints=hints)
    except (LimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    verdict = {True: "true", False: "false", None: "inconclusive"}[report.verdict]
    print(f"minimally tough: {verdict}, t = {report.toughness}")
    for w in report.entries:
        u, v = w.edge
        if w.certificate is not None:
            c = w.certificate
            print(
                f"edge {u}-{v}: |S|={c.cut.bit_count()} omega={c.omega} "
                f"ratio={c.ratio} source={w.source}"
            )
        else:
            status = "no certificate below t" if w.source == "exhaustive" else "unresolved"
            print(f"edge {u}-{v}: {status}")
    return 2 if report.verdict is None else 0


def _cmd_certify(args) -> int:
    try:
        g, cert = parse_certificate(Path(args.cert).read_text())
    except (ValueError, OSError) as exc:
        print(f"FAIL {exc}")
        return 1
    result = verify_certificate(g, cert)
    if result:
        print(f"OK {cert.cut.bit_count()}/{cert.omega} = {cert.ratio}")
        return 0
    print(f"FAIL {result.reason}")
    return 1


def _cmd_search(args) -> int:
    cfg = _config(args)
    options = SearchOptions(
        non_regular_only=args.non_regular_only,
        min_n=args.min_n,
        max_n=args.max_n,
        min_delta=args.min_delta,
        workers=cfg.workers,
        config=cfg,
    )
    try:
        lines = Path(args.input).read_text().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = filter_counterexamples(lines, options)
    for entry in report.flagged:
        print(entry.report_line())
    for lineno, msg in report.parse_errors:
        print(f"parse error at line {lineno}: {msg}", file=sys.stderr)
    print(report.summary_line())
    print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return 0


def _cmd_orbits(args) -> int:
    try:
        g = _load_graph(args)
        orbits, _ = edge_orbits(g, limit=args.limit)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{len(orbits)} edge orbits")
    for k, orbit in enumerate(orbits):
        members = " ".join(f"{u}-{v}" for u, v in orbit)
        print(f"orbit {k}: {members}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughgraphs",
        description="Exact graph toughness, cut certificates, construction "
        "generators, and counterexample stream search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("toughness", help="compute toughness of one graph")
    p.add_argument("--g6", help="graph6 literal")
    p.add_argument("--file", help="file containing a graph6 line")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--upper", action="store_true")
    p.add_argument("--cert", help="write the witness certificate here")
    _add_common(p)
    p.set_defaults(func=_cmd_toughness)

    p = sub.add_parser("gen", help="generate a built-in family")
    p.add_argument(
        "family",
        choices=["planar-chain", "knp2-minus-matching", "knp3", "square-lsk4"],
    )
    p.add_argument("--m", type=int, help="block count / rung count")
    p.add_argument("--n", type=int, help="clique order")
    p.add_argument("--regularized", action="store_true")
    p.add_argument("--certs", help="directory for base + per-edge certificates")
    p.add_argument("--rotation", help="write the rotation system here")
    p.add_argument("--labels", help="write the label map here")
    _add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("minimal", help="verify minimal toughness")
    p.add_argument("--g6")
    p.add_argument("--file")
    p.add_argument("--hints", help="directory of edge-<u>-<v>.cert hint files")
    p.add_argument(
        "--heuristic-only",
        action="store_true",
        help="never fall back to exhaustive per-edge scans; unresolved edges "
        "make the verdict inconclusive (exit 2)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("certify", help="check a cert v1 file")
    p.add_argument("--cert", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("search", help="filter a graph6 stream for counterexamples")
    p.add_argument("--input", required=True)
    p.add_argument("--non-regular-only", action="store_true")
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-delta", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("orbits", help="edge orbits under the automorphism group")
    p.add_argument("--g6")
    p.add_argument("--file")
    p.add_argument("--limit", type=int, default=48)
    _add_common(p)
    p.set_defaults(func=_cmd_orbits)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
