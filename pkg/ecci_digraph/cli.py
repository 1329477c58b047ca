"""``ecci`` command line.

Exit codes: 0 ok, 1 unreadable or malformed input, 2 input not strongly
connected, 3 bad parameters, 4 counterexample found, 5 search cap exceeded.
Machine output goes to standard output; logs and errors go to standard error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ecci_digraph.config import Settings
from ecci_digraph.errors import (
    CapExceededError,
    EcciError,
    EdgeListSyntaxError,
    InvalidDigraphError,
    InvalidFamilyParameterError,
    NotStronglyConnectedError,
)
from ecci_digraph.extremal.sampling import random_strong_digraph
from ecci_digraph.extremal.search import (
    ExtremalReport,
    enumerate_strong_digraphs,
    enumerate_tournaments,
)
from ecci_digraph.extremal.verification import (
    THEOREM_IDS,
    VerificationReport,
    VerifyParams,
    verify_theorem,
)
from ecci_digraph.families.fixtures import FIXTURE_IDS
from ecci_digraph.families.registry import Family, FamilySpec
from ecci_digraph.formats.edgelist import (
    read_edge_list,
    serialize_edge_list,
    write_edge_list,
)
from ecci_digraph.formats.reports import (
    JsonReport,
    enumerate_payload,
    generate_payload,
    index_payload,
    profile_payload,
    verify_payload,
)
from ecci_digraph.indices import IndexReport, format_xi, index_report
from ecci_digraph.metrics import EccProfile, all_pairs_distances, ecc_profile

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_STRONG = 2
EXIT_BAD_PARAMS = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_CAP = 5

DIRECTION_ALIASES = {
    "fwd": "forward",
    "forward": "forward",
    "bwd": "backward",
    "backward": "backward",
}

logger = logging.getLogger(__name__)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage, which is the non-strong code here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Right-aligned fixed-width columns, one header row and a rule."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _write(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _emit_json(kind: str, payload: Dict[str, Any]) -> None:
    _write(JsonReport(kind=kind, payload=payload).to_json().decode())


def _index_table(report: IndexReport, profile) -> str:
    rows = [
        (
            row.vertex,
            row.degree_sum,
            profile.ecc_out[row.vertex],
            profile.ecc_in[row.vertex],
            row.mecc,
            format_xi(row.contribution),
        )
        for row in report.per_vertex
    ]
    table = format_table(
        ("vertex", "d+ + d-", "ecc_out", "ecc_in", "mecc", "contribution"), rows
    )
    summary = format_table(
        ("n", "arcs", "xi", "mrad", "mdiam", "lower", "upper", "self_centered"),
        [
            (
                report.n,
                report.arc_count,
                format_xi(report.xi_doubled),
                report.mrad,
                report.mdiam,
                report.lower_bound,
                report.upper_bound,
                report.self_centered,
            )
        ],
    )
    return table + "\n" + summary


def _profile_table(profile: EccProfile) -> str:
    rows = [
        (v, o, i, m)
        for v, (o, i, m) in enumerate(zip(profile.ecc_out, profile.ecc_in, profile.mecc))
    ]
    table = format_table(("vertex", "ecc_out", "ecc_in", "mecc"), rows)
    summary = format_table(
        ("mrad", "mdiam", "self_centered"),
        [(profile.mrad, profile.mdiam, profile.self_centered)],
    )
    return table + "\n" + summary


def _cmd_compute(args: argparse.Namespace, settings: Settings) -> int:
    d = read_edge_list(args.file)
    profile = ecc_profile(d, settings=settings)
    if args.profile:
        if args.json:
            _emit_json("profile", profile_payload(profile))
        else:
            _write(_profile_table(profile))
        return EXIT_OK
    report = index_report(d, profile=profile)
    distances = all_pairs_distances(d, settings=settings) if args.md_matrix else None
    if args.json:
        _emit_json("index", index_payload(report, profile, distances))
        return EXIT_OK
    text = _index_table(report, profile)
    if distances is not None:
        md = distances.md.tolist()
        text += "\n" + format_table(
            ["md"] + [str(v) for v in range(d.n)],
            [[u] + md[u] for u in range(d.n)],
        )
    _write(text)
    return EXIT_OK


def _parse_set(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise _UsageError(f"--set expects comma-separated integers, got {text!r}")


def _cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    family = args.family.replace("-", "_")
    if family == "fixture":
        if args.id is None:
            raise _UsageError(f"generate fixture needs --id (one of {FIXTURE_IDS})")
        family = f"fixture_{args.id}"
    if family not in Family._value2member_map_:
        raise _UsageError(f"unknown family {args.family!r}")
    params: Dict[str, Any] = {}
    if args.set is not None:
        params["connection_set"] = _parse_set(args.set)
    if args.direction is not None:
        params["direction"] = DIRECTION_ALIASES[args.direction]
    spec = FamilySpec(family=family, n=args.n, **params)
    try:
        d = spec.build()
    except NotStronglyConnectedError as err:
        raise InvalidFamilyParameterError(str(err)) from err
    if args.json:
        report = JsonReport(
            kind="generate", payload=generate_payload(spec.family.value, d, params)
        )
        if args.output:
            Path(args.output).write_bytes(report.to_json())
        else:
            _write(report.to_json().decode())
    elif args.output:
        write_edge_list(d, args.output)
    else:
        _write(serialize_edge_list(d))
    if args.output:
        logger.info("Wrote %s (n=%s) to %s", spec.family.value, d.n, args.output)
    return EXIT_OK


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise _UsageError(f"--n-range expects A..B, got {text!r}")


def _verify_text(report: VerificationReport) -> str:
    lines = [
        f"{report.theorem_id}: {report.verdict}"
        f"{' (audit)' if report.audit else ''}",
        f"range: {report.parameter_range}",
        f"instances checked: {report.instances_checked}",
    ]
    if report.seed is not None:
        lines.append(f"seed: {report.seed}, samples: {report.samples}")
    lines.extend(report.notes)
    text = "\n".join(lines) + "\n"
    if report.table:
        headers = list(report.table[0])
        text += "\n" + format_table(
            headers, [[row[h] for h in headers] for row in report.table]
        )
    if report.failures:
        text += "\ncounterexamples:\n" + "".join(f"{w}\n" for w in report.failures)
    return text


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    n_range = None
    if args.n is not None:
        n_range = (args.n, args.n)
    elif args.n_range is not None:
        n_range = _parse_range(args.n_range)
    params = VerifyParams(
        n_range=n_range,
        samples=args.samples,
        seed=args.seed,
        allow_large=args.allow_large,
    )
    report = verify_theorem(args.theorem_id, params, settings=settings)
    if args.json:
        _emit_json("verify", verify_payload(report))
    else:
        _write(_verify_text(report))
    if report.failures:
        if args.json:
            for witness in report.failures:
                print(f"counterexample: {witness}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _enumerate_text(report: ExtremalReport) -> str:
    lines = [
        f"class: {report.search_class.value}",
        f"n: {report.n}",
        f"objective: {report.objective.value}",
        f"extremal xi: {report.extremal_display}",
        f"labeled: {report.labeled_count}",
        f"strong: {report.strong_count}",
        f"labeled witnesses: {report.witness_count_labeled}",
        f"bound violations: {report.bound_violations}",
        "witnesses" + (" (up to isomorphism):" if report.deduplicated else ":"),
    ]
    lines.extend(f"  {w}" for w in report.witnesses)
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    search = (
        enumerate_tournaments
        if args.search_class == "tournaments"
        else enumerate_strong_digraphs
    )
    report = search(args.n, args.stat, allow_large=args.allow_large, settings=settings)
    if args.json:
        _emit_json("enumerate", enumerate_payload(report))
    else:
        _write(_enumerate_text(report))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    if not 0.0 < args.density < 1.0:
        raise _UsageError("--density must lie strictly between 0 and 1")
    rows = []
    start = time.perf_counter()
    d = random_strong_digraph(
        args.n, args.density, args.seed, method="cycle", settings=settings
    )
    rows.append(("generate", f"{time.perf_counter() - start:.3f}", d.arc_count))
    if args.n <= settings.matrix_threshold:
        start = time.perf_counter()
        all_pairs_distances(d, settings=settings)
        rows.append(("apsp", f"{time.perf_counter() - start:.3f}", args.n * args.n))
    else:
        rows.append(("apsp", "skipped", "-"))
    start = time.perf_counter()
    profile = ecc_profile(d, settings=settings)
    rows.append(("profile", f"{time.perf_counter() - start:.3f}", profile.mdiam))
    start = time.perf_counter()
    report = index_report(d, profile=profile)
    rows.append(
        ("index", f"{time.perf_counter() - start:.3f}", format_xi(report.xi_doubled))
    )
    _write(
        f"n={args.n} density={args.density} seed={args.seed}\n"
        + format_table(("step", "seconds", "result"), rows)
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="ecci",
        description="Eccentric connectivity index of strongly connected digraphs.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker processes for exhaustive searches (default: $ECCI_THREADS or 1)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    compute = sub.add_parser("compute", help="index and m-eccentricities of an edge list")
    compute.add_argument("file", help="edge-list file, '-' for standard input")
    output = compute.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true")
    output.add_argument("--table", action="store_true", help="aligned table (default)")
    extra = compute.add_mutually_exclusive_group()
    extra.add_argument("--md-matrix", action="store_true", help="also print the md matrix")
    extra.add_argument(
        "--profile", action="store_true", help="m-eccentricity profile only, no index"
    )
    compute.set_defaults(handler=_cmd_compute)

    generate = sub.add_parser("generate", help="edge list of a named family")
    generate.add_argument("family", help="family name, or 'fixture' with --id")
    generate.add_argument("--n", type=int)
    generate.add_argument("--direction", choices=sorted(DIRECTION_ALIASES))
    generate.add_argument("--set", help="circulant connection set, e.g. 1,2")
    generate.add_argument("--id", choices=FIXTURE_IDS)
    generate.add_argument("-o", "--output")
    generate.add_argument("--json", action="store_true")
    generate.set_defaults(handler=_cmd_generate)

    verify = sub.add_parser("verify", help="check a theorem")
    verify.add_argument("theorem_id", help=f"one of {', '.join(THEOREM_IDS)}")
    orders = verify.add_mutually_exclusive_group()
    orders.add_argument("--n", type=int)
    orders.add_argument("--n-range")
    verify.add_argument("--samples", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--allow-large", action="store_true")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=_cmd_verify)

    enumerate_ = sub.add_parser("enumerate", help="exhaustive extremal search")
    enumerate_.add_argument(
        "--class",
        dest="search_class",
        required=True,
        choices=("tournaments", "strong-digraphs"),
    )
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--stat", choices=("min", "max"), default="min")
    enumerate_.add_argument("--allow-large", action="store_true")
    enumerate_.add_argument("--json", action="store_true")
    enumerate_.set_defaults(handler=_cmd_enumerate)

    bench = sub.add_parser("bench", help="timings on a seeded random strong digraph")
    bench.add_argument("--n", type=int, default=2000)
    bench.add_argument("--density", type=float, default=0.002)
    bench.add_argument("--seed", type=int, default=1)
    bench.set_defaults(handler=_cmd_bench)
    return parser


def _exit_code(err: EcciError) -> int:
    if isinstance(err, CapExceededError):
        return EXIT_CAP
    if isinstance(err, NotStronglyConnectedError):
        return EXIT_NOT_STRONG
    if isinstance(err, (EdgeListSyntaxError, InvalidDigraphError)):
        return EXIT_PARSE
    return EXIT_BAD_PARAMS


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"ecci: error: {err}", file=sys.stderr)
        return EXIT_BAD_PARAMS

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = Settings.from_env(threads=args.threads, show_progress=args.progress)
        return args.handler(args, settings)
    except _UsageError as err:
        print(f"ecci: error: {err}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except OSError as err:
        print(f"ecci: error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except EcciError as err:
        print(f"ecci: error: {err}", file=sys.stderr)
        return _exit_code(err)
    except ValueError as err:
        # pydantic validation of CLI-supplied values
        print(f"ecci: error: {err}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
