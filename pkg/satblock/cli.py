"""Command-line interface for the saturated blocker toolkit."""

# pylint: disable=broad-exception-caught

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, NoReturn, TextIO

from colorama import Fore, Style, just_fix_windows_console

from .characterization import (
    build_bouquet,
    build_butterfly,
    build_seagull,
    classify_near_minimum,
    recognize_min_blocker,
    stability_distance,
)
from .const import (
    CAPACITY_ENV,
    LOGGER,
    META_CONSTRUCTION,
    META_PARAMETERS,
)
from .constructions import (
    QuadPartition,
    build_matrioshka,
    build_min_blocker,
    build_quadrilateral,
    build_spectrum_blocker,
    closed_form_coefficients,
    deficit_ratio,
    max_reachable,
    recursion_coefficients,
    spectrum_band,
)
from .core import EdgeSet, is_blocker, is_saturated_blocker, witness_triangulation
from .document import BlockerDocument, parse_document, serialize_document
from .enumeration import SymmetryGroup, all_saturated_blockers, orbit_counts
from .exceptions import (
    BlockerError,
    CapacityError,
    ClassificationError,
    ConstructionError,
    DocumentError,
    IncidenceError,
    InvalidEdgeError,
    PolygonSizeError,
)
from .render import render_svg
from .report import FORMAT_CSV, FORMAT_JSON, REPORT_FIELDS, ReportRow, ReportWriter

EXIT_SATURATED = 0
EXIT_NOT_BLOCKER = 1
EXIT_UNSATURATED = 2
EXIT_INPUT_ERROR = 3
EXIT_CONSTRUCTION_ERROR = 4
EXIT_SWEEP_FAILURE = 5

CONSTRUCTION_MIN = "min-blocker"
CONSTRUCTION_SEAGULL = "seagull"
CONSTRUCTION_BUTTERFLY = "butterfly"
CONSTRUCTION_BOUQUET = "bouquet"
CONSTRUCTION_QUADRILATERAL = "quadrilateral"
CONSTRUCTION_MATRIOSHKA = "matrioshka"

COEFFICIENT_FIELDS = ("i", "a", "b", "c", "matches_closed_form")
TREND_FIELDS = ("n", "max_reachable", "deficit", "deficit_ratio", "quarter_floor")

# ANSI colours for stderr status lines
COLOR_RESET = Style.RESET_ALL
COLOR_STEP = Fore.MAGENTA
COLOR_SUCCESS = Fore.GREEN
COLOR_WARNING = Fore.YELLOW
COLOR_ERROR = Fore.RED


def print_colored(message: str, color: str) -> None:
    """Print a status message to stderr in a colour."""
    print(f"{color}{message}{COLOR_RESET}", file=sys.stderr)


def print_step(step: str) -> None:
    """Print a step in the process."""
    print_colored(f"✨ {step}", COLOR_STEP)


def print_error(message: str) -> None:
    """Print an error message."""
    print_colored(f"❌ Error: {message}", COLOR_ERROR)


def print_success(message: str) -> None:
    """Print a success message."""
    print_colored(f"✅ {message}", COLOR_SUCCESS)


def print_warning(message: str) -> None:
    """Print a warning message."""
    print_colored(f"⚠️  {message}", COLOR_WARNING)


def parse_range(text: str) -> range:
    """Parse "A..B" or "A..B:STEP" into an inclusive range."""
    bounds, _, step = text.partition(":")
    first, sep, last = bounds.partition("..")
    try:
        start = int(first)
        stop = int(last) if sep else start
        stride = int(step) if step else 1
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use A..B[:STEP]") from err
    if stride < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    return range(start, stop + 1, stride)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err}") from err


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def _shape_text(b: EdgeSet) -> str | None:
    shape = recognize_min_blocker(b)
    if shape is None:
        return None
    return f"rotation={shape.rotation} m={shape.m} beams={list(shape.beam_targets)}"


# check


def cmd_check(doc: BlockerDocument) -> ReportRow:
    """Blocker and saturation verdicts plus shape recognition where it applies."""
    start = time.perf_counter()
    b = doc.blocker()
    n = b.n
    blocking = is_blocker(b)
    saturated = blocking and is_saturated_blocker(b)
    row = ReportRow(
        n,
        len(b),
        blocking,
        saturated,
        source=doc.metadata.get(META_CONSTRUCTION),
    )
    if saturated and len(b) == n - 2 and n >= 4:
        row.min_shape = _shape_text(b)
    if saturated and len(b) == n - 1 and n >= 6:
        try:
            row.classification = str(classify_near_minimum(b).variant)
            _, row.stability_distance = stability_distance(b)
        except ClassificationError as err:
            LOGGER.warning("Saturated blocker left unclassified: %s", err)
            row.classification = "unclassified"
    row.elapsed_ms = _elapsed_ms(start)
    return row


def verdict_exit_code(row: ReportRow) -> int:
    """Exit status for a check verdict."""
    if row.is_saturated:
        return EXIT_SATURATED
    return EXIT_UNSATURATED if row.is_blocker else EXIT_NOT_BLOCKER


def _run_check(args: argparse.Namespace) -> int:
    doc = parse_document(_read_input(args.input))
    row = cmd_check(doc)
    writer = ReportWriter(sys.stdout, args.format, stable=args.stable)
    writer.write(row)
    return verdict_exit_code(row)


# construct


def _sub_blocker(n: int, size: int | None) -> EdgeSet:
    """A saturated blocker of the given size on a nested sub-polygon."""
    if n == 4:
        if size not in (None, 2):
            raise ConstructionError(
                f"a quadrilateral sub-polygon only has size-2 blockers, got {size}"
            )
        return build_min_blocker(4, 1, [])
    return build_spectrum_blocker(n, n - 2 if size is None else size)


def cmd_construct(args: argparse.Namespace) -> BlockerDocument:
    """Build the requested family member with provenance metadata."""
    verify = not args.no_verify
    if args.spectrum is not None:
        n, t = args.spectrum
        b = build_spectrum_blocker(n, t, verify=False)
        meta = {META_CONSTRUCTION: spectrum_band(n, t), META_PARAMETERS: f"n={n} t={t}"}
    elif args.min is not None:
        n = args.min
        b = build_min_blocker(n, _required(args.m, "--m"), args.beams or [])
        meta = {META_CONSTRUCTION: CONSTRUCTION_MIN, META_PARAMETERS: f"n={n} m={args.m}"}
    elif args.seagull is not None or args.butterfly is not None:
        seagull = args.seagull is not None
        n = args.seagull if seagull else args.butterfly
        builder = build_seagull if seagull else build_butterfly
        ell, m = _required(args.ell, "--ell"), _required(args.m, "--m")
        b = builder(n, ell, m, args.beams or [])
        meta = {
            META_CONSTRUCTION: CONSTRUCTION_SEAGULL if seagull else CONSTRUCTION_BUTTERFLY,
            META_PARAMETERS: f"n={n} ell={ell} m={m}",
        }
    elif args.bouquet is not None:
        n = args.bouquet
        ell, m = _required(args.ell, "--ell"), _required(args.m, "--m")
        k, t = _required(args.k, "--k"), _required(args.t, "--t")
        b = build_bouquet(n, ell, m, k, t, args.beams_left or [], args.beams_right or [])
        meta = {
            META_CONSTRUCTION: CONSTRUCTION_BOUQUET,
            META_PARAMETERS: f"n={n} ell={ell} m={m} k={k} t={t}",
        }
    elif args.quad is not None:
        n, a, cut_b, c = args.quad
        b = build_quadrilateral(QuadPartition(n, a, cut_b, c))
        meta = {
            META_CONSTRUCTION: CONSTRUCTION_QUADRILATERAL,
            META_PARAMETERS: f"n={n} a={a} b={cut_b} c={c}",
        }
    else:
        n, a, cut_b, c = args.matrioshka
        p = QuadPartition(n, a, cut_b, c)
        bt = _sub_blocker(p.top + 2, args.top_size)
        bb = _sub_blocker(p.bottom + 2, args.bottom_size)
        b = build_matrioshka(p, bt, bb, verify=verify)
        meta = {
            META_CONSTRUCTION: CONSTRUCTION_MATRIOSHKA,
            META_PARAMETERS: f"n={n} a={a} b={cut_b} c={c} top={len(bt)} bottom={len(bb)}",
        }
    if verify and not is_saturated_blocker(b):
        LOGGER.error("Constructed set %s failed the saturation check", b)
        raise ConstructionError(f"{meta[META_CONSTRUCTION]} produced an unsaturated set")
    return BlockerDocument.from_blocker(b, meta)


def _required(value: int | None, flag: str) -> int:
    if value is None:
        raise ConstructionError(f"{flag} is required for this family")
    return value


def _run_construct(args: argparse.Namespace) -> int:
    doc = cmd_construct(args)
    _write_output(serialize_document(doc), args.out)
    print_success(f"Built {doc.metadata[META_CONSTRUCTION]} blocker with {len(doc.edges)} edges")
    return EXIT_SATURATED


# sweep


def _spectrum_rows(ns: range) -> Iterator[tuple[dict[str, Any], bool]]:
    for n in ns:
        for t in range(n - 2, max_reachable(n) + 1):
            start = time.perf_counter()
            b = build_spectrum_blocker(n, t, verify=False)
            saturated = is_saturated_blocker(b)
            row = ReportRow(
                n,
                len(b),
                saturated or is_blocker(b),
                saturated,
                source=spectrum_band(n, t),
                elapsed_ms=_elapsed_ms(start),
            )
            yield row.as_dict(), saturated and len(b) == t
        LOGGER.info("Spectrum sweep finished n=%d up to t=%d", n, max_reachable(n))


def _exhaustive_rows(
    n: int, size: int | None, group: SymmetryGroup, summary: dict[str, Any]
) -> Iterator[tuple[dict[str, Any], bool]]:
    blockers = all_saturated_blockers(n, size)
    summary["spectrum"] = sorted({len(b) for b in blockers})
    summary["orbits"] = {str(key): value for key, value in orbit_counts(blockers, group).items()}
    summary["group"] = str(group)
    for b in blockers:
        row = ReportRow(n, len(b), True, True, edges=str(b))
        ok = True
        if len(b) == n - 2 and n >= 4:
            row.min_shape = _shape_text(b)
            ok = row.min_shape is not None
        elif len(b) == n - 1 and n >= 6:
            try:
                row.classification = str(classify_near_minimum(b).variant)
                _, row.stability_distance = stability_distance(b)
            except ClassificationError as err:
                LOGGER.warning("Unclassified blocker %s: %s", b, err)
                ok = False
        yield row.as_dict(), ok


def _coefficient_rows(steps: range) -> Iterator[tuple[dict[str, Any], bool]]:
    for i in steps:
        iterated = recursion_coefficients(i)
        matches = iterated == closed_form_coefficients(i)
        yield {
            "i": i,
            "a": str(iterated.a),
            "b": str(iterated.b),
            "c": str(iterated.c),
            "matches_closed_form": matches,
        }, matches


def _trend_rows(ns: range) -> Iterator[tuple[dict[str, Any], bool]]:
    for n in ns:
        reach = max_reachable(n)
        floor_ok = reach >= Fraction(n * n, 4)
        yield {
            "n": n,
            "max_reachable": reach,
            "deficit": str(Fraction(n * n, 2) - reach),
            "deficit_ratio": round(deficit_ratio(n), 6),
            "quarter_floor": floor_ok,
        }, floor_ok


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run one sweep mode, write its rows and summary, return the exit status."""
    print_step("Starting sweep")
    summary: dict[str, Any] = {}
    rows: Iterator[tuple[dict[str, Any], bool]]
    fields: Sequence[str] = REPORT_FIELDS
    if args.spectrum is not None:
        rows = _spectrum_rows(args.spectrum)
    elif args.exhaustive is not None:
        rows = _exhaustive_rows(args.exhaustive, args.size, SymmetryGroup(args.group), summary)
    elif args.coefficients is not None:
        rows, fields = _coefficient_rows(args.coefficients), COEFFICIENT_FIELDS
    else:
        rows, fields = _trend_rows(args.trend), TREND_FIELDS
    stream: TextIO = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8")
    passed = failed = 0
    try:
        writer = ReportWriter(stream, args.format, stable=args.stable, fields=fields)
        try:
            for row, ok in rows:
                writer.write(row)
                passed, failed = passed + ok, failed + (not ok)
        except (CapacityError, ConstructionError):
            raise
        except Exception as err:
            LOGGER.error("Sweep aborted: %s", err)
            print_error(f"sweep aborted: {err}")
            failed += 1
        writer.summary(passed, failed, **summary)
    finally:
        if stream is not sys.stdout:
            stream.close()
    if failed:
        print_warning(f"{failed} sweep rows failed")
        return EXIT_SWEEP_FAILURE
    print_success(f"{passed} sweep rows passed")
    return EXIT_SATURATED


# render


def cmd_render(doc: BlockerDocument, *, witness: bool = False, special: bool = False) -> str:
    """SVG text for the document, with the requested overlays."""
    b = doc.blocker()
    overlay = special_edges = removed = None
    if witness:
        found = witness_triangulation(b.complement())
        if found is None:
            print_warning("input is a blocker; no witness triangulation to draw")
        else:
            overlay = found.diagonals
    if special:
        try:
            classification = classify_near_minimum(b)
        except ClassificationError as err:
            print_warning(f"no special subgraph to draw: {err}")
        else:
            special_edges = classification.special_edges(b.n)
            neighbour, _ = stability_distance(b)
            removed = neighbour - b
    title = doc.metadata.get(META_CONSTRUCTION)
    return render_svg(b, witness=overlay, special=special_edges, removed=removed, title=title)


def _run_render(args: argparse.Namespace) -> int:
    doc = parse_document(_read_input(args.input))
    _write_output(cmd_render(doc, witness=args.witness, special=args.special), args.out)
    return EXIT_SATURATED


# parser


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error status."""

    def error(self, message: str) -> NoReturn:
        """Print usage and exit with EXIT_INPUT_ERROR."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """The argparse surface."""
    parser = _Parser(
        prog="satblock",
        description="Saturated blockers for triangulations of convex polygons",
        epilog=f"Capacity guards can be raised with {CAPACITY_ENV}=key=value,...",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Check a blocker document")
    check.add_argument("input", nargs="?", default="-", help="Document path or - for stdin")
    _report_options(check)

    construct = commands.add_parser("construct", help="Build a saturated blocker")
    family = construct.add_mutually_exclusive_group(required=True)
    family.add_argument("--spectrum", nargs=2, type=int, metavar=("N", "T"))
    family.add_argument("--min", type=int, metavar="N")
    family.add_argument("--seagull", type=int, metavar="N")
    family.add_argument("--butterfly", type=int, metavar="N")
    family.add_argument("--bouquet", type=int, metavar="N")
    family.add_argument("--quad", nargs=4, type=int, metavar=("N", "A", "B", "C"))
    family.add_argument("--matrioshka", nargs=4, type=int, metavar=("N", "A", "B", "C"))
    for flag in ("--m", "--ell", "--k", "--t", "--top-size", "--bottom-size"):
        construct.add_argument(flag, type=int)
    for flag in ("--beams", "--beams-left", "--beams-right"):
        construct.add_argument(flag, nargs="*", type=int)
    construct.add_argument("--no-verify", action="store_true", help="Skip the saturation check")
    construct.add_argument("--out", help="Write the document here instead of stdout")

    sweep = commands.add_parser("sweep", help="Batch sweeps and tables")
    mode = sweep.add_mutually_exclusive_group(required=True)
    mode.add_argument("--spectrum", type=parse_range, metavar="N1..N2")
    mode.add_argument("--exhaustive", type=int, metavar="N")
    mode.add_argument("--coefficients", type=parse_range, metavar="I1..I2")
    mode.add_argument("--trend", type=parse_range, metavar="N1..N2[:STEP]")
    sweep.add_argument("--size", type=int, help="Only blockers of this size")
    sweep.add_argument(
        "--group",
        choices=[str(group) for group in SymmetryGroup],
        default=str(SymmetryGroup.ROTATION),
    )
    sweep.add_argument("--out", help="Write the report here instead of stdout")
    _report_options(sweep)

    render = commands.add_parser("render", help="Draw a blocker document as SVG")
    render.add_argument("input", nargs="?", default="-", help="Document path or - for stdin")
    render.add_argument("--witness", action="store_true", help="Overlay a missed triangulation")
    render.add_argument("--special", action="store_true", help="Highlight the special subgraph")
    render.add_argument("--out", help="Write the SVG here instead of stdout")
    return parser


def _report_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=[FORMAT_JSON, FORMAT_CSV], default=FORMAT_JSON)
    parser.add_argument("--stable", action="store_true", help="Drop timing fields")


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "check": _run_check,
    "construct": _run_construct,
    "sweep": cmd_sweep,
    "render": _run_render,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _COMMANDS[args.command](args)
    except (DocumentError, InvalidEdgeError, PolygonSizeError) as err:
        print_error(str(err))
        return EXIT_INPUT_ERROR
    except (ConstructionError, CapacityError, ClassificationError, IncidenceError) as err:
        print_error(str(err))
        return EXIT_CONSTRUCTION_ERROR
    except BlockerError as err:
        print_error(str(err))
        return EXIT_SWEEP_FAILURE if args.command == "sweep" else EXIT_INPUT_ERROR


def main(argv: Sequence[str] | None = None) -> None:
    """Console entry point."""
    just_fix_windows_console()
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
