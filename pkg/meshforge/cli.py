"""
Command-line interface.

``meshforge <gen|dg|ext|cy|koszul|verify> [options]``; exit code 0 on
success, 1 when a verification fails, 2 on usage errors.
"""
import argparse
import json
import os
import platform
import sys

from meshforge.constants import ExportFormat, Family
from meshforge.dg import check_d_squared, dg_auslander, h0
from meshforge.exceptions import (
    ConfigError,
    InvalidDynkinIndexError,
    MeshforgeException,
    QuiverError,
    UsageError,
)
from meshforge.homology import (
    auslander_algebra,
    cy_duality_check,
    cy_fraction,
    ext_table,
    serre_orbit_check,
    stable_algebra,
)
from meshforge.koszul import AugmentedDgAlgebra, koszul_cohomology, koszul_dual
from meshforge.logging import get_logger
from meshforge.quiver import (
    ade_translation_quiver,
    export_quiver,
    list_fixtures,
    load_fixture,
    quiver_from_dict,
)
from meshforge.suite import load_config, run_suite
from meshforge.version import __version__

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_TRUNC = 7
DEFAULT_WORDS = 12

_SUFFIX = {ExportFormat.JSON: "json", ExportFormat.DOT: "dot", ExportFormat.TIKZ: "tex"}


def _python_info():
    """
    Return formatted string for python implementation and version.

    Returns
    --------
    str:
        Implementation name, version, and platform
    """
    impl = platform.python_implementation()
    version = platform.python_version()
    system = platform.system()
    return f"{impl} {version} on {system}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meshforge",
        description="dg Auslander algebras of ADE singularities",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}, {_python_info()}",
    )
    parser.add_argument(
        "command", choices=["gen", "dg", "ext", "cy", "koszul", "verify"]
    )
    parser.add_argument("--family", choices=[f.value for f in Family])
    parser.add_argument("--index", type=int)
    parser.add_argument("--dim", type=int, help="Krull dimension")
    parser.add_argument(
        "--in", dest="input", help="quiver or algebra JSON file, or a fixture name"
    )
    parser.add_argument(
        "--format", default="json", choices=[f.value for f in ExportFormat]
    )
    parser.add_argument("--trunc", type=int, help="word-length bound L")
    parser.add_argument("--words", type=int, help="tensor word bound W")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--config", help="suite config file")
    parser.add_argument("--h0", action="store_true", help="report H^0 dimensions")
    parser.add_argument("--ncpu", type=int, help="worker processes for verify")
    return parser


def _read_input(name):
    """A JSON document from a file, or a shipped fixture quiver by name."""
    if os.path.isfile(name):
        with open(name, "r", encoding="utf-8") as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                raise UsageError(f"Invalid JSON in '{name}': {e}") from e
    return load_fixture(name)


def _quiver(args):
    if args.input:
        data = _read_input(args.input)
        return quiver_from_dict(data) if isinstance(data, dict) else data
    if args.family is None or args.index is None or args.dim is None:
        raise UsageError("Give --in or all of --family, --index and --dim")
    return ade_translation_quiver(args.family, args.index, args.dim)


def _emit(args, text, filename):
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, filename)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info("Wrote %s", path)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _stem(args):
    if args.input:
        return os.path.splitext(os.path.basename(args.input))[0]
    if args.family is None:
        return "meshforge"
    return f"{args.family}{args.index}_d{args.dim}"


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_gen(args) -> int:
    fmt = ExportFormat(args.format)
    text = export_quiver(_quiver(args), fmt)
    _emit(args, text, f"{_stem(args)}.{_SUFFIX[fmt]}")
    return EXIT_OK


def cmd_dg(args) -> int:
    tq = _quiver(args)
    trunc = args.trunc or DEFAULT_TRUNC
    dg = dg_auslander(tq, trunc)
    ok = check_d_squared(dg)
    fmt = ExportFormat(args.format)
    if fmt != ExportFormat.JSON:
        _emit(args, export_quiver(dg.quiver, fmt), f"{_stem(args)}_dg.{_SUFFIX[fmt]}")
        return EXIT_OK if ok else EXIT_FAILED

    report = {"d_squared": ok, "L": trunc}
    if args.h0:
        algebra = h0(dg, trunc)
        report["h0"] = {
            "dim": algebra.dim,
            "stabilized": algebra.stabilized,
            "L_used": algebra.bound,
            "blocks": {
                f"{s}->{t}": n for (s, t), n in algebra.block_dims().items() if n
            },
        }
        ok = ok and algebra.stabilized
    else:
        report["presentation"] = dg.to_dict()
    _emit(args, _dump(report), f"{_stem(args)}_dg.json")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_ext(args) -> int:
    table = ext_table(_quiver(args))
    _emit(args, table.to_json(), f"{_stem(args)}_ext.json")
    return EXIT_OK


def cmd_cy(args) -> int:
    tq = _quiver(args)
    table = ext_table(tq)
    report = {
        "duality": cy_duality_check(table),
        "serre_orbits": serre_orbit_check(table),
        "fractions": {
            v: list(cy_fraction(tq, v)) for v in tq.non_projective_vertices
        },
    }
    _emit(args, _dump(report), f"{_stem(args)}_cy.json")
    return EXIT_OK if report["duality"] and report["serre_orbits"] else EXIT_FAILED


def _koszul_input(args):
    trunc = args.trunc or DEFAULT_TRUNC
    if args.input:
        data = _read_input(args.input)
        if isinstance(data, dict) and "basis" in data:
            return AugmentedDgAlgebra.from_dict(data)
        tq = quiver_from_dict(data) if isinstance(data, dict) else data
    else:
        tq = _quiver(args)
    if tq.projective_vertices:
        algebra = stable_algebra(auslander_algebra(tq, trunc), trunc)
    else:
        algebra = h0(dg_auslander(tq, trunc), trunc)
    return AugmentedDgAlgebra.from_algebra(algebra)


def cmd_koszul(args) -> int:
    words = args.words or DEFAULT_WORDS
    E = koszul_dual(_koszul_input(args), words)
    cohomology = koszul_cohomology(E, range(0, min(4, words - 1) + 1))
    degrees = sorted({g.degree for g in E.generators})
    report = {
        "W": words,
        "generators": {
            str(d): sum(1 for g in E.generators if g.degree == d) for d in degrees
        },
        "cohomology": {
            str(n): {
                "dim": entry.dim,
                "stabilized": entry.stabilized,
                "blocks": {f"{s}->{t}": m for (s, t), m in sorted(entry.blocks.items())},
            }
            for n, entry in cohomology.items()
        },
    }
    _emit(args, _dump(report), f"{_stem(args)}_koszul.json")
    ok = all(entry.stabilized for entry in cohomology.values())
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args) -> int:
    overrides = {
        "trunc": args.trunc,
        "words": args.words,
        "out_dir": args.out,
        "ncpu": args.ncpu,
        "families": (args.family,) if args.family else None,
    }
    cfg = load_config(args.config, **overrides)
    report = run_suite(cfg)
    report.write(cfg.out_dir)
    summary = report.summary()
    counts = {k: int(v) for k, v in summary.groupby("status").size().items()}
    sys.stdout.write(_dump({"passed": report.passed, "counts": counts}))
    for failure in report.failures():
        logger.warning("Check failed: %s", failure.check)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "gen": cmd_gen,
    "dg": cmd_dg,
    "ext": cmd_ext,
    "cy": cmd_cy,
    "koszul": cmd_koszul,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except (UsageError, InvalidDynkinIndexError, ConfigError, QuiverError) as e:
        sys.stderr.write(f"meshforge: error: {e}\n")
        if isinstance(e, QuiverError) and "Unknown fixture" in str(e):
            sys.stderr.write(f"available fixtures: {', '.join(list_fixtures())}\n")
        return EXIT_USAGE
    except MeshforgeException as e:
        sys.stderr.write(f"meshforge: {type(e).__name__}: {e}\n")
        return EXIT_FAILED
