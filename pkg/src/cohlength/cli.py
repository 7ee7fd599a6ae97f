"""Command-line entry point: decompose, chi and verify."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coeffalg import CoeffAlgebra
from .cohfun import chi_of_complex, chi_of_module, chi_table, chi_table_csv, probe_window
from .exactlin import Field
from .perfcx import barcode
from .perfcx.serialize import ComplexFileError, from_dict, load
from .suites import SUITES, RunConfig, run_suite


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _field(text: str) -> str:
    try:
        Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cohlength", description="Cohomological length functions on perfect complexes.")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="barcode of a complex over the dual numbers")
    d.add_argument("input", type=Path)
    d.add_argument("--out", type=Path)

    c = sub.add_parser("chi", help="chi-table of a complex or module over a probe window")
    c.add_argument("input", type=Path, nargs="?")
    c.add_argument("--module", choices=["k"], help="use the simple module instead of a complex file")
    c.add_argument("--field", type=_field, default="5")
    c.add_argument("--n-range", type=_n_range, default=(-3, 3))
    c.add_argument("--r-max", type=int, default=3)
    c.add_argument("--probes", type=Path, help="JSON object mapping probe names to complex documents")
    c.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="run an acceptance suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--field", type=_field, default="5")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--r-max", type=int)
    v.add_argument("--n-range", type=_n_range)
    v.add_argument("--probes", type=Path)
    v.add_argument("--out", type=Path)
    return ap


def _load_probes(path: Path | None) -> list:
    if path is None:
        return []
    doc = json.loads(path.read_text(encoding="utf-8"))
    return [(name, from_dict(body)) for name, body in sorted(doc.items())]


def _write(out: Path | None, files: dict[str, str]) -> None:
    if out is None:
        return
    out.mkdir(parents=True, exist_ok=True)
    for name, text in sorted(files.items()):
        (out / name).write_text(text, encoding="utf-8")


def cmd_decompose(args) -> int:
    X = load(args.input)
    bc = barcode(X)
    print(str(bc))
    _write(args.out, {"barcode.json": json.dumps(bc.to_json()) + "\n"})
    return 0


def cmd_chi(args) -> int:
    if args.module and args.input:
        raise UsageError("chi: give either a complex file or --module, not both")
    if args.module:
        A = CoeffAlgebra.dual_numbers(Field.parse(args.field))
        chi = chi_of_module(A, A.field.zeros((1, 1)))
    elif args.input:
        X = load(args.input)
        A = X.algebra
        chi = chi_of_complex(X)
    else:
        raise UsageError("chi: a complex file or --module is required")
    probes = probe_window(A, range(args.n_range[0], args.n_range[1] + 1), args.r_max) + _load_probes(args.probes)
    rows = chi_table(chi, probes)
    width = max([len(p) for p, _, _ in rows] + [5])
    print(f"{'probe':<{width}}  shift  value")
    for probe, j, val in rows:
        print(f"{probe:<{width}}  {j:>5}  {val:>5}")
    _write(args.out, {"chi_table.csv": chi_table_csv(rows)})
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig(field=args.field, seed=args.seed, r_max=args.r_max, n_range=args.n_range,
                    probes=tuple(_load_probes(args.probes)))
    rep = run_suite(args.suite, cfg)
    print(rep.text())
    _write(args.out, {**rep.artifacts, "report.txt": rep.text() + "\n"})
    return 0 if rep.passed else 1


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    handlers = {"decompose": cmd_decompose, "chi": cmd_chi, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ComplexFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
