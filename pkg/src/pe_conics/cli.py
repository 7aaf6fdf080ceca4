"""Command-line front end: ``pe-conics classify|reduce|taxonomy|batch|plot|synthesize``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .classify import classify, reduce
from .conic import COEFF_NAMES, Conic, transform
from .errors import BadParams, InvalidConic, ParseError, PEConicError, UnknownId
from .numeric import DEFAULT_EPS, as_json_number, fmt, to_exact
from .plot import PlotConfig, render_svg
from .synthesis import canonical_conic, random_motion
from .taxonomy import taxonomy

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3
OUTPUT_COLUMNS = ("class_id", "family", "I1", "I2", "I3", "I4", "I5", "error")


@dataclass(frozen=True)
class CliConfig:
    arithmetic_mode: str = "exact"
    epsilon: float = DEFAULT_EPS
    output_format: str = "text"
    plot_window: tuple = (-5.0, 5.0, -5.0, 5.0)
    seed: Optional[int] = None

    def __post_init__(self):
        if self.arithmetic_mode not in ("exact", "float"):
            raise ValueError(f"unknown arithmetic mode {self.arithmetic_mode!r}")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.output_format not in ("text", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        x0, x1, y0, y1 = self.plot_window
        if not (x1 > x0 and y1 > y0):
            raise ValueError(f"empty plot window {self.plot_window}")

    @property
    def exact(self) -> bool:
        return self.arithmetic_mode == "exact"


def _number(token, exact: bool):
    if isinstance(token, bool):
        raise ParseError(f"not a number: {token!r}")
    try:
        if isinstance(token, (int, float)):
            return to_exact(Fraction(str(token))) if exact else float(token)
        token = str(token).strip()
        return to_exact(Fraction(token)) if exact else float(Fraction(token))
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParseError(f"not a number: {token!r}") from None


def parse_conic_input(src: str, exact: bool = True) -> Conic:
    """Six comma-separated numbers ``a00,a01,a02,a11,a12,a22`` or a JSON object."""
    src = src.strip()
    if src.startswith("{"):
        try:
            obj = json.loads(src)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        missing = [k for k in COEFF_NAMES if k not in obj]
        if missing:
            raise ParseError(f"missing keys {missing}")
        values = [obj[k] for k in COEFF_NAMES]
    else:
        values = [t for t in src.split(",")]
        if len(values) != 6:
            raise ParseError(f"expected 6 comma-separated coefficients, got {len(values)}")
    return Conic(*(_number(v, exact) for v in values))


def _csv_row(conic: Optional[Conic], report=None, error: str = "") -> list:
    if report is None:
        return [""] * (len(OUTPUT_COLUMNS) - 1) + [error]
    inv = report.invariants.as_tuple()
    return [report.class_id, int(report.family), *(fmt(v) for v in inv), error]


def _text_report(report) -> str:
    cls = report.conic_class
    inv = report.invariants
    lines = [
        f"class: {cls.display_name} ({cls.id})",
        f"family: {int(report.family)}",
        f"proper: {'yes' if cls.proper else 'no'}",
        "invariants: " + " ".join(f"{n}={fmt(v)}" for n, v in zip(("I1", "I2", "I3", "I4", "I5"), inv.as_tuple())),
    ]
    if report.semiaxes is not None:
        lines.append(f"semiaxes: a={fmt(report.semiaxes.a)} b={fmt(report.semiaxes.b)}")
    if report.center is not None:
        lines.append(f"center: ({fmt(report.center.x)}, {fmt(report.center.y)})")
    if report.motion is not None:
        m = report.motion
        lines.append(f"motion: phi={m.phi:.12g} tx={fmt(m.tx)} ty={fmt(m.ty)}")
    lines.append("canonical: " + ", ".join(fmt(v) for v in report.canonical.coeffs))
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def cmd_classify(cfg: CliConfig, conic: Conic, out=sys.stdout) -> int:
    report = classify(conic, cfg.epsilon)
    if cfg.output_format == "json":
        out.write(json.dumps(report.to_dict(), ensure_ascii=False) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(COEFF_NAMES) + list(OUTPUT_COLUMNS))
        w.writerow([fmt(v) for v in conic.coeffs] + _csv_row(conic, report))
    else:
        out.write(_text_report(report) + "\n")
    return EXIT_OK


def cmd_reduce(cfg: CliConfig, conic: Conic, out=sys.stdout) -> int:
    canonical, motion = reduce(conic, cfg.epsilon)
    if cfg.output_format == "json":
        doc = {
            "canonical": [as_json_number(v) for v in canonical.coeffs],
            "motion": None
            if motion is None
            else {"phi": motion.phi, "tx": as_json_number(motion.tx), "ty": as_json_number(motion.ty)},
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("canonical: " + ", ".join(fmt(v) for v in canonical.coeffs) + "\n")
        if motion is None:
            out.write("motion: none\n")
        else:
            out.write(f"motion: phi={motion.phi:.12g} tx={fmt(motion.tx)} ty={fmt(motion.ty)}\n")
    return EXIT_OK


def cmd_taxonomy(cfg: CliConfig, out=sys.stdout) -> int:
    rows = taxonomy()
    if cfg.output_format == "json":
        doc = [
            {
                "id": r.id,
                "family": int(r.family),
                "proper": r.proper,
                "type_tag": r.type_tag.value,
                "name": r.display_name,
                "conditions": r.conditions,
                "canonical_form": r.canonical_form,
                "reconstructed": r.reconstructed,
            }
            for r in rows
        ]
        out.write(json.dumps(doc, ensure_ascii=False, indent=1) + "\n")
        return EXIT_OK
    if cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["id", "family", "proper", "name", "conditions", "reconstructed"])
        for r in rows:
            w.writerow([r.id, int(r.family), r.proper, r.display_name, r.conditions, r.reconstructed])
        return EXIT_OK
    width = max(len(r.id) for r in rows)
    for r in rows:
        flag = " [reconstructed]" if r.reconstructed else ""
        kind = "proper" if r.proper else "degenerate"
        out.write(f"{r.id:<{width}}  F{int(r.family)}  {kind:<10}  {r.display_name}  ({r.conditions}){flag}\n")
    n_proper = sum(r.proper for r in rows)
    out.write(f"{len(rows)} types: {n_proper} proper + {len(rows) - n_proper} degenerate\n")
    return EXIT_OK


def cmd_batch(cfg: CliConfig, csv_in, out=sys.stdout) -> int:
    reader = csv.reader(csv_in)
    w = csv.writer(out, lineterminator="\n")
    header = next(reader, None)
    if header is None:
        raise ParseError("empty batch input")
    if [h.strip() for h in header] != list(COEFF_NAMES):
        raise ParseError(f"batch header must be {','.join(COEFF_NAMES)}")
    w.writerow(list(COEFF_NAMES) + list(OUTPUT_COLUMNS))
    ok = 0
    for row in reader:
        if not row:
            continue
        cells = (row + [""] * 6)[:6] if len(row) <= 6 else row
        try:
            if len(row) != 6:
                raise ParseError(f"expected 6 values, got {len(row)}")
            conic = parse_conic_input(",".join(row), cfg.exact)
            report = classify(conic, cfg.epsilon)
            result = _csv_row(conic, report)
            ok += 1
        except InvalidConic:
            result = _csv_row(None, error="invalid-conic")
        except ParseError as exc:
            result = _csv_row(None, error=f"parse-error: {exc}")
        w.writerow(cells[:6] + result)
    return EXIT_OK if ok else EXIT_INPUT


def cmd_plot(cfg: CliConfig, conic: Conic, out_path: Optional[str], out=sys.stdout) -> int:
    svg = render_svg(conic, PlotConfig(window=cfg.plot_window, eps=cfg.epsilon))
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        out.write(svg)
    return EXIT_OK


def _parse_params(text: Optional[str], exact: bool) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"parameter {item!r} is not of the form name=value")
        name, value = item.split("=", 1)
        params[name.strip()] = _number(value, exact)
    return params


def cmd_synthesize(cfg: CliConfig, class_id: str, params: dict, out=sys.stdout) -> int:
    conic = canonical_conic(class_id, **params)
    if not cfg.exact:
        conic = conic.to_float()
    if cfg.seed is not None:
        conic = transform(conic, random_motion(cfg.seed, exact=cfg.exact))
    out.write(",".join(fmt(v) for v in conic.coeffs) + "\n")
    return EXIT_OK


def _window(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window is x0,x1,y0,y1")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact", help="rational arithmetic (default)")
    mode.add_argument("--float", dest="mode", action="store_const", const="float", help="floating point arithmetic")
    common.add_argument("--eps", type=float, default=DEFAULT_EPS, help="float zero tolerance")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--window", type=_window, default=(-5.0, 5.0, -5.0, 5.0))
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(prog="pe-conics", description="Classify conics in the pseudo-Euclidean plane.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "reduce", "plot"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--coeffs", help="a00,a01,a02,a11,a12,a22 or a JSON object")
        p.add_argument("conic", nargs="?", help="same as --coeffs")
    sub.add_parser("taxonomy", parents=[common])
    p = sub.add_parser("batch", parents=[common])
    p.add_argument("--in", dest="infile", default=None, help="input CSV (default stdin)")
    p = sub.add_parser("synthesize", parents=[common])
    p.add_argument("--id", required=True, dest="class_id")
    p.add_argument("--params", default="", help="e.g. a=2,b=1")
    return parser


def _fix_negative_values(argv: Sequence[str]) -> list:
    # "-1,0,0,..." looks like an option to argparse; glue it to its flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--coeffs", "--window", "--params"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        elif tok.startswith("-") and "," in tok and not tok.startswith("--"):
            out.append(f"--coeffs={tok}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args_in = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_fix_negative_values(args_in))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = CliConfig(
            arithmetic_mode=args.mode or "exact",
            epsilon=args.eps,
            output_format=args.format,
            plot_window=args.window,
            seed=args.seed,
        )
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT

    out_path = args.out
    sink = io.StringIO() if out_path and args.command != "plot" else stdout
    try:
        if args.command in ("classify", "reduce", "plot"):
            src = args.coeffs or args.conic
            if not src:
                raise ParseError("no conic given (use --coeffs)")
            conic = parse_conic_input(src, cfg.exact)
            if args.command == "classify":
                code = cmd_classify(cfg, conic, sink)
            elif args.command == "reduce":
                code = cmd_reduce(cfg, conic, sink)
            else:
                code = cmd_plot(cfg, conic, out_path, stdout)
        elif args.command == "taxonomy":
            code = cmd_taxonomy(cfg, sink)
        elif args.command == "batch":
            if args.infile:
                with open(args.infile, newline="", encoding="utf-8") as fh:
                    code = cmd_batch(cfg, fh, sink)
            else:
                code = cmd_batch(cfg, stdin, sink)
        else:
            code = cmd_synthesize(cfg, args.class_id, _parse_params(args.params, cfg.exact), sink)
    except (ParseError, InvalidConic, BadParams, UnknownId) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except PEConicError as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    if sink is not stdout:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(sink.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
