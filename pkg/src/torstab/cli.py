"""``torstab`` command line.

Exit codes: 0 on success, 2 for invalid input (unreadable fan file, bad
construction spec, bad indices), 3 when the analysis needs a smooth fan.
Output files are written to a temporary sibling and renamed into place,
so a failing command never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from torstab.constructions import hj_resolve, parse_construct_spec
from torstab.deformations import def_weights_surface, weight_label
from torstab.errors import NotSmooth, ToricError
from torstab.fan import Fan2D, dumps_fan, load_fan, validate_surface_fan
from torstab.report import analyze, render_text
from torstab.stability import POLYSTABLE, STRICTLY_SEMISTABLE, Splitting, classify_support
from torstab.svg import fan_svg

EXIT_INVALID = 2
EXIT_SINGULAR = 3


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_surface(path: str) -> Fan2D:
    try:
        fan = load_fan(path)
    except OSError as e:
        raise CommandError(f"cannot read {path}: {e.strerror}") from e
    except ToricError as e:
        raise CommandError(f"invalid fan file {path}: {e}") from e
    if not isinstance(fan, Fan2D):
        raise CommandError(f"{path}: only rank 2 fans are supported here")
    return fan


def _require_smooth(fan: Fan2D) -> None:
    try:
        fan.require_smooth()
    except NotSmooth as e:
        raise CommandError(f"{e}; run `torstab construct ... --resolve` to use the minimal resolution", EXIT_SINGULAR)


def cmd_analyze(args) -> str:
    fan = _load_surface(args.fan)
    _require_smooth(fan)
    try:
        split = Splitting.parse(args.splitting) if args.splitting is not None else None
    except ToricError as e:
        raise CommandError(str(e)) from e
    report = analyze(fan, split)
    if args.figures:
        from torstab.plotting import write_figures

        write_figures(fan, report, args.figures)
    return report.to_json() if args.format == "json" else render_text(report)


def cmd_construct(args) -> str:
    try:
        fan = parse_construct_spec(args.spec)
        if args.resolve:
            fan = hj_resolve(fan)
        if args.blowup:
            bad = [i for i in args.blowup if not 0 <= i < len(fan)]
            if bad:
                raise CommandError(f"blow-up index {bad[0]} out of range 0..{len(fan) - 1}")
            # indices refer to the cones of the fan before any blow-up
            new = [tuple(a + b for a, b in zip(*fan.cone(i))) for i in sorted(set(args.blowup))]
            fan = validate_surface_fan(fan.rays + tuple(new))
    except ToricError as e:
        raise CommandError(str(e)) from e
    return dumps_fan(fan)


def _parse_support(text: str, n: int) -> tuple[int, ...]:
    try:
        idx = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise CommandError(f"cannot parse support {text!r}") from e
    if not idx:
        raise CommandError("support must name at least one weight")
    bad = [i for i in idx if not 1 <= i <= n]
    if bad:
        raise CommandError(f"weight index {bad[0]} out of range 1..{n}")
    return tuple(sorted({i - 1 for i in idx}))


def cmd_classify(args) -> str:
    fan = _load_surface(args.fan)
    _require_smooth(fan)
    ws = def_weights_surface(fan)
    I = _parse_support(args.support, len(ws))
    c = classify_support(ws, I)
    labels = ", ".join(weight_label(ws.weights[i]) for i in I)
    lines = [f"support {{{','.join(str(i + 1) for i in I)}}} = {{{labels}}}: {c.kind}"]
    if c.kind in (POLYSTABLE, STRICTLY_SEMISTABLE):
        J = ",".join(str(i + 1) for i in c.balanced_subfamily)
        rel = ",".join(map(str, c.relation))
        lines.append(f"  balanced subfamily {{{J}}} with coefficients ({rel})")
    if c.kind == POLYSTABLE:
        for i, coeffs in zip(I, c.witness.combinations):
            terms = " + ".join(f"{k}*({weight_label(ws.weights[j])})" for j, k in zip(I, coeffs) if k)
            lines.append(f"  -({weight_label(ws.weights[i])}) = {terms}")
    elif c.kind == STRICTLY_SEMISTABLE:
        lines.append(f"  separating p = {tuple(c.separating)}")
    else:
        lines.append(f"  destabilizing p = {tuple(c.destabilizing)}")
    return "\n".join(lines) + "\n"


def cmd_svg(args) -> str:
    return fan_svg(_load_surface(args.fan))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torstab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report of a smooth complete fan")
    p.add_argument("fan")
    p.add_argument("--splitting", help='fixed directions of T_f, e.g. "0,1" or "1,0;0,1"')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--figures", metavar="DIR", help="also write matplotlib PNG figures to DIR")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="write a standard or quotient fan as JSON")
    p.add_argument("spec", help="p2 | p1xp1 | hirzebruch:a | quotient-p1p1:q | quotient-fa:a,p | xhat2")
    p.add_argument("--resolve", action="store_true", help="replace by the minimal resolution")
    p.add_argument("--blowup", type=int, action="append", metavar="i", help="blow up cone i (0-based, repeatable)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="stability of a support (1-based weight indices)")
    p.add_argument("fan")
    p.add_argument("--support", required=True)
    p.set_defaults(func=cmd_classify, output=None)

    p = sub.add_parser("svg", help="SVG diagram of a fan")
    p.add_argument("fan")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except CommandError as e:
        print(f"torstab: error: {e}", file=sys.stderr)
        return e.code
    if args.output:
        _write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
