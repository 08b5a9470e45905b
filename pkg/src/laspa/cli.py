"""Command-line front end: ``laspa solve | radius | render``.

Coefficients are given in ASCENDING order, constant term first:
``--coeffs "24,-50,35,-10,1"`` is z^4 - 10 z^3 + 35 z^2 - 50 z + 24.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO, Union

from .errors import LaspaError, ParseError, SeedingFailed
from .laguerre import IterationOptions, a_priori_radius_bound, convergence_radius
from .polynomial import Polynomial, from_roots
from .roots_iteration import RootSet
from .solver import SolveConfig, find_all_roots
from .spa import SpaOptions
from .viz import RasterConfig, basin_stats, render_basins, write_ppm

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^([+-]?{_NUM})(?:([+-])({_NUM})?i)?$")


def parse_complex(token: str, index: int = 1) -> complex:
    m = _COMPLEX.match(token)
    if not m:
        raise ParseError(index, token)
    re_part = float(m.group(1))
    if m.group(2) is None:
        return complex(re_part, 0.0)
    im_part = float(m.group(3)) if m.group(3) is not None else 1.0
    if m.group(2) == "-":
        im_part = -im_part
    return complex(re_part, im_part)


def parse_complex_list(text: str) -> list[complex]:
    """Parse ``"a,b+ci,d-ei"``; entries are 1-indexed in error messages."""
    if not text:
        raise ParseError(1, text, "empty list")
    out = []
    for i, tok in enumerate(text.split(","), 1):
        if not tok:
            raise ParseError(i, tok, "empty entry")
        out.append(parse_complex(tok, i))
    return out


def format_complex(z: complex) -> str:
    """Inverse of :func:`parse_complex` (exact for finite values)."""
    im = repr(z.imag)
    sign = "" if im.startswith("-") else "+"
    return f"{z.real!r}{sign}{im}i"


def format_complex_list(zs) -> str:
    return ",".join(format_complex(complex(z)) for z in zs)


def _g17(x: float) -> str:
    return format(x + 0.0, ".17g")  # + 0.0 folds -0.0 into 0.0


@dataclass(frozen=True)
class Solve:
    poly: Polynomial
    cfg: SolveConfig


@dataclass(frozen=True)
class Radius:
    poly: Polynomial


@dataclass(frozen=True)
class Render:
    roots: RootSet
    raster: RasterConfig
    out_path: str
    stats_path: Optional[str] = None
    workers: int = 1


Command = Union[Solve, Radius, Render]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laspa",
        description="Certified polynomial roots with Laguerre's method and SPA seeding.",
        epilog="Coefficients are ascending: constant term first.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_args(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--coeffs", help="ascending coefficients c0,c1,...,cn (constant first)")
        grp.add_argument("--roots", help="roots; the polynomial is their monic product")

    solve = sub.add_parser("solve", help="find and certify all roots")
    poly_args(solve)
    solve.add_argument("--tol", type=float, default=1e-13, help="relative residual tolerance")
    solve.add_argument("--max-iter", type=int, default=80)
    solve.add_argument("--order", type=int, default=8, help="SPA power-sum order")

    radius = sub.add_parser("radius", help="convergence radius of every root and the a priori bound")
    poly_args(radius)

    render = sub.add_parser("render", help="basin-of-attraction image (binary PPM)")
    render.add_argument("--roots", required=True)
    render.add_argument("--center", default="0")
    render.add_argument("--side", type=float, default=4.0)
    render.add_argument("--px", type=int, default=256)
    render.add_argument("--max-iter", type=int, default=64)
    render.add_argument("--out", required=True)
    render.add_argument("--stats", help="optional sidecar file with per-root pixel counts")
    render.add_argument("--workers", type=int, default=1)
    return parser


def _poly_from(args) -> Polynomial:
    if args.coeffs is not None:
        return Polynomial(parse_complex_list(args.coeffs))
    return from_roots(parse_complex_list(args.roots))


_VALUE_FLAGS = ("--coeffs", "--roots", "--center")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1,0,1" as an option; bind it to its flag explicitly
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif re.match(r"^-[\d.]", nxt):
                out.append(f"{tok}={nxt}")
            else:
                out += [tok, nxt]
        else:
            out.append(tok)
    return out


def parse_command(argv: Optional[Sequence[str]] = None) -> Command:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_glue_negative_values(argv))
    if args.command == "solve":
        cfg = SolveConfig(
            iteration=IterationOptions(max_iters=args.max_iter, residual_tol=args.tol),
            spa=SpaOptions(order=args.order),
        )
        return Solve(_poly_from(args), cfg)
    if args.command == "radius":
        return Radius(_poly_from(args))
    raster = RasterConfig(parse_complex(args.center), args.side, args.px, args.max_iter)
    return Render(RootSet(parse_complex_list(args.roots)), raster, args.out, args.stats, args.workers)


def _root_line(est) -> str:
    v = est.value
    return f"{_g17(v.real)} {_g17(v.imag)} {_g17(est.residual)} {'true' if est.certified else 'false'}"


def run_command(cmd: Command, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Execute a parsed command; returns the process exit status."""
    try:
        if isinstance(cmd, Solve):
            for est in find_all_roots(cmd.poly, cmd.cfg):
                print(_root_line(est), file=out)
        elif isinstance(cmd, Radius):
            p = cmd.poly
            if p.degree < 4:
                print("error: degree must exceed 3", file=err)
                return 1
            for est in find_all_roots(p):
                disk = convergence_radius(p, est.value)
                print(f"{_g17(est.value.real)} {_g17(est.value.imag)} {_g17(disk.radius)}", file=out)
            print(f"apriori {_g17(a_priori_radius_bound(p))}", file=out)
        else:
            rs = cmd.roots
            disks = None
            if len(rs) >= 4:
                p = from_roots(rs.roots)
                disks = [convergence_radius(p, r) for r in rs.roots]
            img = render_basins(rs, disks, cmd.raster, workers=cmd.workers)
            write_ppm(img, len(rs), cmd.out_path)
            if cmd.stats_path:
                with open(cmd.stats_path, "w") as fh:
                    fh.write(basin_stats(img, len(rs)))
            px = cmd.raster.px
            print(f"wrote {cmd.out_path} {px}x{px}", file=out)
    except SeedingFailed as exc:
        for est in exc.partial:
            print(_root_line(est), file=out)
        print(f"error: {exc}", file=err)
        return 1
    except (LaspaError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cmd = parse_command(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LaspaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run_command(cmd)


if __name__ == "__main__":
    sys.exit(main())
