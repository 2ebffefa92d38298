"""Command line front end: ``lace op|certify|complex|zonotope|table``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import ftriangle as ft
from .certificate import Certificate
from .complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    colored_subdivision,
    edgewise_subdivision,
    extract_ftriangle,
    random_complex,
)
from .errors import LaceError, ParseError
from .operators import (
    apply_DF,
    apply_EF,
    bary_D,
    build_p_rows,
    colored_D,
    colored_p_table,
    edgewise_U,
)
from .poly import Poly, format_poly, parse_poly
from .roots import is_real_rooted
from .theorems import certify_main_theorem, skeleton_theorem_check, strong_interlacing_check
from .zonotope import (
    Zonotope,
    certify_zonotope,
    ehrhart_polynomial,
    hstar,
    hstar_r,
    interior_point_exists,
)


@dataclass
class RunConfig:
    command: str
    action: str | None = None
    inputs: list[str] = field(default_factory=list)
    n: int | None = None
    r: int | None = None
    variant: str | None = None
    width: str | None = None
    seed: int | None = None
    output: str | None = None
    params: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        inputs = [getattr(args, k) for k in ("h_file", "F_file", "infile", "file") if getattr(args, k, None)]
        params = {}
        for k in ("kind", "h", "F", "gamma", "k", "d", "random", "include_top"):
            v = getattr(args, k, None)
            if v not in (None, False):
                params[k] = v
        return cls(
            command=args.command,
            action=getattr(args, "action", None),
            inputs=[str(p) for p in inputs],
            n=getattr(args, "n", None),
            r=getattr(args, "r", None),
            variant=getattr(args, "variant", None),
            width=getattr(args, "width", None),
            seed=getattr(args, "seed", None),
            output=getattr(args, "out", None),
            params=params,
        )


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_cert(cert: Certificate, args) -> int:
    cert.config = asdict(RunConfig.from_args(args))
    _emit(cert.to_json(), args)
    return 0 if cert.positive else 1


def _read_h(args) -> Poly:
    if getattr(args, "h_file", None):
        return parse_poly(Path(args.h_file).read_text().strip())
    if getattr(args, "h", None) is None:
        raise ParseError("a polynomial is required (--h or --h-file)")
    return parse_poly(args.h)


def _ftriangle(args, size: int) -> ft.FTriangle:
    if getattr(args, "F_file", None):
        F = ft.FTriangle.load(args.F_file)
        return F
    if not getattr(args, "F", None):
        raise ParseError("an f-triangle is required (--F or --F-file)")
    return ft.builtin(args.F, size, args.r)


# ---------------------------------------------------------------------------
# op


def cmd_op(args) -> int:
    h = _read_h(args)
    n, r = args.n, args.r
    kind = args.kind
    if kind == "D":
        out = bary_D(n, h)
    elif kind == "U":
        out = edgewise_U(n, r or 1, h)
    elif kind == "Dr":
        out = colored_D(n, r or 1, h)
    elif kind == "EF":
        F = _ftriangle(args, max(h.degree, 0))
        out = apply_EF(F, h)
    else:
        F = _ftriangle(args, n)
        out = apply_DF(F, n, h)
    print(format_poly(out))
    if args.certify:
        cert = is_real_rooted(out, width=_width(args))
        return _emit_cert(cert, args)
    return 0


def _width(args):
    w = getattr(args, "width", None)
    return Fraction(w) if w else None


# ---------------------------------------------------------------------------
# certify


def cmd_certify(args) -> int:
    what = args.action
    if what == "main-thm":
        F = _ftriangle(args, args.n)
        cert = certify_main_theorem(F, args.n, _read_h(args), args.variant)
    elif what == "strong-lace":
        F = _ftriangle(args, args.n)
        cert = strong_interlacing_check(F, args.n, include_top=args.include_top)
    elif what == "skeleton":
        F = _ftriangle(args, args.n + 1)
        if args.gamma:
            gamma = [Fraction(v) for v in args.gamma.split(",")]
        elif args.random is not None:
            if args.seed is None:
                raise ParseError("--random needs --seed")
            rng = random.Random(args.seed)
            gamma = [1] + [rng.randint(0, args.random) for _ in range(args.n + 1)]
        else:
            raise ParseError("skeleton needs --gamma or --random")
        cert = skeleton_theorem_check(F, gamma, args.n)
    else:
        if not args.file:
            raise ParseError("zonotope certification needs --file")
        cert = certify_zonotope(Zonotope.load(args.file), args.r or 1)
    return _emit_cert(cert, args)


# ---------------------------------------------------------------------------
# complex


def cmd_complex(args) -> int:
    act = args.action
    if act == "extract-ftriangle":
        kind = {"sd": "sd", "barycentric": "sd", "esd": "esd", "colored": "sd_r", "sd_r": "sd_r",
                "trivial": "trivial"}.get(args.kind)
        if kind is None:
            raise ParseError(f"unknown construction {args.kind!r}")
        _emit(extract_ftriangle(kind, args.d, args.r).to_text().rstrip("\n"), args)
        return 0
    if act == "random":
        if args.seed is None:
            raise ParseError("random complexes need --seed")
        K = random_complex(args.vertices, args.dim, args.facets, args.seed)
        _emit(K.to_text().rstrip("\n"), args)
        return 0
    if not args.infile:
        raise ParseError(f"complex {act} needs --in")
    K = SimplicialComplex.load(args.infile)
    if act == "hvec":
        # trailing zeros dropped, as in the h-polynomial
        _emit(" ".join(_num(v) for v in K.h_polynomial().coeffs), args)
    elif act == "fvec":
        _emit(" ".join(str(v) for v in K.f_vector()), args)
    elif act == "sd":
        _emit(barycentric_subdivision(K).to_text().rstrip("\n"), args)
    elif act == "esd":
        _emit(edgewise_subdivision(K, args.r or 2).to_text().rstrip("\n"), args)
    elif act == "colored":
        _emit(colored_subdivision(K, args.r or 2).to_text().rstrip("\n"), args)
    elif act == "skeleton":
        if args.k is None:
            raise ParseError("skeleton needs --k")
        _emit(K.skeleton(args.k).to_text().rstrip("\n"), args)
    return 0


def _num(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# ---------------------------------------------------------------------------
# zonotope, table


def cmd_zonotope(args) -> int:
    Z = Zonotope.load(args.file)
    r = args.r or 1
    lines = [
        f"dimension: {Z.dim}",
        f"ehrhart: {format_poly(ehrhart_polynomial(Z))}",
        f"h*: {format_poly(hstar(Z))}",
        f"h*_{r}: {format_poly(hstar_r(Z, r))}",
        f"interior point: {'yes' if interior_point_exists(Z) else 'no'}",
    ]
    _emit("\n".join(lines), args)
    return 0


def cmd_table(args) -> int:
    if args.colored:
        if args.r is None:
            raise ParseError("--colored needs --r")
        data = colored_p_table(args.n, args.r).to_json()
    else:
        F = _ftriangle(args, args.n)
        data = build_p_rows(F, args.n).to_json()
    data["config"] = asdict(RunConfig.from_args(args))
    _emit(json.dumps(data, indent=2), args)
    return 0


# ---------------------------------------------------------------------------


def _add_poly_args(p):
    p.add_argument("--h", help="polynomial: 1,0,0,1 or 1+x^3")
    p.add_argument("--h-file", dest="h_file")


def _add_F_args(p):
    p.add_argument("--F", help="trivial | barycentric | edgewise | colored")
    p.add_argument("--F-file", dest="F_file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lace", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("op", help="apply a subdivision operator")
    p.add_argument("--kind", choices=["D", "U", "Dr", "EF", "DF"], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int)
    _add_poly_args(p)
    _add_F_args(p)
    p.add_argument("--certify", action="store_true", help="also print a real-rootedness certificate")
    p.add_argument("--width", help="refine witness intervals below this rational width")
    p.add_argument("--out")

    p = sub.add_parser("certify", help="emit a certificate as JSON")
    p.add_argument("action", choices=["main-thm", "strong-lace", "skeleton", "zonotope"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int)
    p.add_argument("--variant", choices=["a", "b"], default="a")
    _add_poly_args(p)
    _add_F_args(p)
    p.add_argument("--gamma", help="h-vector of Gamma, comma separated")
    p.add_argument("--random", type=int, metavar="MAX", help="random Gamma h-vector with entries <= MAX")
    p.add_argument("--seed", type=int)
    p.add_argument("--file", help="zonotope file")
    p.add_argument("--include-top", dest="include_top", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("complex", help="simplicial complex utilities")
    p.add_argument("action", choices=["hvec", "fvec", "sd", "esd", "colored", "skeleton",
                                      "extract-ftriangle", "random"])
    p.add_argument("--in", dest="infile")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind")
    p.add_argument("--d", type=int)
    p.add_argument("--vertices", type=int, default=6)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--facets", type=int, default=4)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")

    p = sub.add_parser("zonotope", help="Ehrhart data of a lattice zonotope")
    p.add_argument("--file", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--out")

    p = sub.add_parser("table", help="dump p_(F,n,k) or the colored table as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    _add_F_args(p)
    p.add_argument("--colored", action="store_true")
    p.add_argument("--out")
    return ap


COMMANDS = {"op": cmd_op, "certify": cmd_certify, "complex": cmd_complex,
            "zonotope": cmd_zonotope, "table": cmd_table}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except LaceError as e:
        print(f"lace: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except (ValueError, OSError) as e:
        print(f"lace: {e}", file=sys.stderr)
        return 3 if isinstance(e, ValueError) else 2


if __name__ == "__main__":
    sys.exit(main())
