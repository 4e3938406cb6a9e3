"""Command-line interface.

Subcommands: loewy (Loewy length of a tensor product of two module specs),
verify (formula-versus-oracle grids), hash (the # operation and the three
disjointness predicates), paths (lattice path count and parity).

Module-spec grammar: A:<l> and B:<l> (uniserial), S:<word> (string over
X/Y/x/y), N:<l1>,<l2>,<rho>[,<n>] (two-legged band with a Jordan block),
W:<word>,<rho>[,<n>] (band from an explicit word), P (regular module).

Exit codes: 0 success, 2 input error, 3 verification or engine disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .binlucas import hash_op, perp, q_count, q_parity
from .formulas import (BandSpec, ModuleSpec, StringSpec, UniserialA,
                       UniserialB, loewy_general)
from .gf2e import REDUCTION_POLYS, FieldDesc, gf
from .verify import oracle_loewy, run_verify, spec_dim
from .words import WordError, in_w_prime, parse, a_word, b_word
from .modrep import dim_cap


class CliError(Exception):
    pass


def parse_field(text: str) -> FieldDesc:
    if not text.startswith("gf:"):
        raise CliError(f"field must have the form gf:<e>, got {text!r}")
    try:
        e = int(text[3:])
    except ValueError:
        raise CliError(f"field must have the form gf:<e>, got {text!r}")
    if e not in REDUCTION_POLYS:
        raise CliError(f"unsupported field extension degree {e}")
    return gf(e)


def check_q(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise CliError(f"q must be a power of 2, at least 2, got {q}")
    return q


def _parse_rho(text: str, f: FieldDesc) -> int:
    try:
        rho = int(text)
    except ValueError:
        raise CliError(f"band scalar must be a decimal integer, got {text!r}")
    if rho == 0:
        raise CliError("band scalar must be nonzero")
    if rho >> f.e:
        raise CliError(f"band scalar {rho} is outside gf:{f.e}; "
                       "choose a larger field")
    return rho


def parse_spec(text: str, q: int, f: FieldDesc) -> ModuleSpec:
    """Parse one module spec in the CLI grammar."""
    if text == "P":
        return BandSpec("XY" * q + "xy" * q, 1, 1)
    if ":" not in text:
        raise CliError(f"cannot parse module spec {text!r}")
    tag, _, body = text.partition(":")
    try:
        if tag in ("A", "B"):
            l = int(body)
            if l < 0:
                raise CliError(f"uniserial length must be non-negative: {text!r}")
            return UniserialA(l) if tag == "A" else UniserialB(l)
        if tag == "S":
            return StringSpec(parse(body))
        if tag == "N":
            parts = body.split(",")
            if len(parts) not in (3, 4):
                raise CliError(f"band spec needs l1,l2,rho[,n]: {text!r}")
            l1, l2 = int(parts[0]), int(parts[1])
            if l1 < 1 or l2 < 1:
                raise CliError(f"band legs must be at least 1: {text!r}")
            rho = _parse_rho(parts[2], f)
            n = int(parts[3]) if len(parts) == 4 else 1
            if n < 1:
                raise CliError(f"Jordan block size must be at least 1: {text!r}")
            word = a_word(l1) + b_word(l2).swapcase()[::-1]
            return BandSpec(word, rho, n)
        if tag == "W":
            parts = body.split(",")
            if len(parts) not in (2, 3):
                raise CliError(f"band spec needs word,rho[,n]: {text!r}")
            word = parse(parts[0])
            if not in_w_prime(word):
                raise CliError(f"not an admissible band word: {parts[0]!r}")
            rho = _parse_rho(parts[1], f)
            n = int(parts[2]) if len(parts) == 3 else 1
            if n < 1:
                raise CliError(f"Jordan block size must be at least 1: {text!r}")
            return BandSpec(word, rho, n)
    except WordError as exc:
        raise CliError(str(exc))
    except ValueError as exc:
        raise CliError(f"cannot parse module spec {text!r}: {exc}")
    raise CliError(f"unknown module spec tag {tag!r} in {text!r}")


def _emit(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_loewy(args) -> int:
    q = check_q(args.q)
    f = parse_field(args.field)
    left = parse_spec(args.left, q, f)
    right = parse_spec(args.right, q, f)
    try:
        report = loewy_general(left, right, q, f)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {"left": args.left, "right": args.right, "q": q,
               "loewy_formula": report.length,
               "projective_summand": report.projective_summand,
               "trace": report.trace}
    code = 0
    if args.method in ("oracle", "both"):
        total = spec_dim(left) * spec_dim(right)
        if total > dim_cap():
            raise CliError(f"tensor dimension {total} exceeds the oracle cap "
                           f"{dim_cap()} (override with LOEWY_MAX_DIM)")
        try:
            payload["loewy_oracle"] = oracle_loewy(left, right, f)
        except ValueError as exc:
            raise CliError(str(exc))
        if args.method == "both" and payload["loewy_oracle"] != report.length:
            code = 3
    _emit(payload, args.output)
    return code


def cmd_verify(args) -> int:
    q = check_q(args.q)
    f = parse_field(args.field)
    summary = run_verify(q, f, args.max_l, args.max_m)
    _emit(summary, args.output)
    return 3 if summary["mismatch_count"] else 0


def cmd_hash(args) -> int:
    l, m = args.l, args.m
    if l < 0 or m < 0:
        raise CliError("hash arguments must be non-negative")
    payload = {"hash": hash_op(l, m), "perp": perp(l, m),
               "perp_l_minus_1_m": perp(l - 1, m) if l >= 1 else None,
               "perp_l_m_minus_1": perp(l, m - 1) if m >= 1 else None}
    _emit(payload, args.output)
    return 0


def cmd_paths(args) -> int:
    if min(args.t, args.l, args.m) < 0:
        raise CliError("paths arguments must be non-negative")
    payload = {"count": str(q_count(args.t, args.l, args.m)),
               "parity": q_parity(args.t, args.l, args.m)}
    _emit(payload, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loewy",
        description="Loewy lengths of tensor products of dihedral 2-group "
                    "modules in characteristic 2")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, default=2,
                       help="group parameter, a power of 2 (default 2)")
        p.add_argument("--field", default="gf:2",
                       help="coefficient field gf:<e> (default gf:2)")
        p.add_argument("--output", choices=("json", "text"), default="json")

    p = sub.add_parser("loewy", help="Loewy length of a tensor product")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.add_argument("--method", choices=("formula", "oracle", "both"),
                   default="formula")
    p.set_defaults(func=cmd_loewy)

    p = sub.add_parser("verify", help="run formula-versus-oracle grids")
    common(p)
    p.add_argument("--max-l", type=int, default=3)
    p.add_argument("--max-m", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hash", help="the # operation on two numbers")
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_hash)

    p = sub.add_parser("paths", help="lattice path count and parity")
    p.add_argument("t", type=int)
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_paths)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
