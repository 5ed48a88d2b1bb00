"""Batch command-line front end.

Subcommands: field-info, divisors, code, dual, distance, bch1, bch2,
eval-code, minpoly, vanish.  Output is human-readable by default;
--machine emits deterministic key=value lines (elements in both power and
tuple form where they appear standalone).

Exit status: 0 success, 2 parse/usage errors, 3 guard exceeded,
4 condition violated, 1 other domain errors.
"""

from __future__ import annotations

import argparse
import sys

from .bch import (
    Bch1Spec,
    Bch2Spec,
    bch1_code,
    bch1_generator,
    bch1_max_length,
    bch2_code,
    bch2_exponent_sets,
    bch2_generator,
    evaluation_code,
    find_normal_element,
    is_mds,
    min_distance_exact,
)
from .codes import (
    Modulus,
    SkewCyclicCode,
    check_polynomial,
    count_divisors,
    dual_code,
    enumerate_right_divisors,
)
from .errors import (
    ConditionViolatedError,
    GuardExceededError,
    ParseError,
    SkewError,
)
from .fields import FieldEmbedding, get_field, preset_names
from .rootsets import minimal_polynomial, vanishing_set
from .skewpoly import SkewRing
from .textio import (
    format_element,
    format_matrix,
    format_poly,
    parse_code_config,
    parse_element,
    parse_field_config,
    parse_poly,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_CONDITION = 4
EXIT_DOMAIN = 1


def _add_field_args(sub, ext=False):
    sub.add_argument("--preset", help=f"field preset, one of {', '.join(preset_names())}")
    sub.add_argument("--config", help="path to a key=value field config file")
    sub.add_argument("--e", type=int, default=None,
                     help="sigma exponent: sigma(a) = a^(p^e); default 1 "
                          "(or the config file's e)")
    sub.add_argument("--commutative", action="store_true",
                     help="use sigma = id instead of the --e power")
    if ext:
        sub.add_argument("--ext-preset", help="extension field preset")
        sub.add_argument("--ext-config", help="extension field config file")
    sub.add_argument("--machine", action="store_true",
                     help="deterministic key=value output")


def _resolve_field(args):
    if args.preset and args.config:
        raise ParseError("give either --preset or --config, not both")
    if args.preset:
        return get_field(args.preset), (1 if args.e is None else args.e)
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            field, e = parse_field_config(fh.read())
        return field, (e if args.e is None else args.e)
    raise ParseError("a field is required: --preset or --config")


def _resolve_ring(args):
    field, e = _resolve_field(args)
    if args.commutative:
        e = field.degree
    return SkewRing(field, e)


def _resolve_ext_field(args):
    if getattr(args, "ext_preset", None):
        return get_field(args.ext_preset)
    if getattr(args, "ext_config", None):
        with open(args.ext_config, "r", encoding="utf-8") as fh:
            field, _ = parse_field_config(fh.read())
        return field
    return None


def _emit(args, pairs, human_lines):
    if args.machine:
        for key, value in pairs:
            print(f"{key}={value}")
    else:
        for line in human_lines:
            print(line)


def _element_pairs(key, a):
    return [
        (key, format_element(a)),
        (f"{key}_tuple", format_element(a, style="tuple")),
    ]


def cmd_field_info(args):
    ring = _resolve_ring(args)
    field = ring.field
    pairs = [
        ("p", field.p),
        ("d", field.degree),
        ("order", field.order),
        ("modpoly", ",".join(str(c) for c in field.modulus)),
        ("primitive", str(field.primitive).lower()),
        ("q", ring.q),
        ("sigma_order", ring.m),
        ("fixed_field_order", ring.q),
        ("center", f"F_{ring.q}[x^{ring.m}]"),
    ]
    human = [f"{k} = {v}" for k, v in pairs]
    _emit(args, pairs, human)
    return EXIT_OK


def cmd_divisors(args):
    ring = _resolve_ring(args)
    f = parse_poly(ring, args.poly)
    degrees = args.degree if args.degree is None else [args.degree]
    result = enumerate_right_divisors(f, degrees=degrees)
    n = f.degree
    total = count_divisors(result)
    nontrivial = (
        count_divisors(result, n, nontrivial=True) if degrees is None else None
    )
    pairs = [("f", format_poly(f)), ("n", n), ("count_total", total)]
    human = [f"f = {format_poly(f)}"]
    if nontrivial is not None:
        pairs.append(("count_nontrivial", nontrivial))
        human.append(
            f"{nontrivial} nontrivial monic right divisors "
            f"({total} including 1 and f)"
        )
    else:
        human.append(f"{total} monic right divisors at degree {args.degree}")
    for d in sorted(result):
        pairs.append((f"count_deg{d}", len(result[d])))
        if not args.count_only:
            for i, g in enumerate(result[d]):
                pairs.append((f"divisor_deg{d}_{i}", format_poly(g)))
    if not args.count_only:
        for d in sorted(result):
            human.append(f"degree {d}: {len(result[d])}")
            human.extend(f"  {format_poly(g)}" for g in result[d])
    else:
        human.extend(f"degree {d}: {len(result[d])}" for d in sorted(result))
    _emit(args, pairs, human)
    return EXIT_OK


def _build_code(args):
    if getattr(args, "code_config", None):
        if args.f or args.g or args.preset or args.config:
            raise ParseError("--code-config replaces --preset/--config/--f/--g")
        with open(args.code_config, "r", encoding="utf-8") as fh:
            ring, f, g = parse_code_config(fh.read())
    else:
        if not (args.f and args.g):
            raise ParseError("--f and --g are required without --code-config")
        ring = _resolve_ring(args)
        f = parse_poly(ring, args.f)
        g = parse_poly(ring, args.g)
    return SkewCyclicCode(Modulus(f), g)


def _code_report(args, code, with_distance=False, with_dual=False, with_check=False):
    pairs = [
        ("f", format_poly(code.modulus.poly)),
        ("g", format_poly(code.generator)),
        ("n", code.n),
        ("k", code.k),
    ]
    human = [
        f"modulus f = {format_poly(code.modulus.poly)}",
        f"generator g = {format_poly(code.generator)}",
        f"length n = {code.n}, dimension k = {code.k}",
        "generator matrix:",
        format_matrix(code.generator_matrix),
    ]
    for i, row in enumerate(code.generator_matrix):
        pairs.append((f"genrow{i}", " ".join(format_element(c) for c in row)))
    if with_distance and code.k > 0:
        d = min_distance_exact(code, strategy=args.strategy)
        pairs.append(("distance", d))
        pairs.append(("mds", str(d == code.n - code.k + 1).lower()))
        human.append(f"exact minimum distance = {d}"
                     + (" (MDS)" if d == code.n - code.k + 1 else ""))
    if with_dual:
        data = dual_code(code)
        pairs.append(("dual_generator", format_poly(data.code.generator)))
        pairs.append(("dual_generator_raw", format_poly(data.raw_generator)))
        pairs.append(("dual_modulus", format_poly(data.code.modulus.poly)))
        human.append(f"dual generator (monic) = {format_poly(data.code.generator)}")
        human.append(f"dual generator (raw) = {format_poly(data.raw_generator)}")
        human.append(f"dual modulus = {format_poly(data.code.modulus.poly)}")
    if with_check:
        check, c_tilde = check_polynomial(code)
        pairs.append(("check_poly", format_poly(check)))
        pairs.extend(_element_pairs("check_twist", c_tilde))
        human.append(f"check polynomial = {format_poly(check)}")
        human.append(f"check twist constant = {format_element(c_tilde)}")
    _emit(args, pairs, human)


def cmd_code(args):
    code = _build_code(args)
    _code_report(
        args, code,
        with_distance=args.distance,
        with_dual=args.dual,
        with_check=args.check_poly,
    )
    return EXIT_OK


def cmd_dual(args):
    code = _build_code(args)
    _code_report(args, code, with_dual=True)
    return EXIT_OK


def cmd_distance(args):
    code = _build_code(args)
    d = min_distance_exact(code, strategy=args.strategy)
    pairs = [
        ("n", code.n), ("k", code.k), ("distance", d),
        ("mds", str(d == code.n - code.k + 1).lower()),
    ]
    human = [f"[{code.n},{code.k}] code: exact minimum distance {d}"
             + (" (MDS)" if d == code.n - code.k + 1 else "")]
    _emit(args, pairs, human)
    return EXIT_OK


def _bch_common_args(sub):
    sub.add_argument("--alpha", required=True,
                     help="element token in the extension field, or 'auto' (bch2)")
    sub.add_argument("--b", type=int, default=0)
    sub.add_argument("--t1", type=int, default=1)
    sub.add_argument("--t2", type=int, default=1)
    sub.add_argument("--delta", type=int, required=True)
    sub.add_argument("--nu", type=int, default=0)
    sub.add_argument("--verify-distance", action="store_true",
                     help="run the exact distance oracle")


def _bch_tower(args):
    base_ring = _resolve_ring(args)
    ext_field = _resolve_ext_field(args)
    if ext_field is None:
        ext_field = base_ring.field
    emb = FieldEmbedding(base_ring.field, ext_field)
    return base_ring, emb


def cmd_bch1(args):
    base_ring, emb = _bch_tower(args)
    alpha = parse_element(emb.target, args.alpha)
    spec = Bch1Spec(
        base_ring=base_ring, emb=emb, alpha=alpha,
        b=args.b, t1=args.t1, t2=args.t2,
        delta=args.delta, nu=args.nu, n=args.n,
    )
    g, designed = bch1_generator(spec)
    code, _ = bch1_code(spec)
    pairs = [
        ("g", format_poly(g)),
        ("designed_distance", designed),
        ("modulus", format_poly(code.modulus.poly)),
        ("n", code.n),
        ("k", code.k),
        ("max_length", bch1_max_length(spec)),
    ]
    human = [
        f"generator g = {format_poly(g)}",
        f"designed distance = {designed}",
        f"modulus = {format_poly(code.modulus.poly)}",
        f"[{code.n},{code.k}] code over {base_ring.field.name}",
        f"maximal admissible length = {bch1_max_length(spec)}",
    ]
    if args.verify_distance and code.k > 0:
        d = min_distance_exact(code)
        pairs.append(("distance", d))
        pairs.append(("mds", str(d == code.n - code.k + 1).lower()))
        human.append(f"actual distance = {d} (designed {designed})")
    _emit(args, pairs, human)
    return EXIT_OK


def cmd_bch2(args):
    base_ring, emb = _bch_tower(args)
    if args.alpha == "auto":
        alpha = find_normal_element(SkewRing(emb.target, base_ring.e))
    else:
        alpha = parse_element(emb.target, args.alpha)
    spec = Bch2Spec(
        base_ring=base_ring, emb=emb, alpha=alpha,
        b=args.b, t1=args.t1, t2=args.t2, delta=args.delta, nu=args.nu,
    )
    g, designed = bch2_generator(spec)
    code, _ = bch2_code(spec)
    S, closed = bch2_exponent_sets(spec)
    pairs = [
        ("alpha", format_element(alpha)),
        ("alpha_tuple", format_element(alpha, style="tuple")),
        ("g", format_poly(g)),
        ("designed_distance", designed),
        ("modulus", format_poly(code.modulus.poly)),
        ("n", code.n),
        ("k", code.k),
        ("exponents", ",".join(map(str, S))),
        ("exponents_closed", ",".join(map(str, closed))),
    ]
    human = [
        f"normal element alpha = {format_element(alpha)}",
        f"generator g' = {format_poly(g)}",
        f"designed distance = {designed}",
        f"modulus = {format_poly(code.modulus.poly)}",
        f"[{code.n},{code.k}] code over {base_ring.field.name}",
        f"exponent set = {S}, coset closure = {closed}",
    ]
    if args.verify_distance and code.k > 0:
        d = min_distance_exact(code)
        pairs.append(("distance", d))
        pairs.append(("mds", str(d == code.n - code.k + 1).lower()))
        human.append(f"actual distance = {d} (designed {designed})")
    _emit(args, pairs, human)
    return EXIT_OK


def cmd_eval_code(args):
    ring = _resolve_ring(args)
    points = [parse_element(ring.field, tok) for tok in args.points.split(";")]
    code = evaluation_code(ring, points, args.k)
    d = min_distance_exact(code)
    pairs = [
        ("points", ";".join(format_element(a) for a in code.points)),
        ("n", code.n),
        ("k", code.k),
        ("distance", d),
        ("mds", str(is_mds(code)).lower()),
    ]
    for i, row in enumerate(code.generator_matrix):
        pairs.append((f"genrow{i}", " ".join(format_element(c) for c in row)))
    human = [
        f"[{code.n},{code.k}] evaluation code, exact distance {d}",
        "generator matrix:",
        format_matrix(code.generator_matrix),
    ]
    _emit(args, pairs, human)
    return EXIT_OK


def cmd_minpoly(args):
    ring = _resolve_ring(args)
    points = [parse_element(ring.field, tok) for tok in args.points.split(";")]
    m = minimal_polynomial(ring, points)
    pairs = [("minpoly", format_poly(m)), ("rank", m.degree)]
    human = [f"minimal polynomial = {format_poly(m)}", f"rank = {m.degree}"]
    _emit(args, pairs, human)
    return EXIT_OK


def cmd_vanish(args):
    ring = _resolve_ring(args)
    f = parse_poly(ring, args.poly)
    roots = vanishing_set(f)
    pairs = [
        ("f", format_poly(f)),
        ("count", len(roots)),
        ("roots", ";".join(format_element(a) for a in roots)),
    ]
    human = [
        f"f = {format_poly(f)}",
        f"{len(roots)} right roots: " + ", ".join(format_element(a) for a in roots),
    ]
    _emit(args, pairs, human)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewcodes",
        description="Exact skew-polynomial rings and skew-cyclic codes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("field-info", help="field and ring facts")
    _add_field_args(sub)
    sub.set_defaults(func=cmd_field_info)

    sub = subs.add_parser("divisors", help="enumerate monic right divisors")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.add_argument("--count-only", action="store_true")
    sub.add_argument("--degree", type=int, default=None)
    sub.set_defaults(func=cmd_divisors)

    sub = subs.add_parser("code", help="code report from modulus and generator")
    _add_field_args(sub)
    sub.add_argument("--f")
    sub.add_argument("--g")
    sub.add_argument("--code-config", help="file with field config plus f= and g= lines")
    sub.add_argument("--distance", action="store_true")
    sub.add_argument("--dual", action="store_true")
    sub.add_argument("--check-poly", action="store_true")
    sub.add_argument("--strategy", choices=("auto", "columns", "messages"),
                     default="auto")
    sub.set_defaults(func=cmd_code)

    sub = subs.add_parser("dual", help="dual code of a constacyclic code")
    _add_field_args(sub)
    sub.add_argument("--f")
    sub.add_argument("--g")
    sub.add_argument("--code-config", help="file with field config plus f= and g= lines")
    sub.set_defaults(func=cmd_dual)

    sub = subs.add_parser("distance", help="exact minimum distance")
    _add_field_args(sub)
    sub.add_argument("--f")
    sub.add_argument("--g")
    sub.add_argument("--code-config", help="file with field config plus f= and g= lines")
    sub.add_argument("--strategy", choices=("auto", "columns", "messages"),
                     default="auto")
    sub.set_defaults(func=cmd_distance)

    sub = subs.add_parser("bch1", help="first-kind skew-BCH construction")
    _add_field_args(sub, ext=True)
    _bch_common_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.set_defaults(func=cmd_bch1)

    sub = subs.add_parser("bch2", help="second-kind skew-BCH construction")
    _add_field_args(sub, ext=True)
    _bch_common_args(sub)
    sub.set_defaults(func=cmd_bch2)

    sub = subs.add_parser("eval-code", help="evaluation code from points")
    _add_field_args(sub)
    sub.add_argument("--points", required=True,
                     help="semicolon-separated element tokens")
    sub.add_argument("--k", type=int, required=True)
    sub.set_defaults(func=cmd_eval_code)

    sub = subs.add_parser("minpoly", help="minimal polynomial of a point set")
    _add_field_args(sub)
    sub.add_argument("--points", required=True)
    sub.set_defaults(func=cmd_minpoly)

    sub = subs.add_parser("vanish", help="vanishing set of a polynomial")
    _add_field_args(sub)
    sub.add_argument("--poly", required=True)
    sub.set_defaults(func=cmd_vanish)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardExceededError as exc:
        cost = f" (estimated cost {exc.cost})" if exc.cost else ""
        print(f"guard exceeded: {exc}{cost}", file=sys.stderr)
        return EXIT_GUARD
    except ConditionViolatedError as exc:
        print(f"condition violated: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except (SkewError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
