"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
refusal.  JSON output is schema-versioned and key-sorted; identical inputs
produce identical bytes, warm cache or cold.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .betti import DEFAULT_COMPLEX_BUDGET, classify, graded_betti
from .cache import SCHEMA_VERSION, HomologyCache
from .complexes import alexander_dual, build_divisor_complex
from .errors import ResourceLimitExceeded
from .homology import (
    boundary_square_is_zero,
    euler_characteristic_matches,
    reduced_homology,
)
from .linalg import FieldSpec
from .semigroup import (
    Multidegree,
    PinchConfig,
    enumerate_degree,
    generate_generators,
    is_member_bruteforce,
    is_member_closed,
)
from .series import (
    canonical_partner,
    canonical_series_check,
    h_polynomial,
    hilbert_closed,
)
from .theorems import expected_table, verify

CACHE_ENV_VAR = "PINCHED_VERONESE_CACHE_DIR"


def _parse_vector(text: str) -> Multidegree:
    try:
        return Multidegree(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse multidegree {text!r}: {exc}") from None


def _config_from_args(args) -> PinchConfig:
    if args.d is None:
        raise ValueError("-d is required")
    if args.pinch is None:
        raise ValueError("--pinch is required (an index for n=2, or an explicit vector)")
    if "," in args.pinch:
        m = _parse_vector(args.pinch)
        return PinchConfig(args.n, args.d, m)
    if args.n != 2:
        raise ValueError("a bare pinch index is only defined for n=2; pass a vector")
    return PinchConfig.from_pinch_index(args.d, int(args.pinch))


def _cache_for(args, config, field):
    directory = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return HomologyCache(directory, config, field)


def _emit_json(command: str, payload: dict) -> str:
    return json.dumps(
        {"schema": SCHEMA_VERSION, "command": command, **payload},
        sort_keys=True,
        indent=2,
    )


def _int_coeffs(poly) -> list[int]:
    out = []
    for c in poly.coeffs:
        f = Fraction(c)
        if f.denominator != 1:
            raise ArithmeticError(f"expected integer coefficients, found {f}")
        out.append(int(f))
    return out


def _csv_lines(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------


def _cmd_gens(args) -> int:
    config = _config_from_args(args)
    gens = generate_generators(config)
    if args.format == "json":
        print(_emit_json("gens", {"n": config.n, "d": config.d, "m": list(config.m),
                                  "count": len(gens), "generators": [list(g) for g in gens]}))
    elif args.format == "csv":
        print(_csv_lines(["index", "generator"],
                         [[i, " ".join(str(c) for c in g)] for i, g in enumerate(gens)]))
    else:
        print(f"{len(gens)} generators (descending lex), pinch {tuple(config.m)} removed:")
        for i, g in enumerate(gens):
            print(f"  [{i}] {tuple(g)}")
    return 0


def _cmd_member(args) -> int:
    config = _config_from_args(args)
    h = _parse_vector(args.element)
    closed = is_member_closed(h, config)
    payload = {"element": list(h), "member": closed}
    status = 0
    if args.cross_check:
        brute = is_member_bruteforce(h, config, degree_cap=args.degree_cap)
        payload["bruteforce"] = brute
        if brute != closed:
            status = 1
    if args.format == "json":
        print(_emit_json("member", payload))
    elif args.format == "csv":
        print(_csv_lines(sorted(payload), [[payload[k] for k in sorted(payload)]]))
    else:
        verdict = "in" if closed else "not in"
        print(f"{tuple(h)} is {verdict} the semigroup")
        if args.cross_check:
            agree = "agrees" if status == 0 else "DISAGREES"
            print(f"bruteforce oracle {agree}: {payload['bruteforce']}")
    return status


def _cmd_hilbert(args) -> int:
    config = _config_from_args(args)
    series = hilbert_closed(config)
    num, den = _int_coeffs(series.num), _int_coeffs(series.den)
    expansion = None
    if args.expand is not None:
        expansion = [int(c) for c in series.series(args.expand)]
    if args.format == "json":
        payload = {"n": config.n, "d": config.d, "m": list(config.m),
                   "numerator": num, "denominator": den}
        if expansion is not None:
            payload["expansion"] = expansion
        print(_emit_json("hilbert", payload))
    elif args.format == "csv":
        rows = [["numerator", " ".join(map(str, num))], ["denominator", " ".join(map(str, den))]]
        if expansion is not None:
            rows.append(["expansion", " ".join(map(str, expansion))])
        print(_csv_lines(["part", "coefficients"], rows))
    else:
        print(f"Hilbert series of n={config.n} d={config.d} m={tuple(config.m)}:")
        print(f"  numerator coefficients:   {num}")
        print(f"  denominator coefficients: {den}")
        if expansion is not None:
            print(f"  series through z^{args.expand}: {expansion}")
    return 0


def _cmd_hpoly(args) -> int:
    config = _config_from_args(args)
    poly = h_polynomial(config)
    coeffs = _int_coeffs(poly)
    if args.format == "json":
        print(_emit_json("hpoly", {"n": config.n, "d": config.d, "m": list(config.m),
                                   "coarse_coefficients": coeffs}))
    elif args.format == "csv":
        print(_csv_lines(["s", "coefficient"], list(enumerate(coeffs))))
    else:
        print(f"h-polynomial in w = z^{config.d}: {coeffs}")
    return 0


def _cmd_betti(args) -> int:
    config = _config_from_args(args)
    field = FieldSpec.parse(args.field)
    cache = _cache_for(args, config, field)
    table = graded_betti(config, field, args.imax, args.smax,
                         cache=cache, jobs=args.jobs, budget=args.budget)
    if args.format == "json":
        print(_emit_json("betti", {"table": table.to_json_obj()}))
    elif args.format == "csv":
        print(_csv_lines(["i", "s", "value"],
                         [[i, s, table.entry(i, s)]
                          for i in range(table.i_max + 1)
                          for s in range(table.s_max + 1)]))
    else:
        print(f"graded Betti table, n={config.n} d={config.d} m={tuple(config.m)} over {field}")
        print(table.to_text())
        if config.n == 2:
            exp = expected_table(config)
            print("cataloged entries:")
            for (i, s), v in sorted(exp.known.items()):
                mark = "ok" if table.entry(i, s) == v else f"MISMATCH (computed {table.entry(i, s)})"
                print(f"  betti[{i},{s}] = {v}  [{exp.known_details[(i, s)]}] {mark}")
            for i, s in sorted(exp.unknown):
                print(f"  betti[{i},{s}] = {table.entry(i, s)}  [no closed form]")
    return 0


def _cmd_classify(args) -> int:
    config = _config_from_args(args)
    field = FieldSpec.parse(args.field)
    cache = _cache_for(args, config, field)
    table = graded_betti(config, field, args.imax, args.smax,
                         cache=cache, jobs=args.jobs, budget=args.budget)
    report = classify(table)
    if args.format == "json":
        print(_emit_json("classify", {"n": config.n, "d": config.d, "m": list(config.m),
                                      "field": field.label, **report.to_json_obj()}))
    elif args.format == "csv":
        obj = report.to_json_obj()
        print(_csv_lines(sorted(obj), [[obj[k] for k in sorted(obj)]]))
    else:
        print(f"classification of n={config.n} d={config.d} m={tuple(config.m)}:")
        for k, v in sorted(report.to_json_obj().items()):
            print(f"  {k}: {v}")
    return 0


def _parse_sweep(spec: str) -> list[PinchConfig]:
    n = None
    d_lo = d_hi = None
    for part in spec.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "n":
            n = int(value)
        elif key == "d":
            if ".." in value:
                lo, hi = value.split("..")
                d_lo, d_hi = int(lo), int(hi)
            else:
                d_lo = d_hi = int(value)
        else:
            raise ValueError(f"unknown sweep key {key!r}")
    if n != 2:
        raise ValueError("sweeps are defined for n=2 (pinch indices)")
    if d_lo is None:
        raise ValueError("sweep needs a d range, e.g. d=3..7")
    configs = []
    for d in range(d_lo, d_hi + 1):
        for i in range((d + 1) // 2 + 1):
            configs.append(PinchConfig.from_pinch_index(d, i))
    return configs


def _cmd_verify(args) -> int:
    field = FieldSpec.parse(args.field)
    if args.sweep:
        configs = _parse_sweep(args.sweep)
    else:
        configs = [_config_from_args(args)]
    reports = []
    for config in configs:
        cache = _cache_for(args, config, field)
        reports.append(verify(config, field, cache=cache, jobs=args.jobs, budget=args.budget))
    any_fail = any(not r.all_pass for r in reports)
    if args.format == "json":
        print(_emit_json("verify", {"all_pass": not any_fail,
                                    "reports": [r.to_json_obj() for r in reports]}))
    elif args.format == "csv":
        rows = []
        for r in reports:
            for c in r.checks:
                if c.judged:
                    rows.append([r.config.n, r.config.d,
                                 " ".join(map(str, r.config.m)),
                                 c.label, "pass" if c.passed else "fail"])
        print(_csv_lines(["n", "d", "m", "check", "result"], rows))
    else:
        for r in reports:
            if args.sweep:
                mark = "PASS" if r.all_pass else "FAIL"
                fails = ", ".join(c.label for c in r.failed_checks())
                suffix = f" ({fails})" if fails else ""
                print(f"[{mark}] d={r.config.d} m={tuple(r.config.m)}{suffix}")
            else:
                print(r.to_text())
        if args.sweep:
            print("=>", "all configurations pass" if not any_fail else "failures present")
    return 1 if any_fail else 0


def _cmd_canonical(args) -> int:
    if args.d is None:
        raise ValueError("-d is required")
    t = canonical_partner(args.n, args.d, args.k)
    holds, shift = canonical_series_check(args.n, args.d, args.k)
    payload = {"n": args.n, "d": args.d, "k": args.k,
               "partner": t, "holds": holds, "shift": shift}
    if args.format == "json":
        print(_emit_json("canonical", payload))
    elif args.format == "csv":
        print(_csv_lines(sorted(payload), [[payload[k] for k in sorted(payload)]]))
    else:
        print(f"canonical partner of k={args.k} (n={args.n}, d={args.d}): t = {t}")
        verdict = f"monomial quotient holds, shift {shift}" if holds else "monomial quotient FAILS"
        print(f"series duality: {verdict}")
    return 0 if holds else 1


def _cmd_dualcheck(args) -> int:
    config = _config_from_args(args)
    field = FieldSpec.parse(args.field)
    if args.element:
        elements = [_parse_vector(args.element)]
    else:
        elements = enumerate_degree(config, args.coarse)
    failures = []
    checked = 0
    for h in elements:
        c = build_divisor_complex(h, config)
        if c.is_void:
            continue
        checked += 1
        profile = reduced_homology(c, field)
        if not boundary_square_is_zero(c):
            failures.append((h, "boundary composition"))
        if not euler_characteristic_matches(c, profile):
            failures.append((h, "euler characteristic"))
        if c.dim >= 0:  # duality over an empty vertex set degenerates
            dual = alexander_dual(c)
            dual_profile = reduced_homology(dual, field)
            nv = len(c.support())
            span = range(-1, nv + 2)
            if any(dual_profile[i - 2] != profile[nv - i - 1] for i in span):
                failures.append((h, "alexander duality"))
            # the dual is void exactly when c is the full simplex on its
            # support; the involution only applies to non-void complexes
            if not dual.is_void and alexander_dual(dual, dual.ground).faces != c.faces:
                failures.append((h, "dual involution"))
    payload = {"n": config.n, "d": config.d, "m": list(config.m), "field": field.label,
               "complexes_checked": checked,
               "failures": [[list(h), why] for h, why in failures]}
    if args.element and elements:
        c = build_divisor_complex(elements[0], config)
        payload["faces"] = sorted(sorted(f) for f in c.faces)
    if args.format == "json":
        print(_emit_json("dualcheck", payload))
    elif args.format == "csv":
        print(_csv_lines(["element", "failure"],
                         [[" ".join(map(str, h)), why] for h, why in failures]
                         or [["-", "none"]]))
    else:
        print(f"checked {checked} complexes: boundary^2, euler, duality, involution")
        if failures:
            for h, why in failures:
                print(f"  FAIL {tuple(h)}: {why}")
        else:
            print("  all pass")
    return 1 if failures else 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinched-veronese",
        description="Exact Betti tables, Hilbert series and classification of "
                    "pinched Veronese rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=2, help="number of variables (default 2)")
    common.add_argument("-d", type=int, default=None, help="Veronese degree")
    common.add_argument("--pinch", help="pinch index (n=2) or explicit vector a,b,...")
    common.add_argument("--field", default="32003",
                        help="coefficient field: a prime, or q for the rationals")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cache-dir", default=None,
                        help=f"profile cache directory (default: ${CACHE_ENV_VAR})")
    common.add_argument("--jobs", type=int, default=1, help="parallel homology jobs")
    common.add_argument("--budget", type=int, default=DEFAULT_COMPLEX_BUDGET,
                        help="resource budget (complexes x subsets)")

    scan = argparse.ArgumentParser(add_help=False)
    scan.add_argument("--imax", type=int, default=None, help="largest homological degree")
    scan.add_argument("--smax", type=int, default=None, help="largest coarse degree")

    p = sub.add_parser("gens", parents=[common], help="list the semigroup generators")
    p.set_defaults(func=_cmd_gens)

    p = sub.add_parser("member", parents=[common], help="semigroup membership test")
    p.add_argument("--element", required=True, help="multidegree a,b,...")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the brute-force oracle")
    p.add_argument("--degree-cap", type=int, default=None,
                   help="brute-force degree bound (default 8d)")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("hilbert", parents=[common], help="closed Hilbert series")
    p.add_argument("--expand", type=int, default=None,
                   help="also expand the series through this degree")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("hpoly", parents=[common], help="h-polynomial (n=2)")
    p.set_defaults(func=_cmd_hpoly)

    p = sub.add_parser("betti", parents=[common, scan], help="graded Betti table")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("classify", parents=[common, scan],
                       help="pdim/depth/CM/Gorenstein/linearity report")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", parents=[common, scan],
                       help="verify cataloged claims against the computed table")
    p.add_argument("--sweep", default=None, help='e.g. "n=2,d=3..7"')
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("canonical", parents=[common],
                       help="canonical partner index and series duality check")
    p.add_argument("-k", type=int, required=True, help="slice index, 0 <= k < d")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("dualcheck", parents=[common],
                       help="boundary/euler/duality property checks on divisor complexes")
    p.add_argument("--coarse", type=int, default=1,
                   help="check every complex at this coarse degree")
    p.add_argument("--element", default=None, help="check one multidegree a,b,...")
    p.set_defaults(func=_cmd_dualcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
