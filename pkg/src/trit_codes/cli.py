"""Command-line front end.

Subcommands: construct, verify, factor, coset, minpoly, spectrum,
conditions, survey, report.  Text output is meant for eyeballs; --format
json emits one schema-stable object (or array of them) with the top-level
keys {"spec", "n", "k", "d_exact", "d_lower", "d_upper", "generator",
"optimal", "certificates", "family", "timings"}.

Exit codes: 0 pass, 1 claim-fail, 2 input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import codes, corpus, families, planar
from .conditions import check_conditions
from .cosets import coset_of
from .errors import BudgetExceeded, InternalError, NotApplicable, TritCodesError
from .field import get_field
from .poly3 import factorize, parse_poly

# json numbers lose precision past 2^53; big values ship as decimal strings
_JSON_INT_LIMIT = 2**53


def _jint(v):
    if isinstance(v, int) and abs(v) >= _JSON_INT_LIMIT:
        return str(v)
    return v


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _spec_dict(command: str, ctx, e=None, s_check=None) -> dict:
    out = {"command": command, "m": ctx.m, "modulus": str(ctx.modulus)}
    if e is not None:
        out["e"] = e
    if s_check is not None:
        out["s_check"] = s_check
    return out


def _stable_payload(
    spec: dict,
    *,
    n=None,
    k=None,
    d_exact=None,
    d_lower=None,
    d_upper=None,
    generator=None,
    optimal=None,
    certificates=(),
    family=None,
    timings=None,
) -> dict:
    return {
        "spec": spec,
        "n": _jint(n),
        "k": _jint(k),
        "d_exact": d_exact,
        "d_lower": d_lower,
        "d_upper": d_upper,
        "generator": generator,
        "optimal": optimal,
        "certificates": list(certificates),
        "family": family,
        "timings": dict(timings or {}),
    }


def _certs_from_report(ctx, rep: codes.CodeReport) -> list[dict]:
    if rep.certificate is None:
        return []
    return [{"type": "codeword", **rep.certificate.to_json(ctx)}]


def _payload_from_report(spec: dict, ctx, rep: codes.CodeReport,
                         family=None, extra_certs=()) -> dict:
    return _stable_payload(
        spec,
        n=rep.n,
        k=rep.k,
        d_exact=rep.d_exact,
        d_lower=rep.d_lower,
        d_upper=rep.d_upper,
        generator=str(rep.generator),
        optimal=rep.optimal,
        certificates=list(extra_certs) + _certs_from_report(ctx, rep),
        family=family,
        timings=rep.timings,
    )


# --------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    ctx = get_field(args.m, args.modulus)
    spec = codes.CodeSpec(ctx, args.e, with_s_check=args.s, force=args.force)
    g = codes.generator_polynomial(spec)
    n, k = ctx.n, ctx.n - g.degree
    if args.format == "json":
        _emit_json(_stable_payload(
            _spec_dict("construct", ctx, e=args.e, s_check=args.s),
            n=n, k=k, generator=str(g),
        ))
    else:
        print(f"modulus: {ctx.modulus}")
        print(f"generator: {g}")
        print(f"[n, k] = [{n}, {k}]")
        if not spec.hypotheses_ok:
            print("warning: construction hypotheses violated; parameters are not claimed")
    return 0


def cmd_verify(args) -> int:
    fam = families.family_from_tag(args.family)
    rep, verdict = families.verify_claim(
        fam, args.m, budget=args.budget, workers=args.workers, modulus=args.modulus,
    )
    ctx = get_field(args.m, args.modulus)
    check_certs = [
        {"type": "check", "name": c.name, "ok": c.ok, "detail": c.detail}
        for c in verdict.checks
    ]
    family_value = {
        "tag": verdict.family,
        "status": verdict.status,
        "passed": verdict.passed,
        "claimed": list(verdict.claimed),
    }
    if args.format == "json":
        spec = _spec_dict("verify", ctx, e=verdict.e, s_check=verdict.with_s_check)
        if rep is not None:
            _emit_json(_payload_from_report(spec, ctx, rep,
                                            family=family_value,
                                            extra_certs=check_certs))
        else:
            _emit_json(_stable_payload(
                spec,
                n=verdict.claimed_n, k=verdict.claimed_k,
                certificates=check_certs, family=family_value,
            ))
    else:
        print(f"family: {verdict.family}  m={verdict.m}  e={verdict.e}"
              f" (coset leader {verdict.e_coset_leader})")
        print(f"modulus: {ctx.modulus}")
        print(f"claim: [{verdict.claimed_n}, {verdict.claimed_k}, {verdict.claimed_d}]")
        for c in verdict.checks:
            mark = "ok  " if c.ok else "FAIL"
            print(f"  {mark} {c.name}: {c.detail}")
        if rep is not None:
            print(f"observed: [{rep.n}, {rep.k}, {rep.d_exact}]  optimal={rep.optimal}")
        for note in verdict.notes:
            print(f"note: {note}")
        print(f"status: {verdict.status}")
        print("PASS" if verdict.passed else
              ("UNRESOLVED (budget)" if verdict.passed is None else "FAIL"))
    if verdict.passed is None:
        return 3
    return 0 if verdict.passed else 1


def cmd_factor(args) -> int:
    if args.corpus:
        checks = corpus.run_corpus()
        failures = 0
        for c in checks:
            if c.ok:
                print(f"ok   {c.label}")
            else:
                failures += 1
                print(f"FAIL {c.label}: computed {c.computed}, expected {c.expected}")
        print(f"{len(checks) - failures}/{len(checks)} corpus checks passed")
        return 0 if failures == 0 else 1
    if args.poly is None:
        print("error: provide a polynomial or --corpus", file=sys.stderr)
        return 2
    print(factorize(parse_poly(args.poly)))
    return 0


def cmd_coset(args) -> int:
    c = coset_of(args.m, args.e)
    if args.format == "json":
        _emit_json({
            "m": args.m,
            "e": args.e,
            "modulus": c.modulus,
            "leader": c.leader,
            "size": c.size,
            "members": list(c.members),
        })
    else:
        print(f"C_{args.e} mod {c.modulus}: leader {c.leader}, size {c.size}")
        print("members: " + " ".join(str(j) for j in c.members))
    return 0


def cmd_minpoly(args) -> int:
    ctx = get_field(args.m, args.modulus)
    p = codes.minimal_polynomial(ctx, args.e)
    if args.format == "json":
        _emit_json({
            "m": args.m,
            "e": args.e,
            "modulus": str(ctx.modulus),
            "minpoly": str(p),
            "degree": p.degree,
        })
    else:
        print(f"modulus: {ctx.modulus}")
        print(f"m_{args.e}: {p}")
    return 0


def cmd_spectrum(args) -> int:
    ctx = get_field(args.m, args.modulus)
    spec = planar.differential_spectrum(ctx, args.r)
    fam = planar.known_pn_family(args.m, args.r)
    verdict = "PN" if spec.is_pn else ("APN" if spec.is_apn else "neither")
    if args.format == "json":
        _emit_json({
            "m": args.m,
            "r": args.r,
            "modulus": str(ctx.modulus),
            "uniformity": spec.max_count,
            "verdict": verdict,
            "histogram": {str(c): f for c, f in spec.histogram},
            "known_family": None if fam is None else {"kind": fam.kind, "h": fam.h},
        })
    else:
        print(f"x^{args.r} on GF(3^{args.m}), modulus {ctx.modulus}")
        print(f"differential uniformity: {spec.max_count} ({verdict})")
        print("histogram (solutions: pairs): "
              + ", ".join(f"{c}: {f}" for c, f in spec.histogram))
        if fam is not None:
            h = "" if fam.h is None else f", h={fam.h}"
            print(f"known planar family: {fam.kind}{h}")
    return 0


def cmd_conditions(args) -> int:
    ctx = get_field(args.m, args.modulus)
    v = check_conditions(ctx, args.e)
    if args.format == "json":
        _emit_json({
            "m": args.m,
            "e": args.e,
            "modulus": str(ctx.modulus),
            "c1": v.c1,
            "c2_solution_count": v.c2_solution_count,
            "c2_only_solution_one": v.c2_only_solution_one,
            "c3_solution_count": v.c3_solution_count,
            "c3_only_solution_zero": v.c3_only_solution_zero,
            "passed": v.passed,
        })
    else:
        print(f"e={args.e} over GF(3^{args.m}), modulus {ctx.modulus}")
        print(f"C1 (e even): {'ok' if v.c1 else 'FAIL'}")
        print(f"C2 ((x+1)^e - x^e = 1): {v.c2_solution_count} solution(s),"
              f" {'only x=1' if v.c2_only_solution_one else 'FAIL'}")
        print(f"C3 ((x+1)^e - x^e = -1): {v.c3_solution_count} solution(s),"
              f" {'only x=0' if v.c3_only_solution_zero else 'FAIL'}")
        print("PASS" if v.passed else "FAIL")
    return 0 if v.passed else 1


def cmd_survey(args) -> int:
    budget = math.inf if args.force else args.budget
    rows = families.survey(
        args.m, args.s,
        budget=budget, workers=args.workers, modulus=args.modulus,
        optimal_only=not args.all,
    )
    ctx = get_field(args.m, args.modulus)
    if args.format == "json":
        payload = []
        for row in rows:
            spec = _spec_dict("survey", ctx, e=row.e, s_check=args.s)
            payload.append(_payload_from_report(
                spec, ctx, row.report,
                family={"tags": list(row.families)},
            ))
        _emit_json(payload)
    else:
        kind = "C(1,e,s)" if args.s else "C(1,e)"
        scope = "rows" if args.all else "optimal rows"
        print(f"survey of {kind}, m={args.m}, n={ctx.n}, modulus {ctx.modulus}:"
              f" {len(rows)} {scope}")
        for row in rows:
            rep = row.report
            d = rep.d_exact if rep.d_exact is not None else f">={rep.d_lower}"
            tags = f"  families: {', '.join(row.families)}" if row.families else ""
            print(f"e={row.e:<6} [{rep.n}, {rep.k}, {d}]"
                  f"  optimal={rep.optimal}{tags}"
                  f"  coset: {' '.join(str(j) for j in row.coset)}")
    return 0


def cmd_report(args) -> int:
    from . import report as report_mod  # deferred: pulls in matplotlib

    budget = math.inf if args.force else args.budget
    paths = report_mod.write_report(
        args.m, args.s, args.out,
        budget=budget, workers=args.workers, modulus=args.modulus,
    )
    if args.format == "json":
        _emit_json({
            "csv": str(paths.csv),
            "figures": [str(p) for p in paths.figures],
        })
    else:
        print(f"wrote {paths.csv}")
        for p in paths.figures:
            print(f"wrote {p}")
    return 0


# --------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trit-codes",
        description="Ternary cyclic codes with minimum distance four and five.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    common.add_argument("--modulus", default=None,
                        help="defining polynomial override, e.g. 'x^5+2x+1'")
    common.add_argument("--budget", type=float, default=None,
                        help="search budget in cells (default from TRIT_CODES_BUDGET)")
    common.add_argument("--workers", type=int, default=None,
                        help="parallel workers for searches; output is independent of N")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="generator polynomial and [n, k] of C(1,e) or C(1,e,s)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-e", type=int, required=True)
    p.add_argument("--s", action="store_true", help="include the coset C_s, s = (3^m-1)/2")
    p.add_argument("--force", action="store_true",
                   help="build the generator even when hypotheses fail")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", parents=[common],
                       help="re-derive one cataloged family claim at a concrete m")
    p.add_argument("--family", required=True, help="family tag, e.g. OP160 or D5-nonAPN-t3")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("factor", parents=[common],
                       help="canonical factorization over GF(3)")
    p.add_argument("poly", nargs="?", default=None)
    p.add_argument("--corpus", action="store_true",
                   help="replay the recorded factorization corpus instead")
    p.set_defaults(fn=cmd_factor)

    p = sub.add_parser("coset", parents=[common], help="3-cyclotomic coset of e mod 3^m-1")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-e", type=int, required=True)
    p.set_defaults(fn=cmd_coset)

    p = sub.add_parser("minpoly", parents=[common],
                       help="minimal polynomial of alpha^e over GF(3)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-e", type=int, required=True)
    p.set_defaults(fn=cmd_minpoly)

    p = sub.add_parser("spectrum", parents=[common],
                       help="differential spectrum of x^r on GF(3^m)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("conditions", parents=[common],
                       help="exhaustive C1/C2/C3 check for an exponent")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-e", type=int, required=True)
    p.set_defaults(fn=cmd_conditions)

    p = sub.add_parser("survey", parents=[common],
                       help="analyze every admissible exponent class at one m")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--s", action="store_true")
    p.add_argument("--all", action="store_true",
                   help="include non-optimal rows (default: optimal only)")
    p.add_argument("--force", action="store_true",
                   help="ignore the search budget")
    p.set_defaults(fn=cmd_survey)

    p = sub.add_parser("report", parents=[common],
                       help="survey + CSV + rendered figures in a directory")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--s", action="store_true")
    p.add_argument("-o", "--out", default="trit-report",
                   help="output directory (default ./trit-report)")
    p.add_argument("--force", action="store_true",
                   help="ignore the search budget")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotApplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError:
        raise
    except (TritCodesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
