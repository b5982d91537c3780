"""Command-line interface.

Subcommands:
  ss-test          decide supersingularity of a curve
  zeta             Weil polynomial (r, s) and Jacobian order of a
                   supersingular curve
  crypto-exp       cryptographic exponent c_A of a supersingular Weil
                   polynomial
  twists           twist catalogue of a family over a field
  verify-appendix  verify the atlas of twist rows against the counting oracle
  scan             enumerate curves over a field and report the
                   supersingular ones

Exit codes: 0 success, 1 usage error, 2 domain error (the error name is
printed on a single line).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crypto, families, ff, poly, zeta
from .curve import (OddCurve, Char2Curve, CurveError, parse_curve,
                    format_curve, weierstrass_shape, shape_str,
                    rk2_from_shape)
from .poly import Polynomial

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

_DOMAIN_ERRORS = (zeta.ZetaError, crypto.CryptoError, families.FamilyError,
                  CurveError, poly.PolyError, ff.FieldError)


class _UsageError(Exception):
    pass


def _ctx_from(args):
    return ff.ctx_new(args.p, args.n)


def _curve_from(args, ctx):
    if not args.curve:
        raise _UsageError("--curve is required")
    return parse_curve(args.curve, ctx)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_ss_test(args):
    ctx = _ctx_from(args)
    C = _curve_from(args, ctx)
    ss = zeta.is_supersingular(C)
    _emit(args, {"supersingular": ss},
          ["supersingular" if ss else "not supersingular"])
    return EXIT_OK if ss else EXIT_DOMAIN


def _zeta_payload(C, budget):
    w, method = zeta.weil_polynomial(C, budget=budget, with_method=True)
    if isinstance(C, OddCurve):
        shape = weierstrass_shape(C)
        rk2 = rk2_from_shape(shape)
    else:
        shape = zeta.Char2Invariants(C).shape
        rk2 = None
    return {
        "supersingular": True,
        "r": w.r,
        "s": w.s,
        "q": w.q,
        "weil": w.poly_str(),
        "J_order": w.jacobian_order(),
        "rk2": rk2,
        "shape": shape_str(shape),
        "method": method,
    }


def _cmd_zeta(args):
    ctx = _ctx_from(args)
    C = _curve_from(args, ctx)
    payload = _zeta_payload(C, args.budget)
    _emit(args, payload, [
        "curve:   %s" % format_curve(C),
        "weil:    %s" % payload["weil"],
        "(r, s):  (%d, %d)  over q=%d" % (payload["r"], payload["s"],
                                          payload["q"]),
        "|J(k)|:  %d" % payload["J_order"],
        "shape:   %s   rk2: %s" % (payload["shape"], payload["rk2"]),
        "method:  %s" % payload["method"],
    ])
    return EXIT_OK


def _cmd_crypto_exp(args):
    ctx = _ctx_from(args)
    q = ctx.q
    if args.curve:
        C = parse_curve(args.curve, ctx)
        w = zeta.weil_polynomial(C, budget=args.budget)
    elif args.r is not None and args.s is not None:
        w = zeta.WeilCoeffs(args.r, args.s, q)
    else:
        raise _UsageError("give either --curve or both --r and --s")
    c = crypto.crypto_exponent(w, ctx.p)
    report = crypto.verify_exponent(w, ctx.p, c)
    size = crypto.embedding_field_size(w, ctx.p)
    payload = {
        "c_A": str(c),
        "embedding_field_bits": size.bit_length(),
        "large_primes": report["large_primes"],
        "verified": report["status"] == "verified",
    }
    _emit(args, payload, [
        "c_A:                  %s" % c,
        "embedding field bits: %d" % payload["embedding_field_bits"],
        "large primes:         %s" % (payload["large_primes"] or "none > 5"),
        "verified:             %s" % payload["verified"],
    ])
    return EXIT_OK


def _family_tag(args, ctx):
    kind = args.family
    if kind not in families.KINDS:
        raise _UsageError("unknown family %r (choose from %s)"
                          % (kind, ", ".join(families.KINDS)))
    if kind in ("d8", "d12", "biquadratic"):
        tags = families.find_ss_parameters(kind, ctx, args.budget
                                           or families.PARAM_BUDGET)
        if not tags:
            raise families.NoParameterFound(
                "no supersingular %s member over GF(%d^%d)"
                % (kind, ctx.p, ctx.n))
        return tags[0]
    return families.FamilyTag(kind)


def _cmd_twists(args):
    ctx = _ctx_from(args)
    tag = _family_tag(args, ctx)
    cat = families.twist_catalogue(tag, ctx)
    payload = {
        "family": cat["family"],
        "q": cat["q"],
        "anchored": cat["anchored"],
        "twist_count": cat["twist_count"],
        "twist_classes": cat["twist_classes"],
        "entries": [{
            "table": e["table"], "row": e["row"], "label": e["label"],
            "note": e["note"], "r": e["weil"].r, "s": e["weil"].s,
            "self_dual": e["self_dual"], "aut_order": e["aut_order"],
            "method": e["method"],
        } for e in cat["entries"]],
    }
    lines = ["family %s over GF(%d^%d): %d twists in %d classes%s" % (
        cat["family"], ctx.p, ctx.n, cat["twist_count"],
        cat["twist_classes"], "" if cat["anchored"] else " (no base twist)")]
    for e in payload["entries"]:
        lines.append("  t%-2d r%d  (r,s)=(%d,%d)  sd=%-5s |Aut|=%-3d %s  %s"
                     % (e["table"], e["row"], e["r"], e["s"],
                        e["self_dual"], e["aut_order"], e["method"],
                        e["note"]))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify_appendix(args):
    try:
        plist = [int(t) for t in args.p_list.split(",") if t]
    except ValueError:
        raise _UsageError("--p-list must be a comma-separated integer list")
    reports = []
    for p in plist:
        for n in (1, 2):
            q = p ** n
            if q > args.max_q:
                continue
            ctx = ff.ctx_new(p, n)
            for rep in families.atlas_report(ctx, tables=args.tables):
                reports.append({
                    "table": rep["table"], "row": rep["row"],
                    "p": rep["p"], "n": rep["n"],
                    "equation": rep["label"], "note": rep["note"],
                    "predicted": {"rs": rep["predicted_rs"],
                                  "sd": rep["predicted_sd"],
                                  "aut": rep["predicted_aut"]},
                    "oracle": {"rs": list(rep["oracle_rs"]),
                               "sd": rep["oracle_sd"],
                               "aut": rep["oracle_aut"]},
                    "congruence": rep["congruence_ok"],
                    "pass": rep["pass"],
                })
    ok = sum(1 for r in reports if r["pass"])
    lines = []
    for r in reports:
        lines.append("t%-2d r%d GF(%d^%d) oracle(%d,%d) %s %s" % (
            r["table"], r["row"], r["p"], r["n"],
            r["oracle"]["rs"][0], r["oracle"]["rs"][1],
            "PASS" if r["pass"] else "FAIL", r["equation"]))
    lines.append("%d/%d rows pass" % (ok, len(reports)))
    _emit(args, reports, lines)
    return EXIT_OK if ok == len(reports) else EXIT_DOMAIN


def _scan_odd(ctx, degree, budget):
    """All supersingular y^2 = f(x), f monic separable of the degree."""
    q = ctx.q
    total = q ** degree
    import numpy as np
    from . import fast
    found = []
    if fast.have_tables(ctx) and total <= 2 ** 24:
        idx = np.arange(total, dtype=np.int64)
        arrays = []
        for j in range(degree):
            arrays.append((idx // q ** j) % q)
        one = np.full(total, ctx.one.index(), dtype=np.int64)
        coeffs = arrays + [one]
        mask = fast.supersingular_mask(ctx, coeffs)
        candidates = np.nonzero(mask)[0]
    else:
        candidates = range(total)
    for j in candidates:
        j = int(j)
        cs = [ctx.from_index((j // q ** i) % q) for i in range(degree)]
        cs.append(ctx.one)
        f = Polynomial(ctx, cs)
        try:
            C = OddCurve(f)
        except CurveError:
            continue
        if not zeta.is_supersingular(C):
            continue
        found.append((C, _zeta_payload(C, budget)))
    return found


def _scan_char2(ctx, budget):
    found = []
    for a in ctx.elements():
        if a.is_zero():
            continue
        for b in ctx.elements():
            for c in ctx.elements():
                C = Char2Curve(ctx, a, b, c, ctx.zero)
                found.append((C, _zeta_payload(C, budget)))
    return found


def _cmd_scan(args):
    ctx = _ctx_from(args)
    if ctx.p == 2:
        found = _scan_char2(ctx, args.budget)
    else:
        if args.degree not in (5, 6):
            raise _UsageError("--degree must be 5 or 6 for odd p")
        found = _scan_odd(ctx, args.degree, args.budget)
    payload = []
    lines = []
    for C, z in found:
        entry = dict(z)
        entry["curve"] = format_curve(C)
        payload.append(entry)
        lines.append("%-40s (r,s)=(%d,%d) %s" % (
            entry["curve"], z["r"], z["s"], z["method"]))
    lines.append("%d supersingular curves" % len(found))
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="ssgenus2",
        description="Supersingular genus-2 curves: zeta functions, twists "
                    "and cryptographic exponents.")
    sub = top.add_subparsers(dest="command")

    def common(sp, need_n=True):
        sp.add_argument("--p", type=int, required=True,
                        help="field characteristic")
        if need_n:
            sp.add_argument("--n", type=int, default=1,
                            help="extension degree (default 1)")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        sp.add_argument("--budget", type=int, default=None,
                        help="point-counting budget (max field size)")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized checks")

    sp = sub.add_parser("ss-test", help="decide supersingularity")
    common(sp)
    sp.add_argument("--curve", help='curve string, e.g. "y^2=x^5-1"')

    sp = sub.add_parser("zeta", help="Weil polynomial of a supersingular "
                                     "curve")
    common(sp)
    sp.add_argument("--curve", help='curve string, e.g. "y^2=x^5-1"')

    sp = sub.add_parser("crypto-exp", help="cryptographic exponent c_A")
    common(sp)
    sp.add_argument("--curve", help="curve string (alternative to --r/--s)")
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--s", type=int, default=None)

    sp = sub.add_parser("twists", help="twist catalogue of a family")
    common(sp)
    sp.add_argument("--family", required=True,
                    help="one of: %s" % ", ".join(families.KINDS))

    sp = sub.add_parser("verify-appendix",
                        help="verify the twist atlas against the oracle")
    sp.add_argument("--p-list", default="3,5,7,11,13,17,19,23",
                    help="comma-separated primes")
    sp.add_argument("--max-q", type=int, default=4096,
                    help="largest base-field size")
    sp.add_argument("--tables", type=int, nargs="*", default=None,
                    help="restrict to these table ids")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("scan", help="enumerate supersingular curves")
    common(sp)
    sp.add_argument("--degree", type=int, default=5,
                    help="5 or 6 (odd characteristic)")

    return top


_COMMANDS = {
    "ss-test": _cmd_ss_test,
    "zeta": _cmd_zeta,
    "crypto-exp": _cmd_crypto_exp,
    "twists": _cmd_twists,
    "verify-appendix": _cmd_verify_appendix,
    "scan": _cmd_scan,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not args.command:
        parser.print_usage()
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except _DOMAIN_ERRORS as exc:
        print(type(exc).__name__)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
