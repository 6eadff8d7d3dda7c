"""Command-line front end: identity verification sweeps, exact value
tables, closed-form polynomials and polynomiality fits.

Exit codes: 0 all checks passed, 1 at least one FAIL, 2 bad usage or
invalid parameters (nothing is computed in that case).
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import identities
from .exactnum import fmt_rat
from .identities import (
    check_cor_2_2,
    check_cor_3_2,
    check_cor_4_2,
    check_eigen,
    check_leibniz_step,
    check_lemma_2_1,
    check_lemma_4_1,
    check_lemma_5_1,
    check_prop_3_1,
    check_remark_2_3,
    check_thm_1_1,
    ebeta_closed_poly,
    fit_polynomiality,
    stan_lhs,
)
from .partitions import enumerate_partitions
from .polyring import param, upoly_coeffs, upoly_eval

IDENTITIES = (
    "eigen",
    "leibniz",
    "lemma2.1",
    "cor2.2",
    "remark2.3",
    "prop3.1",
    "cor3.2",
    "thm1.1",
    "lemma4.1",
    "cor4.2",
    "lemma5.1",
    "all",
)

CSV_COLUMNS = ["identity", "params", "status", "witness", "elapsed_ms"]


class UsageError(Exception):
    pass


def parse_range(text):
    """Inclusive 'lo..hi' range, or a single integer."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError("bad range %r" % text)
        if hi < lo:
            raise UsageError("empty range %r" % text)
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError("bad range %r" % text)


def parse_ks(text):
    try:
        ks = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError("bad ks list %r" % text)
    if any(k < 0 for k in ks):
        raise UsageError("ks must be nonnegative")
    return ks


def _emit(writer, fmt, record):
    is_value = "value" in record
    if fmt == "json":
        writer.write(json.dumps(record, separators=(", ", ": ")) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        cols = ["identity", "params", "value"] if is_value else CSV_COLUMNS
        row = []
        for col in cols:
            v = record.get(col)
            row.append(json.dumps(v) if isinstance(v, (dict, list)) else v)
        csv.writer(buf).writerow(row)
        writer.write(buf.getvalue())
        return
    params = " ".join(
        "%s=%s" % (k, json.dumps(v) if isinstance(v, (dict, list)) else v)
        for k, v in record.get("params", {}).items()
    )
    if is_value:
        line = "%s %s -> %s" % (record.get("identity", ""), params, record["value"])
    else:
        line = "%s %s %s" % (
            record.get("status", ""),
            record.get("identity", ""),
            params,
        )
        if record.get("witness"):
            line += "  [%s]" % record["witness"]
    writer.write(line.rstrip() + "\n")


def _sweep(identity, args, seed):
    """Yield VerificationReports for one identity over its ranges."""
    ns = parse_range(args.n) if args.n else None
    us = parse_range(args.u) if args.u else None
    betas = parse_range(args.beta) if args.beta else None
    alphas = parse_range(args.alpha) if args.alpha else None

    if identity == "eigen":
        for theta in (1, 2, 3):
            max_n, max_size = (4, 5) if theta == 1 else (3, 4)
            for n in ns or range(1, max_n + 1):
                if n > max_n:
                    continue
                for size in range(max_size + 1):
                    for lam in enumerate_partitions(size):
                        if lam.length <= n:
                            yield check_eigen(n, lam, theta)
    elif identity == "leibniz":
        for n in ns or range(1, 5):
            yield check_leibniz_step(n)
    elif identity == "lemma2.1":
        for n in ns or range(1, 5):
            yield check_lemma_2_1(n)
    elif identity == "cor2.2":
        for n in ns or range(1, 7):
            for lam in enumerate_partitions(n):
                for u in us or range(0, 4):
                    yield check_cor_2_2(lam, u)
    elif identity == "remark2.3":
        yield check_remark_2_3()
    elif identity == "prop3.1":
        yield check_prop_3_1(2)
        for n in ns or range(3, 7):
            if n < 3:
                yield check_prop_3_1(n)
                continue
            for z in identities.prop_3_1_samples(n, 100, seed):
                yield check_prop_3_1(n, z)
    elif identity == "cor3.2":
        for n in ns or range(1, 7):
            for lam in enumerate_partitions(n):
                yield check_cor_3_2(lam, tuple(us) if us else (0, 1, 2, 5))
    elif identity == "thm1.1":
        for n, m, d in ((1, 1, 6), (2, 1, 4), (2, 2, 4)):
            yield check_thm_1_1(n, m, d)
    elif identity == "lemma4.1":
        for n in ns or range(1, 4):
            for k in range(n + 1):
                yield check_lemma_4_1(n, k)
    elif identity == "cor4.2":
        for n in ns or range(1, 9):
            for beta in betas or range(0, 4):
                yield check_cor_4_2(n, beta)
    elif identity == "lemma5.1":
        for n in ns or range(1, 6):
            for alpha in alphas or range(0, min(n, 3) + 1):
                for beta in betas or range(0, min(n, 3) + 1):
                    if alpha <= n and beta <= n:
                        yield check_lemma_5_1(n, alpha, beta)
    else:
        raise UsageError("unknown identity %r" % identity)


def cmd_verify(args, out):
    if args.identity not in IDENTITIES:
        raise UsageError(
            "unknown identity %r; choose from %s" % (args.identity, ", ".join(IDENTITIES))
        )
    seed = _seed(args)
    names = [i for i in IDENTITIES if i != "all"] if args.identity == "all" else [
        args.identity
    ]
    any_fail = False
    for name in names:
        for report in _sweep(name, args, seed):
            _emit(out, args.format, report.to_json())
            any_fail = any_fail or not report.passed
    return 1 if any_fail else 0


def cmd_table(args, out):
    if args.kind == "alambda":
        if not args.n or not args.u:
            raise UsageError("table alambda requires --n and --u")
        ns = parse_range(args.n)
        us = parse_range(args.u)
        for n in ns:
            for lam in enumerate_partitions(n):
                for u in us:
                    from .partitions import a_lambda_poly

                    val = upoly_eval(a_lambda_poly(lam, n), param("u"), u)
                    _emit(
                        out,
                        args.format,
                        {
                            "identity": "alambda",
                            "params": {"lambda": lam.to_json(), "n": n, "u": u},
                            "value": fmt_rat(val),
                        },
                    )
        return 0
    if args.kind == "stan":
        if not args.ks or not args.n:
            raise UsageError("table stan requires --ks and --n")
        ks = parse_ks(args.ks)
        for n in parse_range(args.n):
            val = stan_lhs(n, ks)
            _emit(
                out,
                args.format,
                {
                    "identity": "stan",
                    "params": {"n": n, "ks": list(ks)},
                    "value": fmt_rat(val),
                },
            )
        return 0
    raise UsageError("unknown table kind %r" % args.kind)


def _format_upoly(p, v, name="n"):
    coeffs = upoly_coeffs(p, v) if p.terms else [Fraction(0)]
    bits = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            bits.append(fmt_rat(c))
        elif i == 1:
            bits.append("%s*%s" % (fmt_rat(c), name))
        else:
            bits.append("%s*%s^%d" % (fmt_rat(c), name, i))
    return " + ".join(bits) if bits else "0"


def cmd_poly(args, out):
    if args.beta is None:
        raise UsageError("poly requires --beta")
    betas = parse_range(args.beta)
    if any(b < 0 or b > 6 for b in betas):
        raise UsageError("beta must be in 0..6")
    v = param("n")
    for beta in betas:
        p = ebeta_closed_poly(beta, v)
        record = {
            "identity": "poly",
            "params": {"beta": beta},
            "value": _format_upoly(p, v),
        }
        if beta <= 4:
            combo = identities.binomial_combination(p, v, beta)
            record["binomial_combination"] = " + ".join(
                "%s*C(n+%d,%d)" % (fmt_rat(g), o, beta + o)
                for o, g in enumerate(combo)
                if g
            )
        _emit(out, args.format, record)
    return 0


def cmd_stan(args, out):
    if not args.ks or not args.n:
        raise UsageError("stan requires --ks and --n")
    args.kind = "stan"
    return cmd_table(args, out)


def cmd_fit(args, out):
    if not args.ks or not args.train or not args.test:
        raise UsageError("fit requires --ks, --train and --test")
    ks = parse_ks(args.ks)
    train = parse_range(args.train)
    test = parse_range(args.test)
    try:
        result = fit_polynomiality(ks, train, test)
    except ValueError as exc:
        raise UsageError(str(exc))
    record = result.to_json()
    record.update(
        {"identity": "fit", "params": {"ks": list(ks)}, "elapsed_ms": 0}
    )
    record.setdefault("witness", None)
    _emit(out, args.format, record)
    return 0 if result.passed else 1


def _seed(args):
    env = os.environ.get("SHIFTED_HOOKS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError("SHIFTED_HOOKS_SEED must be an integer")
    return args.seed


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shifted-hooks",
        description="Exact verification of hook-length / shifted-part identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", help="range lo..hi or single value")
        p.add_argument("--u", help="range lo..hi or single value")
        p.add_argument("--beta", help="range lo..hi or single value")
        p.add_argument("--alpha", help="range lo..hi or single value")
        p.add_argument("--ks", help="comma-separated k list, e.g. 2,1")
        p.add_argument("--train", help="training range lo..hi")
        p.add_argument("--test", help="test range lo..hi")
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="json"
        )
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--seed", type=int, default=0)

    pv = sub.add_parser("verify", help="run an identity verifier over ranges")
    pv.add_argument("identity", help="one of: %s" % ", ".join(IDENTITIES))
    common(pv)

    pt = sub.add_parser("table", help="exact value tables")
    pt.add_argument("kind", help="alambda or stan")
    common(pt)

    pp = sub.add_parser("poly", help="closed-form polynomials in n")
    common(pp)

    ps = sub.add_parser("stan", help="brute-force shifted-part averages")
    common(ps)

    pf = sub.add_parser("fit", help="interpolate-and-predict polynomiality")
    common(pf)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    handlers = {
        "verify": cmd_verify,
        "table": cmd_table,
        "poly": cmd_poly,
        "stan": cmd_stan,
        "fit": cmd_fit,
    }
    try:
        return handlers[args.command](args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
