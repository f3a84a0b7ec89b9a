"""Command-line front end.

Exit status: 0 when every check passes, 1 when a claim or a verification
fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .coherence import check_wrc, witness_round_trip
from .congruences import (
    PairSet,
    annihilator,
    annihilator_generators,
    check_fre,
    fre_verdict,
    generate_congruence,
    verify_xsequence,
    _bounded_generators,
)
from .constructions import DirectProduct, MonoidFreeProduct, SemigroupFreeProduct
from .core import DEFAULT_BOUND, AlgebraError
from .dsl import DslError, format_expression, parse_expression, build
from .gallery import BUILDERS, run_gallery
from .ideals import check_rih, intersect_principal, rih_verdict, right_ideal_generators
from .mfp import MFP_BOUND, mfp_context, mfp_witness
from .randomgen import random_semigroups
from .serialize import (
    FormatError,
    json_line,
    read_certificate_file,
    report_record,
    report_text,
    write_certificates,
)
from .witnesses import (
    FREE_PRODUCT_BOUND,
    adjoin_zero_witness,
    product_witness,
    regular_partner,
    regular_witness,
    sfp_witness,
)

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Out:
    """Collects records and prints them as text or json lines."""

    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, record, text):
        if self.fmt == "json-lines":
            print(json_line(record), file=self.stream)
        else:
            print(text, file=self.stream)


def _target(args):
    try:
        node = parse_expression(args.expr)
        return format_expression(node), build(node)
    except DslError as exc:
        raise UsageError("bad expression: %s" % exc) from None


def _element(S, text):
    try:
        x = S.parse(text)
    except (AlgebraError, KeyError, ValueError) as exc:
        raise UsageError("bad element %r: %s" % (text, exc)) from None
    if not S.contains(x):
        raise UsageError("%r is not an element of %s" % (text, S.description))
    return x


def _pairs_json(S, pairs):
    return [[S.format(p), S.format(q)] for p, q in pairs]


# ---------------------------------------------------------------------------
# verbs


def cmd_mul(args, out):
    _, S = _target(args)
    if not args.elements:
        raise UsageError("mul needs at least one element")
    xs = [_element(S, e) for e in args.elements]
    acc = xs[0]
    for x in xs[1:]:
        acc = S.mul(acc, x)
    out.emit({"expression": args.expr, "factors": args.elements, "product": S.format(acc)}, S.format(acc))
    return OK


def cmd_ideal_intersect(args, out):
    _, S = _target(args)
    a, b = _element(S, args.a), _element(S, args.b)
    bound = args.bound or DEFAULT_BOUND
    ideal = intersect_principal(S, a, b, bound)
    exact = "exact" if ideal.exact else "bounded"
    rec = {"a": args.a, "b": args.b, "generators": [S.format(g) for g in ideal.generators],
           "exactness": exact, "bound": ideal.bound}
    text = "%s S^1 ∩ %s S^1 = %s S^1  (%s%s)" % (
        args.a, args.b, ideal.format(), exact, "" if ideal.bound is None else ", grade <= %d" % ideal.bound)
    out.emit(rec, text)
    return OK


def _pair_args(S, raw):
    pairs = []
    for p, q in raw or ():
        pairs.append((_element(S, p), _element(S, q)))
    return PairSet(S, pairs)


def cmd_cong_generate(args, out):
    _, S = _target(args)
    if not S.finite:
        raise UsageError("cong-generate needs a finite semigroup")
    X = _pair_args(S, args.pair)
    cong = generate_congruence(S, X)
    classes = [[S.format(x) for x in cls] for cls in cong.classes()]
    text = "\n".join("{" + ", ".join(c) + "}" for c in classes)
    out.emit({"pairs": _pairs_json(S, X.generators()), "classes": classes, "exactness": "exact"}, text)
    return OK


def cmd_annihilator(args, out):
    _, S = _target(args)
    a = _element(S, args.a)
    if S.finite:
        X, exact, bound = annihilator_generators(S, a), True, None
    else:
        bound = args.bound or DEFAULT_BOUND
        X, exact = _bounded_generators(S, annihilator(S, a), bound), False
    rec = {"a": args.a, "generators": _pairs_json(S, X.generators()),
           "exactness": "exact" if exact else "bounded", "bound": bound}
    text = "r(%s) = ⟨%s⟩  (%s)" % (args.a, X.format()[1:-1], "exact" if exact else "bounded, grade <= %d" % bound)
    out.emit(rec, text)
    return OK


def _check_one(prop, S, bound, out, label):
    if prop == "rih":
        records = check_rih(S, bound)
        for r in records:
            rec = {"semigroup": label, "a": S.format(r.a), "b": S.format(r.b),
                   "generators": [S.format(g) for g in r.generators],
                   "exactness": "exact" if r.exact else "bounded", "bound": r.bound}
            out.emit(rec, "%s S^1 ∩ %s S^1 = {%s} S^1  %s" % (
                rec["a"], rec["b"], ", ".join(rec["generators"]), rec["exactness"]))
        verdict = rih_verdict(records)
        out.emit({"semigroup": label, "property": "rih", "verdict": verdict},
                 "RIH(%s): %s (%d incomparable pairs)" % (label, verdict, len(records)))
        return OK
    if prop == "fre":
        records = check_fre(S, bound)
        for r in records:
            rec = {"semigroup": label, "a": S.format(r.a), "generators": _pairs_json(S, r.generators.generators()),
                   "exactness": "exact" if r.exact else "bounded", "bound": r.bound, "evidence": r.evidence}
            out.emit(rec, "r(%s) = ⟨%s⟩  %s" % (rec["a"], r.generators.format()[1:-1], r.evidence))
        verdict = fre_verdict(records)
        out.emit({"semigroup": label, "property": "fre", "verdict": verdict},
                 "FRE(%s): %s" % (label, verdict))
        return OK
    report = check_wrc(S, bound)
    for k, (v, why) in sorted(report.conditions.items()):
        out.emit({"semigroup": label, "condition": k, "verdict": v, "reason": why},
                 "(%d) %s  %s" % (k, v, why))
    out.emit({"semigroup": label, "property": "wrc", "verdict": report.verdict},
             "WRC(%s): %s" % (label, report.verdict))
    return OK if report.consistent else FAIL


def cmd_check(args, out):
    bound = args.bound or DEFAULT_BOUND
    if args.expr is None:
        if args.seed is None:
            raise UsageError("check needs an expression or --seed for a random suite")
        status = OK
        for k, S in enumerate(random_semigroups(args.seed, args.count, args.max_order, monoid=args.monoid)):
            status = max(status, _check_one(args.property, S, bound, out, "random[%d] order %d" % (k, S.order)))
        return status
    label, S = _target(args)
    return _check_one(args.property, S, bound, out, label)


def _emit_report(out, report, S, args, expr=None):
    rec = report_record(report, S)
    out.emit(rec, report_text(report, S, None if args.all_certificates else 10))
    if args.out and report.generators is not None and expr is not None:
        with open(args.out, "w") as fh:
            fh.write(write_certificates(expr, S, report.generators, report.certificates))
    return OK if report.ok else FAIL


def cmd_witness(args, out):
    expr, S = _target(args)
    tag = args.tag
    if tag == "regular":
        if not S.finite:
            raise UsageError("the regular witness is checked on finite semigroups")
        a = _element(S, _need(args.a, "--a"))
        b = regular_partner(S, a)
        U = right_ideal_generators(S)[0]
        if b is None:
            out.emit({"tag": "regular", "verdict": "inapplicable"}, "%s is not regular" % args.a)
            return FAIL
        return _emit_report(out, regular_witness(S, a, b, U), S, args, expr)
    if tag == "product":
        if not isinstance(S, DirectProduct):
            raise UsageError("witness product needs a product(...) expression")
        a = _element(S, _need(args.a, "--a"))
        return _emit_report(out, product_witness(S.left, S.right, a[0], a[1]), S, args, expr)
    if tag == "sfp":
        if not isinstance(S, SemigroupFreeProduct):
            raise UsageError("witness sfp needs an sfp(...) expression")
        a = _element(S, _need(args.a, "--a"))
        report = sfp_witness(S, a, bound=args.bound or FREE_PRODUCT_BOUND, depth=args.depth)
        return _emit_report(out, report, S, args, expr)
    if tag == "mfp":
        if not isinstance(S, MonoidFreeProduct):
            raise UsageError("witness mfp needs an mfp(...) expression")
        x = _element(S, _need(args.x, "--x"))
        ctx = mfp_context(S, x, depth=args.depth)
        return _emit_report(out, mfp_witness(ctx, args.bound or MFP_BOUND), S, args, expr)
    if tag == "adjoin-zero":
        if not S.finite:
            raise UsageError("the adjoin-zero witness is checked on finite semigroups")
        report = adjoin_zero_witness(S)
        status = _emit_report(out, report, report.generators.S, args, "adjoin0(%s)" % expr)
        for part in report.parts:
            out.emit(report_record(part, part.generators.S), report_text(part, part.generators.S, 3))
        return status
    if tag == "round-trip":
        if not S.finite or S.identity is None:
            raise UsageError("the round trip needs a finite monoid")
        a = _element(S, _need(args.a, "--a"))
        rt = witness_round_trip(S, a)
        for rep in (rt.up, rt.down):
            out.emit(report_record(rep, rep.generators.S), report_text(rep, rep.generators.S, 3))
        return OK if rt.ok else FAIL
    raise UsageError("unknown witness %r" % tag)


def _need(value, flag):
    if value is None:
        raise UsageError("this witness needs %s" % flag)
    return value


def cmd_verify_seq(args, out):
    try:
        cf = read_certificate_file(args.file)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (args.file, exc.strerror)) from None
    status = OK
    for k, (cert, line) in enumerate(zip(cf.certificates, cf.lines), 1):
        v = verify_xsequence(cf.S, cf.X, cert)
        rec = {"certificate": k, "line": line, "ok": v.ok, "step": v.step, "reason": v.reason}
        if v:
            text = "certificate %d (line %d): ok, %d steps" % (k, line, len(cert))
        else:
            status = FAIL
            text = "certificate %d (line %d): fails at step %s: %s" % (k, line, v.step, v.reason)
        out.emit(rec, text)
    out.emit({"certificates": len(cf.certificates), "ok": status == OK},
             "%d certificate(s), %s" % (len(cf.certificates), "all valid" if status == OK else "FAILED"))
    return status


def cmd_gallery(args, out):
    names = args.fixtures or None
    if args.list:
        for name in BUILDERS:
            out.emit({"fixture": name}, name)
        return OK
    try:
        report = run_gallery(names, args.n)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for name, n, res in report.results:
        rec = {"fixture": name, "n": n, "claim": res.claim, "passed": res.passed,
               "evidence": res.evidence, "measure": res.measure}
        out.emit(rec, "%s %s n=%d %s: %s" % ("PASS" if res.passed else "FAIL", name, n, res.claim, res.evidence))
    for name, claim, ms, mono in report.growth:
        rec = {"fixture": name, "claim": claim, "measures": ms, "monotone": mono}
        out.emit(rec, "%s %s %s growth %s" % ("PASS" if mono else "FAIL", name, claim, ms))
    return OK if report.ok else FAIL


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, help="grade bound for infinite backends")
    common.add_argument("--depth", type=int, help="search depth for certificate searches")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--seed", type=int, help="seed for randomized suites")

    p = argparse.ArgumentParser(prog="wrcsemi", description="Right ideals and right congruences of semigroups.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("mul", parents=[common], help="multiply elements left to right")
    s.add_argument("expr")
    s.add_argument("elements", nargs="*")
    s.set_defaults(fn=cmd_mul)

    s = sub.add_parser("ideal-intersect", parents=[common], help="generators of aS^1 ∩ bS^1")
    s.add_argument("expr")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(fn=cmd_ideal_intersect)

    s = sub.add_parser("cong-generate", parents=[common], help="classes of the right congruence generated by pairs")
    s.add_argument("expr")
    s.add_argument("--pair", nargs=2, action="append", metavar=("P", "Q"))
    s.set_defaults(fn=cmd_cong_generate)

    s = sub.add_parser("annihilator", parents=[common], help="generating pairs of r(a)")
    s.add_argument("expr")
    s.add_argument("a")
    s.set_defaults(fn=cmd_annihilator)

    s = sub.add_parser("check", parents=[common], help="RIH, FRE or WRC report")
    s.add_argument("property", choices=("rih", "fre", "wrc"))
    s.add_argument("expr", nargs="?")
    s.add_argument("--count", type=int, default=10, help="random semigroups to check with --seed")
    s.add_argument("--max-order", type=int, default=6)
    s.add_argument("--monoid", action="store_true", help="random monoids only")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("witness", parents=[common], help="build and check a closure witness")
    s.add_argument("tag", choices=("regular", "product", "sfp", "mfp", "adjoin-zero", "round-trip"))
    s.add_argument("expr")
    s.add_argument("--a", help="the element whose annihilator is wanted")
    s.add_argument("--x", help="the element x for the monoid free product witness")
    s.add_argument("--out", help="write the generating set and certificates to this file")
    s.add_argument("--all-certificates", action="store_true", help="print every certificate")
    s.set_defaults(fn=cmd_witness)

    s = sub.add_parser("verify-seq", parents=[common], help="verify a certificate file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_verify_seq)

    s = sub.add_parser("gallery", parents=[common], help="run the counterexample fixtures")
    s.add_argument("fixtures", nargs="*")
    s.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    s.add_argument("--list", action="store_true")
    s.set_defaults(fn=cmd_gallery)
    return p


def main(argv=None):
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse binds an optional positional before later flags are seen
    if extra and args.verb == "check" and args.expr is None and len(extra) == 1 and not extra[0].startswith("-"):
        args.expr = extra[0]
    elif extra:
        parser.error("unrecognized arguments: %s" % " ".join(extra))
    out = Out(args.format)
    try:
        return args.fn(args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    except (AlgebraError, DslError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
