"""Text formats for certificates and reports.

A certificate file holds a ``semigroup:`` header (a construction
expression), a ``pairs:`` header listing the generating set, then one
certificate per line::

    semigroup: mfp(table("sl.tbl"), table("sl.tbl"))
    pairs: 1 z@1
    z@2 | 1 z@1 z@2 | z@1*z@2

Each middle segment is ``p q c``; a multiplier of ``1`` means no
multiplier.  Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .congruences import PairSet, XSequence
from .dsl import DslError, load


class FormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else "line %d: %s" % (line, message))


def format_xsequence(S, seq):
    parts = [S.format(seq.source)]
    parts += ["%s %s %s" % (S.format(p), S.format(q), S.format1(c)) for p, q, c in seq.steps]
    parts.append(S.format(seq.target))
    return " | ".join(parts)


def parse_xsequence(S, line, lineno=None):
    segs = [s.strip() for s in line.split("|")]
    if len(segs) < 2:
        raise FormatError("a certificate needs a source and a target", lineno)
    try:
        steps = []
        for k, seg in enumerate(segs[1:-1], 1):
            cells = seg.split()
            if len(cells) != 3:
                raise FormatError("step %d: expected 'p q c', got %r" % (k, seg), lineno)
            p, q, c = cells
            steps.append((S.parse(p), S.parse(q), S.parse1(c)))
        return XSequence(S.parse(segs[0]), S.parse(segs[-1]), steps)
    except FormatError:
        raise
    except (ValueError, KeyError) as exc:
        raise FormatError("bad element: %s" % exc, lineno) from None


def format_pairs(S, X):
    return " | ".join("%s %s" % (S.format(p), S.format(q)) for p, q in X.generators())


def parse_pairs(S, text, lineno=None):
    pairs = []
    for seg in text.split("|"):
        seg = seg.strip()
        if not seg:
            continue
        cells = seg.split()
        if len(cells) != 2:
            raise FormatError("expected a pair 'p q', got %r" % seg, lineno)
        try:
            pairs.append((S.parse(cells[0]), S.parse(cells[1])))
        except (ValueError, KeyError) as exc:
            raise FormatError("bad element: %s" % exc, lineno) from None
    return PairSet(S, pairs)


@dataclass
class CertificateFile:
    expression: str
    S: object
    X: PairSet
    certificates: list = field(default_factory=list)
    lines: list = field(default_factory=list)  # source line of each certificate


def write_certificates(expression, S, X, certs):
    out = ["semigroup: %s" % expression, "pairs: %s" % format_pairs(S, X)]
    out += [format_xsequence(S, c) for c in certs]
    return "\n".join(out) + "\n"


def read_certificates(text, base_dir="."):
    S = X = expr = None
    out = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("semigroup:"):
            expr = line[len("semigroup:"):].strip()
            try:
                S = load(expr, base_dir)
            except DslError as exc:
                raise FormatError(str(exc), lineno) from None
            continue
        if S is None:
            raise FormatError("the semigroup header must come first", lineno)
        if line.startswith("pairs:"):
            X = parse_pairs(S, line[len("pairs:"):], lineno)
            out = CertificateFile(expr, S, X)
            continue
        if out is None:
            raise FormatError("missing pairs header", lineno)
        out.certificates.append(parse_xsequence(S, line, lineno))
        out.lines.append(lineno)
    if out is None:
        raise FormatError("missing semigroup or pairs header")
    return out


def read_certificate_file(path):
    with open(path) as fh:
        return read_certificates(fh.read(), os.path.dirname(os.path.abspath(path)))


# ---------------------------------------------------------------------------
# reports


def _pairs_json(S, X):
    return [[S.format(p), S.format(q)] for p, q in X.generators()] if X is not None else None


def report_record(report, S):
    """A JSON-ready dict for a ``WitnessReport`` over ``S``."""
    rec = {
        "tag": report.tag,
        "target": report.target,
        "verdict": report.verdict,
        "hypotheses": [[h, bool(ok)] for h, ok in report.hypotheses],
        "generators": _pairs_json(S, report.generators),
        "bound": report.bound,
        "depth": report.depth,
        "certificates": [format_xsequence(S, c) for c in report.certificates],
        "notes": list(report.notes),
    }
    if report.parts:
        rec["parts"] = [p.tag + ": " + p.verdict for p in report.parts]
    return rec


def report_text(report, S, max_certificates=None):
    lines = ["witness %s for %s" % (report.tag, report.target), "  verdict: %s" % report.verdict]
    if report.bound is not None or report.depth is not None:
        lines.append("  bound: %s  depth: %s" % (report.bound, report.depth))
    for h, ok in report.hypotheses:
        lines.append("  [%s] %s" % ("x" if ok else " ", h))
    if report.generators is not None:
        lines.append("  generators: %s" % report.generators.format())
    for n in report.notes:
        lines.append("  note: %s" % n)
    for p in report.parts:
        lines.append("  part %s: %s" % (p.tag, p.verdict))
    certs = report.certificates if max_certificates is None else report.certificates[:max_certificates]
    if report.certificates:
        lines.append("  certificates: %d" % len(report.certificates))
    for c in certs:
        lines.append("    " + format_xsequence(S, c))
    if len(certs) < len(report.certificates):
        lines.append("    ... %d more" % (len(report.certificates) - len(certs)))
    return "\n".join(lines)


def json_line(record):
    return json.dumps(record, sort_keys=True, ensure_ascii=False)
