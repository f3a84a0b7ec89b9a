"""A small expression language for building semigroups.

    expr := free_monoid(STRING) | free_comm(INT) | free_sgp(STRING)
          | null(INT) | left_zero(INT) | table(PATH)
          | adjoin1(expr) | adjoin0(expr) | product(expr, expr)
          | sfp(expr, ...) | mfp(expr, ...) | rees(expr, IDEAL)
    IDEAL := [STRING, ...] | gen(STRING, ...)

Strings are double quoted with JSON escapes; element strings inside an
ideal use the element notation of the semigroup they live in.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass

from .constructions import (
    AdjoinIdentity,
    AdjoinZero,
    DirectProduct,
    generated_ideal,
    monoid_free_product,
    rees_quotient,
    semigroup_free_product,
)
from .core import (
    AlgebraError,
    FreeCommutative,
    FreeMonoid,
    left_zero_semigroup,
    null_semigroup,
    read_table,
)


class DslError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = "" if line is None else "line %d, column %d: " % (line, col)
        super().__init__(where + message)


@dataclass(frozen=True)
class Token:
    kind: str  # name, int, string, punct, end
    value: object
    pos: int


@dataclass(frozen=True)
class Node:
    op: str
    args: tuple
    pos: int = 0

    def __eq__(self, other):
        return isinstance(other, Node) and (self.op, self.args) == (other.op, other.args)

    def __hash__(self):
        return hash((self.op, self.args))


@dataclass(frozen=True)
class IdealSpec:
    kind: str  # "list" or "gen"
    elements: tuple
    pos: int = 0

    def __eq__(self, other):
        return isinstance(other, IdealSpec) and (self.kind, self.elements) == (other.kind, other.elements)

    def __hash__(self):
        return hash((self.kind, self.elements))


_TOKEN = re.compile(r'\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>-?\d+)|(?P<string>"(?:[^"\\]|\\.)*")|(?P<punct>[(),\[\]]))')

# op -> argument kinds; "*" marks a repeated expression list
SIGNATURES = {
    "free_monoid": ("string",),
    "free_sgp": ("string",),
    "free_comm": ("int",),
    "null": ("int",),
    "left_zero": ("int",),
    "table": ("string",),
    "adjoin1": ("expr",),
    "adjoin0": ("expr",),
    "product": ("expr", "expr"),
    "sfp": "*",
    "mfp": "*",
    "rees": ("expr", "ideal"),
}


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text):
    out, pos = [], 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            skip = len(rest) - len(rest.lstrip())
            if pos + skip >= len(text):
                out.append(Token("end", None, len(text)))
                return out
            raise DslError("unexpected character %r" % text[pos + skip], *_line_col(text, pos + skip))
        kind = m.lastgroup
        start = m.start(kind)
        raw = m.group(kind)
        if kind == "int":
            value = int(raw)
        elif kind == "string":
            try:
                value = json.loads(raw)
            except json.JSONDecodeError:
                raise DslError("bad string literal", *_line_col(text, start)) from None
        else:
            value = raw
        out.append(Token(kind, value, start))
        pos = m.end()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def error(self, msg, pos=None):
        pos = self.peek().pos if pos is None else pos
        return DslError(msg, *_line_col(self.text, pos))

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok.kind == "end" else repr(tok.value)
            raise self.error("expected %s, got %s" % (want, got))
        self.i += 1
        return tok

    def at(self, value):
        tok = self.peek()
        return tok.kind == "punct" and tok.value == value

    def expr(self):
        tok = self.take("name")
        if tok.value not in SIGNATURES:
            raise self.error("unknown construction %r" % tok.value, tok.pos)
        sig = SIGNATURES[tok.value]
        self.take("punct", "(")
        args = []
        if sig == "*":
            args.append(self.expr())
            while self.at(","):
                self.take("punct", ",")
                args.append(self.expr())
        else:
            for k, kind in enumerate(sig):
                if k:
                    if not self.at(","):
                        raise self.error("%s takes %d argument(s)" % (tok.value, len(sig)))
                    self.take("punct", ",")
                args.append(self.argument(kind))
            if self.at(","):
                raise self.error("%s takes %d argument(s)" % (tok.value, len(sig)))
        self.take("punct", ")")
        node = Node(tok.value, tuple(args), tok.pos)
        self.check(node)
        return node

    def argument(self, kind):
        if kind == "expr":
            return self.expr()
        if kind == "ideal":
            return self.ideal()
        return self.take(kind).value

    def ideal(self):
        tok = self.peek()
        if self.at("["):
            self.take("punct", "[")
            close, kind = "]", "list"
        elif tok.kind == "name" and tok.value == "gen":
            self.take("name")
            self.take("punct", "(")
            close, kind = ")", "gen"
        else:
            raise self.error("expected an element list [..] or gen(..)")
        elems = []
        if not self.at(close):
            elems.append(self.take("string").value)
            while self.at(","):
                self.take("punct", ",")
                elems.append(self.take("string").value)
        self.take("punct", close)
        if kind == "gen" and not elems:
            raise self.error("gen() needs at least one generator", tok.pos)
        return IdealSpec(kind, tuple(elems), tok.pos)

    def check(self, node):
        op, args = node.op, node.args
        if op in ("free_comm", "null", "left_zero") and args[0] < 1:
            raise self.error("%s needs a positive integer" % op, node.pos)
        if op in ("free_monoid", "free_sgp") and len(set(args[0])) != len(args[0]):
            raise self.error("repeated letter in the alphabet", node.pos)
        if op == "free_sgp" and not args[0]:
            raise self.error("a free semigroup needs at least one letter", node.pos)
        if op == "mfp":
            for k, a in enumerate(args):
                if has_identity(a) == "no":
                    raise self.error("mfp factor %d lacks an identity" % (k + 1), a.pos)

    def parse(self):
        node = self.expr()
        if self.peek().kind != "end":
            raise self.error("trailing input")
        return node


def parse_expression(text):
    return _Parser(text).parse()


def has_identity(node):
    """``"yes"``, ``"no"`` or ``"unknown"`` from the syntax alone."""
    op, args = node.op, node.args
    if op in ("free_monoid", "free_comm", "adjoin1", "mfp"):
        return "yes"
    if op in ("null", "left_zero"):
        return "yes" if args[0] == 1 else "no"
    if op in ("free_sgp", "sfp"):
        return "no"
    if op == "adjoin0":
        return has_identity(args[0])
    if op == "product":
        a, b = has_identity(args[0]), has_identity(args[1])
        return "no" if "no" in (a, b) else "yes" if a == b == "yes" else "unknown"
    return "unknown"


def format_expression(node):
    """Canonical text; ``parse_expression`` inverts it."""
    parts = []
    for a in node.args:
        if isinstance(a, Node):
            parts.append(format_expression(a))
        elif isinstance(a, IdealSpec):
            inner = ", ".join(json.dumps(e) for e in a.elements)
            parts.append("[%s]" % inner if a.kind == "list" else "gen(%s)" % inner)
        elif isinstance(a, str):
            parts.append(json.dumps(a))
        else:
            parts.append(str(a))
    return "%s(%s)" % (node.op, ", ".join(parts))


def build(node, base_dir="."):
    """Instantiate the semigroup described by ``node``."""
    try:
        return _build(node, base_dir)
    except DslError:
        raise
    except (AlgebraError, OSError) as exc:
        raise DslError("%s: %s" % (node.op, exc)) from exc


def _build(node, base_dir):
    op, args = node.op, node.args
    if op == "free_monoid":
        return FreeMonoid(args[0])
    if op == "free_sgp":
        return FreeMonoid(args[0], monoid=False)
    if op == "free_comm":
        return FreeCommutative(args[0])
    if op == "null":
        return null_semigroup(args[0])
    if op == "left_zero":
        return left_zero_semigroup(args[0])
    if op == "table":
        path = args[0] if os.path.isabs(args[0]) else os.path.join(base_dir, args[0])
        S = read_table(path)
        S.description = format_expression(node)
        return S
    subs = [build(a, base_dir) for a in args if isinstance(a, Node)]
    if op == "adjoin1":
        return AdjoinIdentity(subs[0])
    if op == "adjoin0":
        return AdjoinZero(subs[0])
    if op == "product":
        return DirectProduct(subs[0], subs[1])
    if op == "sfp":
        return semigroup_free_product(subs)
    if op == "mfp":
        for k, f in enumerate(subs):
            if f.identity is None:
                raise DslError("mfp factor %d lacks an identity" % (k + 1))
        return monoid_free_product(subs)
    if op == "rees":
        S, spec = subs[0], args[1]
        elems = [S.parse(e) for e in spec.elements]
        text = format_expression(Node("x", (spec,)))[2:-1]
        if spec.kind == "gen":
            member = generated_ideal(S, elems)
        else:
            if not S.finite:
                raise DslError("an element list needs a finite semigroup; use gen(...)")
            inside = set(elems)
            member = inside.__contains__
        return rees_quotient(S, member, text)
    raise DslError("unknown construction %r" % op)


def load(text, base_dir="."):
    return build(parse_expression(text), base_dir)
