"""Line-oriented text format for theory presentations.

::

    theory Group
    ops: e/0, inv/1, mul/2
    eq: mul(e, x) = x
    eq: mul(mul(x, y), z) = mul(x, mul(y, z))   # associativity

``#`` starts a comment.  A comment trailing an ``eq:`` line becomes that
equation's label; unlabelled equations are called ``eq1``, ``eq2``, ... by
position.  Identifiers that are not declared operations are variables,
numbered by first appearance (left side first).  Every variable of the
right side must occur on the left side.

The printer emits the canonical spacing; the parser tolerates extra blanks.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .terms import (
    App,
    Equation,
    OpSymbol,
    Term,
    TheoryPresentation,
    Var,
    default_label,
    format_term,
)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[0-9]+")
_PUNCT = set("(),=/:")


class _Tok:
    __slots__ = ("kind", "text", "col")

    def __init__(self, kind, text, col):
        self.kind = kind
        self.text = text
        self.col = col

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.col}"


def _split_comment(line: str) -> tuple[str, str | None]:
    pos = line.find("#")
    if pos < 0:
        return line, None
    return line[:pos], line[pos + 1:].strip()


def _tokenize(code: str, lineno: int) -> list[_Tok]:
    toks = []
    i = 0
    n = len(code)
    while i < n:
        ch = code[i]
        if ch in " \t\r":
            i += 1
            continue
        if ch in _PUNCT:
            toks.append(_Tok(ch, ch, i + 1))
            i += 1
            continue
        m = _NAME.match(code, i)
        if m:
            toks.append(_Tok("name", m.group(), i + 1))
            i = m.end()
            continue
        m = _NUMBER.match(code, i)
        if m:
            toks.append(_Tok("number", m.group(), i + 1))
            i = m.end()
            continue
        raise ParseError("lexical", f"unexpected character {ch!r}", lineno, i + 1)
    return toks


class _LineParser:
    def __init__(self, toks, lineno, end_col):
        self.toks = toks
        self.pos = 0
        self.lineno = lineno
        self.end_col = end_col

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def col(self):
        tok = self.peek()
        return tok.col if tok else self.end_col

    def fail(self, message, kind="syntax", col=None):
        raise ParseError(kind, message, self.lineno, self.col() if col is None else col)

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of line" if tok is None else repr(tok.text)
            self.fail(f"expected {what or repr(kind)}, found {found}")
        self.pos += 1
        return tok

    def at_end(self):
        return self.pos >= len(self.toks)

    def expect_end(self):
        if not self.at_end():
            self.fail(f"unexpected {self.peek().text!r}")


def _parse_term(p: _LineParser, ops: dict, var_names: list[str]) -> Term:
    tok = p.expect("name", "a name")
    nxt = p.peek()
    if nxt is not None and nxt.kind == "(":
        op = ops.get(tok.text)
        if op is None:
            p.fail(f"unknown operation {tok.text!r}", "unknown-operation", tok.col)
        p.pos += 1
        args = [_parse_term(p, ops, var_names)]
        while p.peek() is not None and p.peek().kind == ",":
            p.pos += 1
            args.append(_parse_term(p, ops, var_names))
        p.expect(")", "',' or ')'")
        if len(args) != op.arity:
            p.fail(
                f"{op.name} takes {op.arity} argument(s), got {len(args)}",
                "arity-mismatch",
                tok.col,
            )
        return App(op, tuple(args))
    op = ops.get(tok.text)
    if op is not None:
        if op.arity != 0:
            p.fail(f"{op.name} takes {op.arity} argument(s), got 0", "arity-mismatch", tok.col)
        return App(op)
    if tok.text not in var_names:
        var_names.append(tok.text)
    return Var(var_names.index(tok.text))


def _right_side_vars(p: _LineParser, bound: int, var_names: list[str], start: int):
    """Positions of right-side variables that the left side never mentions."""
    for tok in p.toks[start:]:
        if tok.kind == "name" and tok.text in var_names and var_names.index(tok.text) >= bound:
            return tok
    return None


def parse_theory(text: str) -> TheoryPresentation:
    """Parse DSL text; raises :class:`~lawmeas.errors.ParseError` with a position."""
    name = None
    ops: dict[str, OpSymbol] | None = None
    equations = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        code, comment = _split_comment(raw)
        toks = _tokenize(code, lineno)
        if not toks:
            continue
        p = _LineParser(toks, lineno, len(code.rstrip()) + 1)
        head = toks[0]
        if name is None:
            if head.kind != "name" or head.text != "theory":
                p.fail("expected 'theory <name>' header")
            p.pos = 1
            name = p.expect("name", "a theory name").text
            p.expect_end()
            continue
        if ops is None:
            if head.kind != "name" or head.text != "ops" or len(toks) < 2 or toks[1].kind != ":":
                p.fail("expected 'ops:' line")
            p.pos = 2
            ops = {}
            while not p.at_end():
                if ops:
                    p.expect(",", "','")
                op_tok = p.expect("name", "an operation name")
                p.expect("/", "'/'")
                arity = int(p.expect("number", "an arity").text)
                if op_tok.text in ops:
                    p.fail(f"operation {op_tok.text!r} declared twice", "duplicate-operation", op_tok.col)
                ops[op_tok.text] = OpSymbol(op_tok.text, arity)
            continue
        if head.kind != "name" or head.text != "eq" or len(toks) < 2 or toks[1].kind != ":":
            p.fail("expected 'eq:' line")
        p.pos = 2
        var_names: list[str] = []
        lhs = _parse_term(p, ops, var_names)
        bound = len(var_names)
        p.expect("=", "'='")
        rhs_start = p.pos
        rhs = _parse_term(p, ops, var_names)
        p.expect_end()
        stray = _right_side_vars(p, bound, var_names, rhs_start)
        if stray is not None:
            p.fail(
                f"variable {stray.text!r} does not occur on the left-hand side",
                "unbound-variable",
                stray.col,
            )
        label = comment if comment else default_label(len(equations) + 1)
        equations.append(Equation(len(var_names), lhs, rhs, label, tuple(var_names)))
    if name is None:
        raise ParseError("syntax", "expected 'theory <name>' header", max(lineno, 1), 1)
    if ops is None:
        raise ParseError("syntax", "expected 'ops:' line", lineno + 1, 1)
    return TheoryPresentation(name, tuple(ops.values()), tuple(equations))


def print_theory(th: TheoryPresentation) -> str:
    lines = [f"theory {th.name}", "ops: " + ", ".join(str(op) for op in th.ops)]
    for k, eq in enumerate(th.equations, start=1):
        line = "eq: " + format_term(eq.lhs, eq.var_names) + " = " + format_term(eq.rhs, eq.var_names)
        if eq.label != default_label(k):
            line += f"  # {eq.label}"
        lines.append(line)
    return "\n".join(lines) + "\n"
