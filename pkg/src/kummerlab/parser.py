"""Recursive-descent parser for element expressions.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := uint | 'zeta' | 'pi' | 'varpi' | 'p' | '(' expr ')'

Unary minus binds looser than '^', so ``-zeta^2`` is -(zeta^2).
"""
from __future__ import annotations

import re

from .cyclo import CycloElem, RingContext
from .errors import ParseError

MAX_INPUT = 64 * 1024

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")
_NAMES = {"zeta", "pi", "varpi", "p"}


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            if m.group(2) not in _NAMES:
                raise ParseError(f"unknown symbol {m.group(2)!r}", m.start(2))
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: RingContext):
        self.ctx = ctx
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value or kind == "end":
            raise ParseError(f"expected {value!r}", pos)

    def parse(self) -> CycloElem:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self):
        if self.peek() == ("op", "-", self.peek()[2]):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        ctx = self.ctx
        if kind == "int":
            return ctx.scalar(int(val))
        if kind == "name":
            if val == "zeta":
                return ctx.zeta
            if val == "pi":
                return ctx.pi
            if val == "varpi":
                return ctx.varpi
            return ctx.scalar(ctx.p)
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.expect(")")
            return value
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_element(text: str, ctx: RingContext) -> CycloElem:
    if len(text.encode("utf-8")) > MAX_INPUT:
        raise ParseError("input exceeds 64 KiB", MAX_INPUT)
    return _Parser(text, ctx).parse()
