"""Manifold expressions such as ``RP(2) * RP(2) x S(1)``.

Grammar (whitespace-insensitive, primitive names case-insensitive)::

    expr := term (('*' | 'x') term)*
    term := 'S' '(' uint ')' | 'RP' '(' uint ')' | 'T' '(' uint ')'
          | 'K' | 'M' '(' uint ')' | '(' expr ')'

Products associate to the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import catalog
from .catalog import ManifoldDescriptor
from .errors import PinStructuresError


class ParseError(PinStructuresError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.offset = len(text[:pos].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at offset {self.offset}")


class ParameterError(ParseError):
    pass


# minimum parameter and the rule it comes from
_PARAMETERS = {
    "S": (1, "S(n) requires n >= 1"),
    "RP": (1, "RP(n) requires n >= 1"),
    "T": (1, "T(n) requires n >= 1"),
    "M": (catalog.MIN_MK_DIM, f"M(k) requires k >= {catalog.MIN_MK_DIM}: its low-degree homology "
                              f"is only established in that range"),
}


@dataclass(frozen=True)
class Primitive:
    kind: str
    param: int | None = None

    def __str__(self):
        return self.kind if self.param is None else f"{self.kind}({self.param})"


@dataclass(frozen=True)
class Product:
    left: "ManifoldExpr"
    right: "ManifoldExpr"

    def __str__(self):
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left} * {right}"


ManifoldExpr = Union[Primitive, Product]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None, cls=ParseError):
        raise cls(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def parse(self) -> ManifoldExpr:
        e = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> ManifoldExpr:
        e = self.term()
        while self.peek() in ("*", "x"):
            self.pos += 1
            e = Product(e, self.term())
        return e

    def term(self) -> ManifoldExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        head = self.text[self.pos:self.pos + 2].upper()
        if head == "RP":
            kind = "RP"
        elif head[:1] in ("S", "T", "K", "M"):
            kind = head[:1]
        else:
            found = repr(ch) if ch else "end of input"
            self.error(f"expected a manifold (S, RP, T, K, M or '('), found {found}")
        self.pos += len(kind)
        if kind == "K":
            return Primitive("K")
        self.expect("(")
        self.skip()
        num_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == num_start:
            self.error("expected an unsigned integer")
        n = int(self.text[num_start:self.pos])
        self.expect(")")
        low, rule = _PARAMETERS[kind]
        if n < low:
            self.error(f"{kind}({n}) is not in the catalog: {rule}", num_start, ParameterError)
        return Primitive(kind, n)


def parse(text: str) -> ManifoldExpr:
    return _Parser(text).parse()


def build(e: ManifoldExpr) -> ManifoldDescriptor:
    if isinstance(e, Product):
        return catalog.product(build(e.left), build(e.right))
    return {
        "S": catalog.sphere,
        "RP": catalog.rp,
        "T": catalog.torus,
        "M": catalog.mk,
        "K": lambda _: catalog.klein(),
    }[e.kind](e.param)
