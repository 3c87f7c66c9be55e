"""Text syntax for groups and graded groups.

Grammar (whitespace-insensitive)::

    atom   := "0" | "Z" | "Z/" integer        integer >= 2
    term   := atom [ "^" integer ]            exponent >= 0
    expr   := term { "+" term }
    graded := "[" expr ";" expr "]"

>>> str(parse_group("Z^2 + Z/4 + Z/6"))
'Z^2 + Z/2 + Z/12'
>>> format_graded(parse_graded("[Z/3 ; 0]"))
'[Z/3 ; 0]'
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from . import fgab

if TYPE_CHECKING:
    from .kkobj import GradedGroup


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message, self.text, self.pos = message, text, pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a nonnegative integer")
        return int(self.text[start:self.pos])

    def atom(self) -> list[int]:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return []
        if ch != "Z":
            self.error("expected '0', 'Z' or 'Z/n'")
        self.pos += 1
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            n = self.integer()
            if n < 2:
                self.pos = at
                self.error(f"cyclic order must be >= 2, got {n}")
            return [n]
        return [0]

    def term(self) -> list[int]:
        orders = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return orders * self.integer()
        return orders

    def expr(self) -> list[int]:
        orders = self.term()
        while self.peek() == "+":
            self.pos += 1
            orders += self.term()
        return orders

    def end(self):
        if self.peek():
            self.error("unexpected trailing input")


def parse_group(text: str) -> fgab.FgAbGroup:
    p = _Parser(text)
    orders = p.expr()
    p.end()
    return fgab.from_orders(orders)


def parse_graded(text: str) -> GradedGroup:
    from .kkobj import GradedGroup

    p = _Parser(text)
    p.expect("[")
    g0 = p.expr()
    p.expect(";")
    g1 = p.expr()
    p.expect("]")
    p.end()
    return GradedGroup(fgab.from_orders(g0), fgab.from_orders(g1))


def _power(atom: str, k: int) -> str:
    return atom if k == 1 else f"{atom}^{k}"


def format_group(g: fgab.FgAbGroup, primary: bool = False) -> str:
    """Canonical text; ``primary=True`` lists prime-power cyclic factors instead."""
    parts = []
    if g.rank:
        parts.append(_power("Z", g.rank))
    torsion = g.primary_decomposition() if primary else list(g.torsion)
    i = 0
    while i < len(torsion):
        j = i
        while j < len(torsion) and torsion[j] == torsion[i]:
            j += 1
        parts.append(_power(f"Z/{torsion[i]}", j - i))
        i = j
    return " + ".join(parts) or "0"


def format_graded(a: GradedGroup, primary: bool = False) -> str:
    return f"[{format_group(a.g0, primary)} ; {format_group(a.g1, primary)}]"
