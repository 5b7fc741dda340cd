"""Text syntax for algebra elements.

Grammar (whitespace is ignored)::

    expr      := term (('+' | '-') term)*
    term      := atom ('*' atom)*
    atom      := rational | generator | '(' expr ')'
    rational  := ['-'] digits ['/' digits]
    generator := 'e' '(' digits (',' digits)* ')' | 'y' digits | 'p' digits

``p`` stands for psi.  Residues are 0-based, strand positions 1-based.
Error offsets are 1-based character positions; the end of the input counts
as one past the last character, so ``"e(0,1"`` fails at offset 6.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .words import AlgebraElement, Cross, Dot, Idem, check_word

__all__ = ["ParseError", "Rational", "Generator", "Product", "Sum", "parse_element",
           "format_expr", "evaluate", "parse_and_evaluate"]


class ParseError(InvalidInput):
    """Syntax or range error; ``offset`` is the 1-based character position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}", position=offset)
        self.offset = offset


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class Generator:
    gen: object


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    # ((sign, node), ...) with sign +1 or -1; the first sign is always +1
    terms: tuple


class _Parser:
    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def digits(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected digits, found {found}")
        return int(self.text[start:self.pos])

    def expr(self):
        terms = [(1, self.term())]
        while self.peek() in ("+", "-"):
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.atom()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.atom())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch == "-" or ch.isdigit():
            negative = ch == "-"
            if negative:
                self.pos += 1
            value = Fraction(self.digits())
            if self.peek() == "/":
                self.pos += 1
                den_at = self.pos
                den = self.digits()
                if den == 0:
                    self.error("zero denominator", den_at)
                value /= den
            return Rational(-value if negative else value)
        if ch in ("y", "p"):
            self.pos += 1
            k = self.digits()
            gen = Dot(k) if ch == "y" else Cross(k)
            self._check(gen, start)
            return Generator(gen)
        if ch == "e":
            self.pos += 1
            self.expect("(")
            seq = [self.digits()]
            while self.peek() == ",":
                self.pos += 1
                seq.append(self.digits())
            self.expect(")")
            gen = Idem(tuple(seq))
            self._check(gen, start)
            return Generator(gen)
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")

    def _check(self, gen, start):
        try:
            check_word((gen,), self.n)
        except InvalidInput as exc:
            msg = str(exc).removeprefix("generator 1: ")
            self.error(msg, start)


def parse_element(text, n):
    """Parse ``text`` into an expression tree over ``R_n``."""
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    parser = _Parser(text, n)
    node = parser.expr()
    if parser.peek():
        parser.error(f"unexpected {parser.peek()!r}")
    return node


def format_expr(node):
    """Print a tree so that :func:`parse_element` gives it back unchanged."""
    if isinstance(node, Rational):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Generator):
        return str(node.gen)
    if isinstance(node, Product):
        return " * ".join(f"({format_expr(f)})" if isinstance(f, (Sum, Product))
                          else format_expr(f) for f in node.factors)
    out = ""
    for k, (sign, t) in enumerate(node.terms):
        text = format_expr(t)
        if isinstance(t, Sum):
            text = f"({text})"
        out += text if k == 0 else (" + " if sign > 0 else " - ") + text
    return out


def evaluate(node, n):
    """The tree as a formal :class:`AlgebraElement` (not reduced)."""
    if isinstance(node, Rational):
        return AlgebraElement.one(n) * node.value
    if isinstance(node, Generator):
        return AlgebraElement(n, {(node.gen,): 1})
    if isinstance(node, Product):
        value = evaluate(node.factors[0], n)
        for f in node.factors[1:]:
            value = value * evaluate(f, n)
        return value
    value = AlgebraElement.zero(n)
    for sign, t in node.terms:
        value = value + evaluate(t, n) * sign
    return value


def parse_and_evaluate(text, n):
    return evaluate(parse_element(text, n), n)
