"""Generator words and exact linear combinations of them.

An :class:`AlgebraElement` is a formal element of the free algebra on the
generators ``e(i)``, ``y_k`` and ``psi_k``; multiplication with ``*`` is
plain concatenation.  Nothing here knows the relations; reduce with
:func:`cyclotomic_klr.engine.rewrite`.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InvalidInput
from .residues import check_sequence

__all__ = ["Idem", "Dot", "Cross", "AlgebraElement", "format_word",
           "format_coeff", "check_word", "idem", "dot", "cross"]


@dataclass(frozen=True, order=True)
class Idem:
    seq: tuple

    def __str__(self):
        return "e(" + ",".join(map(str, self.seq)) + ")"


@dataclass(frozen=True, order=True)
class Dot:
    k: int

    def __str__(self):
        return f"y{self.k}"


@dataclass(frozen=True, order=True)
class Cross:
    k: int

    def __str__(self):
        return f"p{self.k}"


def idem(*seq):
    if len(seq) == 1 and not isinstance(seq[0], int):
        seq = seq[0]
    return Idem(tuple(seq))


def dot(k):
    return Dot(k)


def cross(k):
    return Cross(k)


def format_word(word):
    return "*".join(str(g) for g in word)


def format_coeff(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def check_word(word, n):
    """Validate generator indices against ``n``; return the word as a tuple."""
    word = tuple(word)
    for pos, g in enumerate(word, start=1):
        if isinstance(g, Idem):
            try:
                check_sequence(g.seq, n)
            except InvalidInput as exc:
                raise InvalidInput(f"generator {pos}: {exc}", position=pos) from None
        elif isinstance(g, Dot):
            if not 1 <= g.k <= n:
                raise InvalidInput(f"y{g.k} out of range for n={n}", position=pos)
        elif isinstance(g, Cross):
            if not 1 <= g.k <= n - 1:
                raise InvalidInput(f"p{g.k} out of range for n={n}", position=pos)
        else:
            raise InvalidInput(f"not a generator: {g!r}", position=pos)
    return word


def _word_key(word):
    # idempotents sort before dots before crossings, then by index
    rank = {Idem: 0, Dot: 1, Cross: 2}
    return tuple((rank[type(g)], g.seq if isinstance(g, Idem) else (g.k,))
                 for g in word)


class AlgebraElement:
    """A finite sum ``sum c_w * w`` with exact rational coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None, check=True):
        self.n = n
        clean = {}
        for word, c in (terms or {}).items():
            word = check_word(word, n) if check else tuple(word)
            c = Fraction(c)
            if c:
                clean[word] = clean.get(word, 0) + c
        self._terms = {w: c for w, c in clean.items() if c}

    # constructors
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(): 1})

    @classmethod
    def from_word(cls, n, word, coeff=1):
        return cls(n, {tuple(word): coeff})

    @classmethod
    def e(cls, *seq):
        g = idem(*seq)
        return cls(len(g.seq), {(g,): 1})

    # views
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _word_key(kv[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, word):
        return self._terms.get(tuple(word), Fraction(0))

    # arithmetic
    def _same_n(self, other):
        if other.n != self.n:
            raise InvalidInput(f"mixed n: {self.n} and {other.n}")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = AlgebraElement.one(self.n) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same_n(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return AlgebraElement(self.n, out, check=False)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.n, {w: -c for w, c in self._terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return AlgebraElement(self.n, {w: c * other for w, c in self._terms.items()},
                                  check=False)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same_n(other)
        out = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return AlgebraElement(self.n, out, check=False)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, Rational) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, c in self.items():
            body = format_word(word)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        if first_sign == "-" and not first[0].isdigit():
            out = "-1*" + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {self})"
