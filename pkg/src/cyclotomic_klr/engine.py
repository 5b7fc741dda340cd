"""Rewriting elements of ``R_n`` to the canonical basis.

Every residue sequence is a permutation, so two strands never share a
residue.  Two consequences drive the algorithm:

* dots slide through crossings with no correction term, and the braid
  relation holds on the nose, so ``psi_w e(j)`` depends only on the
  permutation ``w`` and not on the reduced word chosen;
* a product of generators is tracked as ``e(i) y^a psi_w e(j)`` where
  ``w`` is determined by the pair ``(i, j)``; appending ``psi_k`` either
  lengthens ``w`` or, when the two strands have already crossed, applies
  the quadratic relation.

A term is dropped as soon as a vanishing rule applies to it.  Those rules
(``e(t) = 0`` for inadmissible ``t``, ``y_k e(i) = 0`` for ``k < n``,
``y_n^2 e(i) = 0``) are admitted per ``n`` only after their derivation
traces replay; see :func:`rule_set`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from .derivations import check_trace, derive_dot_rules, derive_idempotent_vanishing, replay_all
from .errors import InvalidInput, InvalidParameter, VerificationFailure
from .relations import quadratic_polynomial
from .residues import (QuiverData, check_sequence, enumerate_admissible,
                       is_admissible, is_admissible_prefix)
from .words import AlgebraElement, Cross, Dot, Idem, check_word

__all__ = [
    "RuleSet", "rule_set", "NormalWord", "rewrite", "normal_form", "multiply",
    "multiply_normal", "one_ij", "enumerate_basis", "degree", "reduced_word",
    "identity", "to_element", "is_canonical",
]


class RuleSet:
    """Vanishing facts for one ``n``, each backed by a replayed trace."""

    def __init__(self, n):
        if n < 2:
            raise InvalidParameter(f"n must be >= 2, got {n}")
        self.n = n
        self.admissible = tuple(enumerate_admissible(n))
        self._admissible = frozenset(self.admissible)
        known = replay_all(derive_dot_rules(n))
        for seq in permutations(range(n)):
            if seq[0] == 0 and seq not in self._admissible and ("idem", seq) not in known:
                tr = derive_idempotent_vanishing(seq)
                check_trace(tr, known)
                known.add(tr.fact)
        self.facts = frozenset(known)

    def idem_vanishes(self, seq):
        return seq[0] != 0 or ("idem", seq) in self.facts

    def dot_vanishes(self, k, seq):
        if k == 1:
            return seq[0] == 0
        return ("dot", k, seq) in self.facts

    def dot_square_vanishes(self, seq):
        return ("dot2", seq) in self.facts

    def is_admissible(self, seq):
        return seq in self._admissible


@lru_cache(maxsize=None)
def rule_set(n):
    return RuleSet(n)


@lru_cache(maxsize=None)
def _interval_alive(i, j):
    """False if some colouring between ``i`` and ``j`` vanishes.

    The colourings met along reduced words of ``w`` (top ``i``, bottom
    ``j``) are exactly the orderings that keep every non-crossing pair of
    strands in order.  Any one of them being inadmissible kills the term,
    because ``psi_w`` may be written along a reduced word through it.
    """
    n = len(i)
    pos_i = {r: p for p, r in enumerate(i)}
    pos_j = {r: p for p, r in enumerate(j)}
    must_precede = {r: {s for s in i if pos_i[s] < pos_i[r] and pos_j[s] < pos_j[r]}
                    for r in i}

    def search(prefix, used):
        # True when an inadmissible ordering extends this prefix
        if len(prefix) == n:
            return False
        for r in i:
            if r in used or not must_precede[r] <= used:
                continue
            nxt = prefix + (r,)
            if not is_admissible_prefix(nxt, n) or search(nxt, used | {r}):
                return True
        return False

    return not search((), frozenset())


@lru_cache(maxsize=None)
def reduced_word(i, j):
    """Lexicographically smallest reduced word of ``w`` with top ``i``, bottom ``j``."""
    pos_j = {r: p for p, r in enumerate(j)}
    top = list(i)
    word = []
    while tuple(top) != j:
        k = next(k for k in range(1, len(top)) if pos_j[top[k - 1]] > pos_j[top[k]])
        word.append(k)
        top[k - 1], top[k] = top[k], top[k - 1]
    return tuple(word)


@dataclass(frozen=True, order=True)
class NormalWord:
    """The basis element ``e(source) y_n^dot psi_w e(target)``."""
    source: tuple
    target: tuple
    dot: int = 0

    @property
    def n(self):
        return len(self.source)

    @property
    def reduced_word(self):
        return reduced_word(self.source, self.target)

    @property
    def permutation(self):
        """``perm[p-1]`` is the bottom position of the strand leaving top position ``p``."""
        pos_j = {r: p for p, r in enumerate(self.target, start=1)}
        return tuple(pos_j[r] for r in self.source)

    @property
    def word(self):
        head = (Idem(self.source),) + ((Dot(self.n),) if self.dot else ())
        return head + tuple(Cross(k) for k in self.reduced_word)

    @property
    def degree(self):
        q = QuiverData(self.n)
        pos_j = {r: p for p, r in enumerate(self.target)}
        deg = 2 * self.dot
        for a in range(self.n):
            for b in range(a + 1, self.n):
                r, s = self.source[a], self.source[b]
                if pos_j[r] > pos_j[s]:
                    deg -= q.cartan(r, s)
        return deg

    def __str__(self):
        return "*".join(str(g) for g in self.word)


def _alive(rules, i, j, dots):
    if not _interval_alive(i, j):
        return False
    n = rules.n
    for p, a in enumerate(dots[:-1], start=1):
        if a:
            assert rules.dot_vanishes(p, i)
            return False
    if dots[-1] >= 2:
        assert rules.dot_square_vanishes(i)
        return False
    if dots[-1] == 1 and i[-1] != j[-1]:
        # slide the dot to the bottom, where it sits left of strand n
        assert rules.dot_vanishes(j.index(i[-1]) + 1, j)
        return False
    return True


def _push(rules, out, key, c):
    if c and _alive(rules, *key):
        c = out.get(key, 0) + c
        if c:
            out[key] = c
        else:
            del out[key]


def _apply(rules, state, g):
    """Right-multiply every term of ``state`` by the generator ``g``."""
    out = {}
    for (i, j, dots), c in state.items():
        if isinstance(g, Idem):
            if g.seq == j:
                out[(i, j, dots)] = out.get((i, j, dots), 0) + c
        elif isinstance(g, Dot):
            p = i.index(j[g.k - 1])
            d = list(dots)
            d[p] += 1
            _push(rules, out, (i, j, tuple(d)), c)
        else:
            k = g.k
            r, s = j[k - 1], j[k]
            j2 = j[:k - 1] + (s, r) + j[k + 1:]
            if i.index(r) < i.index(s):
                _push(rules, out, (i, j2, dots), c)
            else:
                # psi_w psi_k = psi_{w'} psi_k^2 with w' ending at j2
                for mono, q in quadratic_polynomial(j2, k).items():
                    d = list(dots)
                    for y in mono:
                        d[i.index(j2[y.k - 1])] += 1
                    _push(rules, out, (i, j2, tuple(d)), c * q)
    return {key: c for key, c in out.items() if c}


def _to_normal(state):
    out = {}
    for (i, j, dots), c in state.items():
        nw = NormalWord(i, j, dots[-1])
        out[nw] = out.get(nw, 0) + c
    return {k: v for k, v in out.items() if v}


def _rewrite_word(rules, word, budget):
    state = {(i, i, (0,) * rules.n): Fraction(1) for i in rules.admissible}
    spent = 0
    for g in word:
        spent += len(state)
        if spent > budget:
            raise RuntimeError(f"rewrite budget exhausted on {word}")
        state = _apply(rules, state, g)
        if not state:
            break
    return _to_normal(state)


def normal_form(x):
    """``{NormalWord: coeff}`` for an :class:`AlgebraElement`."""
    rules = rule_set(x.n)
    out = {}
    for word, c in x.terms.items():
        word = check_word(word, x.n)
        budget = len(rules.admissible) * (len(word) + 1) * 4 ** len(word)
        for nw, d in _rewrite_word(rules, word, budget).items():
            out[nw] = out.get(nw, 0) + c * d
    return {k: out[k] for k in sorted(out) if out[k]}


def to_element(n, coeffs):
    """Assemble an :class:`AlgebraElement` from ``{NormalWord: coeff}``."""
    return AlgebraElement(n, {nw.word: c for nw, c in coeffs.items()}, check=False)


def rewrite(x):
    """Canonical form of ``x``: a combination of normal words."""
    return to_element(x.n, normal_form(x))


def is_canonical(x):
    return rewrite(x) == x


def multiply(x, y):
    if x.n != y.n:
        raise InvalidInput(f"mixed n: {x.n} and {y.n}")
    return rewrite(x * y)


def multiply_normal(a, b):
    """Product of two basis elements as ``{NormalWord: coeff}``."""
    if a.target != b.source:
        return {}
    rules = rule_set(a.n)
    state = {(a.source, a.target, (0,) * (a.n - 1) + (a.dot,)): Fraction(1)}
    for g in b.word[1:]:
        state = _apply(rules, state, g)
    return dict(sorted(_to_normal(state).items()))


def identity(n):
    """``sum e(i)`` over admissible ``i``."""
    return AlgebraElement(n, {(Idem(i),): 1 for i in enumerate_admissible(n)})


def one_ij(i, j):
    """``e(i) psi_w e(j)`` for the unique ``w`` matching residues of ``j`` to ``i``."""
    i, j = tuple(i), tuple(j)
    if len(i) != len(j) or sorted(i) != sorted(j):
        raise InvalidInput(f"{i} and {j} carry different residues")
    check_sequence(i)
    check_sequence(j)
    for s in (i, j):
        if not is_admissible(s):
            raise InvalidInput(f"{s} is not admissible")
    word = (Idem(i),) + tuple(Cross(k) for k in reduced_word(i, j)) + (Idem(j),)
    return rewrite(AlgebraElement(len(i), {word: 1}))


def _single(x):
    """The lone normal word of ``x`` if ``x`` is exactly one basis element."""
    nf = normal_form(x)
    if len(nf) == 1:
        (nw, c), = nf.items()
        if c == 1:
            return nw
    return None


@lru_cache(maxsize=None)
def _basis(n):
    adm = enumerate_admissible(n)
    basis = []
    for i in adm:
        for j in adm:
            plain = one_ij(i, j)
            dotted = rewrite(AlgebraElement(n, {(Dot(n),): 1}) * plain)
            gap = abs(i[-1] - j[-1])
            if gap <= 1:
                nw = _single(plain)
                if nw is None:
                    raise VerificationFailure("basis", f"1_({i},{j}) is not a basis word", (i, j))
                basis.append(nw)
            elif not plain.is_zero():
                raise VerificationFailure("basis", f"1_({i},{j}) should vanish", (i, j))
            if gap == 0:
                nw = _single(dotted)
                if nw is None:
                    raise VerificationFailure("basis", f"y_n 1_({i},{j}) missing", (i, j))
                basis.append(nw)
            elif not dotted.is_zero():
                raise VerificationFailure("basis", f"y_n 1_({i},{j}) should vanish", (i, j))
    basis.sort()
    if len(basis) != comb(2 * (n - 1), n - 1):
        raise VerificationFailure("basis", f"{len(basis)} elements, expected "
                                  f"{comb(2 * (n - 1), n - 1)}")
    return tuple(basis)


def enumerate_basis(n):
    """Canonical basis of ``R_n`` in (source, target, dot) order."""
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    return list(_basis(n))


def degree(word):
    """KLR degree of a word that contains an idempotent.

    Crossings of residues ``r, s`` have degree ``-a_{rs}``, dots degree 2.
    """
    if isinstance(word, NormalWord):
        return word.degree
    word = tuple(word)
    anchors = [p for p, g in enumerate(word) if isinstance(g, Idem)]
    if not anchors:
        raise InvalidInput("degree needs an idempotent to fix the residues")
    n = len(word[anchors[0]].seq)
    check_word(word, n)
    q = QuiverData(n)
    # colour at each gap, propagated from the first idempotent
    colors = [None] * (len(word) + 1)
    a = anchors[0]
    colors[a] = colors[a + 1] = word[a].seq
    for p in range(a + 1, len(word)):
        g, c = word[p], colors[p]
        if isinstance(g, Cross):
            c = c[:g.k - 1] + (c[g.k], c[g.k - 1]) + c[g.k + 1:]
        elif isinstance(g, Idem) and g.seq != c:
            raise InvalidInput(f"idempotent {g} clashes with colour {c}", position=p + 1)
        colors[p + 1] = c
    for p in range(a - 1, -1, -1):
        g, c = word[p], colors[p + 1]
        if isinstance(g, Cross):
            c = c[:g.k - 1] + (c[g.k], c[g.k - 1]) + c[g.k + 1:]
        elif isinstance(g, Idem) and g.seq != c:
            raise InvalidInput(f"idempotent {g} clashes with colour {c}", position=p + 1)
        colors[p] = c
    deg = 0
    for p, g in enumerate(word):
        if isinstance(g, Dot):
            deg += 2
        elif isinstance(g, Cross):
            c = colors[p + 1]
            deg -= q.cartan(c[g.k - 1], c[g.k])
    return deg
