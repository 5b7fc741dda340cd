"""Literal instances of the defining relations of ``R_n``.

Every relation is returned as a *zero element*: a linear combination of
sub-words that vanishes once an idempotent ``e(color)`` is placed on its
right.  The same tables feed the rewriting engine and the derivation
checker, so a relation is written down exactly once.
"""

from fractions import Fraction

from .errors import InvalidInput
from .residues import QuiverData
from .words import Cross, Dot, Idem

__all__ = ["RELATION_RULES", "IDEAL_RULES", "quadratic_polynomial",
           "relation_instance", "color_of_suffix", "transposed"]

# relations of the KLR algebra proper
RELATION_RULES = ("quadratic", "dot_cross", "dot_commute", "cross_commute", "braid")
# generators of the cyclotomic ideal, and vanishing facts established earlier
IDEAL_RULES = ("cyclotomic_idem", "cyclotomic_dot", "lemma_idem", "lemma_dot")


def transposed(k, p):
    """Image of strand position ``p`` under the transposition ``(k, k+1)``."""
    if p == k:
        return k + 1
    if p == k + 1:
        return k
    return p


def quadratic_polynomial(color, k):
    """``psi_k^2 e(color)`` as ``{dot-word: coeff}`` in ``y_k, y_{k+1}``."""
    q = QuiverData(len(color))
    r, s = color[k - 1], color[k]
    yk, yk1 = Dot(k), Dot(k + 1)
    kind = q.orientation(r, s)
    if kind == "none":
        return {(): Fraction(1)}
    if kind == "forward":
        return {(yk1,): Fraction(1), (yk,): Fraction(-1)}
    if kind == "backward":
        return {(yk,): Fraction(1), (yk1,): Fraction(-1)}
    # (y_{k+1} - y_k)(y_k - y_{k+1}), expanded in word order
    return {(yk1, yk): Fraction(1), (yk1, yk1): Fraction(-1),
            (yk, yk): Fraction(-1), (yk, yk1): Fraction(1)}


def color_of_suffix(suffix):
    """Residue sequence at the left edge of a right-anchored word.

    ``suffix`` must end in an idempotent; crossings to its left permute
    the colouring, dots leave it alone.
    """
    if not suffix or not isinstance(suffix[-1], Idem):
        raise InvalidInput("suffix must end with an idempotent")
    color = suffix[-1].seq
    for g in reversed(suffix[:-1]):
        if isinstance(g, Idem):
            raise InvalidInput("suffix may carry only its final idempotent")
        if isinstance(g, Cross):
            c = list(color)
            c[g.k - 1], c[g.k] = c[g.k], c[g.k - 1]
            color = tuple(c)
    return color


def relation_instance(rule, params, color):
    """The zero element for ``rule`` at colouring ``color``.

    Returns ``{sub-word: coeff}``.  Raises :class:`InvalidInput` when the
    parameters do not describe an instance valid in that colouring (for
    ideal rules: when the colouring does not satisfy the rule's side
    condition; lemma rules are checked by the caller against known facts).
    """
    n = len(color)
    one = Fraction(1)
    if rule == "quadratic":
        (k,) = params
        _check_cross(k, n)
        rel = {(Cross(k), Cross(k)): one}
        for w, c in quadratic_polynomial(color, k).items():
            rel[w] = rel.get(w, 0) - c
        return rel
    if rule == "dot_cross":
        k, p = params
        _check_cross(k, n)
        _check_dot(p, n)
        # distinct residues: dots pass through crossings without correction
        return {(Dot(p), Cross(k)): one, (Cross(k), Dot(transposed(k, p))): -one}
    if rule == "dot_commute":
        k, p = params
        _check_dot(k, n)
        _check_dot(p, n)
        if k == p:
            raise InvalidInput("dot_commute needs distinct indices")
        return {(Dot(k), Dot(p)): one, (Dot(p), Dot(k)): -one}
    if rule == "cross_commute":
        k, p = params
        _check_cross(k, n)
        _check_cross(p, n)
        if abs(k - p) <= 1:
            raise InvalidInput("cross_commute needs |k - l| > 1")
        return {(Cross(k), Cross(p)): one, (Cross(p), Cross(k)): -one}
    if rule == "braid":
        (k,) = params
        _check_cross(k, n)
        _check_cross(k + 1, n)
        return {(Cross(k), Cross(k + 1), Cross(k)): one,
                (Cross(k + 1), Cross(k), Cross(k + 1)): -one}
    if rule == "cyclotomic_idem":
        if color[0] == 0:
            raise InvalidInput(f"e{color} is not a cyclotomic generator")
        return {(): one}
    if rule == "cyclotomic_dot":
        if color[0] != 0:
            raise InvalidInput(f"y1 e{color} is not a cyclotomic generator")
        return {(Dot(1),): one}
    if rule == "lemma_idem":
        return {(): one}
    if rule == "lemma_dot":
        (p,) = params
        _check_dot(p, n)
        return {(Dot(p),): one}
    raise InvalidInput(f"unknown rule {rule!r}")


def _check_cross(k, n):
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"psi_{k} out of range for n={n}")


def _check_dot(k, n):
    if not 1 <= k <= n:
        raise InvalidInput(f"y_{k} out of range for n={n}")
