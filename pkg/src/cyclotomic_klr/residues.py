"""Residue combinatorics for the cyclic quiver with ``n`` vertices.

A residue sequence is a tuple ``(i_1, ..., i_n)`` that permutes
``0, ..., n-1``.  Positions are 1-based at every public boundary, matching
the usual strand numbering of a KLR diagram; the tuples themselves are
ordinary 0-indexed Python tuples.

>>> enumerate_admissible(4)
[(0, 1, 2, 3), (0, 1, 3, 2), (0, 3, 1, 2), (0, 3, 2, 1)]
>>> level_shift((0, 2, 1), "up")
(0, 1, 3, 2)
"""

from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import InvalidInput, InvalidParameter

__all__ = [
    "QuiverData", "quiver", "check_sequence", "first_violation",
    "is_admissible", "is_admissible_prefix", "enumerate_admissible",
    "level_shift", "class_representative", "morita_class",
    "admissible_swaps", "swap", "swap_component", "morita_partition",
    "expected_class_size", "truncation_sequences",
]


@dataclass(frozen=True)
class QuiverData:
    """The cyclic quiver with arrows ``r -> r+1 (mod n)``.

    For ``n == 2`` the two arrows ``0 -> 1`` and ``1 -> 0`` make the
    vertices doubly connected.
    """
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameter(f"quiver needs n >= 2, got {self.n}")

    def arrow(self, r, s):
        """True if there is an arrow r -> s."""
        return (r + 1) % self.n == s % self.n

    def adjacent(self, r, s):
        return r != s and (self.arrow(r, s) or self.arrow(s, r))

    def orientation(self, r, s):
        """Classify the residue pair: 'none', 'forward', 'backward' or 'double'."""
        fwd, bwd = self.arrow(r, s), self.arrow(s, r)
        if fwd and bwd:
            return "double"
        if fwd:
            return "forward"
        if bwd:
            return "backward"
        return "none"

    def cartan(self, r, s):
        if r == s:
            return 2
        return -(int(self.arrow(r, s)) + int(self.arrow(s, r)))


def quiver(n):
    return QuiverData(n)


def check_sequence(seq, n=None):
    """Return ``seq`` as a tuple after checking it permutes ``0..n-1``."""
    seq = tuple(int(r) for r in seq)
    if n is None:
        n = len(seq)
    if len(seq) != n:
        raise InvalidInput(f"expected {n} residues, got {len(seq)}")
    if n < 2:
        raise InvalidInput(f"residue sequences need length >= 2, got {n}")
    seen = set()
    for pos, r in enumerate(seq, start=1):
        if not 0 <= r < n or r in seen:
            raise InvalidInput(
                f"{seq} is not a permutation of 0..{n - 1} (position {pos})",
                position=pos)
        seen.add(r)
    return seq


def _is_permutation(seq):
    return sorted(seq) == list(range(len(seq)))


def first_violation(seq):
    """1-based position of the first entry breaking admissibility, or None.

    Position 1 fails when ``i_1 != 0``; position ``k`` (``2 <= k <= n-1``)
    fails when ``i_k`` is not adjacent to any of ``i_1, ..., i_{k-1}``,
    i.e. the prefix stops being an arc of the cycle.  The last entry is
    forced and never fails.
    """
    n = len(seq)
    if seq[0] != 0:
        return 1
    q = QuiverData(n)
    seen = {seq[0]}
    for pos in range(2, n):
        r = seq[pos - 1]
        if not any(q.adjacent(r, s) for s in seen):
            return pos
        seen.add(r)
    return None


def is_admissible_prefix(prefix, n):
    """True if ``prefix`` can start an admissible sequence of length ``n``."""
    if not prefix:
        return True
    if prefix[0] != 0:
        return False
    q = QuiverData(n)
    seen = {0}
    for r in prefix[1:min(len(prefix), n - 1)]:
        if not any(q.adjacent(r, s) for s in seen):
            return False
        seen.add(r)
    return True


def is_admissible(seq):
    """True iff e(seq) survives in the level-one cyclotomic quotient.

    Non-permutations are simply not admissible.
    """
    seq = tuple(seq)
    if len(seq) < 2 or not _is_permutation(seq):
        return False
    return first_violation(seq) is None


def enumerate_admissible(n):
    """All admissible sequences for ``R_n`` in lexicographic order."""
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    out = []

    # grow the arc [lo, hi] (offsets around the cycle) one end at a time
    def grow(prefix, lo, hi):
        if len(prefix) == n - 1:
            last = (set(range(n)) - set(prefix)).pop()
            out.append(prefix + (last,))
            return
        left, right = (lo - 1) % n, (hi + 1) % n
        grow(prefix + (right,), lo, hi + 1)
        if left != right:
            grow(prefix + (left,), lo - 1, hi)

    if n == 2:
        return [(0, 1)]
    grow((0,), 0, 0)
    return sorted(out)


def level_shift(seq, direction):
    """The hat (``"up"``) and bar (``"down"``) maps between levels.

    ``up`` sends an admissible sequence of length ``n-1`` to
    ``(0, 1, i_2+1, ..., i_{n-1}+1)``; ``down`` inverts it on admissible
    sequences with ``i_2 == 1``.
    """
    seq = check_sequence(seq)
    bad = first_violation(seq)
    if bad is not None:
        raise InvalidInput(f"{seq} is not admissible (position {bad})", position=bad)
    if direction == "up":
        return (0, 1) + tuple(r + 1 for r in seq[1:])
    if direction == "down":
        if len(seq) < 3:
            raise InvalidInput("cannot shift below n = 2", position=1)
        if seq[1] != 1:
            raise InvalidInput(f"{seq} has i_2 = {seq[1]}, expected 1", position=2)
        return (0,) + tuple(r - 1 for r in seq[2:])
    raise InvalidInput(f"direction must be 'up' or 'down', got {direction!r}")


def class_representative(n, k):
    """The sequence ``(0, 1, ..., k-1, n-1, n-2, ..., k+1, k)``."""
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise InvalidParameter(f"class label must lie in [1, {n - 1}], got {k}")
    return tuple(range(k)) + tuple(range(n - 1, k, -1)) + (k,)


def morita_class(seq):
    """Class label of an admissible sequence: its last residue."""
    return seq[-1]


def admissible_swaps(seq):
    """Positions ``t`` in ``2..n-2`` where ``i_t`` and ``i_{t+1}`` are not adjacent."""
    n = len(seq)
    q = QuiverData(n)
    return [t for t in range(2, n - 1) if not q.adjacent(seq[t - 1], seq[t])]


def swap(seq, t):
    """Exchange the entries at 1-based positions ``t`` and ``t+1``."""
    out = list(seq)
    out[t - 1], out[t] = out[t], out[t - 1]
    return tuple(out)


def swap_component(seq):
    """Everything reachable from ``seq`` through admissible swaps."""
    seen = {tuple(seq)}
    todo = deque(seen)
    while todo:
        cur = todo.popleft()
        for t in admissible_swaps(cur):
            nxt = swap(cur, t)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return sorted(seen)


def morita_partition(n):
    """Group the admissible sequences by their last entry."""
    classes = {k: [] for k in range(1, n)}
    for seq in enumerate_admissible(n):
        classes[morita_class(seq)].append(seq)
    return classes


def expected_class_size(n, k):
    return comb(n - 2, k - 1)


def truncation_sequences(n):
    """Admissible sequences of length ``n`` with ``i_2 == 1``."""
    return [s for s in enumerate_admissible(n) if s[1] == 1]
