"""Machine-checkable derivations of the vanishing rules used by the engine.

A :class:`DerivationTrace` starts from a word and adds, one step at a
time, a scalar multiple of ``prefix * R * suffix`` where ``R`` is a literal
relation instance (or a generator of the cyclotomic ideal, or a fact
proved by an earlier trace).  Each such addition changes the element by
zero in ``R_n``, so a trace ending at 0 proves its starting word vanishes.

:func:`check_trace` replays a trace without trusting any of its recorded
intermediate elements.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import InvalidInput, VerificationFailure
from .relations import color_of_suffix, relation_instance, transposed
from .residues import QuiverData, enumerate_admissible, first_violation, is_admissible
from .words import AlgebraElement, Cross, Dot, Idem

__all__ = [
    "Step", "DerivationTrace", "check_trace", "replay_all",
    "derive_idempotent_vanishing", "derive_dot_rules", "derive_dot_vanishing",
    "derive_dot_square_vanishing", "vanishing_closure", "closure_trace",
]


@dataclass(frozen=True)
class Step:
    rule: str
    params: tuple
    prefix: tuple
    suffix: tuple
    coeff: Fraction
    result: AlgebraElement

    @property
    def position(self):
        """Gap (0-based, counted in generators) where the relation is inserted."""
        return len(self.prefix)


@dataclass
class DerivationTrace:
    """A derivation of ``start == 0`` in ``R_n``.

    ``fact`` is what the trace establishes: ``("idem", seq)`` for
    ``e(seq) = 0``, ``("dot", k, seq)`` for ``y_k e(seq) = 0`` and
    ``("dot2", seq)`` for ``y_n^2 e(seq) = 0``.
    """
    n: int
    fact: tuple
    start: tuple
    steps: list = field(default_factory=list)
    end: AlgebraElement = None

    @property
    def claim(self):
        kind = self.fact[0]
        if kind == "idem":
            return f"e{self.fact[1]} = 0"
        if kind == "dot":
            return f"y{self.fact[1]} e{self.fact[2]} = 0"
        return f"y{self.n}^2 e{self.fact[1]} = 0"

    def lemmas(self):
        """Facts this trace relies on (must be proved before replaying it)."""
        out = []
        for st in self.steps:
            if st.rule == "lemma_idem":
                out.append(("idem", color_of_suffix(st.suffix)))
            elif st.rule == "lemma_dot":
                out.append(("dot", st.params[0], color_of_suffix(st.suffix)))
        return out

    def __len__(self):
        return len(self.steps)


def _embed(n, prefix, rel, suffix, coeff):
    return AlgebraElement(n, {prefix + w + suffix: coeff * c for w, c in rel.items()},
                          check=False)


def check_trace(trace, known=frozenset()):
    """Replay ``trace`` step by step.

    ``known`` holds facts established by earlier traces; lemma steps may
    only cite those.  Returns True, or raises :class:`VerificationFailure`
    naming the first bad step.
    """
    n = trace.n
    current = AlgebraElement(n, {trace.start: 1})
    for idx, st in enumerate(trace.steps):
        where = f"{trace.claim}, step {idx} ({st.rule})"
        try:
            color = color_of_suffix(st.suffix)
            rel = relation_instance(st.rule, st.params, color)
        except InvalidInput as exc:
            raise VerificationFailure("derivation", f"{where}: {exc}", trace.fact) from None
        if st.rule == "lemma_idem" and ("idem", color) not in known:
            raise VerificationFailure("derivation", f"{where}: e{color} = 0 not yet proved",
                                      trace.fact)
        if st.rule == "lemma_dot" and ("dot", st.params[0], color) not in known:
            raise VerificationFailure(
                "derivation", f"{where}: y{st.params[0]} e{color} = 0 not yet proved",
                trace.fact)
        if any(isinstance(g, Idem) for g in st.prefix):
            raise VerificationFailure("derivation", f"{where}: idempotent inside prefix",
                                      trace.fact)
        current = current + _embed(n, st.prefix, rel, st.suffix, st.coeff)
        if current != st.result:
            raise VerificationFailure("derivation", f"{where}: recorded result differs",
                                      trace.fact)
    if not current.is_zero() or (trace.end is not None and current != trace.end):
        raise VerificationFailure("derivation", f"{trace.claim}: does not end at 0",
                                  trace.fact)
    return True


def replay_all(traces, known=frozenset()):
    """Check traces in order, each one adding its fact for the later ones."""
    known = set(known)
    for tr in traces:
        check_trace(tr, known)
        known.add(tr.fact)
    return known


class _Builder:
    """Records steps while manipulating the running element."""

    def __init__(self, n, start, fact):
        self.n = n
        self.trace = DerivationTrace(n, fact, tuple(start))
        self.elem = AlgebraElement(n, {tuple(start): 1}, check=False)

    def add(self, rule, params, prefix, suffix, coeff):
        prefix, suffix = tuple(prefix), tuple(suffix)
        rel = relation_instance(rule, params, color_of_suffix(suffix))
        coeff = Fraction(coeff)
        self.elem = self.elem + _embed(self.n, prefix, rel, suffix, coeff)
        self.trace.steps.append(Step(rule, tuple(params), prefix, suffix, coeff, self.elem))

    def coeff(self, word):
        c = self.elem.coefficient(word)
        if not c:
            raise RuntimeError(f"word {word} not present in derivation")
        return c

    def insert_square(self, word, gap, k):
        """Rewrite ``word`` as ``word[:gap] psi_k psi_k word[gap:]`` (non-adjacent case)."""
        color = color_of_suffix(word[gap:])
        if QuiverData(self.n).adjacent(color[k - 1], color[k]):
            raise RuntimeError(f"psi_{k}^2 e{color} is not the identity")
        self.add("quadratic", (k,), word[:gap], word[gap:], self.coeff(word))
        return word[:gap] + (Cross(k), Cross(k)) + word[gap:]

    def slide(self, word, pos):
        """Move the dot at ``pos`` one step right, past the crossing at ``pos+1``."""
        d, x = word[pos], word[pos + 1]
        assert isinstance(d, Dot) and isinstance(x, Cross)
        self.add("dot_cross", (x.k, d.k), word[:pos], word[pos + 2:], -self.coeff(word))
        return word[:pos] + (x, Dot(transposed(x.k, d.k))) + word[pos + 2:]

    def slide_to_end(self, word, pos):
        while not isinstance(word[pos + 1], Idem):
            word = self.slide(word, pos)
            pos += 1
        return word, pos

    def kill_gap(self, word, gap, rule):
        self.add(rule, (), word[:gap], word[gap:], -self.coeff(word))

    def kill_dot(self, word, pos, rule):
        d = word[pos]
        params = () if rule == "cyclotomic_dot" else (d.k,)
        self.add(rule, params, word[:pos], word[pos + 1:], -self.coeff(word))

    def transport(self, word, start, stop, target):
        """Move the block of equal dots ``word[start:stop]`` left to strand ``target``.

        Every strand passed must carry a residue not adjacent to the dots'
        strand; each move is ``e = psi^2 e`` followed by dot slides.
        """
        p = word[start].k
        while p > target:
            word = self.insert_square(word, stop, p - 1)
            for pos in range(stop - 1, start - 1, -1):
                word = self.slide(word, pos)
            start, stop, p = start + 1, stop + 1, p - 1
        return word, start, stop

    def expand_adjacent(self, word, pos):
        """Trade the dot ``y_{l+1}`` at ``pos`` for ``y_l`` and ``psi_l^2``.

        Requires the residues at strands ``l, l+1`` to be joined by a single
        arrow, so ``psi_l^2 e = eps (y_{l+1} - y_l) e``.  Returns the two
        resulting words ``(with psi_l^2, with y_l)``.
        """
        d = word[pos]
        l = d.k - 1
        prefix, suffix = word[:pos], word[pos + 1:]
        color = color_of_suffix(suffix)
        kind = QuiverData(self.n).orientation(color[l - 1], color[l])
        eps = {"forward": 1, "backward": -1}[kind]
        c = self.coeff(word)
        self.add("quadratic", (l,), prefix, suffix, Fraction(c, eps))
        return prefix + (Cross(l), Cross(l)) + suffix, prefix + (Dot(l),) + suffix

    def kill_inner(self, word, gap):
        """Kill a word whose colouring at ``gap`` is not admissible."""
        color = color_of_suffix(word[gap:])
        if color[0] != 0:
            self.kill_gap(word, gap, "cyclotomic_idem")
        else:
            assert not is_admissible(color)
            self.kill_gap(word, gap, "lemma_idem")

    def kill_final_dot(self, word, pos):
        word, pos = self.slide_to_end(word, pos)
        rule = "cyclotomic_dot" if word[pos].k == 1 else "lemma_dot"
        self.kill_dot(word, pos, rule)

    def finish(self):
        if not self.elem.is_zero():
            raise RuntimeError(f"derivation of {self.trace.claim} did not reach 0: {self.elem}")
        self.trace.end = self.elem
        return self.trace


def _transport_idem(n, seq, ks):
    """``e(seq) = psi_{k1} ... psi_{km} e(t) psi_{km} ... psi_{k1}``, then kill ``e(t)``."""
    b = _Builder(n, (Idem(seq),), ("idem", seq))
    word = (Idem(seq),)
    for depth, k in enumerate(ks):
        word = b.insert_square(word, depth, k)
    b.kill_inner(word, len(ks))
    return b.finish()


def derive_idempotent_vanishing(seq):
    """Trace proving ``e(seq) = 0`` for an inadmissible ``seq``.

    The first offending residue is carried to the front through strands
    it is not adjacent to, where the cyclotomic ideal kills it.
    """
    seq = tuple(seq)
    n = len(seq)
    k = first_violation(seq)
    if k is None:
        raise InvalidInput(f"e{seq} is admissible; there is nothing to derive")
    return _transport_idem(n, seq, range(k - 1, 0, -1))


def _earlier_neighbours(seq, k):
    q = QuiverData(len(seq))
    return [l for l in range(1, k) if q.adjacent(seq[l - 1], seq[k - 1])]


def derive_dot_vanishing(seq, k):
    """Trace proving ``y_k e(seq) = 0`` (``k < n``), citing ``y_l e(seq) = 0`` for ``l < k``."""
    seq = tuple(seq)
    n = len(seq)
    if not is_admissible(seq):
        raise InvalidInput(f"e{seq} is not admissible")
    if not 1 <= k < n:
        raise InvalidInput(f"need 1 <= k < {n}, got {k}")
    b = _Builder(n, (Dot(k), Idem(seq)), ("dot", k, seq))
    word = (Dot(k), Idem(seq))
    if k == 1:
        b.kill_dot(word, 0, "cyclotomic_dot")
        return b.finish()
    (l,) = _earlier_neighbours(seq, k)
    word, start, _ = b.transport(word, 0, 1, l + 1)
    squared, lowered = b.expand_adjacent(word, start)
    b.kill_inner(squared, start + 1)
    b.kill_final_dot(lowered, start)
    return b.finish()


def derive_dot_square_vanishing(seq):
    """Trace proving ``y_n^2 e(seq) = 0``."""
    seq = tuple(seq)
    n = len(seq)
    if not is_admissible(seq):
        raise InvalidInput(f"e{seq} is not admissible")
    b = _Builder(n, (Dot(n), Dot(n), Idem(seq)), ("dot2", seq))
    word = (Dot(n), Dot(n), Idem(seq))
    if n == 2:
        # psi_1^2 e(0,1) = (y2 - y1)(y1 - y2) e(0,1) and psi_1 e(1,0) psi_1 = 0
        b.add("quadratic", (1,), (), (Idem(seq),), -1)
        for w, _ in b.elem.items():
            if w[0] == Cross(1):
                b.kill_gap(w, 1, "cyclotomic_idem")
            else:
                pos = w.index(Dot(1))
                b.kill_dot(w, pos, "cyclotomic_dot")
        return b.finish()
    l, m = _earlier_neighbours(seq, n)
    word, start, stop = b.transport(word, 0, 2, m + 1)
    squared, lowered = b.expand_adjacent(word, stop - 1)
    b.kill_final_dot(lowered, stop - 1)
    # the remaining dot rides through psi_m onto the moved strand
    word = b.slide(squared, start)
    word, s2, _ = b.transport(word, start + 1, start + 2, l + 1)
    squared, lowered = b.expand_adjacent(word, s2)
    b.kill_inner(squared, s2 + 1)
    b.kill_final_dot(lowered, s2)
    return b.finish()


def derive_dot_rules(n):
    """All dot-vanishing traces for ``R_n`` in dependency order.

    The list opens with the idempotent traces cited as lemmas, then for
    each admissible ``seq`` the traces for ``y_1, ..., y_{n-1}`` and
    finally ``y_n^2``.
    """
    dots = []
    for seq in enumerate_admissible(n):
        for k in range(1, n):
            dots.append(derive_dot_vanishing(seq, k))
        dots.append(derive_dot_square_vanishing(seq))
    needed = sorted({f[1] for tr in dots for f in tr.lemmas() if f[0] == "idem"})
    return [derive_idempotent_vanishing(s) for s in needed] + dots


def vanishing_closure(n):
    """Brute-force search for vanishing idempotents, blind to the arc criterion.

    Starts from the cyclotomic generators ``e(t)``, ``t_1 != 0``, and closes
    under ``e(t) = psi_k e(s_k t) psi_k`` for non-adjacent ``t_k, t_{k+1}``.
    Returns ``{seq: chain}`` where ``chain`` lists the swap positions that
    carry ``seq`` to a cyclotomic generator.
    """
    q = QuiverData(n)
    chains = {}
    todo = deque()
    for t in permutations(range(n)):
        if t[0] != 0:
            chains[t] = []
            todo.append(t)
    while todo:
        z = todo.popleft()
        for k in range(1, n):
            if q.adjacent(z[k - 1], z[k]):
                continue
            t = list(z)
            t[k - 1], t[k] = t[k], t[k - 1]
            t = tuple(t)
            if t not in chains:
                chains[t] = [k] + chains[z]
                todo.append(t)
    return chains


def closure_trace(seq, chain):
    """Trace for ``e(seq) = 0`` following a chain from :func:`vanishing_closure`."""
    return _transport_idem(len(seq), tuple(seq), chain)
