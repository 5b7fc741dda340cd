"""Multiplication table of ``R_n`` and consistency checks on it."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .engine import NormalWord, enumerate_basis, multiply_normal, rewrite
from .errors import VerificationFailure
from .relations import RELATION_RULES, relation_instance
from .report import Report
from .residues import enumerate_admissible
from .words import AlgebraElement, Cross, Dot, Idem

__all__ = ["StructureConstantTable", "structure_constants", "verify_ring_axioms",
           "relation_instances", "relation_soundness"]


@dataclass
class StructureConstantTable:
    """Sparse products of basis pairs: ``products[a, b] = ((c, coeff), ...)``.

    Pairs whose product vanishes are absent.
    """
    n: int
    basis: tuple
    products: dict = field(repr=False)

    def __post_init__(self):
        self.index = {b: k for k, b in enumerate(self.basis)}

    def __eq__(self, other):
        return (isinstance(other, StructureConstantTable) and self.n == other.n
                and self.basis == other.basis and self.products == other.products)

    def __len__(self):
        return len(self.basis)

    def product(self, a, b):
        return self.products.get((a, b), ())

    def multiply(self, u, v):
        """Product of sparse vectors ``{index: coeff}``."""
        out = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for c, k in self.products.get((a, b), ()):
                    out[c] = out.get(c, 0) + ca * cb * k
        return {c: k for c, k in out.items() if k}

    def unit(self):
        return {self.index[NormalWord(i, i, 0)]: Fraction(1)
                for i in enumerate_admissible(self.n)}

    def by_source(self):
        out = {}
        for k, b in enumerate(self.basis):
            out.setdefault(b.source, []).append(k)
        return out


@lru_cache(maxsize=None)
def _table(n):
    basis = tuple(enumerate_basis(n))
    index = {b: k for k, b in enumerate(basis)}
    starts = {}
    for k, b in enumerate(basis):
        starts.setdefault(b.source, []).append(k)
    products = {}
    for a, x in enumerate(basis):
        for b in starts.get(x.target, ()):
            terms = []
            for nw, c in multiply_normal(x, basis[b]).items():
                if nw not in index:
                    raise VerificationFailure("closure", f"{x} * {basis[b]} leaves the basis",
                                              (a, b))
                if c.denominator != 1:
                    raise VerificationFailure("integrality", f"{x} * {basis[b]} has {c}",
                                              (a, b))
                terms.append((index[nw], c))
            if terms:
                products[a, b] = tuple(sorted(terms))
    return StructureConstantTable(n, basis, products)


def structure_constants(n):
    """The multiplication table of ``R_n`` (cached per ``n``)."""
    return _table(n)


def _triples(table, sample, rng):
    """Exhaustive triples for small tables, otherwise composable samples.

    Triples that are not composable multiply to zero on both sides by
    orthogonality of the idempotents, so sampling concentrates on the
    composable ones, uniformly.
    """
    size = len(table)
    if table.n <= 4:
        return product(range(size), repeat=3), size ** 3
    starts = table.by_source()
    basis = table.basis
    tail = [len(starts.get(b.target, ())) for b in basis]
    weight = [sum(tail[y] for y in starts.get(b.target, ())) for b in basis]
    xs = rng.choices(range(size), weights=weight, k=sample)

    def gen():
        for x in xs:
            mids = starts[basis[x].target]
            y = rng.choices(mids, weights=[tail[m] for m in mids])[0]
            z = rng.choice(starts[basis[y].target])
            yield x, y, z

    return gen(), sample


def verify_ring_axioms(n, sample=10 ** 5, seed=0):
    """Unit law, associativity, integrality and degree additivity of the table."""
    report = Report(f"ring axioms, n={n}")
    table = structure_constants(n)
    basis = table.basis
    unit = table.unit()
    bad = [k for k in range(len(basis))
           if table.multiply(unit, {k: 1}) != {k: 1} or table.multiply({k: 1}, unit) != {k: 1}]
    report.add("unit", not bad, f"{len(basis)} basis elements", bad[:5])

    rng = random.Random(seed)
    triples, count = _triples(table, sample, rng)
    failures = []
    for x, y, z in triples:
        left = table.multiply(table.multiply({x: 1}, {y: 1}), {z: 1})
        right = table.multiply({x: 1}, table.multiply({y: 1}, {z: 1}))
        if left != right:
            failures.append((x, y, z))
    mode = "exhaustive" if n <= 4 else f"sampled, seed {seed}"
    report.add("associativity", not failures, f"{count} triples, {mode}", failures[:5])

    fractional = [key for key, terms in table.products.items()
                  if any(c.denominator != 1 for _, c in terms)]
    report.add("integer structure constants", not fractional,
               f"{len(table.products)} nonzero products", fractional[:5])

    uneven = [(a, b) for (a, b), terms in table.products.items()
              if any(basis[c].degree != basis[a].degree + basis[b].degree for c, _ in terms)]
    report.add("degree additivity", not uneven, "", uneven[:5])
    return report


def relation_instances(n):
    """Every defining relation at every colouring, as ``(label, zero element)``."""
    out = []
    rule_params = {
        "quadratic": [(k,) for k in range(1, n)],
        "dot_cross": [(k, p) for k in range(1, n) for p in range(1, n + 1)],
        "dot_commute": list(combinations(range(1, n + 1), 2)),
        "cross_commute": [(k, l) for k, l in combinations(range(1, n), 2) if l - k > 1],
        "braid": [(k,) for k in range(1, n - 1)],
    }
    for t in permutations(range(n)):
        tail = (Idem(t),)
        for rule in RELATION_RULES:
            for params in rule_params[rule]:
                rel = relation_instance(rule, params, t)
                elem = AlgebraElement(n, {w + tail: c for w, c in rel.items()})
                out.append((f"{rule}{params} e{t}", elem))
        if t[0] != 0:
            out.append((f"cyclotomic e{t}", AlgebraElement(n, {tail: 1})))
        else:
            out.append((f"cyclotomic y1 e{t}", AlgebraElement(n, {(Dot(1),) + tail: 1})))
    return out


def relation_soundness(n, contexts=True):
    """Check that every relation instance rewrites to zero.

    With ``contexts`` each instance is also multiplied on the left by every
    basis element, which drives the rewriting through its non-reduced
    branches.
    """
    report = Report(f"relation soundness, n={n}")
    lefts = [AlgebraElement.one(n)]
    if contexts:
        lefts += [AlgebraElement(n, {b.word: 1}) for b in enumerate_basis(n)]
    bad = []
    total = 0
    for label, rel in relation_instances(n):
        for left in lefts:
            total += 1
            if not rewrite(left * rel).is_zero():
                bad.append((label, str(left)))
    report.add("relations rewrite to 0", not bad, f"{total} instances", bad[:5])
    return report
