"""Hook-partition combinatorics for the principal block of the Hecke algebra.

The Hecke parameter enters only through ``n``: ``q`` is a primitive
``n``-th root of unity and a partition of ``n`` labels a simple module
exactly when it is ``n``-regular.  For hooks ``lambda_k = (n-k, 1^k)`` the
Specht module has the two composition factors ``D^{lambda_k}`` and
``D^{lambda_{k-1}}``, which gives the recursion in :func:`simple_dims_hooks`.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial, prod

from .errors import InvalidParameter
from .report import CheckResult

__all__ = ["Partition", "hook", "partitions", "hook_dim", "count_standard_tableaux",
           "is_n_regular", "simple_dims_hooks", "specht_dims_hooks",
           "projective_dims_hooks", "BlockDimReport", "verify_identities"]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise InvalidParameter(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParameter(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self):
        return sum(self.parts)

    def conjugate(self):
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def hook_lengths(self):
        cols = self.conjugate().parts
        return [self.parts[r] - c + cols[c] - r - 1
                for r in range(len(self.parts)) for c in range(self.parts[r])]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def hook(n, k):
    """The hook ``(n-k, 1^k)``."""
    if not 0 <= k <= n - 1:
        raise InvalidParameter(f"hook needs 0 <= k <= n-1, got n={n}, k={k}")
    return Partition((n - k,) + (1,) * k)


def partitions(r, largest=None):
    """All partitions of ``r`` in reverse lexicographic order."""
    largest = r if largest is None else largest
    if r == 0:
        yield Partition(())
        return
    for first in range(min(r, largest), 0, -1):
        for rest in partitions(r - first, first):
            yield Partition((first,) + rest.parts)


def hook_dim(lam):
    """``dim S^lambda`` by the hook length formula."""
    return factorial(lam.size) // prod(lam.hook_lengths())


@lru_cache(maxsize=None)
def _tableaux(parts):
    if sum(parts) <= 1:
        return 1
    total = 0
    for r, p in enumerate(parts):
        # the largest entry sits in a removable corner
        if r == len(parts) - 1 or parts[r + 1] < p:
            smaller = parts[:r] + (p - 1,) + parts[r + 1:]
            total += _tableaux(tuple(q for q in smaller if q))
    return total


def count_standard_tableaux(lam):
    """Standard Young tableaux of shape ``lam``, counted by removing corners."""
    return _tableaux(lam.parts)


def is_n_regular(lam, n):
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    return all(lam.parts.count(v) < n for v in set(lam.parts))


def specht_dims_hooks(n):
    """``dim S^{lambda_k}`` for ``k = 0..n-1``."""
    return [hook_dim(hook(n, k)) for k in range(n)]


def simple_dims_hooks(n):
    """``dim D^{lambda_k}`` for ``k = 0..n-2`` from the Grothendieck-group recursion.

    ``[S^{lambda_k}] = [D^{lambda_k}] + [D^{lambda_{k-1}}]`` with
    ``D^{lambda_0} = S^{lambda_0}``; ``lambda_{n-1} = (1^n)`` is ``n``-singular.
    """
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    specht = specht_dims_hooks(n)
    dims = [specht[0]]
    for k in range(1, n - 1):
        dims.append(specht[k] - dims[-1])
    return dims


def projective_dims_hooks(n):
    """``dim P^{lambda_k} = dim S^{lambda_k} + dim S^{lambda_{k+1}}`` for ``k = 0..n-2``."""
    specht = specht_dims_hooks(n)
    return [specht[k] + specht[k + 1] for k in range(n - 1)]


@dataclass
class BlockDimReport:
    n: int
    specht_dims: list
    simple_dims: list
    projective_dims: list
    identities: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.identities)

    def __str__(self):
        head = (f"principal block, n={self.n}: S={self.specht_dims} "
                f"D={self.simple_dims} P={self.projective_dims}")
        return "\n".join([head] + ["  " + c.line() for c in self.identities])


def verify_identities(n, engine=None):
    """Dimension identities for the block, and their match with ``R_n``.

    ``engine`` controls the comparison with the computed algebra; by default
    it runs for ``n <= 6``.
    """
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    specht, simple, proj = specht_dims_hooks(n), simple_dims_hooks(n), projective_dims_hooks(n)
    report = BlockDimReport(n, specht, simple, proj)
    ids = report.identities

    def identity(name, lhs, rhs):
        ids.append(CheckResult(name, lhs == rhs, f"{lhs} vs {rhs}", (lhs, rhs)))

    identity("dim S^{lambda_k} = C(n-1,k)", specht, [comb(n - 1, k) for k in range(n)])
    identity("dim D^{lambda_k} = C(n-2,k)", simple, [comb(n - 2, k) for k in range(n - 1)])
    identity("sum dim D = 2^(n-2)", sum(simple), 2 ** (n - 2))
    parity = n % 2
    alternating = sum(comb(n - 1, k) for k in range(n) if k % 2 != parity)
    identity("alternating binomial sum = 2^(n-2)", alternating, 2 ** (n - 2))
    identity("dim P^{lambda_k} = C(n,k+1)", proj, [comb(n, k + 1) for k in range(n - 1)])
    identity("sum dim D * dim P = C(2(n-1),n-1)",
             sum(d * p for d, p in zip(simple, proj)), comb(2 * (n - 1), n - 1))
    regular = [k for k in range(n) if is_n_regular(hook(n, k), n)]
    identity("n-regular hooks = n-1", len(regular), n - 1)

    if engine is None:
        engine = n <= 6
    if engine:
        from .engine import enumerate_basis
        from .residues import class_representative, morita_partition
        classes = morita_partition(n)
        identity("Morita class k has dim D^{lambda_(k-1)} members",
                 [len(classes[k]) for k in range(1, n)], simple)
        basis = enumerate_basis(n)
        identity("dim R_n = sum dim D * dim P", len(basis),
                 sum(d * p for d, p in zip(simple, proj)))
        reps = [class_representative(n, k) for k in range(1, n)]
        identity("dim R_n e(i_k) = C(n,k)",
                 [sum(1 for b in basis if b.target == i) for i in reps],
                 [comb(n, k) for k in range(1, n)])
    return report
