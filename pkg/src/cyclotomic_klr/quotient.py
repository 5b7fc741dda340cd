"""Structure of ``R_n`` seen through its idempotents.

* projective classes: ``R_n e(i) ~ R_n e(j)`` exactly when ``i_n == j_n``;
* the Brauer-line quiver: vertices ``1..n-1``, arrows ``beta_t: t -> t+1``
  and ``gamma_t: t+1 -> t`` and a loop ``beta`` at vertex 1;
* the corner ``e R_n e`` for ``e = sum e(i)`` over admissible ``i`` with
  ``i_2 = 1``, which is a copy of ``R_{n-1}``.

Paths compose in algebra order: ``beta_t * beta_{t+1}`` is the product of
``e(i_t) ... e(i_{t+1})`` with ``e(i_{t+1}) ... e(i_{t+2})``.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb

from .basis import relation_instances, structure_constants
from .engine import enumerate_basis, multiply, normal_form, one_ij, rewrite, to_element
from .errors import InvalidParameter, VerificationFailure
from .report import CheckResult, Report
from .residues import class_representative, enumerate_admissible, morita_partition
from .words import AlgebraElement, Cross, Dot, Idem

__all__ = ["QuiverPresentation", "quiver_presentation", "projective_isomorphism_check",
           "truncation_map", "TruncationReport", "verify_truncation_iso",
           "COMPOSITION_CONVENTION"]

COMPOSITION_CONVENTION = (
    "algebra order: a*b means a followed by b, so an arrow s -> t is an element "
    "e(i_s) x e(i_t) and a path multiplies its arrows left to right")


def _e(seq):
    return AlgebraElement(len(seq), {(Idem(tuple(seq)),): 1})


def _ratio(x, y):
    """``c`` with ``x == c*y`` when ``y != 0``, else None."""
    nx, ny = normal_form(x), normal_form(y)
    if not ny or nx.keys() != ny.keys():
        return None
    ratios = {nx[k] / ny[k] for k in ny}
    return ratios.pop() if len(ratios) == 1 else None


@dataclass
class QuiverPresentation:
    """Arrows of the Brauer-line quiver realised inside ``R_n``.

    ``arrows`` maps a name to ``(source vertex, target vertex, element)``.
    ``loop_signs[t]`` is the computed ``s`` in ``gamma_t beta_t = s y_n e(i_{t+1})``.
    """
    n: int
    vertices: list
    representatives: dict
    arrows: dict
    relations: list = field(default_factory=list)
    loop_signs: dict = field(default_factory=dict)
    junction: list = field(default_factory=list)
    unexplained_length3: list = field(default_factory=list)
    convention: str = COMPOSITION_CONVENTION

    @property
    def loop(self):
        return self.arrows["beta"][2]

    @property
    def verified(self):
        return all(r.passed for r in self.relations)


def _arrows(n):
    reps = {t: class_representative(n, t) for t in range(1, n)}
    last = reps[1]
    arrows = {"beta": (1, 1, rewrite(AlgebraElement(n, {(Idem(last), Dot(n)): 1})))}
    for t in range(1, n - 1):
        arrows[f"beta_{t}"] = (t, t + 1, one_ij(reps[t], reps[t + 1]))
        arrows[f"gamma_{t}"] = (t + 1, t, one_ij(reps[t + 1], reps[t]) * (-1) ** t)
    return reps, arrows


def _path_value(arrows, path):
    value = arrows[path[0]][2]
    for name in path[1:]:
        value = multiply(value, arrows[name][2])
    return value


def _paths(arrows, length):
    out = [(a,) for a in arrows]
    for _ in range(length - 1):
        out = [p + (a,) for p in out for a in arrows if arrows[p[-1]][1] == arrows[a][0]]
    return out


def quiver_presentation(n, strict=True):
    """Build the arrows from class representatives and verify the relations.

    The relations checked are ``beta^2``, ``beta_t beta_{t+1}``,
    ``gamma_{t+1} gamma_t`` and ``gamma_t beta_t - beta_{t+1} gamma_{t+1}``
    for ``1 <= t <= n-3``, the double-crossing vanishing behind them, and
    the loop identities ``gamma_t beta_t = +-y_n e(i_{t+1})``.  Any further
    relations touching the loop at vertex 1 are computed and reported in
    ``junction``.  With ``strict`` a failed relation raises.
    """
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    reps, arrows = _arrows(n)
    pres = QuiverPresentation(n, list(range(1, n)), reps, arrows)
    rel = pres.relations

    def check(name, ok, detail=""):
        rel.append(CheckResult(name, bool(ok), detail))

    for name, (_, _, x) in arrows.items():
        check(f"{name} != 0", not x.is_zero())
    check("beta^2 = 0", _path_value(arrows, ("beta", "beta")).is_zero())
    for t in range(1, n - 2):
        check(f"beta_{t} beta_{t + 1} = 0",
              _path_value(arrows, (f"beta_{t}", f"beta_{t + 1}")).is_zero())
        check(f"gamma_{t + 1} gamma_{t} = 0",
              _path_value(arrows, (f"gamma_{t + 1}", f"gamma_{t}")).is_zero())
        lhs = _path_value(arrows, (f"gamma_{t}", f"beta_{t}"))
        rhs = _path_value(arrows, (f"beta_{t + 1}", f"gamma_{t + 1}"))
        check(f"gamma_{t} beta_{t} = beta_{t + 1} gamma_{t + 1}",
              not lhs.is_zero() and (lhs - rhs).is_zero())
        a, b, c = reps[t], reps[t + 1], reps[t + 2]
        check(f"1_(i{t},i{t + 1}) 1_(i{t + 1},i{t + 2}) = 0",
              multiply(one_ij(a, b), one_ij(b, c)).is_zero())
        check(f"1_(i{t + 2},i{t + 1}) 1_(i{t + 1},i{t}) = 0",
              multiply(one_ij(c, b), one_ij(b, a)).is_zero())
    for t in range(1, n - 1):
        lhs = _path_value(arrows, (f"gamma_{t}", f"beta_{t}"))
        target = rewrite(AlgebraElement(n, {(Idem(reps[t + 1]), Dot(n)): 1}))
        sign = _ratio(lhs, target)
        pres.loop_signs[t] = sign
        check(f"gamma_{t} beta_{t} = +-y{n} e(i_{t + 1})", sign in (1, -1),
              f"sign {sign}, (-1)^t = {(-1) ** t}")

    zero2, equal2 = _length_two(arrows)
    listed_zero = {("beta", "beta")}
    listed_zero |= {(f"beta_{t}", f"beta_{t + 1}") for t in range(1, n - 2)}
    listed_zero |= {(f"gamma_{t + 1}", f"gamma_{t}") for t in range(1, n - 2)}
    for path in sorted(zero2 - listed_zero):
        pres.junction.append(f"{' '.join(path)} = 0")
    for path, (c, other) in sorted(equal2.items()):
        if "beta" in path + other:
            pres.junction.append(f"{' '.join(path)} = {c} {' '.join(other)}")
    extra = [p for p in zero2 - listed_zero if "beta" not in p]
    check("no vanishing length-2 paths beyond the listed ones", not extra, str(extra))
    pres.unexplained_length3 = _unexplained_length_three(arrows, zero2, equal2)
    check("length-3 vanishing follows from length-2 relations",
          not pres.unexplained_length3, str(pres.unexplained_length3))
    if strict and not pres.verified:
        bad = [r.name for r in rel if not r.passed]
        raise VerificationFailure("quiver", f"n={n}: {bad[0]}", bad)
    return pres


def _length_two(arrows):
    """Vanishing length-2 paths and proportionalities among parallel paths.

    ``equal2[p] = (c, q)`` records ``p = c q`` for a different path ``q`` of
    length 1 or 2 with the same ends.
    """
    values = {p: _path_value(arrows, p) for p in _paths(arrows, 2)}
    zero = {p for p, v in values.items() if v.is_zero()}
    candidates = dict(values)
    candidates.update({(a,): arrows[a][2] for a in arrows})
    equal = {}
    for p, v in values.items():
        if p in zero:
            continue
        for q, w in candidates.items():
            if q == p or w.is_zero():
                continue
            if (arrows[q[0]][0], arrows[q[-1]][1]) != (arrows[p[0]][0], arrows[p[-1]][1]):
                continue
            c = _ratio(v, w)
            if c is not None and (len(q) < len(p) or q > p):
                equal[p] = (c, q)
    return zero, equal


def _unexplained_length_three(arrows, zero2, equal2):
    out = []
    for path in _paths(arrows, 3):
        if not _path_value(arrows, path).is_zero():
            continue
        if path[:2] in zero2 or path[1:] in zero2:
            continue
        variants = []
        if path[:2] in equal2:
            variants.append(equal2[path[:2]][1] + path[2:])
        if path[1:] in equal2:
            variants.append(path[:1] + equal2[path[1:]][1])
        if not any(any(v[k:k + 2] in zero2 for k in range(len(v) - 1)) for v in variants):
            out.append(path)
    return out


def projective_isomorphism_check(n):
    """Explicit inverse pairs inside each class; vanishing connectors across far classes."""
    report = Report(f"projective classes, n={n}")
    classes = morita_partition(n)
    seqs = enumerate_admissible(n)
    inverse_fail, far_fail, near_unit = [], [], []
    for i in seqs:
        for j in seqs:
            gap = abs(i[-1] - j[-1])
            if gap == 0:
                if multiply(one_ij(i, j), one_ij(j, i)) != rewrite(_e(i)):
                    inverse_fail.append((i, j))
            elif gap >= 2:
                if not one_ij(i, j).is_zero():
                    far_fail.append((i, j))
            elif multiply(one_ij(i, j), one_ij(j, i)) == rewrite(_e(i)):
                near_unit.append((i, j))
    sizes = {k: len(v) for k, v in classes.items()}
    report.add("same-class pairs compose to e(i)", not inverse_fail,
               f"class sizes {sizes}", inverse_fail[:5])
    report.add("connectors across |class gap| >= 2 vanish", not far_fail, "", far_fail[:5])
    report.add("neighbouring classes are not isomorphic", not near_unit, "", near_unit[:5])
    report.add("n-1 classes", len(classes) == n - 1 and all(classes.values()),
               f"{len(classes)} classes")
    return report


def _hat(seq):
    return (0, 1) + tuple(r + 1 for r in seq[1:])


@lru_cache(maxsize=None)
def _corner_unit(n):
    return AlgebraElement(n, {(Idem(s),): 1 for s in enumerate_admissible(n) if s[1] == 1})


@lru_cache(maxsize=None)
def _generator_vector(n, g):
    """``e g' e`` in the coordinates of the structure table of ``R_n``."""
    table = structure_constants(n)
    if isinstance(g, Idem):
        if g.seq[0] != 0:
            return {}
        elem = rewrite(AlgebraElement(n, {(Idem(_hat(g.seq)),): 1}))
    else:
        lifted = Dot(g.k + 1) if isinstance(g, Dot) else Cross(g.k + 1)
        corner = _corner_unit(n)
        elem = rewrite(corner * AlgebraElement(n, {(lifted,): 1}) * corner)
    return {table.index[w]: c for w, c in normal_form(elem).items()}


def truncation_map(x, n=None):
    """Image of ``x`` in ``R_n`` under ``e(i) -> e(hat i)``, ``y_k -> y_{k+1}``, ``psi_k -> psi_{k+1}``.

    ``x`` lives in ``R_{n-1}``.  Each generator goes to ``e g' e`` in the
    corner ``e R_n e`` and words go to the product of those images, returned
    in canonical form.  Projecting only at the two ends would not be
    multiplicative: ``psi_2 e(0,1,n-1,...)`` passes through an idempotent
    outside the corner.  An idempotent ``e(t)`` with ``t_1 != 0`` is a
    cyclotomic generator and maps to zero.
    """
    n = x.n + 1 if n is None else n
    if n < 3 or x.n != n - 1:
        raise InvalidParameter(f"truncation needs R_(n-1) with n >= 3, got n={n}, x.n={x.n}")
    table = structure_constants(n)
    corner = {table.index[w]: c for w, c in normal_form(_corner_unit(n)).items()}
    total = {}
    for word, c in x.terms.items():
        value = corner
        for g in word:
            value = table.multiply(value, _generator_vector(n, g))
            if not value:
                break
        for k, v in value.items():
            total[k] = total.get(k, 0) + c * v
    return to_element(n, {table.basis[k]: v for k, v in total.items() if v})


@dataclass
class TruncationReport:
    n: int
    dim_truncated: int
    dim_target: int
    relation_checks: list
    basis_bijection_verified: bool
    structure_constants_match: bool = False
    mapping: dict = field(default_factory=dict, repr=False)

    @property
    def passed(self):
        return (self.basis_bijection_verified and self.structure_constants_match
                and all(c.passed for c in self.relation_checks)
                and self.dim_truncated == self.dim_target == comb(2 * (self.n - 2), self.n - 2))


def verify_truncation_iso(n, strict=True):
    """Witness ``R_{n-1} ~ e R_n e``: relations, basis bijection, structure constants."""
    if n < 3:
        raise InvalidParameter(f"truncation needs n >= 3, got {n}")
    checks = []
    bad = [label for label, rel in relation_instances(n - 1)
           if not truncation_map(rel, n).is_zero()]
    checks.append(CheckResult("relations of R_(n-1) hold in e R_n e", not bad,
                              f"{len(relation_instances(n - 1))} instances", bad[:5]))
    mismatch = []
    for t in permutations(range(n - 1)):
        if t[0] != 0:
            continue
        small = rewrite(_e(t)).is_zero()
        big = rewrite(_e(_hat(t))).is_zero()
        if small != big:
            mismatch.append(t)
    checks.append(CheckResult("e(i) = 0 iff e(hat i) = 0", not mismatch, "", mismatch[:5]))

    small_basis = enumerate_basis(n - 1)
    corner = [b for b in enumerate_basis(n) if b.source[1] == 1 and b.target[1] == 1]
    with_psi1 = [b for b in corner if 1 in b.reduced_word]
    checks.append(CheckResult("corner basis words avoid psi_1", not with_psi1, "",
                              with_psi1[:5]))
    mapping = {}
    for b in small_basis:
        image = normal_form(truncation_map(AlgebraElement(n - 1, {b.word: 1}), n))
        if len(image) == 1 and next(iter(image.values())) == 1:
            mapping[b] = next(iter(image))
    bijective = (len(mapping) == len(small_basis)
                 and set(mapping.values()) == set(corner))

    same_table = False
    if bijective:
        small_t, big_t = structure_constants(n - 1), structure_constants(n)
        to_big = {small_t.index[b]: big_t.index[mapping[b]] for b in small_basis}
        same_table = True
        for a in range(len(small_basis)):
            for b in range(len(small_basis)):
                lhs = {to_big[c]: k for c, k in small_t.product(a, b)}
                rhs = dict(big_t.product(to_big[a], to_big[b]))
                if lhs != rhs:
                    same_table = False
                    break
            if not same_table:
                break
    report = TruncationReport(n, len(corner), len(small_basis), checks, bijective,
                              same_table, mapping)
    if strict and not report.passed:
        raise VerificationFailure("truncation", f"n={n}", report)
    return report
