"""Verification suites behind ``klr verify``.

Each suite returns a :class:`~cyclotomic_klr.report.Report`; a suite never
raises on a failed identity, it records it.
"""

from itertools import permutations
from math import comb

from .basis import relation_soundness, verify_ring_axioms
from .derivations import (check_trace, closure_trace, derive_dot_rules, replay_all,
                          vanishing_closure)
from .engine import NormalWord, enumerate_basis, rewrite
from .errors import InvalidParameter, VerificationFailure
from .hecke import verify_identities
from .quotient import projective_isomorphism_check, quiver_presentation, verify_truncation_iso
from .report import CheckResult, Report
from .residues import (class_representative, enumerate_admissible, expected_class_size,
                       is_admissible, morita_partition, swap_component)
from .words import AlgebraElement, Dot, Idem

__all__ = ["SUITES", "engine_suite", "quiver_suite", "reptheory_suite", "run_suite"]

SUITES = ("engine", "quiver", "reptheory", "all")
# relation soundness in every left context is cubic in the basis size
CONTEXT_LIMIT = 4


def _e(seq, *dots):
    return AlgebraElement(len(seq), {tuple(Dot(k) for k in dots) + (Idem(seq),): 1})


def engine_suite(n, seed=0, sample=10 ** 5):
    report = Report(f"engine, n={n}")
    admissible = enumerate_admissible(n)
    report.add("idempotent count = 2^(n-2)", len(admissible) == 2 ** (n - 2),
               f"{len(admissible)}")

    closure = vanishing_closure(n)
    perms = list(permutations(range(n)))
    disagree = [t for t in perms if is_admissible(t) == (t in closure)]
    report.add("arc criterion = swap-closure oracle", not disagree,
               f"{len(perms)} sequences", disagree[:5])
    wrong = [t for t in perms if rewrite(_e(t)).is_zero() == is_admissible(t)]
    report.add("rewrite(e(i)) = 0 exactly for inadmissible i", not wrong, "", wrong[:5])

    try:
        traces = derive_dot_rules(n)
        known = replay_all(traces)
        extra = 0
        for t, chain in closure.items():
            if t[0] == 0:
                check_trace(closure_trace(t, chain), known)
                extra += 1
        report.add("derivation traces replay", True,
                   f"{len(traces)} dot-rule traces, {extra} closure traces")
    except VerificationFailure as exc:
        report.add("derivation traces replay", False, str(exc), exc.witness)

    dots = [(t, k) for t in admissible for k in range(1, n) if not rewrite(_e(t, k)).is_zero()]
    dots += [(t, "n^2") for t in admissible if not rewrite(_e(t, n, n)).is_zero()]
    report.add("y_k e(i) = 0 (k < n) and y_n^2 e(i) = 0", not dots, "", dots[:5])

    basis = enumerate_basis(n)
    members = set(basis)
    loops = [t for t in admissible
             if NormalWord(t, t, 1) not in members
             or sum(1 for b in basis if b.source == t and b.target == t) != 2]
    report.add("y_n e(i) is a basis element and dim e(i) R e(i) = 2", not loops, "", loops[:5])
    report.add("dim R_n = C(2(n-1), n-1)", len(basis) == comb(2 * (n - 1), n - 1),
               f"{len(basis)}")

    try:
        report.extend(verify_ring_axioms(n, sample=sample, seed=seed), "ring: ")
    except VerificationFailure as exc:
        report.add(f"ring: {exc.check}", False, str(exc), exc.witness)
    report.extend(relation_soundness(n, contexts=n <= CONTEXT_LIMIT))
    return report


def quiver_suite(n):
    report = Report(f"quiver, n={n}")
    classes = morita_partition(n)
    sizes = {k: len(v) for k, v in classes.items()}
    report.add("class k has C(n-2, k-1) members",
               all(sizes[k] == expected_class_size(n, k) for k in classes), f"{sizes}")
    connected = [k for k, v in classes.items()
                 if swap_component(class_representative(n, k)) != sorted(v)]
    report.add("classes are swap-connected around i_k", not connected, "", connected)
    report.extend(projective_isomorphism_check(n), "projectives: ")
    pres = quiver_presentation(n, strict=False)
    for c in pres.relations:
        report.checks.append(CheckResult(f"relation: {c.name}", c.passed, c.detail, c.witness))
    if n >= 3:
        trunc = verify_truncation_iso(n, strict=False)
        for c in trunc.relation_checks:
            report.checks.append(CheckResult(f"truncation: {c.name}", c.passed, c.detail,
                                             c.witness))
        report.add("truncation: basis bijection with coefficient 1",
                   trunc.basis_bijection_verified)
        report.add("truncation: structure constants agree", trunc.structure_constants_match)
        report.add("truncation: dim e R_n e = C(2(n-2), n-2)",
                   trunc.dim_truncated == trunc.dim_target == comb(2 * (n - 2), n - 2),
                   f"{trunc.dim_truncated}")
    return report


def reptheory_suite(n):
    report = Report(f"reptheory, n={n}")
    for c in verify_identities(n).identities:
        report.checks.append(c)
    return report


def run_suite(n, suite="all", seed=0, sample=10 ** 5):
    if n < 2:
        raise InvalidParameter(f"n must be >= 2, got {n}")
    if suite not in SUITES:
        raise InvalidParameter(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = Report(f"verify n={n} suite={suite}")
    if suite in ("engine", "all"):
        report.extend(engine_suite(n, seed, sample), "engine: ")
    if suite in ("quiver", "all"):
        report.extend(quiver_suite(n), "quiver: ")
    if suite in ("reptheory", "all"):
        report.extend(reptheory_suite(n), "reptheory: ")
    return report
