"""JSON forms of elements and reports, and the on-disk structure-constant cache.

Elements serialise as::

    {"n": 4, "terms": [{"coeff": "p/q", "word": ["e(0,1,3,2)", "y4", "p2"]}, ...]}

with terms in canonical form, ordered by basis index.  Rationals are always
``"p/q"`` strings.

A cache file holds one multiplication table::

    {"format": "cyclotomic-klr-table", "version": 1, "n": n,
     "basis": [{"source": [...], "target": [...], "dot": 0|1, "word": [k, ...]}, ...],
     "products": [[a, b, c, "p/q"], ...],
     "sha256": "<digest of the canonical JSON of everything above>"}

Loading checks the digest, the basis against the engine, and recomputes a
seeded sample of products.
"""

import hashlib
import json
import os
import random
from fractions import Fraction
from math import comb
from pathlib import Path

from .basis import StructureConstantTable, structure_constants
from .engine import NormalWord, enumerate_basis, multiply_normal, normal_form
from .errors import InvalidInput, VerificationFailure
from .words import format_coeff

__all__ = ["element_to_json", "element_from_json", "normal_word_to_json", "basis_to_json",
           "morita_to_json", "quiver_to_json", "report_to_json", "dumps",
           "CACHE_FORMAT", "CACHE_VERSION", "PROBE_SIZE", "table_to_json",
           "write_cache", "read_cache", "default_cache_dir", "default_cache_path", "cached_structure_constants"]

CACHE_FORMAT = "cyclotomic-klr-table"
CACHE_VERSION = 1
PROBE_SIZE = 32


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False)


def element_to_json(x):
    terms = [{"coeff": format_coeff(c), "word": [str(g) for g in nw.word]}
             for nw, c in normal_form(x).items()]
    return {"n": x.n, "terms": terms}


def element_from_json(data):
    from .expr import parse_element, evaluate
    from .words import AlgebraElement
    n = data["n"]
    out = AlgebraElement.zero(n)
    for term in data["terms"]:
        word = evaluate(parse_element("*".join(term["word"]) or "1", n), n)
        out = out + word * Fraction(term["coeff"])
    return out


def normal_word_to_json(b):
    return {"source": list(b.source), "target": list(b.target), "dot": b.dot,
            "word": list(b.reduced_word), "text": str(b), "degree": b.degree}


def basis_to_json(n, basis):
    return {"n": n, "dim": len(basis), "basis": [normal_word_to_json(b) for b in basis]}


def morita_to_json(n, partition):
    return {"n": n, "classes": {str(k): [list(s) for s in v] for k, v in partition.items()}}


def quiver_to_json(pres):
    return {
        "n": pres.n,
        "convention": pres.convention,
        "vertices": pres.vertices,
        "representatives": {str(t): list(s) for t, s in pres.representatives.items()},
        "arrows": [{"name": name, "source": s, "target": t, "element": element_to_json(x)}
                   for name, (s, t, x) in pres.arrows.items()],
        "loop_signs": {str(t): format_coeff(c) if c is not None else None
                       for t, c in pres.loop_signs.items()},
        "junction_relations": pres.junction,
        "relations": [check_to_json(c) for c in pres.relations],
    }


def check_to_json(c):
    return {"name": c.name, "passed": c.passed, "detail": c.detail}


def report_to_json(report):
    return {"title": report.title, "passed": report.passed,
            "checks": [check_to_json(c) for c in report.checks]}


# cache files

def _payload(table):
    return {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "n": table.n,
        "basis": [{"source": list(b.source), "target": list(b.target), "dot": b.dot,
                   "word": list(b.reduced_word)} for b in table.basis],
        "products": [[a, b, c, format_coeff(k)] for (a, b), terms in sorted(table.products.items())
                     for c, k in terms],
    }


def _digest(payload):
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def table_to_json(table):
    payload = _payload(table)
    payload["sha256"] = _digest(payload)
    return payload


def write_cache(table, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(table_to_json(table), separators=(",", ":")))
    os.replace(tmp, path)
    return path


def read_cache(path, seed=0, probe=PROBE_SIZE):
    """Load and validate a cache file; raise :class:`VerificationFailure` if it is off."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InvalidInput(f"cannot read cache {path}: {exc}") from None
    if not isinstance(data, dict) or data.get("format") != CACHE_FORMAT:
        raise VerificationFailure("cache format", f"{path} is not a table cache")
    if data.get("version") != CACHE_VERSION:
        raise VerificationFailure("cache version", f"version {data.get('version')}")
    stored = data.pop("sha256", None)
    if stored != _digest(data):
        raise VerificationFailure("cache digest", f"{path} was modified")
    n = data["n"]
    basis = []
    for entry in data["basis"]:
        b = NormalWord(tuple(entry["source"]), tuple(entry["target"]), entry["dot"])
        if list(b.reduced_word) != entry["word"]:
            raise VerificationFailure("cache basis", f"word of {b} does not match", entry)
        basis.append(b)
    if len(basis) != comb(2 * (n - 1), n - 1):
        raise VerificationFailure("cache basis", f"{len(basis)} elements for n={n}")
    if basis != enumerate_basis(n):
        raise VerificationFailure("cache basis", "basis differs from the engine's")
    products = {}
    for a, b, c, k in data["products"]:
        products.setdefault((a, b), []).append((c, Fraction(k)))
    table = StructureConstantTable(n, tuple(basis),
                                   {key: tuple(sorted(v)) for key, v in products.items()})
    _probe(table, seed, probe)
    return table


def _probe(table, seed, count):
    """Recompute ``count`` random composable products with the engine."""
    rng = random.Random(seed)
    starts = table.by_source()
    for _ in range(count):
        a = rng.randrange(len(table))
        b = rng.choice(starts[table.basis[a].target])
        expected = {table.index[w]: c for w, c in
                    multiply_normal(table.basis[a], table.basis[b]).items()}
        if dict(table.product(a, b)) != expected:
            raise VerificationFailure("cache probe", f"product ({a}, {b}) disagrees", (a, b))


def default_cache_dir():
    env = os.environ.get("KLR_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "cyclotomic_klr"


def default_cache_path(n, directory=None):
    return Path(directory or default_cache_dir()) / f"table_n{n}.json"


def cached_structure_constants(n, directory=None):
    """The table of ``R_n``, read from the cache directory or computed and stored there."""
    path = default_cache_path(n, directory)
    if path.exists():
        try:
            return read_cache(path)
        except (VerificationFailure, InvalidInput):
            pass
    table = structure_constants(n)
    write_cache(table, path)
    return table
