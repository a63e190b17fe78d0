"""The theorem-verification suite over the built-in corpus.

Each check produces a report dict with stable key order; the aggregate
is deterministic (sorted by check id, no timestamps) so repeated runs
are byte-identical.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .classify import (
    check_rank_dim,
    check_structure_theorem,
    classify_fib_extension,
    exact_factorization,
    gng_type,
    is_gng,
    is_gty,
    cosine_square_solutions,
    min_summands_check,
    ring_isomorphism,
)
from .core import FusionRing, fpdim_ring, fpdim_simple, is_invertible, validate
from .corpus import load_corpus
from .exactreal import QuadraticReal, RealValue
from .families import adjoint_extract, psu2_6, su2_level
from .groups import cyclic, direct_product, is_isomorphic
from .structure import adjoint_subring, pointed_subring, universal_grading


def _report(check: str, ok: bool, witness=None, details=None) -> dict:
    return {
        "check": check,
        "pass": bool(ok),
        "witness": witness,
        "details": details or {},
    }


def _is_pointed_ring(ring: FusionRing) -> bool:
    return all(is_invertible(ring, i) for i in range(ring.rank))


def _valid_entries(corpus) -> list:
    """Entries passing the axioms; the axioms check reports the rest."""
    return [e for e in corpus if validate(e.ring).passed]


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def check_axioms(corpus) -> dict:
    failures = []
    for entry in corpus:
        report = validate(entry.ring)
        if not report.passed:
            failures.append(entry.name)
    return _report(
        "axioms",
        not failures,
        failures or None,
        {"rings": len(corpus)},
    )


def _dim_fingerprint(ring: FusionRing) -> tuple:
    return tuple(
        (ring.basis[i], round(fpdim_simple(ring, i).value, 9)) for i in range(ring.rank)
    )


def _mutate(ring: FusionRing, cell: tuple) -> FusionRing:
    constants = dict(ring.constants)
    constants[cell] = constants.get(cell, 0) + 1
    return FusionRing(f"{ring.name}!mut", ring.basis, ring.unit, list(ring.dual), constants)


def _mutation_cells(ring: FusionRing) -> list:
    """Exhaustive cells for tiny ranks, a deterministic sample otherwise."""
    r = ring.rank
    if r <= 5:
        return [(i, j, k) for i in range(r) for j in range(r) for k in range(r)]
    per_ring = 6 if r > 20 else 12
    cells = sorted(ring.constants)
    step = max(1, len(cells) // per_ring)
    picked = cells[::step][:per_ring]
    # a few zero cells as well, spread deterministically
    zeros = []
    for t in range(per_ring // 2):
        cell = ((t * 7) % r, (t * 11 + 1) % r, (t * 13 + 2) % r)
        if cell not in ring.constants:
            zeros.append(cell)
    return picked + zeros


def check_fault_injection(corpus) -> dict:
    """Single-constant corruption must be caught: either an axiom fails
    or the per-simple dimension fingerprint moves."""
    missed = []
    tested = 0
    for entry in _valid_entries(corpus):
        base_fp = _dim_fingerprint(entry.ring)
        for cell in _mutation_cells(entry.ring):
            tested += 1
            mutant = _mutate(entry.ring, cell)
            if not validate(mutant).passed:
                continue
            if _dim_fingerprint(mutant) != base_fp:
                continue
            missed.append([entry.name, [entry.ring.basis[x] for x in cell]])
    return _report(
        "fault_injection",
        not missed,
        missed or None,
        {"mutations_tested": tested},
    )


def check_exact_dims(corpus) -> dict:
    """Pinned exact dimensions, plus the closed-form oracle for the
    numeric path (truncated spin rings, tolerance 1e-9)."""
    phi = QuadraticReal(Fraction(1, 2), Fraction(1, 2), 5)
    sqrt2 = QuadraticReal.sqrt_of(2)
    want = [
        ("fibonacci", "X", phi),
        ("psu2_6", "X", QuadraticReal(1, 1, 2)),
        ("ty_z2", "X[0]", sqrt2),
    ]
    ring_want = [
        ("fibonacci", QuadraticReal(Fraction(5, 2), Fraction(1, 2), 5)),
        ("psu2_6", QuadraticReal(8, 4, 2)),
    ]
    by_name = {e.name: e.ring for e in _valid_entries(corpus)}
    bad = []
    for name, label, expected in want:
        if name not in by_name:
            continue
        got = fpdim_simple(by_name[name], label)
        if not (got.is_exact and got.exact == expected):
            bad.append([name, label, got.to_json()])
    for name, expected in ring_want:
        if name not in by_name:
            continue
        got = fpdim_ring(by_name[name])
        if not (got.is_exact and got.exact == expected):
            bad.append([name, "FPdim", got.to_json()])
    # numeric-path oracle: d_a = sin((a+1)pi/(k+2)) / sin(pi/(k+2))
    numeric_checked = 0
    for k in (5, 6):
        name = f"su2_{k}"
        if name not in by_name:
            continue
        ring = by_name[name]
        for a in range(k + 1):
            d = fpdim_simple(ring, str(a))
            truth = math.sin((a + 1) * math.pi / (k + 2)) / math.sin(math.pi / (k + 2))
            if abs(d.value - truth) > 1e-9:
                bad.append([name, str(a), d.to_json()])
            numeric_checked += 1
    return _report(
        "exact_dims", not bad, bad or None, {"numeric_oracle_values": numeric_checked}
    )


def check_rank_dimension(corpus) -> dict:
    """The rank and dimension formulas on every near-group-action ring."""
    bad, checked = [], 0
    for entry in _valid_entries(corpus):
        if _is_pointed_ring(entry.ring):
            continue
        if not is_gng(entry.ring):
            continue
        t = gng_type(entry.ring)
        rep = check_rank_dim(entry.ring, t)
        checked += 1
        if not rep["pass"]:
            bad.append(entry.name)
    return _report("rank_dimension", not bad, bad or None, {"gng_rings": checked})


def check_cosine_solutions(_corpus) -> dict:
    results = {}
    ok = True
    for bound in (10, 25, 50):
        pairs, triples = cosine_square_solutions(bound)
        results[str(bound)] = {"pairs": [list(p) for p in pairs], "triples": [list(t) for t in triples]}
        ok = ok and pairs == [(3, 5)] and triples == []
    return _report("cosine_solutions", ok, None if ok else results, results)


def check_fib_extensions(corpus) -> dict:
    bad, checked = [], 0
    for entry in _valid_entries(corpus):
        if entry.family not in ("fib_ext", "fibonacci"):
            continue
        ring = entry.ring
        checked += 1
        rep = classify_fib_extension(ring)
        fact = exact_factorization(ring, adjoint_subring(ring), pointed_subring(ring))
        if not (rep["pass"] and fact):
            bad.append([entry.name, {"classify": rep["pass"], "factorization": fact}])
    return _report("fib_extensions", not bad, bad or None, {"rings": checked})


def check_adjoint_structure(corpus) -> dict:
    """Structure of nonzero-k rings: near-group adjoint with trivial
    grading, subgroup/subring lattice, invertible-translate components."""
    bad, details = [], {}
    for entry in _valid_entries(corpus):
        if entry.family not in ("fib_ext", "fibonacci", "psu2_6"):
            continue
        rep = check_structure_theorem(entry.ring)
        if not rep["pass"]:
            bad.append(entry.name)
        if entry.name == "fib_ext_z6":
            details["fib_ext_z6_subgroups"] = rep["details"]["subgroup_count"]
            if rep["details"]["subgroup_count"] != 4:
                bad.append([entry.name, "expected 4 subgroups"])
    return _report("adjoint_structure", not bad, bad or None, details)


def check_gty_detectors(corpus) -> dict:
    """The zero-k-vector detector agrees with the dimension/grading
    characterization corpus-wide, and matches the family expectation."""
    expected_true = {"gty", "n_ising"}
    expected_false = {"fibonacci", "near_group", "psu2_6", "fib_ext"}
    bad, checked = [], 0
    for entry in _valid_entries(corpus):
        if _is_pointed_ring(entry.ring):
            continue
        checked += 1
        got = is_gty(entry.ring)  # raises DetectorDisagreement on any split
        if entry.family in expected_true and not got:
            bad.append([entry.name, "expected gty"])
        if entry.family in expected_false and got:
            bad.append([entry.name, "expected non-gty"])
    return _report("gty_detectors", not bad, bad or None, {"rings": checked})


def check_gty_grading_order(corpus) -> dict:
    """|U| = 2 [G : Gamma] on every generalized Tambara-Yamagami ring."""
    bad, checked = [], 0
    for entry in _valid_entries(corpus):
        if _is_pointed_ring(entry.ring) or not is_gty(entry.ring):
            continue
        t = gng_type(entry.ring)
        u_order = universal_grading(entry.ring).group.order
        checked += 1
        if u_order != 2 * t.index:
            bad.append([entry.name, u_order, 2 * t.index])
    return _report("gty_grading_order", not bad, bad or None, {"gty_rings": checked})


def check_n_ising(corpus) -> dict:
    """Invariants of the sqrt(2)-extension family, re-verified externally."""
    sqrt2 = RealValue.from_exact(QuadraticReal.sqrt_of(2))
    bad = []
    for entry in _valid_entries(corpus):
        if entry.family != "n_ising":
            continue
        N = int(entry.name.rsplit("_", 1)[1])
        ring = entry.ring
        from .structure import invertibles

        group, _ = invertibles(ring)
        if not is_isomorphic(group, direct_product(cyclic(2), cyclic(2 ** (N - 1)))):
            bad.append([entry.name, "invertibles"])
        non_inv = [i for i in range(ring.rank) if not is_invertible(ring, i)]
        if len(non_inv) != 2 ** (N - 1):
            bad.append([entry.name, "count"])
        if any(fpdim_simple(ring, i) != sqrt2 for i in non_inv):
            bad.append([entry.name, "dimension"])
        if not is_isomorphic(universal_grading(ring).group, cyclic(2**N)):
            bad.append([entry.name, "grading"])
        self_dual = [i for i in non_inv if ring.dual[i] == i]
        if (N == 1 and not self_dual) or (N >= 2 and self_dual):
            bad.append([entry.name, "self-duality"])
    return _report("n_ising", not bad, bad or None, {})


def check_verlinde_crosscheck(_corpus) -> dict:
    """The adjoint of the level-6 spin ring matches the explicit rank-4
    table under a constants-preserving relabeling."""
    extracted = adjoint_extract(su2_level(6))
    explicit = psu2_6()
    mapping = ring_isomorphism(extracted, explicit)
    ok = mapping is not None
    return _report(
        "verlinde_crosscheck",
        ok,
        None if ok else "no constants-preserving bijection",
        {"mapping": {extracted.basis[i]: explicit.basis[j] for i, j in mapping.items()}}
        if ok
        else {},
    )


def _square_vectors(budget: int):
    """All non-increasing positive-integer vectors with sum of squares <= budget."""
    def rec(prefix, max_part, remaining):
        yield prefix
        for m in range(min(max_part, math.isqrt(remaining)), 0, -1):
            yield from rec(prefix + [m], m, remaining - m * m)

    for vec in rec([], math.isqrt(budget), budget):
        if vec:
            yield vec


def check_multiplicity_bound(_corpus) -> dict:
    """Brute force over all multiplicity vectors with sum(m^2) <= 128."""
    bad, count = [], 0
    equality_hit = False
    for vec in _square_vectors(128):
        count += 1
        if not min_summands_check(vec):
            bad.append(vec)
        if sorted(vec) == [2, 2]:
            equality_hit = sum(vec) == 4  # 2^i at i = 2
    ok = not bad and equality_hit
    return _report(
        "multiplicity_bound",
        ok,
        bad or None,
        {"vectors": count, "equality_witness": [2, 2]},
    )


def check_determinism(corpus) -> dict:
    """Serialization round-trips reproduce canonical files byte-for-byte."""
    bad = []
    for entry in _valid_entries(corpus):
        s1 = entry.ring.to_json_str()
        back = FusionRing.from_json_str(s1)
        if back.to_json_str() != s1:
            bad.append([entry.name, "ring round-trip"])
        if not _is_pointed_ring(entry.ring):
            g1 = universal_grading(entry.ring).to_json_str()
            g2 = universal_grading(back).to_json_str()
            if g1 != g2:
                bad.append([entry.name, "grading"])
    return _report("determinism", not bad, bad or None, {"rings": len(corpus)})


CHECKS = {
    "axioms": check_axioms,
    "fault_injection": check_fault_injection,
    "exact_dims": check_exact_dims,
    "rank_dimension": check_rank_dimension,
    "cosine_solutions": check_cosine_solutions,
    "fib_extensions": check_fib_extensions,
    "adjoint_structure": check_adjoint_structure,
    "gty_detectors": check_gty_detectors,
    "gty_grading_order": check_gty_grading_order,
    "n_ising": check_n_ising,
    "verlinde_crosscheck": check_verlinde_crosscheck,
    "multiplicity_bound": check_multiplicity_bound,
    "determinism": check_determinism,
}


def run_verify(only: str | None = None, jobs: int = 1) -> dict:
    """Run the suite (optionally a single check) and aggregate a report."""
    names = sorted(CHECKS)
    if only is not None:
        if only not in CHECKS:
            raise KeyError(f"unknown check {only!r}; known: {', '.join(names)}")
        names = [only]
    corpus = load_corpus()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = {name: pool.submit(CHECKS[name], corpus) for name in names}
            reports = [futures[name].result() for name in names]
    else:
        reports = [CHECKS[name](corpus) for name in names]
    return {
        "pass": all(r["pass"] for r in reports),
        "counts": {
            "total": len(reports),
            "failed": sum(not r["pass"] for r in reports),
        },
        "checks": reports,
    }
