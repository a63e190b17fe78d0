"""Detectors and theorem checks for generalized near-group rings.

The check_* functions return report dicts with stable key order
({"check", "pass", "witness", "details"}) rather than raising: a failed
mathematical assertion is data.  Typed errors are reserved for violated
preconditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    FusionRing,
    fpdim_ring,
    fpdim_simple,
    is_invertible,
    require_valid,
    self_decomp,
)
from .errors import (
    DetectorDisagreement,
    NotFibExtension,
    NotPointedPrecondition,
    PointedInput,
    TypeExtractionFailure,
)
from .exactreal import QuadraticReal, RealValue
from .families import restrict
from .groups import GroupTable, Subgroup, all_subgroups, is_isomorphic
from .structure import (
    ActionData,
    SubringHandle,
    action,
    adjoint_subring,
    invertibles,
    subring_closure,
    universal_grading,
)


@dataclass(frozen=True)
class GNGType:
    """The type (G, Gamma, k_1..k_n) of a generalized near-group ring."""

    group: GroupTable
    gamma: Subgroup
    kvec: dict  # non-invertible simple label -> multiplicity

    @property
    def index(self) -> int:
        return self.group.order // self.gamma.order

    @property
    def is_zero_kvec(self) -> bool:
        return all(v == 0 for v in self.kvec.values())

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group.order,
            "group": list(self.group.elements),
            "gamma": list(self.gamma.labels()),
            "kvec": {k: v for k, v in sorted(self.kvec.items())},
        }


@dataclass(frozen=True)
class CdSet:
    """Sorted distinct simple dimensions of a ring; always contains 1."""

    values: tuple  # RealValue, ascending

    def __post_init__(self):
        if not any(v.is_exact and v.exact == QuadraticReal(1) for v in self.values):
            raise ValueError("cd set must contain 1")

    def __len__(self):
        return len(self.values)

    def to_json(self):
        return [v.to_json() for v in self.values]


def _non_invertibles(ring: FusionRing) -> list:
    return [i for i in range(ring.rank) if not is_invertible(ring, i)]


def _require_non_pointed(ring: FusionRing) -> list:
    require_valid(ring)
    non_inv = _non_invertibles(ring)
    if not non_inv:
        raise PointedInput(f"{ring.name} has no non-invertible simple")
    return non_inv


# ---------------------------------------------------------------------------
# Detection and typing
# ---------------------------------------------------------------------------

def is_gng(ring: FusionRing) -> bool:
    """Whether the invertibles act transitively on the non-invertibles."""
    _require_non_pointed(ring)
    act = action(ring)
    non_inv_orbits = [o for o in act.orbits if not set(o) <= set(act.group_indices)]
    return len(non_inv_orbits) == 1


def gng_type(ring: FusionRing, act: ActionData | None = None) -> GNGType:
    """Extract (G, Gamma, kvec); all non-invertible self-decompositions
    must agree, and Gamma must be their common stabilizer."""
    non_inv = _require_non_pointed(ring)
    if act is None:
        act = action(ring)
    decomp0 = self_decomp(ring, non_inv[0])
    for i in non_inv[1:]:
        if self_decomp(ring, i) != decomp0:
            raise TypeExtractionFailure(
                f"{ring.basis[i]} and {ring.basis[non_inv[0]]} have different "
                "self-decompositions"
            )
    inv_set = set(act.group_indices)
    gamma = act.stabilizers[non_inv[0]]
    # the invertible part of X X^* is exactly the stabilizer, each once
    gamma_basis = {act.group_indices[t] for t in gamma.members}
    inv_part = {i: m for i, m in decomp0.items() if i in inv_set}
    if inv_part != {i: 1 for i in gamma_basis}:
        raise TypeExtractionFailure(
            "invertible summands of X X^* do not match the stabilizer"
        )
    kvec = {ring.basis[i]: decomp0.get(i, 0) for i in non_inv}
    return GNGType(act.group, gamma, kvec)


def is_near_group(ring: FusionRing) -> bool:
    """Exactly one non-invertible simple (then G = Gamma automatically)."""
    require_valid(ring)
    return len(_non_invertibles(ring)) == 1


def cd_set(ring: FusionRing) -> CdSet:
    """Deduplicated, exact-aware, ascending set of simple dimensions."""
    require_valid(ring)
    dims = [fpdim_simple(ring, i) for i in range(ring.rank)]
    out = []
    for d in dims:
        if not any(d.isclose(e, tol=1e-9) for e in out):
            out.append(d)
    out.sort(key=lambda v: v.value)
    return CdSet(tuple(out))


def _is_z2_split(ring: FusionRing) -> bool:
    """Whether (invertibles | non-invertibles) is a valid Z2-grading."""
    non_inv = set(_non_invertibles(ring))
    if not non_inv:
        return False
    N = ring.dense()
    for i in range(ring.rank):
        for j in range(ring.rank):
            parity = (i in non_inv) ^ (j in non_inv)
            for k in N[i, j].nonzero()[0]:
                if ((int(k) in non_inv) != parity):
                    return False
    return True


def is_gty(ring: FusionRing) -> bool:
    """Generalized Tambara-Yamagami detector, cross-checked two ways.

    Detector A: generalized near-group with zero k-vector.  Detector B:
    exactly two distinct simple dimensions and the invertible/non-
    invertible split is itself a grading.  The two must agree.
    """
    non_inv = _require_non_pointed(ring)
    a = is_gng(ring) and gng_type(ring).is_zero_kvec
    b = len(cd_set(ring)) == 2 and _is_z2_split(ring)
    if a != b:
        raise DetectorDisagreement(
            f"{ring.name}: kvec detector says {a}, dimension/grading detector says {b}"
        )
    return a


# ---------------------------------------------------------------------------
# Rank / dimension bookkeeping
# ---------------------------------------------------------------------------

def check_rank_dim(ring: FusionRing, t: GNGType) -> dict:
    """rank = [G:Gamma](1+|Gamma|) and FPdim = [G:Gamma](d^2+|Gamma|)."""
    idx = t.index
    expected_rank = idx * (1 + t.gamma.order)
    rank_ok = ring.rank == expected_rank
    d = fpdim_simple(ring, _non_invertibles(ring)[0])
    expected_dim = (d * d + RealValue.from_exact(t.gamma.order)) * RealValue.from_exact(idx)
    total = fpdim_ring(ring)
    if total.is_exact and expected_dim.is_exact:
        dim_ok = total.exact == expected_dim.exact
    else:
        dim_ok = total.isclose(expected_dim, tol=1e-9)
    return {
        "check": "rank_dimension",
        "pass": bool(rank_ok and dim_ok),
        "witness": None if rank_ok and dim_ok else ring.name,
        "details": {
            "rank": ring.rank,
            "expected_rank": expected_rank,
            "fpdim": total.to_json(),
            "expected_fpdim": expected_dim.to_json(),
        },
    }


def category_type(ring: FusionRing) -> list:
    """Counts of simples per dimension, ascending: [(dim, count), ...]."""
    require_valid(ring)
    buckets = []
    for i in range(ring.rank):
        d = fpdim_simple(ring, i)
        for slot in buckets:
            if d.isclose(slot[0], tol=1e-9):
                slot[1] += 1
                break
        else:
            buckets.append([d, 1])
    buckets.sort(key=lambda s: s[0].value)
    return [(d, c) for d, c in buckets]


# ---------------------------------------------------------------------------
# Cosine Diophantine search
# ---------------------------------------------------------------------------

#: Exact target (5 + sqrt 5)/8 for the cosine-square sums.
COSINE_TARGET = QuadraticReal(Fraction(5, 8), Fraction(1, 8), 5)

_COSINE_TOL = 1e-12


def cosine_square_solutions(max_bound: int) -> tuple:
    """Integer solutions of cos^2(pi/a) + cos^2(pi/b) = (5+sqrt5)/8 with
    3 <= a <= b <= max_bound, and likewise for triples.

    cos^2(pi/x) increases in x and already reaches the target at x = 10,
    so any solution component is at most 10; the search still scans the
    full requested range.
    """
    if max_bound < 10:
        raise ValueError("max_bound must be at least 10")
    target = float(COSINE_TARGET)
    c2 = {x: math.cos(math.pi / x) ** 2 for x in range(3, max_bound + 1)}
    pairs = [
        (a, b)
        for a in range(3, max_bound + 1)
        for b in range(a, max_bound + 1)
        if abs(c2[a] + c2[b] - target) <= _COSINE_TOL
    ]
    triples = [
        (a, b, c)
        for a in range(3, max_bound + 1)
        for b in range(a, max_bound + 1)
        if c2[a] + c2[b] <= target + _COSINE_TOL
        for c in range(b, max_bound + 1)
        if abs(c2[a] + c2[b] + c2[c] - target) <= _COSINE_TOL
    ]
    return pairs, triples


# ---------------------------------------------------------------------------
# Fibonacci extensions
# ---------------------------------------------------------------------------

_PHI = QuadraticReal(Fraction(1, 2), Fraction(1, 2), 5)


def _is_fibonacci_ring(ring: FusionRing) -> bool:
    if ring.rank != 2:
        return False
    x = 1 - ring.unit
    return (
        ring.dual[x] == x
        and ring.N(x, x, ring.unit) == 1
        and ring.N(x, x, x) == 1
    )


def classify_fib_extension(ring: FusionRing) -> dict:
    """Checks for a ring graded over a Fibonacci trivial component:

    (a) every grading component has rank 2 with dimensions {1, phi};
    (b) the ring has category type (1, n; phi, n) with n = #invertibles;
    (c) the grading group is isomorphic to the invertibles group.
    """
    require_valid(ring)
    grading = universal_grading(ring)
    trivial_idxs = grading.components[grading.trivial]
    base = restrict(ring, trivial_idxs, name=f"{ring.name}_e")
    if not _is_fibonacci_ring(base):
        raise NotFibExtension(f"{ring.name}: trivial component is not Fibonacci")

    phi = RealValue.from_exact(_PHI)
    one = RealValue.from_exact(1)
    comp_ok = True
    for label, idxs in grading.components.items():
        if len(idxs) != 2:
            comp_ok = False
            break
        dims = sorted((fpdim_simple(ring, i) for i in idxs), key=lambda v: v.value)
        if not (dims[0] == one and dims[1] == phi):
            comp_ok = False
            break

    group, _ = invertibles(ring)
    n = group.order
    ctype = category_type(ring)
    type_ok = (
        len(ctype) == 2
        and ctype[0][0] == one
        and ctype[0][1] == n
        and ctype[1][0] == phi
        and ctype[1][1] == n
    )
    iso_ok = is_isomorphic(grading.group, group)
    ok = comp_ok and type_ok and iso_ok
    return {
        "check": "fib_extension",
        "pass": bool(ok),
        "witness": None if ok else ring.name,
        "details": {
            "components_rank2_dims": comp_ok,
            "category_type": [[d.to_json(), c] for d, c in ctype],
            "n": n,
            "grading_iso_invertibles": iso_ok,
        },
    }


# ---------------------------------------------------------------------------
# Exact factorization
# ---------------------------------------------------------------------------

def exact_factorization(ring: FusionRing, A: SubringHandle, B: SubringHandle) -> bool:
    """Whether every simple is uniquely X Y with X in A, Y in B, and the
    two subrings meet only in the unit."""
    require_valid(ring)
    if A.ring is not ring or B.ring is not ring:
        raise ValueError("subrings must belong to the ring being factorized")
    if A.indices & B.indices != {ring.unit}:
        return False
    N = ring.dense()
    seen = set()
    for i in A.indices:
        for j in B.indices:
            support = N[i, j].nonzero()[0]
            if len(support) != 1 or N[i, j, support[0]] != 1:
                return False  # some product is not simple
            k = int(support[0])
            if k in seen:
                return False  # not injective
            seen.add(k)
    return len(seen) == ring.rank


# ---------------------------------------------------------------------------
# Structure theorem for nonzero k-vector
# ---------------------------------------------------------------------------

def gng_subring_check(ring: FusionRing, S: SubringHandle) -> bool:
    """Extract S as a standalone ring and test the near-group-action
    property there.  S must be non-pointed."""
    if S.is_pointed():
        raise NotPointedPrecondition("subring has no non-invertible simple")
    sub = restrict(ring, S.indices, name=f"{ring.name}_sub")
    return is_gng(sub)


def check_structure_theorem(ring: FusionRing) -> dict:
    """For a generalized near-group ring with nonzero k-vector:

    (a) the adjoint subring is itself generalized near-group and its own
        universal grading is trivial;
    (b) component unions over subgroups of the grading group are
        non-pointed subrings, and the subring generated by any single
        non-invertible simple is one of them;
    (c) every component contains an invertible, has the adjoint's size,
        and equals an invertible translate of the adjoint.
    """
    non_inv = _require_non_pointed(ring)
    t = gng_type(ring)
    if t.is_zero_kvec:
        raise ValueError("structure check applies to nonzero k-vectors")

    details = {}
    adj = adjoint_subring(ring)
    adj_ring = restrict(ring, adj.indices, name=f"{ring.name}_ad")
    a_gng = is_gng(adj_ring)
    a_triv = universal_grading(adj_ring).group.order == 1
    details["adjoint_is_gng"] = a_gng
    details["adjoint_grading_trivial"] = a_triv

    grading = universal_grading(ring)
    subs = all_subgroups(grading.group)
    comp_labels = list(grading.components)
    lattice = set()
    lattice_ok = True
    for H in subs:
        union = frozenset(
            i
            for m in H.members
            for i in grading.components[comp_labels[m]]
        )
        handle = SubringHandle(ring, union)
        if not handle.is_closed() or handle.is_pointed():
            lattice_ok = False
            break
        lattice.add(union)
    details["subgroup_count"] = len(subs)
    details["graded_subrings_nonpointed"] = lattice_ok
    gen_ok = lattice_ok and all(
        subring_closure(ring, [i]).indices in lattice for i in non_inv
    )
    details["generated_subrings_in_lattice"] = gen_ok

    comp_ok = True
    inv_set = set(invertibles(ring)[1])
    adj_idxs = set(grading.components[grading.trivial])
    N = ring.dense()
    for label, idxs in grading.components.items():
        comp_inv = [i for i in idxs if i in inv_set]
        if not comp_inv or len(idxs) != len(adj_idxs):
            comp_ok = False
            break
        for delta in comp_inv:
            translate = set()
            for a in adj_idxs:
                fiber = N[delta, a].nonzero()[0]
                translate.add(int(fiber[0]))
            if translate != set(idxs):
                comp_ok = False
                break
        if not comp_ok:
            break
    details["components_are_invertible_translates"] = comp_ok

    ok = a_gng and a_triv and lattice_ok and gen_ok and comp_ok
    return {
        "check": "structure_theorem",
        "pass": bool(ok),
        "witness": None if ok else ring.name,
        "details": details,
    }


# ---------------------------------------------------------------------------
# Ring isomorphism (constants-preserving relabeling)
# ---------------------------------------------------------------------------

def ring_isomorphism(r1: FusionRing, r2: FusionRing) -> dict | None:
    """A basis bijection preserving unit, duals and all constants, found
    by backtracking with dimension-profile pruning; None if none exists.
    Intended for desk-scale ranks (<= 16 or so)."""
    require_valid(r1)
    require_valid(r2)
    r = r1.rank
    if r != r2.rank:
        return None

    def profile(ring, i):
        d = fpdim_simple(ring, i)
        fib = sorted(ring.dense()[i].flatten().tolist())
        return (i == ring.unit, ring.dual[i] == i, round(d.value, 9), tuple(fib))

    prof2 = {}
    for j in range(r):
        prof2.setdefault(profile(r2, j), []).append(j)
    candidates = []
    for i in range(r):
        p = profile(r1, i)
        if p not in prof2:
            return None
        candidates.append(prof2[p])

    N1, N2 = r1.dense(), r2.dense()
    phi = [-1] * r
    used = [False] * r

    def consistent(i: int) -> bool:
        assigned = [x for x in range(r) if phi[x] >= 0]
        for a in assigned:
            for b in assigned:
                for c in assigned:
                    if N1[a, b, c] != N2[phi[a], phi[b], phi[c]]:
                        return False
        if phi[r1.dual[i]] >= 0 and phi[r1.dual[i]] != r2.dual[phi[i]]:
            return False
        return True

    order = sorted(range(r), key=lambda i: len(candidates[i]))

    def backtrack(pos: int) -> bool:
        if pos == r:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            phi[i], used[j] = j, True
            if consistent(i) and backtrack(pos + 1):
                return True
            phi[i], used[j] = -1, False
        return False

    if not backtrack(0):
        return None
    return {i: phi[i] for i in range(r)}


# ---------------------------------------------------------------------------
# Multiplicity bound
# ---------------------------------------------------------------------------

def min_summands_check(mults) -> bool:
    """If sum(m^2) equals 2^(2i-1) for some i, then sum(m) >= 2^i."""
    mults = [int(m) for m in mults]
    if any(m <= 0 for m in mults):
        raise ValueError("multiplicities must be positive")
    s2 = sum(m * m for m in mults)
    # s2 == 2^(2i-1) iff s2 is a power of two with odd exponent
    if s2 & (s2 - 1):
        return True
    e = s2.bit_length() - 1
    if e % 2 == 0:
        return True
    i = (e + 1) // 2
    return sum(mults) >= 2**i
