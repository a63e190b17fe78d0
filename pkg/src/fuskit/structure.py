"""Structural invariants of a fusion ring.

Invertibles and their left-tensor action, pointed/adjoint subrings,
subring closure, the universal grading and commutator subrings.  All
functions require a validated ring and are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import (
    FusionRing,
    fpdim_simple,
    is_invertible,
    require_valid,
    self_decomp,
)
from .errors import GradingInconsistency
from .exactreal import RealValue
from .groups import GroupTable, Subgroup


@dataclass(frozen=True)
class SubringHandle:
    """A basis subset closed under product summands and duals."""

    ring: FusionRing
    indices: frozenset

    def __post_init__(self):
        if self.ring.unit not in self.indices:
            raise ValueError("subring must contain the unit")

    @property
    def rank(self) -> int:
        return len(self.indices)

    def labels(self) -> tuple:
        return tuple(self.ring.basis[i] for i in sorted(self.indices))

    def is_whole(self) -> bool:
        return len(self.indices) == self.ring.rank

    def is_pointed(self) -> bool:
        return all(is_invertible(self.ring, i) for i in self.indices)

    def is_closed(self) -> bool:
        N = self.ring.dense()
        for i in self.indices:
            if self.ring.dual[i] not in self.indices:
                return False
            for j in self.indices:
                for k in N[i, j].nonzero()[0]:
                    if int(k) not in self.indices:
                        return False
        return True


@dataclass(frozen=True)
class ActionData:
    """Left-tensor action of the invertibles on the basis."""

    group: GroupTable
    group_indices: tuple  # basis index of each group element
    orbits: tuple  # sorted tuples of basis indices
    stabilizers: tuple  # Subgroup of `group` per basis index

    def orbit_of(self, i: int) -> tuple:
        for orb in self.orbits:
            if i in orb:
                return orb
        raise IndexError(f"index {i} not in any orbit")


@dataclass(frozen=True)
class GradingData:
    """A faithful grading: partition of the basis plus the component group.

    Components are labeled by the basis label of their least member; the
    trivial component is the unit's class.
    """

    ring: FusionRing
    components: dict  # label -> sorted tuple of basis indices
    group: GroupTable
    trivial: str

    def component_of(self, i: int) -> str:
        for label, idxs in self.components.items():
            if i in idxs:
                return label
        raise IndexError(f"index {i} not in any component")

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.to_json_dict(),
            "components": {
                label: [self.ring.basis[i] for i in idxs]
                for label, idxs in sorted(self.components.items())
            },
            "trivial": self.trivial,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# Invertibles and action
# ---------------------------------------------------------------------------

def invertible_indices(ring: FusionRing) -> list:
    require_valid(ring)
    return [i for i in range(ring.rank) if is_invertible(ring, i)]


def invertibles(ring: FusionRing) -> tuple:
    """The group of invertible simples, and its embedding into the basis.

    Returns (GroupTable, indices): element t of the table is the simple
    with basis index indices[t].
    """
    inv = invertible_indices(ring)
    pos = {g: t for t, g in enumerate(inv)}
    N = ring.dense()
    table = []
    for a in inv:
        row = []
        for b in inv:
            prod = N[a, b].nonzero()[0]
            if len(prod) != 1 or N[a, b, prod[0]] != 1:
                raise ValueError("product of invertibles is not simple")
            row.append(pos[int(prod[0])])
        table.append(row)
    group = GroupTable([ring.basis[g] for g in inv], table)
    return group, tuple(inv)


def action(ring: FusionRing) -> ActionData:
    """Orbits and stabilizers of the invertibles' left-tensor action."""
    group, inv = invertibles(ring)
    N = ring.dense()
    r = ring.rank

    def act(t: int, i: int) -> int:
        fiber = N[inv[t], i].nonzero()[0]
        return int(fiber[0])

    seen = set()
    orbits = []
    for i in range(r):
        if i in seen:
            continue
        orb = sorted({act(t, i) for t in range(group.order)})
        orbits.append(tuple(orb))
        seen.update(orb)
    stabs = tuple(
        Subgroup(group, frozenset(t for t in range(group.order) if act(t, i) == i))
        for i in range(r)
    )
    return ActionData(group, tuple(inv), tuple(orbits), stabs)


# ---------------------------------------------------------------------------
# Subrings
# ---------------------------------------------------------------------------

def subring_closure(ring: FusionRing, seed) -> SubringHandle:
    """Smallest unit-containing, dual- and product-closed subset over seed."""
    require_valid(ring)
    N = ring.dense()
    members = {ring.unit}
    members.update(ring._to_index(x) for x in seed)
    frontier = list(members)
    while frontier:
        i = frontier.pop()
        d = ring.dual[i]
        if d not in members:
            members.add(d)
            frontier.append(d)
        for j in list(members):
            for pair in ((i, j), (j, i)):
                for k in N[pair].nonzero()[0]:
                    k = int(k)
                    if k not in members:
                        members.add(k)
                        frontier.append(k)
    return SubringHandle(ring, frozenset(members))


def pointed_subring(ring: FusionRing) -> SubringHandle:
    """Closure of the invertibles (their products stay invertible)."""
    return subring_closure(ring, invertible_indices(ring))


def adjoint_subring(ring: FusionRing) -> SubringHandle:
    """Closure of all summands of X X^* over every simple X."""
    seed = set()
    for i in range(ring.rank):
        seed.update(self_decomp(ring, i))
    return subring_closure(ring, seed)


def commutator_raw_set(ring: FusionRing, B: SubringHandle) -> frozenset:
    """Simples whose self-decomposition lies inside B (before closure)."""
    require_valid(ring)
    return frozenset(
        i
        for i in range(ring.rank)
        if set(self_decomp(ring, i)) <= B.indices
    )


def commutator_subring(ring: FusionRing, B: SubringHandle) -> SubringHandle:
    """Closure of the simples X with X X^* supported inside B."""
    return subring_closure(ring, commutator_raw_set(ring, B))


# ---------------------------------------------------------------------------
# Universal grading
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _saturate(ring: FusionRing, adjoint: frozenset, side: str) -> list:
    """Partition classes by tensoring with the adjoint basis on one side."""
    N = ring.dense()
    uf = _UnionFind(ring.rank)
    for i in range(ring.rank):
        for a in adjoint:
            pair = (i, a) if side == "right" else (a, i)
            for k in N[pair].nonzero()[0]:
                uf.union(i, int(k))
    classes = {}
    for i in range(ring.rank):
        classes.setdefault(uf.find(i), []).append(i)
    return sorted(tuple(sorted(v)) for v in classes.values())


def universal_grading(ring: FusionRing) -> GradingData:
    """The canonical faithful grading whose trivial component is the adjoint.

    Classes are saturated by right-tensoring with the adjoint basis; the
    left saturation must produce the same partition and the induced
    component product must be well-defined, both checked explicitly.
    """
    require_valid(ring)
    adjoint = adjoint_subring(ring).indices
    right = _saturate(ring, adjoint, "right")
    left = _saturate(ring, adjoint, "left")
    if right != left:
        raise GradingInconsistency("left/right adjoint saturations disagree")

    comp_of = {}
    for c, idxs in enumerate(right):
        for i in idxs:
            comp_of[i] = c
    N = ring.dense()
    ncomp = len(right)
    prod = [[None] * ncomp for _ in range(ncomp)]
    for i in range(ring.rank):
        for j in range(ring.rank):
            support = N[i, j].nonzero()[0]
            if len(support) == 0:
                continue
            targets = {comp_of[int(k)] for k in support}
            if len(targets) != 1:
                raise GradingInconsistency(
                    f"product of {ring.basis[i]} and {ring.basis[j]} spans components"
                )
            ci, cj, ct = comp_of[i], comp_of[j], targets.pop()
            if prod[ci][cj] is None:
                prod[ci][cj] = ct
            elif prod[ci][cj] != ct:
                raise GradingInconsistency("component product is not well-defined")
    if any(x is None for row in prod for x in row):
        raise GradingInconsistency("component product is not total")

    labels = [ring.basis[idxs[0]] for idxs in right]
    group = GroupTable(labels, prod)
    trivial = labels[comp_of[ring.unit]]
    if set(right[comp_of[ring.unit]]) != set(adjoint):
        raise GradingInconsistency("trivial component differs from the adjoint")
    components = {labels[c]: idxs for c, idxs in enumerate(right)}
    return GradingData(ring, components, group, trivial)


def graded_component_dims(grading: GradingData) -> dict:
    """Sum of squared dimensions per component; all equal for a grading."""
    ring = grading.ring
    out = {}
    for label, idxs in grading.components.items():
        total = RealValue.from_exact(0)
        for i in idxs:
            d = fpdim_simple(ring, i)
            total = total + d * d
        out[label] = total
    return out
