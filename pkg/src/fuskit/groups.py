"""Finite groups as explicit multiplication tables.

Everything in scope has order <= 64, so groups are plain Cayley tables:
no presentations, no external group-theory system.  Isomorphism testing
is generator-image backtracking with order-profile pruning.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .errors import NotNormal, SizeLimit, UnknownElement

ISO_SIZE_LIMIT = 64


class GroupTable:
    """A finite group given by labels and an index-valued Cayley table."""

    def __init__(self, elements, table, check: bool = True):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element labels")
        n = len(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        T = np.asarray(table, dtype=np.int64)
        if T.shape != (n, n):
            raise ValueError("table must be n x n")
        T.setflags(write=False)
        self.table = T
        self.identity = self._find_identity()
        if check:
            self._check_axioms()
        self.inverse = tuple(
            int(np.argwhere(self.table[a] == self.identity)[0][0]) for a in range(n)
        )

    def _find_identity(self) -> int:
        n = len(self.elements)
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return e
        raise ValueError("no identity element")

    def _check_axioms(self):
        T = self.table
        n = len(self.elements)
        ar = np.arange(n)
        if not all(np.array_equal(np.sort(T[i]), ar) for i in range(n)):
            raise ValueError("table rows are not permutations")
        if not all(np.array_equal(np.sort(T[:, i]), ar) for i in range(n)):
            raise ValueError("table columns are not permutations")
        if not np.array_equal(T[T, :], T[:, T]):
            raise ValueError("table is not associative")

    # -- queries -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            i = int(x)
            if not 0 <= i < self.order:
                raise UnknownElement(f"index {i} out of range")
            return i
        try:
            return self._index[str(x)]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def mult(self, a, b) -> int:
        return int(self.table[self.index(a), self.index(b)])

    def inv(self, a) -> int:
        return self.inverse[self.index(a)]

    def element_order(self, a) -> int:
        a = self.index(a)
        x, k = a, 1
        while x != self.identity:
            x = int(self.table[x, a])
            k += 1
        return k

    def order_profile(self) -> tuple:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self):
        return f"GroupTable(order={self.order}, elements={self.elements[:4]}...)"

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "identity": self.elements[self.identity],
            "table": [[self.elements[x] for x in row] for row in self.table],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, d: dict) -> "GroupTable":
        elements = d["elements"]
        idx = {e: i for i, e in enumerate(elements)}
        table = [[idx[x] for x in row] for row in d["table"]]
        g = cls(elements, table)
        if g.elements[g.identity] != d["identity"]:
            raise ValueError("declared identity disagrees with the table")
        return g


@dataclass(frozen=True)
class Subgroup:
    parent: GroupTable
    members: frozenset

    def __post_init__(self):
        G = self.parent
        mem = self.members
        if G.identity not in mem:
            raise ValueError("subgroup must contain the identity")
        for a in mem:
            if G.inverse[a] not in mem:
                raise ValueError("subgroup not closed under inverse")
            for b in mem:
                if int(G.table[a, b]) not in mem:
                    raise ValueError("subgroup not closed under product")

    @property
    def order(self) -> int:
        return len(self.members)

    def labels(self) -> tuple:
        return tuple(sorted(self.parent.elements[i] for i in self.members))

    def as_group(self) -> GroupTable:
        """The subgroup as a standalone GroupTable (sorted member order)."""
        mem = sorted(self.members)
        pos = {m: i for i, m in enumerate(mem)}
        table = [[pos[int(self.parent.table[a, b])] for b in mem] for a in mem]
        return GroupTable([self.parent.elements[m] for m in mem], table)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupTable([str(a) for a in range(n)], table)


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    elements = [
        f"({A.elements[a]},{B.elements[b]})"
        for a in range(A.order)
        for b in range(B.order)
    ]
    nb = B.order
    table = [
        [
            int(A.table[a1, a2]) * nb + int(B.table[b1, b2])
            for a2 in range(A.order)
            for b2 in range(B.order)
        ]
        for a1 in range(A.order)
        for b1 in range(B.order)
    ]
    return GroupTable(elements, table)


def symmetric(n: int) -> GroupTable:
    """Symmetric group on {0..n-1}; elements are one-line image strings."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > 5:
        raise SizeLimit("symmetric groups supported up to n = 5")
    perms = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    # composition (p*q)(x) = p(q(x))
    table = [
        [pos[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms
    ]
    return GroupTable(["".join(map(str, p)) for p in perms], table)


def trivial_group() -> GroupTable:
    return cyclic(1)


# ---------------------------------------------------------------------------
# Subgroups, quotients, isomorphism
# ---------------------------------------------------------------------------

def subgroup_generated(G: GroupTable, gens) -> Subgroup:
    """Closure of a generating set under product and inverse."""
    seed = [G.index(g) for g in gens]
    members = {G.identity}
    frontier = [G.identity]
    for s in seed:
        if s not in members:
            members.add(s)
            frontier.append(s)
    while frontier:
        a = frontier.pop()
        for b in list(members):
            for c in (int(G.table[a, b]), int(G.table[b, a])):
                if c not in members:
                    members.add(c)
                    frontier.append(c)
        inv_a = G.inverse[a]
        if inv_a not in members:
            members.add(inv_a)
            frontier.append(inv_a)
    return Subgroup(G, frozenset(members))


def is_normal(G: GroupTable, H: Subgroup) -> bool:
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    for g in range(G.order):
        g_inv = G.inverse[g]
        for h in H.members:
            if int(G.table[int(G.table[g, h]), g_inv]) not in H.members:
                return False
    return True


def quotient(G: GroupTable, H: Subgroup) -> GroupTable:
    """Quotient group G/H for a normal subgroup H; cosets are labeled by
    their lexicographically-least member."""
    if not is_normal(G, H):
        raise NotNormal("quotient by a non-normal subgroup")
    coset_of = {}
    cosets = []
    for g in range(G.order):
        if g in coset_of:
            continue
        coset = frozenset(int(G.table[g, h]) for h in H.members)
        for x in coset:
            coset_of[x] = len(cosets)
        cosets.append(coset)
    labels = [min(G.elements[x] for x in coset) for coset in cosets]
    reps = [min(coset) for coset in cosets]
    table = [
        [coset_of[int(G.table[ra, rb])] for rb in reps] for ra in reps
    ]
    return GroupTable(labels, table)


def _generating_sequence(G: GroupTable) -> list:
    """Small generating sequence, greedily preferring high-order elements."""
    gens = []
    have = {G.identity}
    by_order = sorted(range(G.order), key=lambda a: -G.element_order(a))
    while len(have) < G.order:
        nxt = next(a for a in by_order if a not in have)
        gens.append(nxt)
        have = set(subgroup_generated(G, gens).members)
    return gens


def is_isomorphic(A: GroupTable, B: GroupTable) -> bool:
    """Whether two tables define isomorphic groups (orders <= 64)."""
    if A.order != B.order:
        return False
    if max(A.order, B.order) > ISO_SIZE_LIMIT:
        raise SizeLimit(f"isomorphism search supported up to order {ISO_SIZE_LIMIT}")
    if A.order_profile() != B.order_profile():
        return False
    if A.is_abelian() != B.is_abelian():
        return False
    gens = _generating_sequence(A)
    if not gens:
        return True
    orders = [A.element_order(g) for g in gens]
    candidates = [
        [b for b in range(B.order) if B.element_order(b) == o] for o in orders
    ]
    # words expressing every element of A in terms of the generators
    parent = {A.identity: None}
    frontier = [A.identity]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = int(A.table[x, g])
            if y not in parent:
                parent[y] = (x, gi)
                frontier.append(y)

    def build_map(images) -> dict | None:
        phi = {A.identity: B.identity}
        order_bfs = [A.identity]
        seen = {A.identity}
        while order_bfs:
            x = order_bfs.pop(0)
            for gi, g in enumerate(gens):
                y = int(A.table[x, g])
                if y in seen:
                    continue
                phi[y] = int(B.table[phi[x], images[gi]])
                seen.add(y)
                order_bfs.append(y)
        if len(set(phi.values())) != A.order:
            return None
        return phi

    for images in itertools.product(*candidates):
        phi = build_map(list(images))
        if phi is None:
            continue
        ok = all(
            phi[int(A.table[x, y])] == int(B.table[phi[x], phi[y]])
            for x in range(A.order)
            for y in range(A.order)
        )
        if ok:
            return True
    return False


def all_subgroups(G: GroupTable) -> list:
    """Every subgroup, found by closing one extra generator at a time."""
    if G.order > ISO_SIZE_LIMIT:
        raise SizeLimit("subgroup enumeration supported up to order 64")
    found = {frozenset({G.identity})}
    frontier = [frozenset({G.identity})]
    while frontier:
        H = frontier.pop()
        for g in range(G.order):
            if g in H:
                continue
            K = subgroup_generated(G, list(H) + [g]).members
            if K not in found:
                found.add(K)
                frontier.append(K)
    return [Subgroup(G, mem) for mem in sorted(found, key=lambda s: (len(s), sorted(s)))]
