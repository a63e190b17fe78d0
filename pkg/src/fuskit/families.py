"""Constructors for the named fusion-ring families.

Every constructor validates its output; the ones whose multiplication
tables are pinned by structural invariants rather than an explicit table
(n_ising) assert those invariants after construction.
"""

from __future__ import annotations

from .core import FusionRing, require_valid, validate
from .errors import (
    FamilyAssertionFailure,
    NotAssociative,
    NotClosed,
    UnsupportedNonabelian,
)
from .exactreal import QuadraticReal, RealValue
from .groups import GroupTable, Subgroup, cyclic, direct_product, is_isomorphic, subgroup_generated, symmetric


def _validated(ring: FusionRing) -> FusionRing:
    report = validate(ring)
    if not report.passed:
        failed = ", ".join(r.name for r in report.failures())
        raise NotAssociative(f"{ring.name}: constructed ring fails {failed}")
    return ring


def pointed(G: GroupTable, name: str | None = None) -> FusionRing:
    """Group ring of G: basis G, product from the table, dual = inverse."""
    constants = {
        (a, b, int(G.table[a, b])): 1 for a in range(G.order) for b in range(G.order)
    }
    ring = FusionRing(
        name or f"pointed({G.order})",
        G.elements,
        G.identity,
        list(G.inverse),
        constants,
    )
    return _validated(ring)


def near_group(G: GroupTable, kappa: int, name: str | None = None) -> FusionRing:
    """Basis G + X with g X = X g = X and X X = sum(G) + kappa X."""
    if kappa < 0:
        raise ValueError("kappa must be non-negative")
    n = G.order
    x = n  # index of the extra simple
    constants = {
        (a, b, int(G.table[a, b])): 1 for a in range(n) for b in range(n)
    }
    for a in range(n):
        constants[(a, x, x)] = 1
        constants[(x, a, x)] = 1
        constants[(x, x, a)] = 1
    if kappa:
        constants[(x, x, x)] = kappa
    ring = FusionRing(
        name or f"near_group({G.order},{kappa})",
        list(G.elements) + ["X"],
        G.identity,
        list(G.inverse) + [x],
        constants,
    )
    return _validated(ring)


def gty(
    G: GroupTable,
    gamma: Subgroup,
    u=None,
    name: str | None = None,
) -> FusionRing:
    """Generalized Tambara-Yamagami ring over an abelian group.

    Basis G + {X_s : s in G/Gamma}; g X_s = X_{g s}, X_s g = X_{s g},
    X_s X_t = sum of the coset s t u (each invertible once), and
    X_s^* = X_{s^-1 u^-1}.  ``u`` is a twist element whose coset shifts
    the non-invertible products (identity coset by default).
    """
    if not G.is_abelian():
        raise UnsupportedNonabelian("gty is only defined over abelian groups")
    if gamma.parent is not G:
        raise ValueError("gamma must be a subgroup of G")
    u = G.identity if u is None else G.index(u)

    members = sorted(gamma.members)
    coset_of = {}
    cosets = []
    for g in range(G.order):
        if g in coset_of:
            continue
        coset = tuple(sorted(int(G.table[g, h]) for h in members))
        for xx in coset:
            coset_of[xx] = len(cosets)
        cosets.append(coset)
    ncos = len(cosets)
    rep = [c[0] for c in cosets]

    def coset_mul(s: int, t: int) -> int:
        return coset_of[int(G.table[rep[s], rep[t]])]

    n = G.order
    labels = list(G.elements) + [
        f"X[{min(G.elements[x] for x in cosets[s])}]" for s in range(ncos)
    ]
    constants = {
        (a, b, int(G.table[a, b])): 1 for a in range(n) for b in range(n)
    }
    for g in range(n):
        for s in range(ncos):
            constants[(g, n + s, n + coset_of[int(G.table[g, rep[s]])])] = 1
            constants[(n + s, g, n + coset_of[int(G.table[rep[s], g])])] = 1
    u_cos = coset_of[u]
    for s in range(ncos):
        for t in range(ncos):
            target = coset_mul(coset_mul(s, t), u_cos)
            for h in cosets[target]:
                constants[(n + s, n + t, h)] = 1
    dual = list(G.inverse)
    inv_u = G.inverse[u]
    for s in range(ncos):
        dual.append(n + coset_of[int(G.table[G.inverse[rep[s]], inv_u])])

    ring = FusionRing(
        name or f"gty({G.order},{gamma.order})",
        labels,
        G.identity,
        dual,
        constants,
    )
    return _validated(ring)


def tambara_yamagami(G: GroupTable, name: str | None = None) -> FusionRing:
    """TY ring over an abelian group: gty with Gamma = G and no twist."""
    full = Subgroup(G, frozenset(range(G.order)))
    return gty(G, full, None, name or f"ty({G.order})")


def fibonacci() -> FusionRing:
    """Rank-2 ring with X X = 1 + X."""
    return _validated(
        FusionRing(
            "fibonacci",
            ["1", "X"],
            "1",
            {"1": "1", "X": "X"},
            {("1", "1", "1"): 1, ("1", "X", "X"): 1, ("X", "1", "X"): 1,
             ("X", "X", "1"): 1, ("X", "X", "X"): 1},
        )
    )


def fib_extension(G: GroupTable, name: str | None = None) -> FusionRing:
    """Extension of the Fibonacci ring by G.

    Basis {d_g} + {Y_g}; d_g d_h = d_{gh}, d_g Y_h = Y_{gh},
    Y_h d_g = Y_{hg}, Y_g Y_h = d_{gh} + Y_{gh}.  Works for nonabelian G.
    """
    n = G.order
    labels = [f"d({e})" for e in G.elements] + [f"Y({e})" for e in G.elements]
    constants = {}
    for a in range(n):
        for b in range(n):
            c = int(G.table[a, b])
            constants[(a, b, c)] = 1          # d d = d
            constants[(a, n + b, n + c)] = 1  # d Y = Y
            constants[(n + a, b, n + c)] = 1  # Y d = Y
            constants[(n + a, n + b, c)] = 1  # Y Y = d + Y
            constants[(n + a, n + b, n + c)] = 1
    dual = [int(G.inverse[a]) for a in range(n)] + [
        n + int(G.inverse[a]) for a in range(n)
    ]
    ring = FusionRing(
        name or f"fib_extension({G.order})",
        labels,
        G.identity,
        dual,
        constants,
    )
    return _validated(ring)


def su2_level(k: int) -> FusionRing:
    """Level-k truncated spin fusion rules on labels 0..k (twice the spin).

    N_{a b}^c = 1 iff |a-b| <= c <= min(a+b, 2k-a-b) and a+b+c is even.
    """
    if k < 1:
        raise ValueError("level must be positive")
    labels = [str(a) for a in range(k + 1)]
    constants = {}
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(abs(a - b), min(a + b, 2 * k - a - b) + 1):
                if (a + b + c) % 2 == 0:
                    constants[(a, b, c)] = 1
    ring = FusionRing(f"su2_{k}", labels, 0, list(range(k + 1)), constants)
    return _validated(ring)


def restrict(ring: FusionRing, indices, name: str | None = None) -> FusionRing:
    """Standalone ring on a closed basis subset (constants restricted)."""
    require_valid(ring)
    subset = sorted(ring._to_index(x) for x in indices)
    sset = set(subset)
    if ring.unit not in sset:
        raise NotClosed("subset must contain the unit")
    pos = {g: t for t, g in enumerate(subset)}
    constants = {}
    for (i, j, k), m in ring.constants.items():
        if i in sset and j in sset:
            if k not in sset:
                raise NotClosed(
                    f"product {ring.basis[i]} {ring.basis[j]} leaves the subset"
                )
            constants[(pos[i], pos[j], pos[k])] = m
    for i in subset:
        if ring.dual[i] not in sset:
            raise NotClosed(f"dual of {ring.basis[i]} leaves the subset")
    return _validated(
        FusionRing(
            name or f"{ring.name}|{len(subset)}",
            [ring.basis[i] for i in subset],
            pos[ring.unit],
            [pos[ring.dual[i]] for i in subset],
            constants,
        )
    )


def adjoint_extract(ring: FusionRing, name: str | None = None) -> FusionRing:
    """The adjoint subring as a standalone ring."""
    from .structure import adjoint_subring

    handle = adjoint_subring(ring)
    return restrict(ring, handle.indices, name or f"{ring.name}_adjoint")


def psu2_6() -> FusionRing:
    """The rank-4 ring {1, d, X, Y}: d X = Y, X X = Y Y = 1 + X + Y,
    X Y = Y X = d + X + Y."""
    labels = ["1", "d", "X", "Y"]
    one, d, x, y = range(4)
    constants = {}
    for a in range(4):
        constants[(one, a, a)] = 1
        if a != one:
            constants[(a, one, a)] = 1
    constants[(d, d, one)] = 1
    constants[(d, x, y)] = 1
    constants[(d, y, x)] = 1
    constants[(x, d, y)] = 1
    constants[(y, d, x)] = 1
    for k in (one, x, y):
        constants[(x, x, k)] = 1
        constants[(y, y, k)] = 1
    for k in (d, x, y):
        constants[(x, y, k)] = 1
        constants[(y, x, k)] = 1
    ring = FusionRing("psu2_6", labels, one, [one, d, x, y], constants)
    return _validated(ring)


def n_ising(N: int) -> FusionRing:
    """The level-N Ising-shaped ring: a gty over Z2 x Z_{2^(N-1)} with
    Gamma the Z2 factor and the twist on the generator of the second
    factor.  Post-construction invariants are asserted:

    * invertibles form Z2 x Z_{2^(N-1)},
    * exactly 2^(N-1) non-invertibles, all of dimension sqrt(2),
    * the universal grading group is cyclic of order 2^N,
    * no non-invertible is self-dual unless N = 1.
    """
    if N < 1:
        raise ValueError("N must be positive")
    G = direct_product(cyclic(2), cyclic(2 ** (N - 1)))
    gamma = subgroup_generated(G, ["(1,0)"])
    twist = "(0,1)" if N >= 2 else "(0,0)"
    ring = gty(G, gamma, twist, name=f"n_ising_{N}")

    from .structure import invertibles, universal_grading
    from .core import fpdim_simple, is_invertible

    group, _ = invertibles(ring)
    if not is_isomorphic(group, G):
        raise FamilyAssertionFailure("invertibles are not Z2 x Z_{2^(N-1)}")
    non_inv = [i for i in range(ring.rank) if not is_invertible(ring, i)]
    if len(non_inv) != 2 ** (N - 1):
        raise FamilyAssertionFailure("wrong number of non-invertibles")
    sqrt2 = RealValue.from_exact(QuadraticReal.sqrt_of(2))
    for i in non_inv:
        if fpdim_simple(ring, i) != sqrt2:
            raise FamilyAssertionFailure("non-invertible of dimension != sqrt(2)")
    grading = universal_grading(ring)
    if not is_isomorphic(grading.group, cyclic(2**N)):
        raise FamilyAssertionFailure("grading group is not cyclic of order 2^N")
    self_dual = [i for i in non_inv if ring.dual[i] == i]
    if N == 1 and not self_dual:
        raise FamilyAssertionFailure("the N=1 non-invertible must be self-dual")
    if N >= 2 and self_dual:
        raise FamilyAssertionFailure("self-dual non-invertible for N >= 2")
    return ring


def deligne_product(r1: FusionRing, r2: FusionRing, name: str | None = None) -> FusionRing:
    """Componentwise product ring: basis pairs, constants multiplied."""
    require_valid(r1)
    require_valid(r2)
    n2 = r2.rank
    labels = [f"({a},{b})" for a in r1.basis for b in r2.basis]
    constants = {}
    for (i1, j1, k1), m1 in r1.constants.items():
        for (i2, j2, k2), m2 in r2.constants.items():
            constants[(i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2)] = m1 * m2
    dual = [
        r1.dual[a] * n2 + r2.dual[b] for a in range(r1.rank) for b in range(r2.rank)
    ]
    ring = FusionRing(
        name or f"product({r1.name},{r2.name})",
        labels,
        r1.unit * n2 + r2.unit,
        dual,
        constants,
    )
    return _validated(ring)


# ---------------------------------------------------------------------------
# FamilySpec: JSON-facing constructor dispatch
# ---------------------------------------------------------------------------

def group_from_spec(spec) -> GroupTable:
    """Build a group from a JSON-style spec.

    {"type": "cyclic", "n": 3} | {"type": "symmetric", "n": 3} |
    {"type": "direct_product", "factors": [spec, spec, ...]} |
    {"type": "trivial"}
    """
    if isinstance(spec, int):
        return cyclic(spec)
    kind = spec["type"]
    if kind == "cyclic":
        return cyclic(int(spec["n"]))
    if kind == "symmetric":
        return symmetric(int(spec["n"]))
    if kind == "trivial":
        return cyclic(1)
    if kind == "direct_product":
        factors = [group_from_spec(f) for f in spec["factors"]]
        if not factors:
            raise ValueError("direct_product needs at least one factor")
        out = factors[0]
        for f in factors[1:]:
            out = direct_product(out, f)
        return out
    raise ValueError(f"unknown group spec type {kind!r}")


FAMILY_IDS = (
    "pointed",
    "tambara_yamagami",
    "near_group",
    "gty",
    "fibonacci",
    "fib_extension",
    "su2_level",
    "psu2_6",
    "n_ising",
    "product",
)


def build_family(spec: dict) -> FusionRing:
    """Construct a ring from a FamilySpec dict, e.g.
    {"family": "fib_extension", "group": {"type": "cyclic", "n": 3}}."""
    family = spec.get("family")
    if family == "pointed":
        return pointed(group_from_spec(spec["group"]))
    if family == "tambara_yamagami":
        return tambara_yamagami(group_from_spec(spec["group"]))
    if family == "near_group":
        return near_group(group_from_spec(spec["group"]), int(spec.get("kappa", 0)))
    if family == "gty":
        G = group_from_spec(spec["group"])
        gamma = subgroup_generated(G, spec.get("gamma", []))
        return gty(G, gamma, spec.get("twist"))
    if family == "fibonacci":
        return fibonacci()
    if family == "fib_extension":
        return fib_extension(group_from_spec(spec["group"]))
    if family == "su2_level":
        return su2_level(int(spec["k"]))
    if family == "psu2_6":
        return psu2_6()
    if family == "n_ising":
        return n_ising(int(spec["N"]))
    if family == "product":
        f1, f2 = spec["factors"]
        return deligne_product(build_family(f1), build_family(f2))
    raise ValueError(f"unknown family {family!r}")
