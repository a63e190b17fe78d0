"""Fusion ring data model: basis, duality, structure constants, axioms.

A ring is stored sparsely as (i, j, k) -> multiplicity; a packed constants
array is built on demand for the axiom kernels and left-multiplication
matrices.  Instances are treated as immutable once constructed; all
operations here are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import kernels
from .exactreal import RealValue, perron_root

#: Multiplicity vector of an object: basis index -> positive count.
#: The empty dict is the zero object and is legal everywhere.
ObjectVec = dict

AXIOMS = ("dual_involution", "unit", "duality", "frobenius", "associativity")


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class ValidationReport:
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "axioms": [
                {
                    "axiom": r.name,
                    "pass": r.passed,
                    "witness": list(r.witness) if r.witness else None,
                }
                for r in self.results
            ],
        }


class FusionRing:
    """A based ring with unit, duality involution and sparse constants.

    Parameters
    ----------
    name : str
    basis : ordered labels of the simple objects
    unit : label or index of the unit object
    dual : mapping label -> label (or index permutation)
    constants : mapping (i, j, k) -> positive int, by label or index;
        absent triples are zero.
    """

    def __init__(self, name: str, basis, unit, dual, constants):
        self.name = str(name)
        self.basis = tuple(str(b) for b in basis)
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"duplicate basis labels in {name!r}")
        self._index = {b: i for i, b in enumerate(self.basis)}
        self.unit = self._to_index(unit)
        if isinstance(dual, Mapping):
            dual = [dual[b] for b in self.basis]
        self.dual = tuple(self._to_index(d) for d in dual)
        if len(self.dual) != len(self.basis):
            raise ValueError("dual must assign an image to every basis label")
        self.constants = {}
        for (i, j, k), m in constants.items():
            m = int(m)
            if m < 0:
                raise ValueError(f"negative structure constant at {(i, j, k)}")
            if m == 0:
                continue
            key = (self._to_index(i), self._to_index(j), self._to_index(k))
            self.constants[key] = m
        self._dense = None
        self._fpdim_cache = {}
        self._validation = None

    # -- basic accessors ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _to_index(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            i = int(x)
            if not 0 <= i < len(self.basis):
                raise IndexError(f"basis index {i} out of range for {self.name!r}")
            return i
        try:
            return self._index[str(x)]
        except KeyError:
            raise IndexError(f"unknown basis label {x!r} in {self.name!r}") from None

    def index(self, label) -> int:
        return self._to_index(label)

    def label(self, i: int) -> str:
        return self.basis[i]

    def N(self, i, j, k) -> int:
        return self.constants.get(
            (self._to_index(i), self._to_index(j), self._to_index(k)), 0
        )

    def dense(self) -> np.ndarray:
        """Packed constants array, built once and cached."""
        if self._dense is None:
            r = self.rank
            N = np.zeros((r, r, r), dtype=np.int64)
            for (i, j, k), m in self.constants.items():
                N[i, j, k] = m
            N.setflags(write=False)
            self._dense = N
        return self._dense

    def left_matrix(self, i) -> np.ndarray:
        """Matrix of left multiplication by X_i: column j holds X_i X_j."""
        i = self._to_index(i)
        return self.dense()[i].T.copy()

    def __repr__(self):
        return f"FusionRing({self.name!r}, rank={self.rank})"

    # -- serialization (exchange format) ------------------------------------

    def to_json_dict(self) -> dict:
        consts = [
            {"i": self.basis[i], "j": self.basis[j], "k": self.basis[k], "m": m}
            for (i, j, k), m in self.constants.items()
        ]
        consts.sort(key=lambda c: (c["i"], c["j"], c["k"]))
        return {
            "name": self.name,
            "basis": list(self.basis),
            "unit": self.basis[self.unit],
            "dual": {b: self.basis[self.dual[i]] for i, b in enumerate(self.basis)},
            "constants": consts,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, d: dict) -> "FusionRing":
        constants = {(c["i"], c["j"], c["k"]): c["m"] for c in d["constants"]}
        return cls(d["name"], d["basis"], d["unit"], d["dual"], constants)

    @classmethod
    def from_json_str(cls, s: str) -> "FusionRing":
        return cls.from_json_dict(json.loads(s))


# ---------------------------------------------------------------------------
# Axiom validation
# ---------------------------------------------------------------------------

def validate(ring: FusionRing, fast_fail: bool = False) -> ValidationReport:
    """Exhaustive axiom check; failures are reported, not raised.

    Axioms, in order: duality is an involution fixing the unit; unit
    multiplication law; N_{i j}^1 = [j == i*]; Frobenius reciprocity;
    associativity of the structure constants.
    """
    if ring._validation is not None and not fast_fail:
        return ring._validation
    N = ring.dense()
    r = ring.rank
    dual = np.array(ring.dual, dtype=np.int64)
    lab = ring.basis
    results = []

    def add(name, passed, witness=None):
        results.append(AxiomResult(name, bool(passed), witness))
        return not passed and fast_fail

    # dual involution and unit self-duality
    bad = [i for i in range(r) if ring.dual[ring.dual[i]] != i]
    if ring.dual[ring.unit] != ring.unit:
        bad.insert(0, ring.unit)
    if add("dual_involution", not bad, (lab[bad[0]],) if bad else None):
        return ValidationReport(tuple(results))

    eye = np.eye(r, dtype=np.int64)
    mism = np.argwhere(N[ring.unit] != eye)
    if mism.size == 0:
        mism = np.argwhere(N[:, ring.unit, :] != eye)
        witness = (lab[mism[0][0]], lab[ring.unit], lab[mism[0][1]]) if mism.size else None
    else:
        witness = (lab[ring.unit], lab[mism[0][0]], lab[mism[0][1]])
    if add("unit", mism.size == 0, witness):
        return ValidationReport(tuple(results))

    want = np.zeros((r, r), dtype=np.int64)
    want[np.arange(r), dual] = 1
    mism = np.argwhere(N[:, :, ring.unit] != want)
    witness = (lab[mism[0][0]], lab[mism[0][1]], lab[ring.unit]) if mism.size else None
    if add("duality", mism.size == 0, witness):
        return ValidationReport(tuple(results))

    # Frobenius reciprocity: N[i,j,k] == N[i*,k,j] == N[k,j*,i]
    B = N[dual].transpose(0, 2, 1)
    C = N[:, dual, :].transpose(2, 1, 0)
    mism = np.argwhere((N != B) | (N != C))
    witness = tuple(lab[x] for x in mism[0]) if mism.size else None
    if add("frobenius", mism.size == 0, witness):
        return ValidationReport(tuple(results))

    w = kernels.associativity_witness(N)
    add("associativity", w is None, tuple(lab[x] for x in w) if w else None)

    report = ValidationReport(tuple(results))
    if not fast_fail:
        ring._validation = report
    return report


def require_valid(ring: FusionRing) -> FusionRing:
    """Assert the ring passes validation (cached); used as an op precondition."""
    report = validate(ring)
    if not report.passed:
        names = ", ".join(r.name for r in report.failures())
        raise ValueError(f"ring {ring.name!r} fails axioms: {names}")
    return ring


# ---------------------------------------------------------------------------
# Products and dimensions
# ---------------------------------------------------------------------------

def object_vec(ring: FusionRing, items) -> ObjectVec:
    """Build an ObjectVec from labels/indices or (label, mult) pairs."""
    out = {}
    if isinstance(items, Mapping):
        items = items.items()
    for entry in items:
        if isinstance(entry, tuple):
            x, m = entry
        else:
            x, m = entry, 1
        m = int(m)
        if m < 0:
            raise ValueError("multiplicities must be non-negative")
        if m:
            i = ring._to_index(x)
            out[i] = out.get(i, 0) + m
    return out


def tensor(ring: FusionRing, u: ObjectVec, v: ObjectVec) -> ObjectVec:
    """Bilinear extension of the structure constants to object vectors."""
    N = ring.dense()
    r = ring.rank
    acc = np.zeros(r, dtype=np.int64)
    for i, cu in u.items():
        if not 0 <= i < r:
            raise IndexError(f"index {i} out of range")
        for j, cv in v.items():
            if not 0 <= j < r:
                raise IndexError(f"index {j} out of range")
            acc += (cu * cv) * N[i, j]
    return {int(k): int(m) for k, m in enumerate(acc) if m}


def self_decomp(ring: FusionRing, i) -> ObjectVec:
    """Decomposition of X_i (X_i)^*."""
    i = ring._to_index(i)
    fiber = ring.dense()[i, ring.dual[i]]
    return {int(k): int(m) for k, m in enumerate(fiber) if m}


def hom_mult(ring: FusionRing, i, v: ObjectVec) -> int:
    """Multiplicity of the simple X_i inside the object vector v."""
    return v.get(ring._to_index(i), 0)


def is_invertible(ring: FusionRing, i) -> bool:
    return self_decomp(ring, i) == {ring.unit: 1}


def fpdim_simple(ring: FusionRing, i) -> RealValue:
    """Frobenius-Perron dimension of a simple object, exact when quadratic."""
    i = ring._to_index(i)
    if i not in ring._fpdim_cache:
        if is_invertible(ring, i):
            # invertibles have permutation left-multiplication matrices
            value = RealValue.from_exact(1)
        else:
            value = perron_root(ring.left_matrix(i))
        ring._fpdim_cache[i] = value
    return ring._fpdim_cache[i]


def fpdim_ring(ring: FusionRing) -> RealValue:
    """Sum of squared simple dimensions, exact when the field allows it."""
    total = RealValue.from_exact(0)
    for i in range(ring.rank):
        d = fpdim_simple(ring, i)
        total = total + d * d
    return total


def format_vec(ring: FusionRing, v: ObjectVec) -> str:
    """Human-readable decomposition like ``1 + 2*X``."""
    if not v:
        return "0"
    parts = []
    for i in sorted(v):
        m = v[i]
        parts.append(ring.basis[i] if m == 1 else f"{m}*{ring.basis[i]}")
    return " + ".join(parts)
