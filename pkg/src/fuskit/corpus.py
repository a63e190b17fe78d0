"""The built-in ring corpus used by the verification suite.

Entries carry a family tag so checks know which expectations apply.
Setting FUSKIT_CORPUS to a directory of ring JSON files replaces the
built-in corpus; external rings are tagged "external" and only the
family-agnostic checks run on them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .core import FusionRing
from .families import (
    deligne_product,
    fib_extension,
    fibonacci,
    adjoint_extract,
    gty,
    n_ising,
    near_group,
    pointed,
    psu2_6,
    su2_level,
    tambara_yamagami,
)
from .groups import cyclic, direct_product, subgroup_generated, symmetric

CORPUS_ENV = "FUSKIT_CORPUS"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ring: FusionRing
    family: str


def _gty_builder(make_group, gens, twist, name):
    def build():
        G = make_group()
        return gty(G, subgroup_generated(G, gens), twist, name=name)

    return build


def _builders():
    entries = [
        ("fibonacci", "fibonacci", fibonacci),
        ("ty_z2", "gty", lambda: tambara_yamagami(cyclic(2), name="ty_z2")),
        ("ty_z4", "gty", lambda: tambara_yamagami(cyclic(4), name="ty_z4")),
        ("ty_z8", "gty", lambda: tambara_yamagami(cyclic(8), name="ty_z8")),
        ("near_group_z2_k1", "near_group", lambda: near_group(cyclic(2), 1, name="near_group_z2_k1")),
        (
            "gty_z4_gamma2",
            "gty",
            _gty_builder(lambda: cyclic(4), ["2"], None, "gty_z4_gamma2"),
        ),
        (
            "gty_z2z2_gamma2",
            "gty",
            _gty_builder(
                lambda: direct_product(cyclic(2), cyclic(2)), ["(1,0)"], None, "gty_z2z2_gamma2"
            ),
        ),
        (
            "gty_z2z4_gamma2_tw",
            "gty",
            _gty_builder(
                lambda: direct_product(cyclic(2), cyclic(4)), ["(1,0)"], "(0,1)", "gty_z2z4_gamma2_tw"
            ),
        ),
        (
            "gty_z9_gamma3",
            "gty",
            _gty_builder(lambda: cyclic(9), ["3"], None, "gty_z9_gamma3"),
        ),
        ("psu2_6", "psu2_6", psu2_6),
    ]
    for k in range(1, 7):
        entries.append((f"su2_{k}", "su2", lambda k=k: su2_level(k)))
        entries.append(
            (
                f"su2_{k}_adjoint",
                "su2_adjoint",
                lambda k=k: adjoint_extract(su2_level(k), name=f"su2_{k}_adjoint"),
            )
        )
    for label, grp in [
        ("z2", lambda: cyclic(2)),
        ("z3", lambda: cyclic(3)),
        ("z4", lambda: cyclic(4)),
        ("z2z2", lambda: direct_product(cyclic(2), cyclic(2))),
        ("z6", lambda: cyclic(6)),
        ("s3", lambda: symmetric(3)),
    ]:
        entries.append(
            (
                f"fib_ext_{label}",
                "fib_ext",
                lambda label=label, grp=grp: fib_extension(grp(), name=f"fib_ext_{label}"),
            )
        )
    for N in range(1, 6):
        entries.append((f"n_ising_{N}", "n_ising", lambda N=N: n_ising(N)))
    entries.extend(
        [
            (
                "product_fib_z5",
                "product",
                lambda: deligne_product(fibonacci(), pointed(cyclic(5)), name="product_fib_z5"),
            ),
            (
                "product_fib_fib",
                "product",
                lambda: deligne_product(fibonacci(), fibonacci(), name="product_fib_fib"),
            ),
            (
                "product_psu26_z3",
                "product",
                lambda: deligne_product(psu2_6(), pointed(cyclic(3)), name="product_psu26_z3"),
            ),
        ]
    )
    return entries


_cache: dict = {}


def load_corpus() -> list:
    """The corpus, sorted by entry name.  Built once per override value."""
    override = os.environ.get(CORPUS_ENV, "")
    if override in _cache:
        return _cache[override]
    if override:
        entries = []
        for path in sorted(Path(override).glob("*.json")):
            ring = FusionRing.from_json_str(path.read_text())
            entries.append(CorpusEntry(ring.name, ring, "external"))
    else:
        entries = [
            CorpusEntry(name, build(), family) for name, family, build in _builders()
        ]
    entries.sort(key=lambda e: e.name)
    _cache[override] = entries
    return entries


def corpus_ring(name: str) -> FusionRing:
    for entry in load_corpus():
        if entry.name == name:
            return entry.ring
    raise KeyError(f"no corpus ring named {name!r}")
