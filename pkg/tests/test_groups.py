"""Group tables, subgroups, quotients, isomorphism."""

import itertools

import pytest

from fuskit.errors import NotNormal, SizeLimit, UnknownElement
from fuskit.groups import (
    GroupTable,
    Subgroup,
    all_subgroups,
    cyclic,
    direct_product,
    is_isomorphic,
    is_normal,
    quotient,
    subgroup_generated,
    symmetric,
)


def brute_force_subgroups(G):
    """Independent oracle: test every subset for the subgroup axioms."""
    out = []
    for r in range(1, G.order + 1):
        for subset in itertools.combinations(range(G.order), r):
            s = set(subset)
            if G.identity not in s:
                continue
            if any(G.inverse[a] not in s for a in s):
                continue
            if any(int(G.table[a, b]) not in s for a in s for b in s):
                continue
            out.append(frozenset(s))
    return out


class TestConstructors:
    def test_cyclic_one_is_trivial(self):
        g = cyclic(1)
        assert g.order == 1 and g.identity == 0

    def test_klein_four(self, klein):
        assert klein.order == 4
        assert all(klein.element_order(a) in (1, 2) for a in range(4))

    def test_product_order(self):
        assert direct_product(cyclic(2), cyclic(4)).order == 8

    def test_symmetric_sizes(self):
        assert symmetric(3).order == 6
        assert symmetric(4).order == 24
        with pytest.raises(SizeLimit):
            symmetric(6)

    def test_bad_table_rejected(self):
        with pytest.raises(ValueError):
            GroupTable(["a", "b"], [[0, 0], [1, 1]])  # not Latin
        # non-associative Latin square with identity (order 5 loop)
        loop = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(ValueError):
            GroupTable(list("abcde"), loop)


class TestSubgroups:
    def test_even_subgroup_of_z6(self):
        H = subgroup_generated(cyclic(6), ["2"])
        assert H.labels() == ("0", "2", "4")

    def test_empty_generators(self):
        H = subgroup_generated(cyclic(6), [])
        assert H.labels() == ("0",)

    def test_klein_generated_by_both(self, klein):
        H = subgroup_generated(klein, ["(1,0)", "(0,1)"])
        assert H.order == 4

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            subgroup_generated(cyclic(3), ["7"])

    def test_subgroup_count_matches_brute_force(self, klein):
        z4 = cyclic(4)
        s3 = symmetric(3)
        for G in (klein, z4, s3, cyclic(6)):
            ours = {H.members for H in all_subgroups(G)}
            oracle = set(brute_force_subgroups(G))
            assert ours == oracle

    def test_klein_has_five_subgroups(self, klein):
        assert len(all_subgroups(klein)) == 5


class TestNormalityQuotients:
    def test_abelian_subgroups_normal(self):
        G = cyclic(12)
        for H in all_subgroups(G):
            assert is_normal(G, H)

    def test_s3_two_element_not_normal(self):
        s3 = symmetric(3)
        # a transposition generates an order-2 subgroup; conjugating by a
        # 3-cycle moves it
        H = subgroup_generated(s3, ["102"])
        assert H.order == 2
        assert not is_normal(s3, H)

    def test_quotient_z4_by_half(self):
        z4 = cyclic(4)
        q = quotient(z4, subgroup_generated(z4, ["2"]))
        assert q.order == 2
        assert is_isomorphic(q, cyclic(2))

    def test_quotient_requires_normal(self):
        s3 = symmetric(3)
        H = subgroup_generated(s3, ["102"])
        with pytest.raises(NotNormal):
            quotient(s3, H)

    def test_projection_is_homomorphism(self):
        G = direct_product(cyclic(2), cyclic(4))
        H = subgroup_generated(G, ["(0,2)"])
        q = quotient(G, H)

        def coset_label(g):
            members = {int(G.table[g, h]) for h in H.members}
            return min(G.elements[x] for x in members)

        for a in range(G.order):
            for b in range(G.order):
                img = q.mult(coset_label(a), coset_label(b))
                assert q.elements[img] == coset_label(int(G.table[a, b]))

    def test_quotient_order(self):
        s3 = symmetric(3)
        alt = subgroup_generated(s3, ["120"])
        assert alt.order == 3
        assert quotient(s3, alt).order == 2


class TestIsomorphism:
    def test_z4_vs_klein(self, klein):
        assert not is_isomorphic(cyclic(4), klein)

    def test_crt(self):
        assert is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
        assert is_isomorphic(cyclic(15), direct_product(cyclic(3), cyclic(5)))

    def test_self_isomorphic(self):
        for G in (cyclic(8), symmetric(4), direct_product(cyclic(2), cyclic(8))):
            assert is_isomorphic(G, G)

    def test_different_orders(self):
        assert not is_isomorphic(cyclic(4), cyclic(5))

    def test_nonabelian_vs_abelian(self):
        assert not is_isomorphic(symmetric(3), cyclic(6))

    def test_z2_tower_distinctions(self):
        z16 = cyclic(16)
        z2z8 = direct_product(cyclic(2), cyclic(8))
        z4z4 = direct_product(cyclic(4), cyclic(4))
        assert not is_isomorphic(z16, z2z8)
        assert not is_isomorphic(z2z8, z4z4)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            is_isomorphic(symmetric(5), symmetric(5))


class TestSubgroupType:
    def test_as_group_roundtrip(self):
        s3 = symmetric(3)
        alt = subgroup_generated(s3, ["120"])
        assert is_isomorphic(alt.as_group(), cyclic(3))

    def test_invalid_subgroup_rejected(self, klein):
        with pytest.raises(ValueError):
            Subgroup(klein, frozenset({1}))  # missing identity
        with pytest.raises(ValueError):
            Subgroup(klein, frozenset({0, 1, 2}))  # not closed

    def test_json_round_trip(self):
        g = symmetric(3)
        d = g.to_json_dict()
        back = GroupTable.from_json_dict(d)
        assert back.elements == g.elements
        assert (back.table == g.table).all()
