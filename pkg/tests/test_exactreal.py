"""Exact quadratic arithmetic, characteristic polynomials, Perron roots.

Derived expectations are frozen from independent oracles: hand expansion
for the quadratic identities, sympy for characteristic polynomials and
determinants, numpy eigenvalues for root domination.
"""

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fuskit.errors import ConvergenceFailure, FieldMismatch
from fuskit.exactreal import (
    QuadraticReal,
    RealValue,
    char_poly,
    int_det,
    perron_root,
    poly_eval,
    recognize,
)

PHI = QuadraticReal(Fraction(1, 2), Fraction(1, 2), 5)


class TestQuadraticArithmetic:
    def test_golden_ratio_square(self):
        # hand oracle: (1+sqrt5)^2 / 4 = (6+2 sqrt5)/4 = (3+sqrt5)/2
        assert PHI * PHI == QuadraticReal(Fraction(3, 2), Fraction(1, 2), 5)

    def test_add_zero_identity(self):
        assert PHI + QuadraticReal(0) == PHI

    def test_compare_phi_below_two(self):
        # sign oracle: phi - 2 = (sqrt5 - 3)/2 < 0 because 5 < 9
        assert PHI < QuadraticReal(2)
        assert QuadraticReal(2) > PHI

    def test_division_inverts_multiplication(self):
        x = QuadraticReal(Fraction(2, 3), Fraction(-1, 7), 2)
        y = QuadraticReal(Fraction(1, 2), Fraction(5, 3), 2)
        assert (x * y) / y == x

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            PHI / QuadraticReal(0)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            PHI * QuadraticReal(0, 1, 2)
        with pytest.raises(FieldMismatch):
            PHI + QuadraticReal(0, 1, 2)

    def test_rational_scalars_mix_with_any_field(self):
        assert QuadraticReal(3) * QuadraticReal(0, 1, 2) == QuadraticReal(0, 3, 2)

    def test_canonicalization(self):
        assert QuadraticReal(0, 1, 8) == QuadraticReal(0, 2, 2)
        assert QuadraticReal(0, 1, 9) == QuadraticReal(3)
        assert QuadraticReal(5, 0, 7).n == 0
        assert QuadraticReal(1, 1, 1) == QuadraticReal(2)

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            QuadraticReal(0, 1, -5)

    def test_cross_field_ordering_exact(self):
        sqrt2 = QuadraticReal(0, 1, 2)
        sqrt3 = QuadraticReal(0, 1, 3)
        assert sqrt2 < sqrt3
        assert PHI > sqrt2  # 1.618 vs 1.414
        assert PHI < QuadraticReal(1, 1, 2)  # vs 2.414
        assert not PHI == sqrt2

    def test_string_format(self):
        assert str(PHI) == "1/2+1/2*sqrt(5)"
        assert str(QuadraticReal(Fraction(3, 2))) == "3/2"
        assert str(QuadraticReal(1, -1, 2)) == "1-1*sqrt(2)"


rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


@st.composite
def quad_pairs(draw, count=2):
    n = draw(st.sampled_from([0, 2, 5]))
    return [
        QuadraticReal(draw(rationals), draw(rationals), n) for _ in range(count)
    ]


class TestFieldAxioms:
    @given(quad_pairs(3))
    @settings(max_examples=150)
    def test_mul_associative_and_distributive(self, xs):
        x, y, z = xs
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(quad_pairs(2))
    @settings(max_examples=150)
    def test_commutative(self, xs):
        x, y = xs
        assert x + y == y + x
        assert x * y == y * x

    @given(quad_pairs(1))
    @settings(max_examples=150)
    def test_inverse_roundtrip(self, xs):
        (x,) = xs
        if x == QuadraticReal(0):
            return
        assert x * x.inverse() == QuadraticReal(1)

    @given(quad_pairs(2))
    @settings(max_examples=150)
    def test_ordering_consistent_with_floats(self, xs):
        x, y = xs
        fx, fy = float(x), float(y)
        if abs(fx - fy) > 1e-9:
            assert (x < y) == (fx < fy)


class TestCharPoly:
    def test_fibonacci_matrix(self):
        # hand oracle: det(xI - [[0,1],[1,1]]) = x(x-1) - 1 = x^2 - x - 1
        assert char_poly([[0, 1], [1, 1]]) == [-1, -1, 1]

    def test_identity_1x1(self):
        assert char_poly([[1]]) == [-1, 1]

    def test_hand_expansion_2x2(self):
        # det(xI - [[0,1],[2,1]]) = x(x-1) - 2 = x^2 - x - 2
        assert char_poly([[0, 1], [2, 1]]) == [-2, -1, 1]

    def test_against_sympy_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            n = int(rng.integers(1, 7))
            M = rng.integers(0, 5, size=(n, n)).tolist()
            expected = [int(c) for c in reversed(sympy.Matrix(M).charpoly().all_coeffs())]
            assert char_poly(M) == expected
            assert int_det(M) == int(sympy.Matrix(M).det())


class TestRecognize:
    def test_golden_ratio(self):
        assert recognize(1.6180339887, [-1, -1, 1]) == PHI

    def test_trivial_linear(self):
        assert recognize(1.0, [-1, 1]) == QuadraticReal(1)

    def test_silver_ratio(self):
        assert recognize(2.4142135623, [-1, -2, 1]) == QuadraticReal(1, 1, 2)

    def test_degree_three_unrecognized(self):
        # minimal polynomial of 2cos(pi/7): x^3 - x^2 - 2x + 1
        root = 2 * math.cos(math.pi / 7)
        assert recognize(root, [1, -2, -1, 1]) is None

    def test_quadratic_factor_of_quartic(self):
        # (x^2 - 2)(x^2 - 3) low->high: 6, 0, -5, 0, 1
        assert recognize(math.sqrt(2), [6, 0, -5, 0, 1]) == QuadraticReal(0, 1, 2)
        assert recognize(math.sqrt(3), [6, 0, -5, 0, 1]) == QuadraticReal(0, 1, 3)

    def test_soundness_exact_root(self):
        q = recognize(1.6180339887, [-1, -1, 1])
        assert poly_eval([-1, -1, 1], q) == QuadraticReal(0)
        assert abs(float(q) - 1.6180339887) <= 1e-6


class TestPerronRoot:
    def test_fibonacci_exact(self):
        assert perron_root([[0, 1], [1, 1]]).exact == PHI

    def test_identity(self):
        v = perron_root(np.eye(3, dtype=int))
        assert v.is_exact and v.exact == QuadraticReal(1)

    def test_psu_x_matrix(self):
        # left multiplication by X in the rank-4 ring {1,d,X,Y}:
        # X*1=X, X*d=Y, X*X=1+X+Y, X*Y=d+X+Y (hand-entered), root of
        # x^2-2x-1 -> 1+sqrt2
        L = [
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 1, 1],
            [0, 1, 1, 1],
        ]
        assert perron_root(L).exact == QuadraticReal(1, 1, 2)

    def test_dominates_all_real_roots(self):
        # defective dominant eigenvalues (possible for arbitrary random
        # matrices, never for fusion left-multiplication matrices) may
        # legitimately raise ConvergenceFailure; skip those draws
        rng = np.random.default_rng(3)
        checked = 0
        for _ in range(25):
            n = int(rng.integers(2, 6))
            M = rng.integers(0, 3, size=(n, n))
            if not M.any():
                continue
            try:
                lam = perron_root(M.tolist()).value
            except ConvergenceFailure:
                continue
            checked += 1
            eigs = np.linalg.eigvals(M.astype(float))
            assert lam >= np.max(eigs.real) - 1e-7
        assert checked >= 15

    def test_dominates_on_fusion_matrices(self, psu, fib_ext_s3):
        for ring in (psu, fib_ext_s3):
            for i in range(ring.rank):
                L = ring.left_matrix(i)
                lam = perron_root(L.tolist()).value
                eigs = np.linalg.eigvals(L.astype(float))
                assert lam >= np.max(eigs.real) - 1e-7

    def test_numeric_fallback_has_small_eps(self):
        # 2cos(pi/7) ring-style matrix with a cubic eigenvalue
        M = [[0, 1, 0], [1, 1, 1], [0, 1, 1]]
        v = perron_root(M)
        if not v.is_exact:
            truth = max(np.linalg.eigvals(np.array(M, dtype=float)).real)
            assert abs(v.value - truth) <= 1e-9
            assert v.eps <= 1e-9

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            perron_root([[0, 0], [0, 0]])
        with pytest.raises(ValueError):
            perron_root([[1, -1], [0, 1]])

    def test_large_matrix_agrees_with_charpoly_route(self):
        # above the size threshold the det-certified route must agree
        # with recognize(char_poly) on a block matrix with known root
        from fuskit.families import n_ising

        ring = n_ising(4)
        for i in range(ring.rank):
            L = ring.left_matrix(i).tolist()
            lam = perron_root(L)
            direct = recognize(lam.value, char_poly(L))
            assert (lam.exact is None) == (direct is None)
            if direct is not None:
                assert lam.exact == direct


class TestRealValue:
    def test_exact_arithmetic_stays_exact(self):
        a = RealValue.from_exact(PHI)
        b = a * a + RealValue.from_exact(1)
        assert b.is_exact and b.exact == QuadraticReal(Fraction(5, 2), Fraction(1, 2), 5)

    def test_mixed_fields_degrade_to_numeric(self):
        a = RealValue.from_exact(PHI)
        b = RealValue.from_exact(QuadraticReal(0, 1, 2))
        c = a + b
        assert not c.is_exact
        assert abs(c.value - (float(PHI) + math.sqrt(2))) < 1e-12

    def test_json_forms(self):
        assert RealValue.from_exact(PHI).to_json() == "1/2+1/2*sqrt(5)"
        num = RealValue.from_approx(1.8477590650225735, 1e-10)
        assert num.to_json() == {"value": "~1.84775906502", "eps": 1e-10}
