"""Exact and numeric real arithmetic for Frobenius-Perron dimensions.

Numbers of the form a + b*sqrt(n) with rational a, b and square-free n
cover every exact dimension that occurs in the supported ring families
(they all live in Q, Q(sqrt 2) or Q(sqrt 5)).  Anything of higher degree
is carried as a float with an explicit error bound.

Rational parts are plain ``fractions.Fraction`` values: that type is
already reduced, keeps a positive denominator, and hashes correctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

import numpy as np

from .errors import ConvergenceFailure, FieldMismatch
from . import kernels

Rational = Fraction

#: |exact - approx| tolerance accepted when matching a float against an
#: exact root.  Well below the spacing of any two dimensions at desk scale.
RECOGNITION_TOL = 1e-6

#: Largest matrix size for which the exact upgrade goes through the full
#: characteristic polynomial; above it the quadratic candidates are tested
#: directly against the matrix (same result, avoids an O(n^4) big-int pass).
_CHARPOLY_UPGRADE_LIMIT = 12

_POWER_TOL = 1e-12
_POWER_CAP = 10**6


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s*s*m and m square-free."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    s, m, d = 1, n, 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            s *= d
        d += 1
    return s, m


@total_ordering
class QuadraticReal:
    """Exact real number a + b*sqrt(n), canonicalized.

    Canonical form: n is square-free, and b == 0 iff n == 0 (a pure
    rational stores n = 0).  Ordering and equality are decided exactly.
    """

    __slots__ = ("a", "b", "n")

    def __init__(self, a=0, b=0, n: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        n = int(n)
        if n < 0:
            raise ValueError("radicand must be non-negative")
        if n == 0:
            b = Fraction(0)
        elif b == 0:
            n = 0
        else:
            s, m = _squarefree_split(n)
            if m == 1:
                a += b * s
                b = Fraction(0)
                n = 0
            else:
                b *= s
                n = m
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *args):
        raise AttributeError("QuadraticReal is immutable")

    @classmethod
    def sqrt_of(cls, n: int) -> "QuadraticReal":
        return cls(0, 1, n)

    @property
    def is_rational(self) -> bool:
        return self.n == 0

    def _coerce(self, other) -> "QuadraticReal | None":
        if isinstance(other, QuadraticReal):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticReal(other)
        return None

    def _common_field(self, other: "QuadraticReal") -> int:
        if self.n == 0:
            return other.n
        if other.n == 0 or other.n == self.n:
            return self.n
        raise FieldMismatch(f"sqrt({self.n}) vs sqrt({other.n})")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self._common_field(o)
        return QuadraticReal(self.a + o.a, self.b + o.b, n)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticReal(-self.a, -self.b, self.n)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self._common_field(o)
        return QuadraticReal(
            self.a * o.a + self.b * o.b * n,
            self.a * o.b + self.b * o.a,
            n,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticReal":
        if self.a == 0 and self.b == 0:
            raise ZeroDivisionError("division by zero QuadraticReal")
        # (a + b sqrt n)(a - b sqrt n) = a^2 - b^2 n, nonzero since n is
        # square-free (the number itself would have to be zero).
        norm = self.a * self.a - self.b * self.b * self.n
        return QuadraticReal(self.a / norm, -self.b / norm, self.n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._common_field(o)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def _sign(self) -> int:
        """Exact sign, by rational comparisons of a^2 and b^2 n."""
        a, b, n = self.a, self.b, self.n
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * n
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        if a > 0:  # b < 0
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def _cmp(self, other: "QuadraticReal") -> int:
        if self.n == 0 or other.n == 0 or self.n == other.n:
            n = self.n or other.n
            return QuadraticReal(self.a - other.a, self.b - other.b, n)._sign()
        # Distinct fields: decide sign of (A + B sqrt n) - C sqrt m by one
        # more squaring; equality is impossible for square-free n != m.
        t1 = QuadraticReal(self.a - other.a, self.b, self.n)
        s1, s2 = t1._sign(), (other.b > 0) - (other.b < 0)
        if s1 != s2:
            return 1 if s1 > s2 else -1
        sq_cmp = (t1 * t1)._cmp(QuadraticReal(other.b * other.b * other.n))
        return s1 * sq_cmp

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.n) == (o.a, o.b, o.n)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) < 0

    def __hash__(self):
        if self.n == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.n)

    def __str__(self):
        if self.n == 0:
            return str(self.a)
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt({self.n})"

    def __repr__(self):
        return f"QuadraticReal({self.a!r}, {self.b!r}, {self.n})"


@dataclass(frozen=True)
class RealValue:
    """A real number that is either exactly known or a bounded float.

    ``eps`` is an upper bound on |value - true|; it is 0 for exact values.
    The exact variant is preferred whenever recognition succeeds.
    """

    value: float
    exact: QuadraticReal | None = None
    eps: float = 0.0

    @classmethod
    def from_exact(cls, q) -> "RealValue":
        if not isinstance(q, QuadraticReal):
            q = QuadraticReal(q)
        return cls(value=float(q), exact=q, eps=0.0)

    @classmethod
    def from_approx(cls, x: float, eps: float) -> "RealValue":
        return cls(value=float(x), exact=None, eps=float(eps))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def _binop(self, other: "RealValue", op, float_op, eps_bound) -> "RealValue":
        if self.is_exact and other.is_exact:
            try:
                return RealValue.from_exact(op(self.exact, other.exact))
            except FieldMismatch:
                pass
        return RealValue.from_approx(
            float_op(self.value, other.value), eps_bound(self, other)
        )

    def __add__(self, other):
        other = _as_real_value(other)
        return self._binop(
            other,
            lambda x, y: x + y,
            lambda x, y: x + y,
            lambda u, v: u.eps + v.eps,
        )

    def __mul__(self, other):
        other = _as_real_value(other)
        return self._binop(
            other,
            lambda x, y: x * y,
            lambda x, y: x * y,
            lambda u, v: abs(u.value) * v.eps + abs(v.value) * u.eps + u.eps * v.eps,
        )

    def __sub__(self, other):
        other = _as_real_value(other)
        return self._binop(
            other,
            lambda x, y: x - y,
            lambda x, y: x - y,
            lambda u, v: u.eps + v.eps,
        )

    def isclose(self, other, tol: float = 1e-9) -> bool:
        other = _as_real_value(other)
        if self.is_exact and other.is_exact:
            return self.exact == other.exact
        return abs(self.value - other.value) <= tol + self.eps + other.eps

    def to_json(self):
        if self.is_exact:
            return str(self.exact)
        return {"value": f"~{self.value:.12g}", "eps": self.eps}

    def __str__(self):
        return str(self.exact) if self.is_exact else f"~{self.value:.12g}"


def _as_real_value(x) -> RealValue:
    if isinstance(x, RealValue):
        return x
    if isinstance(x, QuadraticReal):
        return RealValue.from_exact(x)
    if isinstance(x, (int, Fraction)):
        return RealValue.from_exact(QuadraticReal(x))
    raise TypeError(f"cannot interpret {x!r} as RealValue")


# ---------------------------------------------------------------------------
# Integer-matrix machinery: characteristic polynomial, exact determinant,
# Perron eigenvalue with exact recognition.
# ---------------------------------------------------------------------------

def _as_int_rows(M) -> list[list[int]]:
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    return A


def char_poly(M) -> list[int]:
    """Exact characteristic polynomial of an integer matrix.

    Division-free Berkowitz recursion on leading principal submatrices;
    the Toeplitz column for step i is [1, -A[i][i], -R C, -R S C, ...].
    Returns coefficients of det(xI - M), lowest degree first, monic.
    """
    A = _as_int_rows(M)
    n = len(A)
    if n == 0:
        return [1]
    coeffs = [-A[0][0], 1]  # x - a, low->high
    for i in range(1, n):
        row = A[i][:i]
        col = [A[j][i] for j in range(i)]
        sub = [r[:i] for r in A[:i]]
        toep = [1, -A[i][i]]
        w = col
        for _ in range(i):
            toep.append(-sum(r * x for r, x in zip(row, w)))
            w = [sum(sub[p][q] * w[q] for q in range(i)) for p in range(i)]
        prev = coeffs[::-1]  # highest-first
        new = [0] * (i + 2)
        for a_idx in range(i + 2):
            acc = 0
            lo = max(0, a_idx - len(toep) + 1)
            for b_idx in range(lo, min(a_idx, len(prev) - 1) + 1):
                acc += toep[a_idx - b_idx] * prev[b_idx]
            new[a_idx] = acc
        coeffs = new[::-1]
    return coeffs


def int_det(M) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    A = _as_int_rows(M)
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def poly_eval(coeffs: Sequence, x):
    """Evaluate a low->high coefficient list at x (Horner)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _divide_out_quadratic(coeffs: list[int], u: int, v: int) -> bool:
    """Whether x^2 + u x + v divides the monic polynomial (exact)."""
    rem = list(reversed(coeffs))  # highest-first
    if len(rem) < 3:
        return False
    for i in range(len(rem) - 2):
        lead = rem[i]
        rem[i + 1] -= lead * u
        rem[i + 2] -= lead * v
    return rem[-1] == 0 and rem[-2] == 0


def _quadratic_root(u: int, v: int, approx: float) -> QuadraticReal | None:
    """Real root of x^2 + u x + v nearest approx, if within tolerance."""
    disc = u * u - 4 * v
    if disc <= 0:
        return None
    s, m = _squarefree_split(disc)
    if m == 1:  # rational roots; the linear search handles those
        return None
    for branch in (1, -1):
        root = QuadraticReal(Fraction(-u, 2), Fraction(branch * s, 2), m)
        if abs(float(root) - approx) <= RECOGNITION_TOL:
            return root
    return None


def recognize(approx: float, poly: Sequence[int]) -> QuadraticReal | None:
    """Exact root of ``poly`` matching ``approx``, degree <= 2 factors only.

    Factors the monic integer polynomial by rational-root search plus
    bounded enumeration of integer quadratic divisors; returns the exact
    root when the factor containing ``approx`` has degree 1 or 2.
    """
    coeffs = [int(c) for c in poly]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise ValueError("expected a monic integer polynomial")
    # strip x^k so the constant term is nonzero
    while coeffs[0] == 0:
        if abs(approx) <= RECOGNITION_TOL:
            return QuadraticReal(0)
        coeffs = coeffs[1:]
    # linear factors: rational roots of a monic polynomial are integers
    for d in _divisors(coeffs[0]):
        for r in (d, -d):
            if abs(r - approx) <= RECOGNITION_TOL and poly_eval(coeffs, r) == 0:
                return QuadraticReal(r)
    # quadratic factors x^2 + u x + v: v divides the constant term, and a
    # factor with a root at approx forces u = -(root + v/root), so only the
    # integers next to that float need testing.
    if abs(approx) <= RECOGNITION_TOL:
        return None
    for d in _divisors(coeffs[0]):
        for v in (d, -d):
            u0 = -(approx + v / approx)
            for u in (round(u0) - 1, round(u0), round(u0) + 1):
                if _divide_out_quadratic(coeffs, u, v):
                    root = _quadratic_root(u, v, approx)
                    if root is not None:
                        return root
    return None


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _recognize_against_matrix(A: list[list[int]], lam: float) -> QuadraticReal | None:
    """Degree <= 2 exact eigenvalue recognition straight from the matrix.

    A candidate annihilating polynomial f is read off the float estimate;
    f(lam) = 0 is then certified exactly via det(f(M)) = 0.  Equivalent to
    factoring the characteristic polynomial, but O(n^3) per candidate.
    """
    n = len(A)
    c = round(lam)
    if abs(lam - c) <= RECOGNITION_TOL:
        shifted = [[A[i][j] - (c if i == j else 0) for j in range(n)] for i in range(n)]
        if int_det(shifted) == 0:
            return QuadraticReal(c)
        return None
    M = np.array(A, dtype=object)
    M2 = M @ M
    p_max = math.ceil(2 * abs(lam)) + 2
    for p in range(-p_max, p_max + 1):
        q_f = lam * lam - p * lam
        q = round(q_f)
        if abs(q_f - q) > RECOGNITION_TOL * max(1.0, lam * lam):
            continue
        disc = p * p + 4 * q
        if disc <= 0 or _is_square(disc):
            continue
        root = _quadratic_root(-p, -q, lam)  # x^2 - p x - q
        if root is None:
            continue
        F = M2 - p * M - q * np.eye(n, dtype=object)
        if int_det(F.tolist()) == 0:
            return root
    return None


def perron_root(M, eps: float = 1e-9) -> RealValue:
    """Largest real eigenvalue of a non-negative integer matrix.

    Power iteration on M + I (the shift makes the dominant eigenvalue
    strictly largest in modulus for any non-negative matrix), then an
    exact upgrade whenever the eigenvalue satisfies an integer polynomial
    of degree at most 2.
    """
    A = _as_int_rows(M)
    n = len(A)
    if n == 0 or all(x == 0 for row in A for x in row):
        raise ValueError("matrix must be nonzero")
    if any(x < 0 for row in A for x in row):
        raise ValueError("matrix entries must be non-negative")
    shifted = np.array(A, dtype=np.float64) + np.eye(n)
    lam_shift, resid, converged = kernels.power_iteration(shifted, _POWER_TOL, _POWER_CAP)
    if not converged:
        raise ConvergenceFailure(f"no convergence after {_POWER_CAP} iterations")
    lam = lam_shift - 1.0
    if n <= _CHARPOLY_UPGRADE_LIMIT:
        exact = recognize(lam, char_poly(A))
    else:
        exact = _recognize_against_matrix(A, lam)
    if exact is not None:
        return RealValue.from_exact(exact)
    return RealValue.from_approx(lam, min(eps, max(resid, _POWER_TOL)))
