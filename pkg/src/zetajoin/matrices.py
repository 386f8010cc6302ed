"""Exact integer and polynomial-matrix linear algebra.

``bareiss_det`` is the fraction-free elimination determinant used for all
plain integer matrices (Matrix-Tree minors, Schur-style block checks,
evaluation points).  ``polymat_det`` computes determinants of matrices
with polynomial entries by evaluation and interpolation on the grid
0, 1, -1, 2, -2, ...; large instances go through an exact modular (CRT)
path whose prime budget is certified by a Hadamard/Cauchy coefficient
bound and whose result is spot-checked against a fraction-free
determinant at a fresh evaluation point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import IntegralityViolation
from .polynomials import (
    IntPoly,
    interpolate_at_integers,
    interpolation_points,
)


class IntMatrix:
    """Immutable rectangular matrix with integer entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[x * other for x in row] for row in self.entries])
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().entries
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.entries]
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries))) if self.entries else IntMatrix([])

    def trace(self) -> int:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def minor(self, i: int, j: int) -> "IntMatrix":
        """Delete row i and column j."""
        return IntMatrix(
            [
                [x for c, x in enumerate(row) if c != j]
                for r, row in enumerate(self.entries)
                if r != i
            ]
        )

    def to_float_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.rows, self.cols)

    def to_int64_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)


def bareiss_det(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Pivoting is deterministic: the first nonzero entry in column order is
    used, with row swaps tracked for the sign.  A singular matrix gives 0.
    """
    rows = m.entries if isinstance(m, IntMatrix) else m
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def adjugate(m: IntMatrix) -> IntMatrix:
    """Exact adjugate (transposed cofactor matrix); m * adjugate(m) = det(m) * I."""
    if not m.is_square():
        raise ValueError("adjugate of non-square matrix")
    n = m.rows
    if n == 0:
        return IntMatrix([])
    if n == 1:
        return IntMatrix([[1]])
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = bareiss_det(m.minor(j, i))
            out[i][j] = c if (i + j) % 2 == 0 else -c
    return IntMatrix(out)


def poly_of_matrix(p: IntPoly, m: IntMatrix) -> IntMatrix:
    """Evaluate a polynomial at a square matrix (Horner)."""
    if not m.is_square():
        raise ValueError("polynomial of non-square matrix")
    n = m.rows
    acc = IntMatrix.zeros(n, n)
    ident = IntMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc * m + ident * c
    return acc


# -- polynomial matrices -------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of integer polynomials with a determinant degree bound.

    ``degree_bound`` must cover the sum over rows of the largest entry
    degree, which dominates the determinant degree.  Overestimates are
    fine; underestimates are a caller bug and are rejected here.
    """

    entries: tuple[tuple[IntPoly, ...], ...]
    degree_bound: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(e) for e in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("polynomial matrix must be square")
        if self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        row_degree_sum = sum(max(max(e.degree for e in r), 0) for r in rows)
        if self.degree_bound < row_degree_sum:
            raise ValueError(
                f"degree bound {self.degree_bound} below row degree sum {row_degree_sum}"
            )

    @property
    def size(self) -> int:
        return len(self.entries)

    def eval_at(self, t: int) -> IntMatrix:
        return IntMatrix([[e(t) for e in row] for row in self.entries])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic Miller-Rabin witnesses for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_POOL: list[int] = []
_prime_cursor = 2**31 - 1


def _primes_31bit(count: int) -> list[int]:
    """The first ``count`` primes descending from 2^31, cached."""
    global _prime_cursor
    while len(_PRIME_POOL) < count:
        if _is_prime(_prime_cursor):
            _PRIME_POOL.append(_prime_cursor)
        _prime_cursor -= 2
    return _PRIME_POOL[:count]


def _hadamard_coeff_bound_sq(pm: PolyMatrix) -> int:
    """Square of an upper bound on |any coefficient of det(pm)|.

    On |u| = 1 every entry is bounded by the l1 norm of its coefficients,
    so Hadamard's inequality bounds max_{|u|=1} |det| by the product of
    row norms, and Cauchy's estimate bounds every coefficient by that
    maximum.  Returned squared to stay in integer arithmetic.
    """
    bound_sq = 1
    for row in pm.entries:
        row_sq = 0
        for e in row:
            l1 = sum(abs(c) for c in e.coeffs)
            row_sq += l1 * l1
        bound_sq *= max(row_sq, 1)
    return bound_sq


def _det_mod_p(a: np.ndarray, p: int) -> int:
    """Determinant of an int64 matrix modulo a 31-bit prime."""
    a = np.mod(a, p)
    n = a.shape[0]
    det = 1
    sign = 1
    for k in range(n):
        col = a[k:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return 0
        i = k + int(nz[0])
        if i != k:
            a[[k, i]] = a[[i, k]]
            sign = -sign
        piv = int(a[k, k])
        det = det * piv % p
        if k + 1 < n:
            inv = pow(piv, p - 2, p)
            factors = a[k + 1 :, k] * inv % p
            a[k + 1 :, k + 1 :] = (
                a[k + 1 :, k + 1 :] - factors[:, None] * a[k, k + 1 :][None, :]
            ) % p
    return det * sign % p


def _newton_interp_mod(points: Sequence[int], residues: Sequence[int], p: int) -> list[int]:
    """Coefficients mod p of the polynomial through (points[i], residues[i])."""
    n = len(points)
    span = max(abs(x) for x in points) * 2 + 1 if points else 1
    inv_table = [0] * (span + 1)
    for d in range(1, span + 1):
        inv_table[d] = pow(d, p - 2, p)

    def inv_diff(d: int) -> int:
        return inv_table[d] if d > 0 else p - inv_table[-d]

    coef = [r % p for r in residues]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * inv_diff(points[i] - points[i - j]) % p
    acc = [0] * n
    basis = [1]
    for k in range(n):
        ck = coef[k]
        if ck:
            for d, b in enumerate(basis):
                acc[d] = (acc[d] + ck * b) % p
        if k + 1 < n:
            nxt = [0] * (len(basis) + 1)
            xk = points[k] % p
            for d, b in enumerate(basis):
                nxt[d] = (nxt[d] - b * xk) % p
                nxt[d + 1] = (nxt[d + 1] + b) % p
            basis = nxt
    return acc


def _crt(residue_lists: list[list[int]], primes: list[int]) -> list[int]:
    """Combine per-prime coefficient residues; symmetric lift to ints."""
    count = len(residue_lists[0])
    modulus = 1
    combined = [0] * count
    for res, p in zip(residue_lists, primes):
        if modulus == 1:
            combined = [r % p for r in res]
            modulus = p
            continue
        inv = pow(modulus % p, p - 2, p)
        for i in range(count):
            delta = (res[i] - combined[i]) % p
            combined[i] = combined[i] + modulus * (delta * inv % p)
        modulus *= p
    half = modulus // 2
    return [c - modulus if c > half else c for c in combined]


def _polymat_det_bareiss(pm: PolyMatrix) -> IntPoly:
    points = interpolation_points(pm.degree_bound + 1)
    values = [bareiss_det(pm.eval_at(t)) for t in points]
    return interpolate_at_integers(points, values)


def _polymat_det_modular(pm: PolyMatrix) -> IntPoly:
    n = pm.size
    points = interpolation_points(pm.degree_bound + 1)
    max_abs_t = max(abs(t) for t in points)

    # exact integer evaluations, shared across primes; fall back to the
    # fraction-free engine when values could overflow int64
    value_bound = 0
    for row in pm.entries:
        for e in row:
            b = sum(abs(c) * max_abs_t ** k for k, c in enumerate(e.coeffs))
            value_bound = max(value_bound, b)
    if value_bound >= 2**62:
        return _polymat_det_bareiss(pm)

    stack = np.empty((len(points), n, n), dtype=np.int64)
    for ti, t in enumerate(points):
        for i, row in enumerate(pm.entries):
            for j, e in enumerate(row):
                stack[ti, i, j] = e(t)

    bound_sq = _hadamard_coeff_bound_sq(pm)
    primes: list[int] = []
    prod = 1
    while prod * prod <= 4 * bound_sq:
        primes = _primes_31bit(len(primes) + 1)
        prod *= primes[-1]

    residue_lists = []
    for p in primes:
        dets = [_det_mod_p(stack[ti].copy(), p) for ti in range(len(points))]
        residue_lists.append(_newton_interp_mod(points, dets, p))
    coeffs = _crt(residue_lists, primes)
    result = IntPoly(coeffs)

    # exact spot check at a point outside the interpolation grid
    t_star = max_abs_t + 1
    if result(t_star) != bareiss_det(pm.eval_at(t_star)):
        raise IntegralityViolation("modular determinant failed exact spot check")
    return result


# dimension above which the modular path beats per-point Bareiss elimination
_MODULAR_CUTOFF = 24


def polymat_det(pm: PolyMatrix, engine: str = "auto") -> IntPoly:
    """Exact determinant of a polynomial matrix.

    Both engines evaluate on the deterministic grid 0, 1, -1, 2, -2, ...
    and interpolate; they produce identical results.  ``engine`` is
    "auto", "bareiss" or "modular".
    """
    if pm.size == 0:
        return IntPoly.one()
    if engine == "auto":
        engine = "modular" if pm.size >= _MODULAR_CUTOFF else "bareiss"
    if engine == "bareiss":
        return _polymat_det_bareiss(pm)
    if engine == "modular":
        return _polymat_det_modular(pm)
    raise ValueError(f"unknown engine {engine!r}")


def charpoly(m: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(x I - m), exact."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.rows
    x = IntPoly.x()
    entries = [
        [
            x - IntPoly((m.entries[i][j],)) if i == j else IntPoly((-m.entries[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]
    result = polymat_det(PolyMatrix(tuple(tuple(r) for r in entries), degree_bound=n))
    if n and result.coeffs[-1] != 1:
        raise IntegralityViolation("characteristic polynomial is not monic")
    return result
