"""Floating-point cross-check numerics.

A self-contained cyclic Jacobi eigensolver for symmetric matrices and a
Durand-Kerner root finder.  Roots of integer polynomials are extracted
after an exact square-free decomposition, so multiple roots keep full
floating-point accuracy instead of degrading to the cluster radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NotSymmetricError
from .polynomials import IntPoly, squarefree_decomposition

_MAX_JACOBI_SIZE = 200


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Cyclic Jacobi rotations run until the off-diagonal Frobenius norm
    drops below ``tol``; more than ``max_sweeps`` sweeps raises
    NoConvergenceError.  Input symmetry is checked to 1e-12 relative.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    if n > _MAX_JACOBI_SIZE:
        raise ValueError(f"matrix size {n} exceeds supported limit {_MAX_JACOBI_SIZE}")
    if n == 0:
        return []
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.max(np.abs(a - a.T))) > 1e-12 * scale:
        raise NotSymmetricError("matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2.0
    if n == 1:
        return [float(a[0, 0])]

    def off_norm() -> float:
        # sum the off-diagonal part directly; subtracting the diagonal
        # from the full norm cancels catastrophically near convergence
        b = a.copy()
        np.fill_diagonal(b, 0.0)
        return math.sqrt(float(np.sum(b * b)))

    for _ in range(max_sweeps):
        if off_norm() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # asymptotic form, avoids theta**2 overflow
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
    else:
        if off_norm() >= tol:
            raise NoConvergenceError("Jacobi sweeps did not converge")
    return sorted((float(x) for x in np.diag(a)), reverse=True)


@dataclass(frozen=True)
class PolynomialRoots:
    """Real roots (descending, with multiplicity) and a complex-root flag."""

    roots: tuple[float, ...]
    has_complex: bool


def _durand_kerner(p: IntPoly, tol: float, max_iterations: int) -> list[complex]:
    """All complex roots of a (square-free) polynomial by Durand-Kerner."""
    n = p.degree
    lead = p.coeffs[-1]
    coeffs = [c / lead for c in p.coeffs]
    if n == 1:
        return [complex(-coeffs[0])]
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    seed = complex(0.4, 0.9)
    z = [radius * seed**k for k in range(n)]

    def value(w: complex) -> complex:
        acc = complex(0.0)
        for c in reversed(coeffs):
            acc = acc * w + c
        return acc

    for _ in range(max_iterations):
        moved = 0.0
        nxt = list(z)
        for j in range(n):
            den = complex(1.0)
            for k in range(n):
                if k != j:
                    den *= z[j] - z[k]
            if den == 0:
                den = complex(1e-300)
            step = value(z[j]) / den
            nxt[j] = z[j] - step
            moved = max(moved, abs(step))
        z = nxt
        if moved < tol * (1.0 + max(abs(w) for w in z)):
            return z
    raise NoConvergenceError("Durand-Kerner iteration did not converge")


def real_roots(
    p: IntPoly, tol: float = 1e-12, max_iterations: int = 1000
) -> PolynomialRoots:
    """Approximate real roots of a nonzero integer polynomial.

    Returns the real parts of all roots with |imag| < 1e-8 (multiplicity
    preserved, sorted descending) and a flag set when any root is
    genuinely complex.
    """
    if p.is_zero():
        raise ValueError("root finding requires a nonzero polynomial")
    reals: list[float] = []
    has_complex = False
    for factor, mult in squarefree_decomposition(p):
        for z in _durand_kerner(factor, tol, max_iterations):
            if abs(z.imag) < 1e-8:
                reals.extend([float(z.real)] * mult)
            else:
                has_complex = True
    return PolynomialRoots(tuple(sorted(reals, reverse=True)), has_complex)
