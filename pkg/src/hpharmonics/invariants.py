"""Elementary invariants and Newton endomorphisms of small dense matrices.

For an m x m matrix A the characteristic polynomial is

    det(A - t*I) = sum_{k=0..m} (-1)^k e_{m-k}(A) t^k,

so e_0 = 1, e_1 = trace(A), e_m = det(A), and in general e_r(A) is the sum
of the principal r x r minors of A.  Two independent computation paths are
provided: a brute-force sum over principal minors (the oracle, O(2^m), hence
the dimension cap) and the Newton-Girard recursion through power traces.

The Newton endomorphisms are the partial evaluations of the characteristic
polynomial at A itself,

    chi_0 = I,    chi_r = e_r(A) * I - A @ chi_{r-1},

so chi_1 = trace(A)*I - A and chi_m = 0 (Cayley-Hamilton).  They satisfy
trace(A @ chi_{r-1}) = r * e_r(A), and d/dt e_r(A + t*B) at t=0 equals
trace(B @ chi_{r-1}(A)).
"""

from __future__ import annotations

import itertools
import math

import numpy as np

#: Dimension cap keeping the 2^m principal-minor oracle trivially cheap.
MAX_DIM = 8


def as_square_matrix(a) -> np.ndarray:
    """Validate and return ``a`` as a float m x m array, 1 <= m <= MAX_DIM."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    m = arr.shape[0]
    if not 1 <= m <= MAX_DIM:
        raise ValueError(f"dimension {m} outside supported range 1..{MAX_DIM}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def _binom(n: int, k: int) -> int:
    # math.comb with the conventions binom(n, 0) = 1 and binom(n, k) = 0
    # for k > n or k < 0, valid for the shift identities down to r = m.
    if k == 0:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def elementary_invariants_minors(a) -> np.ndarray:
    """Elementary invariants via brute-force principal-minor sums.

    Returns the vector (e_0, ..., e_m) with e_r the sum of det(A[S, S])
    over all r-element index subsets S.  This is the reference oracle for
    :func:`elementary_invariants_newton`.
    """
    arr = as_square_matrix(a)
    m = arr.shape[0]
    values = np.zeros(m + 1)
    values[0] = 1.0
    for r in range(1, m + 1):
        total = 0.0
        for subset in itertools.combinations(range(m), r):
            idx = np.asarray(subset)
            total += float(np.linalg.det(arr[np.ix_(idx, idx)]))
        values[r] = total
    return values


def elementary_invariants_newton(a) -> np.ndarray:
    """Elementary invariants (e_0, ..., e_m) via the Newton-Girard recursion.

    Uses r * e_r = sum_{k=1..r} (-1)^(k-1) e_{r-k} trace(A^k) with matrix
    powers accumulated by repeated multiplication, so no diagonalizability
    assumption is made.
    """
    arr = as_square_matrix(a)
    m = arr.shape[0]
    power_traces = np.zeros(m + 1)
    acc = np.eye(m)
    for k in range(1, m + 1):
        acc = acc @ arr
        power_traces[k] = np.trace(acc)
    values = np.zeros(m + 1)
    values[0] = 1.0
    for r in range(1, m + 1):
        s = 0.0
        for k in range(1, r + 1):
            s += (-1.0) ** (k - 1) * values[r - k] * power_traces[k]
        values[r] = s / r
    return values


def newton_endomorphisms(a) -> list[np.ndarray]:
    """Newton endomorphism matrices [chi_0, chi_1, ..., chi_m] of ``a``.

    chi_0 is the identity, chi_r = e_r*I - A @ chi_{r-1}, and chi_m is the
    zero matrix up to roundoff (Cayley-Hamilton; see
    :func:`cayley_hamilton_residual`).
    """
    arr = as_square_matrix(a)
    m = arr.shape[0]
    values = elementary_invariants_newton(arr)
    chis = [np.eye(m)]
    for r in range(1, m + 1):
        chis.append(values[r] * np.eye(m) - arr @ chis[r - 1])
    return chis


def cayley_hamilton_residual(a) -> float:
    """Max entry of chi_m(A), normalized by the recursion's largest entry."""
    chis = newton_endomorphisms(a)
    scale = max(float(np.max(np.abs(c))) for c in chis)
    return float(np.max(np.abs(chis[-1]))) / scale


def invariant_derivative(a, b, r: int) -> float:
    """Exact derivative d/dt e_r(A + t*B) at t = 0, namely trace(B chi_{r-1}(A))."""
    arr = as_square_matrix(a)
    brr = as_square_matrix(b)
    if arr.shape != brr.shape:
        raise ValueError("matrices must share the same dimension")
    m = arr.shape[0]
    if not 1 <= r <= m:
        raise ValueError(f"order r={r} outside 1..{m}")
    chi = newton_endomorphisms(arr)[r - 1]
    return float(np.trace(brr @ chi))


def check_shift_identity(a, r: int) -> float:
    """Residual of the shift identities for e_r and chi_r under A -> I + A.

    Both expansions

        e_r(I + A)   = sum_k binom(m-k,   r-k) e_k(A)
        chi_r(I + A) = sum_k binom(m-1-k, r-k) chi_k(A)

    are evaluated and the larger absolute residual is returned.
    """
    arr = as_square_matrix(a)
    m = arr.shape[0]
    if not 1 <= r <= m:
        raise ValueError(f"order r={r} outside 1..{m}")
    shifted = np.eye(m) + arr

    values = elementary_invariants_newton(arr)
    lhs_e = elementary_invariants_newton(shifted)[r]
    rhs_e = sum(_binom(m - k, r - k) * values[k] for k in range(r + 1))

    chis = newton_endomorphisms(arr)
    lhs_chi = newton_endomorphisms(shifted)[r]
    rhs_chi = np.zeros((m, m))
    for k in range(r + 1):
        rhs_chi = rhs_chi + _binom(m - 1 - k, r - k) * chis[k]

    return max(abs(lhs_e - rhs_e), float(np.max(np.abs(lhs_chi - rhs_chi))))


def check_scaling_identity(a, r: int, c: float) -> float:
    """Residual of the homogeneity chi_{cA,r}(cA) = c^r chi_{A,r}(A)."""
    arr = as_square_matrix(a)
    m = arr.shape[0]
    if not 1 <= r <= m:
        raise ValueError(f"order r={r} outside 1..{m}")
    lhs = newton_endomorphisms(c * arr)[r]
    rhs = c**r * newton_endomorphisms(arr)[r]
    return float(np.max(np.abs(lhs - rhs)))
