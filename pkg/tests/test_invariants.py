from math import comb

import numpy as np
import pytest

from hpharmonics.invariants import (
    cayley_hamilton_residual,
    check_scaling_identity,
    check_shift_identity,
    elementary_invariants_minors,
    elementary_invariants_newton,
    invariant_derivative,
    newton_endomorphisms,
)


def test_diagonal_invariants_both_paths():
    a = np.diag([1.0, 2.0, 3.0])
    expected = [1.0, 6.0, 11.0, 6.0]  # coefficients of (t-1)(t-2)(t-3)
    np.testing.assert_allclose(elementary_invariants_minors(a), expected)
    np.testing.assert_allclose(elementary_invariants_newton(a), expected)


def test_identity_gives_binomials():
    values = elementary_invariants_minors(np.eye(4))
    np.testing.assert_allclose(values, [1.0, 4.0, 6.0, 4.0, 1.0])


def test_rotation_generator():
    a = np.array([[0.0, 1.0], [-1.0, 0.0]])
    np.testing.assert_allclose(elementary_invariants_newton(a), [1.0, 0.0, 1.0])


def test_dimension_cap_boundary():
    # m = 8 is the largest supported dimension (255 principal minors)
    np.testing.assert_allclose(
        elementary_invariants_minors(np.eye(8)),
        [float(comb(8, r)) for r in range(9)],
    )
    rng = np.random.default_rng(88)
    a = rng.uniform(-1.0, 1.0, size=(8, 8))
    minors = elementary_invariants_minors(a)
    newton = elementary_invariants_newton(a)
    scale = max(1.0, float(np.max(np.abs(minors))))
    np.testing.assert_allclose(minors, newton, atol=1e-10 * scale, rtol=1e-10)


def test_leading_entry_is_one_exactly():
    rng = np.random.default_rng(0)
    a = rng.uniform(-1.0, 1.0, size=(5, 5))
    assert elementary_invariants_newton(a)[0] == 1.0
    assert elementary_invariants_minors(a)[0] == 1.0


@pytest.mark.parametrize("m", range(2, 7))
def test_minors_match_newton_random(m):
    rng = np.random.default_rng(100 + m)
    for _ in range(50):
        a = rng.uniform(-1.0, 1.0, size=(m, m))
        minors = elementary_invariants_minors(a)
        newton = elementary_invariants_newton(a)
        scale = max(1.0, float(np.max(np.abs(minors))))
        np.testing.assert_allclose(minors, newton, atol=1e-10 * scale, rtol=1e-10)


def test_newton_endomorphisms_diagonal():
    chis = newton_endomorphisms(np.diag([1.0, 2.0, 3.0]))
    np.testing.assert_allclose(chis[0], np.eye(3))
    np.testing.assert_allclose(chis[1], np.diag([5.0, 4.0, 3.0]))
    np.testing.assert_allclose(chis[2], np.diag([6.0, 3.0, 2.0]))
    np.testing.assert_allclose(chis[3], np.zeros((3, 3)), atol=1e-14)


def test_newton_endomorphisms_identity():
    chis = newton_endomorphisms(np.eye(3))
    np.testing.assert_allclose(chis[1], 2.0 * np.eye(3))
    np.testing.assert_allclose(chis[2], np.eye(3))


def test_cayley_hamilton_random():
    rng = np.random.default_rng(7)
    for m in range(2, 7):
        for _ in range(50):
            assert cayley_hamilton_residual(rng.uniform(-1.0, 1.0, size=(m, m))) <= 1e-9


def test_trace_identity_random():
    rng = np.random.default_rng(11)
    for m in range(2, 7):
        a = rng.uniform(-1.0, 1.0, size=(m, m))
        eps = elementary_invariants_newton(a)
        chis = newton_endomorphisms(a)
        for r in range(1, m + 1):
            lhs = np.trace(a @ chis[r - 1])
            assert abs(lhs - r * eps[r]) <= 1e-10 * max(1.0, abs(lhs))


def test_shift_identity_zero_matrix():
    for m in (2, 3, 5):
        a = np.zeros((m, m))
        for r in range(1, m + 1):
            assert check_shift_identity(a, r) == 0.0
        # invariants of the identity are plain binomial coefficients
        np.testing.assert_allclose(
            elementary_invariants_newton(np.eye(m)),
            [float(comb(m, r)) for r in range(m + 1)],
        )


def test_shift_identity_diagonal_example():
    a = np.diag([1.0, 2.0, 3.0])
    # e_2 of diag(2, 3, 4) is 26 = 11 + 2*6 + 3
    shifted = elementary_invariants_newton(np.eye(3) + a)
    assert shifted[2] == pytest.approx(26.0)
    assert check_shift_identity(a, 2) <= 1e-12


def test_shift_and_scaling_random():
    rng = np.random.default_rng(13)
    for m in range(2, 7):
        a = rng.uniform(-1.0, 1.0, size=(m, m))
        c = rng.uniform(-2.0, 2.0)
        for r in range(1, m + 1):
            assert check_shift_identity(a, r) <= 1e-9
            assert check_scaling_identity(a, r, c) <= 1e-9


def test_invariant_derivative_r1_is_trace():
    rng = np.random.default_rng(17)
    a = rng.uniform(-1.0, 1.0, size=(4, 4))
    b = rng.uniform(-1.0, 1.0, size=(4, 4))
    assert invariant_derivative(a, b, 1) == pytest.approx(np.trace(b))


def test_invariant_derivative_diagonal_example():
    a = np.diag([1.0, 2.0, 3.0])
    assert invariant_derivative(a, np.eye(3), 2) == pytest.approx(12.0)
    step = 1e-5
    fd = (
        elementary_invariants_newton(a + step * np.eye(3))[2]
        - elementary_invariants_newton(a - step * np.eye(3))[2]
    ) / (2 * step)
    assert fd == pytest.approx(12.0, abs=1e-6)


def test_invariant_derivative_matches_fd_random():
    rng = np.random.default_rng(19)
    step = 1e-5
    for m in range(2, 7):
        a = rng.uniform(-1.0, 1.0, size=(m, m))
        b = rng.uniform(-1.0, 1.0, size=(m, m))
        for r in range(1, m + 1):
            exact = invariant_derivative(a, b, r)
            fd = (
                elementary_invariants_newton(a + step * b)[r]
                - elementary_invariants_newton(a - step * b)[r]
            ) / (2 * step)
            assert abs(exact - fd) <= 1e-6


def test_input_validation():
    with pytest.raises(ValueError):
        elementary_invariants_minors(np.zeros((9, 9)))
    with pytest.raises(ValueError):
        elementary_invariants_minors(np.zeros((0, 0)))
    with pytest.raises(ValueError):
        elementary_invariants_newton(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        elementary_invariants_newton(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        invariant_derivative(np.eye(3), np.eye(4), 1)
    with pytest.raises(ValueError):
        invariant_derivative(np.eye(3), np.eye(3), 4)
    with pytest.raises(ValueError):
        check_shift_identity(np.eye(3), 0)
