import numpy as np
import pytest

from qstar import (
    FunctionalId,
    IndexOutOfRange,
    UnknownId,
    hankel_det,
    hankel_matrix,
    named_functional,
    toeplitz_det,
    toeplitz_matrix,
)

from _oracles import det_permanent_expansion

EXTREMAL_HALF = (1.0, 4.0, 40.0 / 3.0, 880.0 / 21.0)  # a1..a4 at q = 0.5


def random_coeffs(rng, n=8):
    vals = rng.normal(size=n) + 1j * rng.normal(size=n)
    vals[0] = 1.0
    return vals


# ----------------------------------------------------------------- matrices


def test_hankel_one_by_one_is_coefficient():
    a = (1.0, 2.0, 3.0, 4.0)
    for n in range(1, 5):
        assert hankel_det(a, n, 1) == a[n - 1]


def test_hankel_h1_2_is_a3_minus_a2_squared():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = random_coeffs(rng)
        got = hankel_det(a, 1, 2)
        assert abs(got - (a[2] - a[1] ** 2)) <= 1e-12


def test_hankel_h2_2_extremal_value():
    got = hankel_det(EXTREMAL_HALF, 2, 2)
    assert abs(got - (-640.0 / 63.0)) <= 1e-12


def test_toeplitz_small_cases():
    rng = np.random.default_rng(1)
    for _ in range(20):
        a = random_coeffs(rng)
        a1, a2, a3, a4 = a[0], a[1], a[2], a[3]
        assert abs(toeplitz_det(a, 1, 2) - (1 - a2 * a2)) <= 1e-12
        t13 = 1 - 2 * a2 * a2 + 2 * a2 * a2 * a3 - a3 * a3
        assert abs(toeplitz_det(a, 1, 3) - t13) <= 1e-12
        t23 = (a2 - a4) * (a2 * a2 - 2 * a3 * a3 + a2 * a4)
        assert abs(toeplitz_det(a, 2, 3) - t23) <= 1e-11


def test_matrix_shapes_and_symmetry():
    a = tuple(range(1, 12))
    for k in (2, 3, 4):
        h = hankel_matrix(a, 1, k)
        t = toeplitz_matrix(a, 1, k)
        assert np.array_equal(h, h.T)
        assert np.array_equal(t, t.T)
        # constant anti-diagonals vs constant diagonals
        assert h[0, k - 1] == h[k - 1, 0]
        assert t[0, 0] == t[k - 1, k - 1]


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        hankel_det((1.0, 2.0), 2, 2)  # needs a_4
    with pytest.raises(IndexOutOfRange):
        toeplitz_det((1.0, 2.0, 3.0), 0, 2)


def test_pivoted_determinant_against_permutation_expansion():
    rng = np.random.default_rng(2)
    for _ in range(25):
        a = random_coeffs(rng, 12)
        for build, det in ((hankel_matrix, hankel_det), (toeplitz_matrix, toeplitz_det)):
            m = build(a, 1, 4)
            got = det(a, 1, 4)
            oracle = det_permanent_expansion(m.tolist())
            assert abs(got - oracle) <= 1e-10 * max(1.0, abs(oracle))
            assert abs(got - np.linalg.det(m)) <= 1e-10 * max(1.0, abs(oracle))


# ----------------------------------------------------------------- functionals


def test_named_functional_examples():
    a2, a3, a4 = EXTREMAL_HALF[1:]
    assert named_functional("fekete_a2a3_a4", a2, a3, a4) == pytest.approx(240.0 / 21.0)
    assert named_functional("h1_2", 0.0, 0.0, 1.0) == 0.0
    # pi/2-rotated extremal: (i a2, -a3, -i a4)
    val = named_functional("t1_3", 1j * a2, -a3, -1j * a4)
    assert val == pytest.approx(2537.0 / 9.0, rel=1e-12)


def test_named_functional_unknown_id():
    with pytest.raises(UnknownId):
        named_functional("h9_9", 1, 2, 3)


def test_named_functional_matches_determinants():
    rng = np.random.default_rng(3)
    cases = {
        FunctionalId.H1_2: lambda a: hankel_det(a, 1, 2),
        FunctionalId.H2_2: lambda a: hankel_det(a, 2, 2),
        FunctionalId.T1_2: lambda a: toeplitz_det(a, 1, 2),
        FunctionalId.T2_2: lambda a: toeplitz_det(a, 2, 2),
        FunctionalId.T3_2: lambda a: toeplitz_det(a, 3, 2),
        FunctionalId.T1_3: lambda a: toeplitz_det(a, 1, 3),
        FunctionalId.T2_3: lambda a: toeplitz_det(a, 2, 3),
    }
    for _ in range(10000 // len(cases)):
        a = random_coeffs(rng, 5)
        a2, a3, a4 = a[1], a[2], a[3]
        for fid, det in cases.items():
            named = named_functional(fid, a2, a3, a4)
            assert abs(named - abs(det(a))) <= 1e-12 * max(1.0, named)
