import cmath
import math

import pytest

from qstar import (
    BoundQuery,
    CaseFlag,
    ClassParams,
    FunctionalId,
    GridSpec,
    SearchSpec,
    bound_value,
    initial_coeffs_closed,
    maximize_functional,
    named_functional,
    random_schwarz_suite,
    rotated_extremal_values,
    sharpness_report,
)

COARSE = GridSpec.coarse()


def coarse_spec(fid, q, **kw):
    return SearchSpec(fid, q, grid=COARSE, refinement_levels=2, **kw)


# ----------------------------------------------------------------- grid search


def test_h2_2_search_attains_bound():
    res = maximize_functional(coarse_spec(FunctionalId.H2_2, 0.5))
    assert res.bound == pytest.approx(640.0 / 63.0, rel=1e-14)
    assert -1e-9 <= res.gap <= 1e-2
    assert res.argmax[0] == 1.0  # maximizer at b1 = 1


def test_h2_2_zero_slice():
    res = maximize_functional(
        coarse_spec(FunctionalId.H2_2, 0.5, b1_range=(0.0, 0.0))
    )
    assert res.bound == pytest.approx(64.0 / 9.0, rel=1e-14)
    assert abs(res.max_value - 64.0 / 9.0) <= 1e-6
    assert abs(res.argmax[1]) == pytest.approx(1.0)  # |x| = 1 attains


def test_fekete_search():
    res = maximize_functional(coarse_spec(FunctionalId.FEKETE_A2A3_A4, 0.5))
    assert res.max_value == pytest.approx(80.0 / 7.0, rel=1e-6)
    assert -1e-9 <= res.gap <= 1e-2
    assert res.argmax[0] == 1.0


def test_h1_2_search_attains_along_x_minus_one():
    # equality holds along the whole x = -1 line (any b1); rounding noise
    # decides which point of the line wins, but x = -1 it must be
    res = maximize_functional(coarse_spec(FunctionalId.H1_2, 0.5))
    assert res.max_value == pytest.approx(8.0 / 3.0, rel=1e-12)
    assert res.gap >= -1e-9
    assert res.argmax[1] == pytest.approx(-1.0, abs=1e-9)


def test_abs_a2_search():
    res = maximize_functional(coarse_spec(FunctionalId.ABS_A2, 0.7))
    assert res.max_value == pytest.approx(2.0 / 0.7, rel=1e-12)
    assert res.gap <= 1e-9


def test_search_determinism():
    spec = coarse_spec(FunctionalId.ABS_A4, 0.5)
    r1 = maximize_functional(spec)
    r2 = maximize_functional(spec)
    assert r1 == r2


def test_search_never_violates_bound():
    for fid in (FunctionalId.ABS_A3, FunctionalId.ABS_A4, FunctionalId.H2_2):
        for q in (0.4, 0.8):
            res = maximize_functional(coarse_spec(fid, q))
            assert res.gap >= -1e-9


def test_search_spec_validation():
    import qstar

    with pytest.raises(qstar.OutOfRange):
        SearchSpec(FunctionalId.ABS_A2, 1.5)
    with pytest.raises(qstar.UnknownFunctional):
        SearchSpec("nope", 0.5)


# ----------------------------------------------------------------- rotation


def test_rotated_extremal_attainment_identities():
    for q in (0.5, 0.8):
        a2, a3, a4 = initial_coeffs_closed(1.0, 0.0, 0.0, q)
        ra2, ra3, ra4 = rotated_extremal_values(q)
        # the rotation sends (a2, a3, a4) to (i a2, -a3, -i a4)
        assert abs(ra2 - 1j * a2) <= 1e-12 * abs(a2)
        assert abs(ra3 + a3) <= 1e-12 * abs(a3)
        assert abs(ra4 + 1j * a4) <= 1e-12 * abs(a4)
        params = ClassParams(q)
        checks = {
            FunctionalId.T1_2: 1.0 + a2.real**2,
            FunctionalId.T2_2: a2.real**2 + a3.real**2,
            FunctionalId.T3_2: a3.real**2 + a4.real**2,
            FunctionalId.T1_3: 1.0
            + 2.0 * a2.real**2
            + a3.real * (2.0 * a2.real**2 - a3.real),
        }
        for fid, exact in checks.items():
            achieved = named_functional(fid, ra2, ra3, ra4)
            bound = bound_value(BoundQuery(fid, params))
            assert achieved == pytest.approx(exact, rel=1e-12)
            assert achieved == pytest.approx(bound, rel=1e-9)


def test_rotated_extremal_t2_3_attains_nonzero_case():
    for q in (0.5, 0.8):
        achieved = named_functional(FunctionalId.T2_3, *rotated_extremal_values(q))
        bound = bound_value(
            BoundQuery(FunctionalId.T2_3, ClassParams(q), case_flag=CaseFlag.A2_NONZERO)
        )
        assert achieved == pytest.approx(bound, rel=1e-9)


def test_t1_2_value_at_half():
    ra2, ra3, ra4 = rotated_extremal_values(0.5)
    assert named_functional(FunctionalId.T1_2, ra2, ra3, ra4) == pytest.approx(17.0)


# ----------------------------------------------------------------- reports


def test_sharpness_report_structure_and_verdicts():
    rep = sharpness_report(
        [0.5],
        [FunctionalId.ABS_A3, FunctionalId.H2_2, FunctionalId.T1_2, FunctionalId.T1_3],
        grid=COARSE,
        refinement_levels=2,
        seed=7,
    )
    by_name = {it.name: it for it in rep.items}
    assert set(by_name) == {"abs_a3", "h2_2", "h2_2[b1=0]", "t1_2", "t1_3"}
    assert by_name["abs_a3"].verdict == "attained"
    assert by_name["h2_2"].verdict == "attained"
    assert by_name["h2_2"].case == "a2_nonzero"
    assert by_name["h2_2[b1=0]"].case == "a2_zero"
    assert by_name["t1_2"].achieved == pytest.approx(17.0)
    assert by_name["t1_3"].achieved == pytest.approx(2537.0 / 9.0, rel=1e-12)
    assert not rep.has_violation
    assert rep.seed == 7


def test_sharpness_report_deterministic():
    args = ([0.6], [FunctionalId.ABS_A3, FunctionalId.T2_2])
    r1 = sharpness_report(*args, grid=COARSE, refinement_levels=1)
    r2 = sharpness_report(*args, grid=COARSE, refinement_levels=1)
    assert r1 == r2


# ----------------------------------------------------------------- suite


def test_random_suite_no_violations_smoke():
    params = ClassParams(0.6 * cmath.exp(1j * math.pi / 4), 0.25)
    rep = random_schwarz_suite(params, seed=3, count=400, depth=5, order=8)
    assert not rep.has_violation
    verdicts = {it.verdict for it in rep.items}
    assert "skipped" not in verdicts


def test_random_suite_product_equality_for_forced_identity():
    # w = z attains the product bound with equality; real zeta, alpha = 0
    rep = random_schwarz_suite(ClassParams(0.5), seed=1, count=50, depth=4, order=8)
    for it in rep.items:
        if it.name.startswith("product"):
            assert abs(it.gap) <= 1e-9
            assert it.witness == "forced_z"
            assert it.verdict == "attained"


def test_random_suite_skips_on_failed_hypothesis():
    # 0.9i at alpha = 0.25 fails Re [3] > alpha: product items are skipped
    rep = random_schwarz_suite(ClassParams(0.9j, 0.25), seed=2, count=20, order=6)
    product_verdicts = {it.verdict for it in rep.items if it.name.startswith("product")}
    assert product_verdicts == {"skipped"}
    other_verdicts = {it.verdict for it in rep.items if not it.name.startswith("product")}
    assert "VIOLATION" not in other_verdicts
    assert "skipped" not in other_verdicts


def test_random_suite_degenerate_zeta_skips_everything():
    rep = random_schwarz_suite(ClassParams(-1.0), seed=0, count=5, order=6)
    assert {it.verdict for it in rep.items} == {"skipped"}


def test_random_suite_deterministic():
    params = ClassParams(-0.5, 0.25)
    r1 = random_schwarz_suite(params, seed=11, count=100, order=6)
    r2 = random_schwarz_suite(params, seed=11, count=100, order=6)
    assert r1 == r2
    r3 = random_schwarz_suite(params, seed=12, count=100, order=6)
    assert r1 != r3


def test_report_json_shape():
    rep = random_schwarz_suite(ClassParams(-0.5), seed=5, count=10, order=4)
    d = rep.to_json_dict()
    assert d["seed"] == 5
    assert d["tool_version"]
    assert all(
        set(item) == {"name", "zeta", "alpha", "case", "bound", "achieved", "gap",
                      "verdict", "witness"}
        for item in d["items"]
    )
