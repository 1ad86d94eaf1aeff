import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigenus.bounds import (
    STABLE_GENUS_REFERENCE,
    InconsistentInvariants,
    InvariantSet,
    cover_bounds,
    einstein_bound,
    genus_bounds,
    hyperbolic_bounds,
    hyperbolic_volume,
    lower_bounds,
    euler_sigma_bounds,
    stable_genus_surface_bundle,
    stable_records,
    upper_bound_sigma,
)

DAVIS = InvariantSet(chi=26, beta1=24, beta2=72, sigma=14400, excluded_s4=True)


def test_davis_lower_bound():
    report = lower_bounds(DAVIS)
    assert report.lower == 96
    assert report.get("betti-sum").value == 96
    assert report.get("third-euler").value == 9


def test_s1xs3_lower_bound():
    assert lower_bounds(InvariantSet(chi=0, beta1=1, beta2=0, excluded_s4=True)).lower == 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_surface_times_sphere(g):
    # S_g x S^2: chi = 4 - 4g, beta1 = 2g, beta2 = 2
    inv = InvariantSet(chi=4 - 4 * g, beta1=2 * g, beta2=2, excluded_s4=True)
    assert lower_bounds(inv).lower == 2 * g + 2


def test_case_bounds():
    # chi in {1, 2} with beta1 = 0 and not S^4
    assert lower_bounds(InvariantSet(chi=2, beta1=0, excluded_s4=True)).lower == 3
    assert lower_bounds(InvariantSet(chi=2, beta1=0)).lower == 0
    # chi > 0, beta1 > 0
    report = lower_bounds(InvariantSet(chi=4, beta1=1, excluded_s4=True))
    assert report.get("positive-euler-b1").value == 4
    # half-euler needs both exclusions
    names = {b.name for b in lower_bounds(InvariantSet(chi=9, excluded_s4=True)).bounds}
    assert "half-euler" not in names
    report = lower_bounds(InvariantSet(chi=9, excluded_s4=True, excluded_cp2=True))
    assert report.get("half-euler").value == 5
    # chi <= 0 applies without any assertion
    assert lower_bounds(InvariantSet(chi=-5)).get("nonpositive-euler").value == 4


def test_integer_ceilings():
    assert lower_bounds(InvariantSet(chi=-7, excluded_s4=True)).get("third-euler").value == 3
    assert lower_bounds(InvariantSet(chi=3)).get("duality-b1").value == 0
    assert lower_bounds(InvariantSet(chi=-3)).get("duality-b1").value == 3


def test_missing_chi_and_bad_inputs():
    with pytest.raises(ValueError):
        InvariantSet(chi=None)
    with pytest.raises(ValueError):
        InvariantSet(chi=2, beta1=-1)
    with pytest.raises(ValueError):
        InvariantSet(chi=2, sigma=0)


def test_duality_violation():
    with pytest.raises(InconsistentInvariants):
        InvariantSet(chi=26, beta1=24, beta2=71)


def test_upper_bound_sigma():
    assert upper_bound_sigma(14400) == 864000 == 60 * 120**2
    assert upper_bound_sigma(1) == 60
    assert upper_bound_sigma(6) == 360
    with pytest.raises(ValueError):
        upper_bound_sigma(0)


def test_genus_bounds_sandwich():
    inv = InvariantSet(chi=26, beta1=24, beta2=72, sigma=14400, excluded_s4=True,
                       trisection_genus=7201)
    report = genus_bounds(inv)
    assert (report.upper, report.lower) == (7201, 96)
    assert report.sandwich("g(M_D)") == "7201 ≥ g(M_D) ≥ 96"
    assert report.consistent and report.diagnostic == ""


def test_inconsistent_report_is_loud():
    report = genus_bounds(InvariantSet(chi=26, beta1=24, beta2=72, trisection_genus=10))
    assert not report.consistent
    assert report.diagnostic.startswith("INCONSISTENT")
    assert "INCONSISTENT" in report.to_text()


def test_cover_bounds():
    report = cover_bounds(DAVIS, 2)
    assert (report.lower, report.upper) == (18, 1728000)
    assert report.extras["linear_in_degree"] is True
    flat = cover_bounds(InvariantSet(chi=0, excluded_s4=True), 5)
    assert flat.lower == 0 and flat.extras["linear_in_degree"] is False
    with pytest.raises(ValueError):
        cover_bounds(DAVIS, 0)


@given(chi=st.integers(-60, 60), sigma=st.integers(1, 10**5))
def test_degree_one_cover_matches_euler_sigma_bounds(chi, sigma):
    inv = InvariantSet(chi=chi, sigma=sigma, excluded_s4=True)
    a, b = cover_bounds(inv, 1), euler_sigma_bounds(inv)
    assert [(x.name, x.value) for x in a.bounds] == [(x.name, x.value) for x in b.bounds]


def test_hyperbolic_from_chi():
    report = hyperbolic_bounds(chi=26, sigma=14400)
    vol = 104 * math.pi**2 / 3
    assert math.isclose(report.extras["volume"], vol, rel_tol=1e-12)
    assert report.lower == 13
    assert math.isclose(report.extras["C"], 864000 / vol, rel_tol=1e-9)
    assert f"{report.extras['C']:.6g}" == "2525.24"


def test_hyperbolic_from_volume():
    assert hyperbolic_bounds(volume=8 * math.pi**2 / 3).lower == 1
    with pytest.raises(InconsistentInvariants):
        hyperbolic_bounds(chi=26, volume=300.0)
    with pytest.raises(InconsistentInvariants):
        hyperbolic_bounds(chi=3)
    with pytest.raises(InconsistentInvariants):
        hyperbolic_bounds(chi=0)
    with pytest.raises(ValueError):
        hyperbolic_bounds(chi=2, volume=-1.0)


@given(chi=st.integers(1, 10**6).map(lambda x: 2 * x))
def test_hyperbolic_roundtrip(chi):
    vol = hyperbolic_volume(chi)
    assert hyperbolic_bounds(volume=vol).extras["chi"] == chi
    assert abs(hyperbolic_volume(chi) - vol) <= math.ulp(vol)


def test_einstein_bound():
    assert einstein_bound(0, 0) == 0
    assert einstein_bound(16, 0) == 8
    assert math.isclose(einstein_bound(0, 7776 * math.pi**2), 1, rel_tol=1e-9)
    assert math.isclose(einstein_bound(-3, 7776 * math.pi**2), 2.5, rel_tol=1e-9)
    with pytest.raises(ValueError):
        einstein_bound(0, -1)


def test_stable_records():
    rec = stable_records([(1, 10), (2, 12)])
    assert rec.value == Fraction(6) and rec.upper_on_infimum == 6
    rec = stable_records([(1, 1)], chi=0)
    assert rec.value == 1 and rec.lower == 0
    assert STABLE_GENUS_REFERENCE["S1xS3"] == 0 <= rec.value
    assert stable_records([(3, 7)]).value == Fraction(7, 3)
    with pytest.raises(ValueError):
        stable_records([])
    with pytest.raises(ValueError):
        stable_records([(0, 1)])


def test_surface_bundle_reference():
    assert [stable_genus_surface_bundle(g) for g in (1, 2, 3)] == [0, 2, 4]


@given(b1=st.integers(0, 40), b2=st.integers(0, 80), s4=st.booleans())
def test_more_information_never_weakens(b1, b2, s4):
    chi = 2 - 2 * b1 + b2
    full = lower_bounds(InvariantSet(chi=chi, beta1=b1, beta2=b2, excluded_s4=s4)).lower
    bare = lower_bounds(InvariantSet(chi=chi, excluded_s4=s4)).lower
    assert full >= bare


def test_report_serialisation_is_stable():
    report = genus_bounds(DAVIS)
    assert report.to_json() == genus_bounds(DAVIS).to_json()
    assert '"lower": 96' in report.to_json()
