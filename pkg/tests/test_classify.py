"""Spectral classification reports across the supported space families."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wro import (
    CircularSet,
    ClassifyError,
    Component,
    REPORT_KEYS,
    RotationVector,
    Status,
    boundary_sample_weight,
    circle,
    classify,
    closed_annulus,
    closed_disc,
    empty_set,
    geometric_mean,
    named_rotation,
    open_annulus,
    open_disc,
    origin_set,
    point_spectrum_candidates,
    polynomial,
    rational,
    raw_radians,
    report_consistency,
    residual_index,
    root_of_unity,
    taylor,
    torus_polynomial,
)
from wro.classify import (
    FLAG_AP_BOUNDARY,
    FLAG_BEYOND_LIPSCHITZ,
    FLAG_INNER_ANNULUS_INDEX,
    bounds,
)
from wro.weights import space

GOLDEN = named_rotation("golden")


def _tagged(coeffs, *tags):
    return polynomial(coeffs, tags=tags)


# ----------------------------------------------------------------------
# set algebra
# ----------------------------------------------------------------------


def test_circular_set_contains_semantics():
    disc = closed_disc(2.0)
    assert disc.contains(circle(2.0))
    assert disc.contains(open_disc(2.0))
    assert disc.contains(origin_set())
    assert disc.contains(empty_set())
    assert not open_disc(2.0).contains(circle(2.0))
    assert not open_disc(2.0).contains(closed_disc(2.0))
    assert open_disc(2.0).contains(origin_set())
    assert not empty_set().contains(circle(1.0))
    assert empty_set().contains(empty_set())
    assert closed_annulus(1.0, 2.0).contains(circle(1.5))
    assert not closed_annulus(1.0, 2.0).contains(origin_set())
    assert not open_annulus(1.0, 2.0).contains(circle(1.0))
    two = CircularSet((Component("circle", r=0.7), Component("circle", r=1.0)))
    assert closed_annulus(0.7, 1.0).contains(two)
    assert not two.contains(closed_annulus(0.7, 1.0))


def test_component_validation():
    with pytest.raises(ClassifyError):
        Component("square", r=1.0)
    with pytest.raises(ClassifyError):
        Component("circle", r=0.0)
    with pytest.raises(ClassifyError):
        Component("open_annulus", r_in=2.0, r_out=1.0)
    with pytest.raises(ClassifyError):
        Status("roughly")
    with pytest.raises(ClassifyError):
        Status("bounds", lower=circle(1.0))


def test_outer_radius():
    assert empty_set().outer_radius() == 0.0
    assert closed_annulus(0.5, 3.0).outer_radius() == 3.0
    assert circle(1.5).outer_radius() == 1.5


# ----------------------------------------------------------------------
# the trichotomy on the disc
# ----------------------------------------------------------------------


def test_case1_invertible_weight_all_circle():
    w = _tagged([-2, 1], "disc_algebra")
    rep = classify(space("bergman", p=2), w, GOLDEN)
    for key in REPORT_KEYS:
        sr = rep.sets[key]
        assert sr.status.kind == "exact"
        if key == "sigma_r":
            assert sr.set.is_empty
        else:
            assert sr.set == circle(2.0)
    assert "bergman-trichotomy(1)" in rep.citations
    assert "rotation-circles" in rep.citations
    assert rep.index_map == ()
    assert rep.open_flags == ()
    assert not rep.has_unknown()


def test_case2_interior_zero_residual_disc():
    w = _tagged([1, -2.5, 1], "disc_algebra")   # zeros 1/2 and 2
    rep = classify(space("bergman", p=2), w, GOLDEN)
    assert rep.sets["sigma"].set == closed_disc(2.0)
    assert rep.sets["sigma_ap"].set == circle(2.0)
    assert rep.sets["sigma_r"].set == open_disc(2.0)
    for key in ("sigma_1", "sigma_2", "sigma_3"):
        assert rep.sets[key].set == circle(2.0)
    for key in ("sigma_4", "sigma_5"):
        assert rep.sets[key].set == closed_disc(2.0)
    assert len(rep.index_map) == 1
    entry = rep.index_map[0]
    assert entry.index == -1 and not entry.minus_infinity
    assert entry.component.kind == "open_disc" and entry.component.r == pytest.approx(2.0)
    assert "blaschke-zero-index" in rep.citations


def test_case2_double_interior_zero_index():
    w = _tagged([0.25, -1.0, 1.0], "disc_algebra")   # (z - 1/2)^2
    assert residual_index(space("disc_algebra"), w, GOLDEN) == -2


def test_case3_boundary_zero_all_disc():
    w = _tagged([-1, 1], "disc_algebra")
    rep = classify(space("bloch", ), _tagged([-1, 1], "disc_algebra", "multiplier_Bloch"), GOLDEN)
    assert rep.sets["sigma_r"].set.is_empty
    for key in REPORT_KEYS:
        if key == "sigma_r":
            continue
        assert rep.sets[key].set == closed_disc(1.0)
        assert rep.sets[key].status.kind == "exact"
    assert rep.index_map == ()
    del w


def test_family_rules_and_reductions():
    w2 = _tagged([-2, 1], "disc_algebra")
    wh = _tagged([-2, 1], "H_inf")
    cases = (
        (space("disc_algebra"), w2, "uniform-algebra-trichotomy(1)", None),
        (space("smooth_cna", order=2), w2, "uniform-algebra-trichotomy(1)", "smooth-boundary-reduction"),
        (space("dirichlet", p=2), _tagged([-2, 1], "disc_algebra", "multiplier_Dirichlet"),
         "dirichlet-trichotomy(1)", None),
        (space("hinf"), wh, "hinf-trichotomy(1)", None),
        (space("hardy_banach"), wh, "hinf-trichotomy(1)", "hardy-banach-transfer"),
        (space("sobolev_wna", order=1, p=2), wh, "hinf-trichotomy(1)", "sobolev-hardy-reduction"),
    )
    for sp, w, cite, reduction in cases:
        rep = classify(sp, w, GOLDEN)
        assert cite in rep.citations, sp.variant
        if reduction is not None:
            assert reduction in rep.citations, sp.variant


def test_missing_tag_rejected():
    # closed form weights carry every tag implicitly; only series and
    # sample weights can lack one
    t = taylor([-2.0, 0.5], tail_bound=0.25, tags=("disc_algebra",))
    with pytest.raises(ClassifyError):
        classify(space("bloch"), t, GOLDEN)
    with pytest.raises(ClassifyError):
        classify(space("hinf"), t, GOLDEN)
    assert classify(space("disc_algebra"), t, GOLDEN) is not None


def test_rotation_admissibility():
    w = _tagged([-2, 1], "disc_algebra")
    sp = space("bergman", p=2)
    with pytest.raises(ClassifyError):
        classify(sp, w, root_of_unity(1, 3))
    with pytest.raises(ClassifyError):
        classify(sp, w, raw_radians(1.0))
    # declared non periodic raw angles are accepted
    rep = classify(sp, w, raw_radians(1.0, assumed_nonperiodic=True))
    assert rep.sets["sigma"].set == circle(2.0)
    rv = RotationVector((GOLDEN, named_rotation("sqrt2")), ())
    with pytest.raises(ClassifyError):
        classify(sp, w, rv)


# ----------------------------------------------------------------------
# series coefficient weights (exactness degrades honestly)
# ----------------------------------------------------------------------


def test_taylor_boundary_certified_keeps_ap_exact():
    w = taylor([-2.0, 0.5], tail_bound=0.25, tags=("disc_algebra",))
    rep = classify(space("bergman", p=2), w, GOLDEN)
    g = geometric_mean(w, 1.0)
    for key in ("sigma_ap", "sigma_1", "sigma_2"):
        assert rep.sets[key].status.kind == "exact"
        assert rep.sets[key].set == circle(g)
    assert rep.sets["sigma"].status.kind == "bounds"
    assert rep.sets["sigma"].status.lower == circle(g)
    assert rep.sets["sigma"].status.upper == closed_disc(g)
    assert rep.sets["sigma_r"].status.kind == "bounds"
    assert rep.sets["sigma_r"].status.lower == empty_set()
    assert "bergman-trichotomy(boundary-certified)" in rep.citations


def test_taylor_uncertified_full_sandwich():
    w = taylor([-2.0, 0.5], tail_bound=1.9, tags=("disc_algebra",))
    rep = classify(space("bergman", p=2), w, GOLDEN)
    for key in REPORT_KEYS:
        assert rep.sets[key].status.kind == "bounds"
    assert "bergman-trichotomy(unresolved)" in rep.citations


def test_samples_weight_sandwich_and_hinf_special_case():
    vals = [complex(np.exp(2j * np.pi * k / 64)) - 2.0 for k in range(64)]
    w = boundary_sample_weight(vals, tags=("disc_algebra",))
    rep = classify(space("bergman", p=2), w, GOLDEN)
    g = geometric_mean(w, 1.0)
    assert rep.sets["sigma"].status.kind == "bounds"
    assert rep.sets["sigma"].status.lower == circle(g)
    wh = boundary_sample_weight(vals, tags=("H_inf",))
    rep = classify(space("hinf"), wh, GOLDEN)
    assert rep.sets["sigma"].status.kind == "bounds"
    assert rep.sets["sigma"].status.upper == closed_disc(3.0)
    assert rep.sets["sigma_ap"].status.kind == "unknown"
    assert rep.has_unknown()


# ----------------------------------------------------------------------
# series algebra on coefficients
# ----------------------------------------------------------------------


def test_ell1a_invertible_all_circle():
    w = polynomial([3, 1], tags=("ell1A",))
    rep = classify(space("ell1a"), w, GOLDEN)
    assert rep.sets["sigma"].set == circle(3.0)
    assert "wiener-series-circle(1)" in rep.citations


def test_ell1a_noninvertible_keeps_boundary_open():
    w = polynomial([-1, 1], tags=("ell1A",))
    rep = classify(space("ell1a"), w, GOLDEN)
    assert rep.sets["sigma"].status.kind == "exact"
    assert rep.sets["sigma"].set == closed_disc(1.0)
    assert rep.sets["sigma_ap"].status.kind == "unknown"
    assert FLAG_AP_BOUNDARY in rep.open_flags
    assert rep.has_unknown()


def test_ell1a_taylor_beyond_lipschitz():
    w = taylor([2.0, 0.5], tail_bound=0.25, tags=("ell1A",))
    rep = classify(space("ell1a"), w, GOLDEN)
    assert FLAG_BEYOND_LIPSCHITZ in rep.open_flags
    sr = rep.sets["sigma"]
    assert sr.status.kind == "bounds"
    assert sr.status.upper == closed_disc(2.75)   # |2| + |1/2| + tail 1/4
    smooth = taylor([2.0, 0.5], tail_bound=0.25, tags=("ell1A", "Lambda_class"))
    rep = classify(space("ell1a"), smooth, GOLDEN)
    assert rep.open_flags == ()
    assert rep.sets["sigma"].status.kind == "bounds"


# ----------------------------------------------------------------------
# annulus
# ----------------------------------------------------------------------


def test_annulus_two_circles():
    sp = space("annulus_hardy", inner_radius=0.5, p=2)
    w = polynomial([-0.7, 1], tags=("H_inf",))
    rep = classify(sp, w, GOLDEN)
    ap = rep.sets["sigma_ap"].set
    radii = sorted(c.r for c in ap.components)
    assert radii == pytest.approx([0.7, 1.0])
    assert rep.sets["sigma"].set == closed_annulus(0.7, 1.0)
    assert rep.sets["sigma_r"].set == open_annulus(0.7, 1.0)
    assert rep.sets["sigma_3"].status.kind == "bounds"
    assert FLAG_INNER_ANNULUS_INDEX in rep.open_flags
    assert "annulus-boundary-circles(two-circles)" in rep.citations


def test_annulus_merged_circles():
    sp = space("annulus_hardy", inner_radius=0.5, p=2)
    w = polynomial([-2, 1], tags=("H_inf",))
    rep = classify(sp, w, GOLDEN)
    for key in REPORT_KEYS:
        if key == "sigma_r":
            assert rep.sets[key].set.is_empty
        else:
            assert rep.sets[key].set == circle(2.0)
    assert "annulus-boundary-circles(merged)" in rep.citations


def test_annulus_rejects_boundary_zeros_and_series():
    sp = space("annulus_hardy", inner_radius=0.5, p=2)
    with pytest.raises(ClassifyError):
        classify(sp, polynomial([-0.5, 1], tags=("H_inf",)), GOLDEN)
    with pytest.raises(ClassifyError):
        classify(sp, polynomial([-1, 1], tags=("H_inf",)), GOLDEN)
    with pytest.raises(ClassifyError):
        classify(sp, taylor([2.0], tail_bound=0.1, tags=("H_inf",)), GOLDEN)


# ----------------------------------------------------------------------
# polydisc
# ----------------------------------------------------------------------

RV2 = RotationVector((GOLDEN, named_rotation("sqrt2")), ())


def test_polydisc_univariate_axis_trichotomy():
    sp = space("polydisc_algebra", dim=2)
    w = torus_polynomial(2, {(0, 0): -2.0, (1, 0): 1.0})
    rep = classify(sp, w, RV2)
    assert rep.sets["sigma"].set == circle(2.0)
    assert "polydisc-algebra-cases(1)" in rep.citations


def test_polydisc_case2_minus_infinity_index():
    sp = space("polydisc_bergman", dim=2, p=2)
    w = torus_polynomial(2, {(0, 0): 1.0, (1, 0): -2.5, (2, 0): 1.0})
    rep = classify(sp, w, RV2)
    assert rep.sets["sigma_3"].set == closed_disc(2.0)
    assert rep.sets["sigma_3"].status.kind == "exact"
    assert rep.sets["sigma_1"].set == circle(2.0)
    entry = rep.index_map[0]
    assert entry.minus_infinity and entry.index is None
    with pytest.raises(ClassifyError):
        residual_index(sp, w, RV2)
    assert "polydisc-bergman-cases(2)" in rep.citations


def test_polydisc_mixed_weight_sandwich():
    sp = space("polydisc_algebra", dim=2)
    w = torus_polynomial(2, {(0, 0): 4.0, (1, 1): 1.0})
    rep = classify(sp, w, RV2)
    assert rep.sets["sigma"].status.kind == "bounds"
    g = rep.sets["sigma"].set.outer_radius()
    assert g == pytest.approx(4.0, rel=1e-6)
    assert "polydisc-algebra-cases(unresolved)" in rep.citations


def test_polydisc_accepts_plain_polynomial_lifted():
    sp = space("polydisc_algebra", dim=3)
    rv = RotationVector((GOLDEN, named_rotation("sqrt2"), named_rotation("e_frac")), ())
    rep = classify(sp, polynomial([-2, 1]), rv)
    assert rep.sets["sigma"].set == circle(2.0)


def test_polydisc_dimension_mismatches():
    sp = space("polydisc_algebra", dim=2)
    with pytest.raises(ClassifyError):
        classify(sp, torus_polynomial(3, {(0, 0, 0): 2.0}), RV2)
    with pytest.raises(ClassifyError):
        classify(sp, torus_polynomial(2, {(0, 0): 2.0}), GOLDEN)
    rv3 = RotationVector((GOLDEN, named_rotation("sqrt2"), named_rotation("e_frac")), ())
    with pytest.raises(ClassifyError):
        classify(sp, torus_polynomial(2, {(0, 0): 2.0}), rv3)
    with pytest.raises(ClassifyError):
        classify(space("bergman", p=2), torus_polynomial(2, {(0, 0): 2.0}), GOLDEN)


# ----------------------------------------------------------------------
# report invariants
# ----------------------------------------------------------------------


@st.composite
def _random_poly(draw):
    deg = draw(st.integers(1, 4))
    coeffs = [
        complex(draw(st.floats(-2, 2)), draw(st.floats(-2, 2)))
        for _ in range(deg + 1)
    ]
    if abs(coeffs[-1]) < 0.1:
        coeffs[-1] = 1.0
    return coeffs


@settings(max_examples=40, deadline=None)
@given(_random_poly())
def test_report_chain_inclusions_random_weights(coeffs):
    """sigma_1 in sigma_2 in sigma_3 in sigma_4 in sigma_5 in sigma, and
    sigma_ap and sigma_r inside sigma, on every closed form report."""
    w = polynomial(coeffs, tags=("disc_algebra",))
    rep = classify(space("bergman", p=2), w, GOLDEN)
    assert report_consistency(rep) == []
    sets = {k: rep.sets[k] for k in REPORT_KEYS}
    chain = ("sigma_1", "sigma_2", "sigma_3", "sigma_4", "sigma_5")
    for lo_key, hi_key in zip(chain, chain[1:]):
        if sets[lo_key].status.kind == sets[hi_key].status.kind == "exact":
            assert sets[hi_key].set.contains(sets[lo_key].set)
    if sets["sigma"].status.kind == "exact":
        for key in ("sigma_ap", "sigma_r", "sigma_5"):
            if sets[key].status.kind == "exact":
                assert sets["sigma"].set.contains(sets[key].set)


def test_inputs_echo_round_trip():
    w = _tagged([-2, 1], "disc_algebra")
    rep = classify(space("bergman", p=2), w, GOLDEN)
    echo = rep.inputs_echo
    assert echo["space"]["variant"] == "bergman"
    assert echo["weight"]["type"] == "poly"
    assert echo["rotation"]["kind"] == "named"


# ----------------------------------------------------------------------
# point spectrum candidates
# ----------------------------------------------------------------------


def test_candidates_diagonal_sequence():
    w = polynomial([-2, 1])
    alpha = GOLDEN.alpha()
    cands = point_spectrum_candidates(w, GOLDEN, count=5)
    assert len(cands) == 5
    for k, c in enumerate(cands):
        assert c == pytest.approx(alpha ** k * (-2.0), abs=1e-12)


def test_candidates_empty_when_origin_zero():
    assert point_spectrum_candidates(polynomial([0, 1]), GOLDEN) == ()


def test_candidates_graded_lex_for_vectors():
    w = torus_polynomial(2, {(0, 0): 3.0})
    cands = point_spectrum_candidates(w, RV2, count=6)
    a1, a2 = RV2.alpha_vector()
    expected = [
        3.0,
        3.0 * a1,
        3.0 * a2,
        3.0 * a1 ** 2,
        3.0 * a1 * a2,
        3.0 * a2 ** 2,
    ]
    for got, want in zip(cands, expected):
        assert got == pytest.approx(want, abs=1e-12)


def test_candidates_count_validation():
    with pytest.raises(ClassifyError):
        point_spectrum_candidates(polynomial([1]), GOLDEN, count=0)


# ----------------------------------------------------------------------
# rational weights ride the same closed forms
# ----------------------------------------------------------------------


def test_rational_weight_classifies():
    w = rational([-2, 1], [1, 0.5])
    rep = classify(space("disc_algebra"), w, GOLDEN)
    g = geometric_mean(w, 1.0)
    assert rep.sets["sigma"].set == circle(g)
    assert g == pytest.approx(2.0, rel=1e-12)
