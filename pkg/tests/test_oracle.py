"""Truncation matrices, resolvent gaps, smoothing, singular sequences,
and the space norm ladders."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wro import (
    OracleError,
    bloch_norm,
    build_truncation,
    check_smoothing_identity,
    monomial_norms,
    named_rotation,
    norm_asymptotics,
    point_spectrum_candidates,
    polynomial,
    pseudospectrum_scan,
    rational,
    singular_sequence_residual,
    truncation_rank,
)
from wro.weights import space

GOLDEN = named_rotation("golden")
BERGMAN = space("bergman", p=2)


# ----------------------------------------------------------------------
# monomial norms
# ----------------------------------------------------------------------


def test_monomial_norms_tables():
    nus, tag = monomial_norms(space("hardy_banach"), 4)
    assert tag == "euclidean"
    assert np.allclose(nus, 1.0)
    nus, tag = monomial_norms(BERGMAN, 3)
    assert tag == "euclidean"
    assert np.allclose(nus, [math.sqrt(math.pi / (k + 1)) for k in range(3)])
    nus, tag = monomial_norms(space("dirichlet", p=2), 3)
    assert nus[0] == 1.0
    assert np.allclose(nus[1:], [math.sqrt(math.pi * k) for k in (1, 2)])
    nus, tag = monomial_norms(space("ell1a"), 5)
    assert tag == "sum"
    assert np.allclose(nus, 1.0)
    with pytest.raises(OracleError):
        monomial_norms(space("bloch"), 4)


# ----------------------------------------------------------------------
# truncation matrices
# ----------------------------------------------------------------------


def test_truncation_diagonal_matches_candidates():
    w = polynomial([-2, 1])
    T = build_truncation(BERGMAN, w, GOLDEN, 16)
    cands = np.asarray(point_spectrum_candidates(w, GOLDEN, count=16))
    assert np.array_equal(T.diagonal(), cands)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(st.floats(-3, 3), st.floats(-3, 3)).map(lambda t: complex(*t)),
        min_size=1,
        max_size=5,
    ),
    st.integers(4, 48),
)
def test_truncation_diagonal_exact_for_random_weights(coeffs, order):
    """Diagonal entries are alpha^k w(0) with no rounding at all, even
    for complex origin values where elementwise products round."""
    if all(abs(c) < 1e-9 for c in coeffs):
        coeffs = [1.0 + 0j]
    w = polynomial(coeffs)
    T = build_truncation(BERGMAN, w, GOLDEN, order)
    cands = np.asarray(point_spectrum_candidates(w, GOLDEN, count=order))
    assert np.array_equal(T.diagonal(), cands)


def test_truncation_is_lower_triangular_shift_pattern():
    w = polynomial([-2, 1])
    T = build_truncation(space("hardy_banach"), w, GOLDEN, 8)
    m = T.entries
    # column k holds w(z) z^k composed with the rotation: entries only on
    # and below the diagonal, exactly deg(w) + 1 bands
    assert np.allclose(np.triu(m, 1), 0.0)
    assert np.allclose(np.tril(m, -2), 0.0)
    alpha = GOLDEN.alpha()
    assert m[3, 3] == alpha ** 3 * (-2.0)
    assert m[4, 3] == pytest.approx(alpha ** 3, abs=1e-15)


def test_truncation_validation():
    w = polynomial([-2, 1])
    with pytest.raises(OracleError):
        build_truncation(BERGMAN, w, GOLDEN, 0)
    with pytest.raises(OracleError):
        build_truncation(BERGMAN, w, GOLDEN, 8192)
    with pytest.raises(OracleError):
        build_truncation(space("bloch"), w, GOLDEN, 8)


# ----------------------------------------------------------------------
# resolvent gaps
# ----------------------------------------------------------------------


def test_scan_layout_and_determinism(monkeypatch):
    w = polynomial([-2, 1])
    T = build_truncation(BERGMAN, w, GOLDEN, 32)
    monkeypatch.setenv("WRO_THREADS", "1")
    one = pseudospectrum_scan(T, [1.0, 2.0], n_angles=8)
    monkeypatch.setenv("WRO_THREADS", "8")
    eight = pseudospectrum_scan(T, [1.0, 2.0], n_angles=8)
    assert np.array_equal(one.gaps, eight.gaps)
    assert np.array_equal(one.points, eight.points)
    assert one.points.size == 16
    # radius major layout
    assert abs(one.points[0]) == pytest.approx(1.0)
    assert abs(one.points[8]) == pytest.approx(2.0)
    rows = one.rows()
    assert len(rows) == 16 and len(rows[0]) == 3


def test_gap_smaller_on_spectrum_than_off():
    w = polynomial([-2, 1])
    T = build_truncation(BERGMAN, w, GOLDEN, 128)
    scan = pseudospectrum_scan(T, [2.0, 3.0], n_angles=4)
    on = scan.gaps[:4].max()
    off = scan.gaps[4:].min()
    assert on < off


def test_scan_validation():
    T = build_truncation(BERGMAN, polynomial([-2, 1]), GOLDEN, 8)
    with pytest.raises(OracleError):
        pseudospectrum_scan(T, [])
    with pytest.raises(OracleError):
        pseudospectrum_scan(T, [-1.0])
    with pytest.raises(OracleError):
        pseudospectrum_scan(T, [1.0], n_angles=0)


def test_sum_norm_gap_ell1a():
    T = build_truncation(space("ell1a"), polynomial([-2, 1]), GOLDEN, 32)
    scan = pseudospectrum_scan(T, [2.0, 3.0], n_angles=4)
    assert scan.gaps[:4].max() < scan.gaps[4:].min()
    # lambda = 0 with an invertible weight: the inverse is bounded
    zero_gap = pseudospectrum_scan(T, [1e-12], n_angles=1).gaps[0]
    assert zero_gap > 0.1


# ----------------------------------------------------------------------
# numerical rank
# ----------------------------------------------------------------------


def test_rank_drops_by_inside_zero_count():
    w = polynomial([1, -2.5, 1])   # one zero inside the disc
    r64 = truncation_rank(build_truncation(BERGMAN, w, GOLDEN, 64))
    assert r64.rank == 63
    assert not r64.indeterminate
    assert r64.kept_min == pytest.approx(0.4877, rel=1e-2)
    assert r64.dropped_max < 1e-14
    r256 = truncation_rank(build_truncation(BERGMAN, w, GOLDEN, 256))
    assert r256.rank == 255


def test_rank_full_for_invertible_weight():
    r = truncation_rank(build_truncation(BERGMAN, polynomial([-2, 1]), GOLDEN, 64))
    assert r.rank == 64
    assert not r.indeterminate


def test_rank_small_order_reads_full_with_tiny_margin():
    # at order 32 the kernel direction has not decayed below the svd
    # threshold yet, so the truncation reads as full rank; the audit
    # exposes this through a suspiciously small kept_min
    r = truncation_rank(build_truncation(BERGMAN, polynomial([1, -2.5, 1]), GOLDEN, 32))
    assert r.rank == 32
    assert r.kept_min == pytest.approx(1.276e-9, rel=1e-2)
    assert r.kept_min < 1e-6


# ----------------------------------------------------------------------
# smoothing identity
# ----------------------------------------------------------------------


def test_smoothing_identity_frozen_deviation():
    T = build_truncation(BERGMAN, polynomial([-2, 1]), GOLDEN, 32)
    dev = check_smoothing_identity(T, 0.5, 3)
    assert dev == pytest.approx(1.193e-14, abs=1e-13)
    assert dev < 1e-10


def test_smoothing_identity_accepts_plain_arrays():
    rng = np.random.default_rng(7)
    m = np.tril(rng.standard_normal((24, 24)) + 1j * rng.standard_normal((24, 24)))
    m /= np.abs(m).sum(axis=0).max()
    dev = check_smoothing_identity(m, 0.1, 7)
    assert dev < 1e-10


def test_smoothing_identity_validation():
    T = build_truncation(BERGMAN, polynomial([-2, 1]), GOLDEN, 8)
    with pytest.raises(OracleError):
        check_smoothing_identity(T, 0.0, 3)
    with pytest.raises(OracleError):
        check_smoothing_identity(T, 1.0, 3)
    with pytest.raises(OracleError):
        check_smoothing_identity(T, 0.5, 0)


# ----------------------------------------------------------------------
# singular sequence residuals
# ----------------------------------------------------------------------


def test_residual_frozen_ladder_bergman():
    w = polynomial([-1, 1])
    frozen = {4: 0.50240, 16: 0.25661, 64: 0.12330}
    orders = {4: 418, 16: 442, 64: 538}
    last = math.inf
    for m, want in frozen.items():
        rep = singular_sequence_residual(BERGMAN, w, GOLDEN, 1.0, m, n=400)
        assert rep.residual == pytest.approx(want, abs=5e-5)
        assert rep.truncation == orders[m]
        assert rep.m == m and rep.n == 400
        assert abs(abs(rep.witness) - 1.0) < 1e-12
        assert rep.margin > 0.0
        assert rep.residual < last
        last = rep.residual
    # the decay follows the 2 / sqrt(m) smoothing window estimate
    assert frozen[64] == pytest.approx(2.0 / math.sqrt(64) * 0.4932, rel=1e-3)


def test_residual_decay_rate_shape():
    rep4 = singular_sequence_residual(BERGMAN, polynomial([-1, 1]), GOLDEN, 1.0, 4, n=200)
    rep16 = singular_sequence_residual(BERGMAN, polynomial([-1, 1]), GOLDEN, 1.0, 16, n=200)
    assert rep16.residual < 0.62 * rep4.residual


def test_residual_error_paths():
    w = polynomial([-1, 1])
    with pytest.raises(OracleError):
        singular_sequence_residual(BERGMAN, w, GOLDEN, 1.0, 1)      # m too small
    with pytest.raises(OracleError):
        singular_sequence_residual(BERGMAN, w, GOLDEN, 0.0, 4)      # lambda zero
    with pytest.raises(OracleError):
        singular_sequence_residual(BERGMAN, w, GOLDEN, 0.3, 4)      # certified out
    with pytest.raises(OracleError):
        singular_sequence_residual(BERGMAN, rational([-1, 1], [1, 0.5]), GOLDEN, 1.0, 4)


# ----------------------------------------------------------------------
# norm ladders for the peaked polynomials
# ----------------------------------------------------------------------


def test_bergman_qm_ladder_frozen():
    ladder = norm_asymptotics(BERGMAN, 1000)
    ms = [m for m, _ in ladder]
    assert ms == [10, 30, 100, 300, 1000]
    vals = dict(ladder)
    assert vals[100] == pytest.approx(3.488072, abs=1e-5)
    assert vals[300] == pytest.approx(3.525792, abs=1e-5)
    assert vals[1000] == pytest.approx(3.539155, abs=1e-5)


def test_bloch_qm_ladder_frozen():
    ladder = norm_asymptotics(space("bloch"), 1000)
    vals = dict(ladder)
    assert vals[100] == pytest.approx(73.210141, abs=1e-4)
    assert vals[300] == pytest.approx(220.360499, abs=1e-4)
    assert vals[1000] == pytest.approx(735.391217, abs=1e-4)
    # m * ||q_m|| approaches 2 m / e, not 4 m / e
    assert vals[1000] / 1000.0 == pytest.approx(2.0 / math.e, rel=2e-3)


def test_norm_asymptotics_validation():
    with pytest.raises(OracleError):
        norm_asymptotics(BERGMAN, 1)
    with pytest.raises(OracleError):
        norm_asymptotics(BERGMAN, 10 ** 6)
    with pytest.raises(OracleError):
        norm_asymptotics(space("hinf"), 100)


# ----------------------------------------------------------------------
# Bloch norm
# ----------------------------------------------------------------------


def test_bloch_norm_known_values():
    # constant: derivative term vanishes
    assert bloch_norm(np.array([2.5 + 0j])) == pytest.approx(2.5, abs=1e-12)
    # z: max (1 - r^2) at r = 0 gives 1
    assert bloch_norm(np.array([0.0, 1.0])) == pytest.approx(1.0, abs=1e-9)
    # 1/2 + z/2
    assert bloch_norm(np.array([0.5, 0.5])) == pytest.approx(1.0, abs=1e-9)
    # z^2: max 2r(1 - r^2) at r = 1/sqrt(3) gives 4 / (3 sqrt(3))
    assert bloch_norm(np.array([0.0, 0.0, 1.0])) == pytest.approx(
        4.0 / (3.0 * math.sqrt(3.0)), abs=1e-7
    )


def test_bloch_norm_refinement_tightens():
    coeffs = np.array([0.0, 0.0, 0.0, 1.0 + 0j])
    coarse = bloch_norm(coeffs, base_grid=16, refine=0)
    fine = bloch_norm(coeffs, base_grid=16, refine=2)
    # 3 r^2 (1 - r^2) peaks at r = 1/sqrt(2) with value 3/4
    assert fine >= coarse - 1e-15
    assert fine == pytest.approx(0.75, abs=1e-6)
