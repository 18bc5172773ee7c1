"""Map construction, validation, and algebra-constraint tests."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncho import (
    ConsistencyFailure,
    DegenerateDeformation,
    NCParams,
    NonPositivePhysical,
    PhasePoint,
    SWMap,
    constraint_residuals,
    frequencies,
    solve_sw,
    sw_forward,
    sw_inverse,
    validate,
)


def make(theta=0.0, eta=0.0, m=1.0, omega=1.0, hbar=1.0):
    return NCParams(m=m, omega=omega, hbar=hbar, theta=theta, eta=eta)


class TestValidate:
    def test_commutative_limit_valid(self):
        assert validate(make()) == make()

    def test_boundary_product_rejected(self):
        with pytest.raises(DegenerateDeformation):
            validate(make(theta=1.0, eta=1.0))

    def test_small_deformation_valid(self):
        validate(make(theta=0.1, eta=0.1))

    def test_above_boundary_rejected(self):
        with pytest.raises(DegenerateDeformation):
            validate(make(theta=2.0, eta=0.6))

    @pytest.mark.parametrize("field", ["m", "omega", "hbar"])
    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan")])
    def test_nonpositive_physical(self, field, bad):
        with pytest.raises(NonPositivePhysical):
            validate(NCParams(**{**make().__dict__, field: bad}))

    def test_negative_deformation_product_allowed(self):
        # theta*eta < hbar^2 holds for opposite signs; the regime stays oscillatory
        validate(make(theta=-0.1, eta=0.1))


class TestSolveSW:
    def test_commutative_product_is_one(self):
        sw = solve_sw(make())
        assert sw.product == 1.0
        assert sw.lam == 1.0 and sw.mu == 1.0

    def test_demo_product_matches_quadratic_root(self):
        # root of u(1-u) = theta*eta/(4 hbar^2) continuous with u(0) = 1
        sw = solve_sw(make(theta=0.1, eta=0.1))
        assert sw.product == pytest.approx(0.9974937185533099, rel=1e-15)
        residual = sw.product * (1.0 - sw.product) - 0.01 / 4.0
        assert abs(residual) < 1e-15

    def test_gauge_split_preserves_product(self):
        sw = solve_sw(make(), gauge_ratio=2.0)
        assert sw.lam == pytest.approx(2.0) and sw.mu == pytest.approx(0.5)
        assert sw.product == pytest.approx(1.0, rel=1e-15)

    def test_product_constraint_for_random_params(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            hbar = rng.uniform(0.5, 2.0)
            prod = rng.uniform(0.0, 0.999) * hbar**2
            split = rng.uniform(0.2, 5.0)
            sw = solve_sw(make(theta=np.sqrt(prod) * split, eta=np.sqrt(prod) / split,
                               hbar=hbar))
            res = sw.product * (1.0 - sw.product) - prod / (4.0 * hbar**2)
            assert abs(res) < 1e-12

    def test_root_branch_monotone_decreasing(self):
        products = np.linspace(0.0, 0.999, 400)
        u = np.array([solve_sw(make(theta=p, eta=1.0)).product for p in products])
        assert u[0] == 1.0
        assert np.all(np.diff(u) < 0.0)
        assert u[-1] > 0.5
        # approaches 1/2 at the degenerate edge
        assert solve_sw(make(theta=1.0 - 1e-12, eta=1.0)).product < 0.5 + 1e-5


class TestFrequencies:
    def test_commutative_limit(self):
        f = frequencies(solve_sw(make()))
        assert f.gamma == 0.0
        assert f.Omega == pytest.approx(1.0, rel=1e-15)

    def test_demo_values(self):
        f = frequencies(solve_sw(make(theta=0.1, eta=0.1)))
        assert f.gamma == pytest.approx(0.1, rel=1e-15)
        assert f.Omega == pytest.approx(1.0, rel=1e-14)

    def test_omega_is_2_alpha_beta(self):
        f = frequencies(solve_sw(make(theta=0.3, eta=0.05, m=1.7, omega=0.6)))
        assert f.Omega == pytest.approx(2.0 * f.alpha * f.beta, rel=1e-15)

    def test_gauge_independence_of_observable_scales(self):
        p = make(theta=0.2, eta=0.07, m=1.3, omega=0.9)
        ref = frequencies(solve_sw(p, gauge_ratio=1.0))
        for g in (0.5, 0.77, 1.5, 2.0):
            f = frequencies(solve_sw(p, gauge_ratio=g))
            assert f.gamma == pytest.approx(ref.gamma, rel=1e-12)
            assert f.Omega == pytest.approx(ref.Omega, rel=1e-12)

    def test_inconsistent_map_raises(self):
        sw = solve_sw(make(theta=0.1, eta=0.1))
        broken = SWMap(lam=sw.lam * 1.05, mu=sw.mu, params=sw.params)
        with pytest.raises(ConsistencyFailure):
            frequencies(broken)

    def test_carrier_sign_tracks_dominant_deformation(self):
        assert frequencies(solve_sw(make(eta=0.3))).carrier_sign == 1.0
        assert frequencies(solve_sw(make(theta=0.3))).carrier_sign == -1.0


class TestMaps:
    def test_commutative_identity(self):
        sw = solve_sw(make())
        pt = PhasePoint(q=np.array([0.3, -1.2]), p=np.array([0.7, 2.0]))
        out = sw_forward(sw, pt)
        np.testing.assert_allclose(out.q, pt.q, atol=0)
        np.testing.assert_allclose(out.p, pt.p, atol=0)

    def test_levi_civita_convention(self):
        # theta-only map with lam = mu = 1: q = Q - (theta/2 hbar) eps P
        sw = SWMap(lam=1.0, mu=1.0, params=make(theta=0.2))
        out = sw_forward(sw, PhasePoint(q=np.zeros(2), p=np.array([1.0, 0.0])))
        np.testing.assert_allclose(out.q, [0.0, 0.1], atol=1e-15)
        back = sw_inverse(sw, out)
        np.testing.assert_allclose(back.q, [0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(back.p, [1.0, 0.0], atol=1e-15)

    def test_zero_maps_to_zero(self):
        sw = solve_sw(make(theta=0.2, eta=0.3))
        out = sw_inverse(sw, PhasePoint(q=np.zeros(2), p=np.zeros(2)))
        assert np.all(out.q == 0.0) and np.all(out.p == 0.0)

    def test_round_trip_bulk(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            hbar = rng.uniform(0.5, 2.0)
            prod = rng.uniform(0.0, 0.9) * hbar**2
            split = rng.uniform(0.25, 4.0)
            sw = solve_sw(make(theta=np.sqrt(prod) * split, eta=np.sqrt(prod) / split,
                               hbar=hbar, m=rng.uniform(0.5, 2.0),
                               omega=rng.uniform(0.5, 2.0)),
                          gauge_ratio=rng.uniform(0.5, 2.0))
            pts = PhasePoint(q=rng.normal(size=(2, 50)), p=rng.normal(size=(2, 50)))
            back = sw_inverse(sw, sw_forward(sw, pts))
            assert np.max(np.abs(back.q - pts.q)) < 1e-12
            assert np.max(np.abs(back.p - pts.p)) < 1e-12

    @settings(max_examples=100, deadline=None)
    @given(
        prod=st.floats(0.0, 0.9),
        split=st.floats(0.25, 4.0),
        q1=st.floats(-10, 10), q2=st.floats(-10, 10),
        p1=st.floats(-10, 10), p2=st.floats(-10, 10),
    )
    def test_round_trip_property(self, prod, split, q1, q2, p1, p2):
        sw = solve_sw(make(theta=np.sqrt(prod) * split, eta=np.sqrt(prod) / split))
        pt = PhasePoint(q=np.array([q1, q2]), p=np.array([p1, p2]))
        back = sw_inverse(sw, sw_forward(sw, pt))
        scale = 1.0 + max(abs(q1), abs(q2), abs(p1), abs(p2))
        assert np.max(np.abs(back.q - pt.q)) < 1e-12 * scale
        assert np.max(np.abs(back.p - pt.p)) < 1e-12 * scale

    def test_forward_then_inverse_order_too(self):
        sw = solve_sw(make(theta=0.4, eta=0.1))
        rng = np.random.default_rng(2)
        pt = PhasePoint(q=rng.normal(size=2), p=rng.normal(size=2))
        again = sw_forward(sw, sw_inverse(sw, pt))
        np.testing.assert_allclose(again.q, pt.q, atol=1e-13)
        np.testing.assert_allclose(again.p, pt.p, atol=1e-13)


class TestConstraints:
    def test_solver_output_satisfies_all(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            hbar = rng.uniform(0.5, 2.0)
            prod = rng.uniform(0.0, 0.9) * hbar**2
            split = rng.uniform(0.25, 4.0)
            rep = constraint_residuals(
                solve_sw(make(theta=np.sqrt(prod) * split, eta=np.sqrt(prod) / split,
                              hbar=hbar), gauge_ratio=rng.uniform(0.5, 2.0)))
            assert rep.passed
            assert max(rep.identity, rep.theta_block, rep.eta_block) < 1e-12

    def test_perturbed_product_fails_identity_block(self):
        sw = solve_sw(make(theta=0.1, eta=0.1))
        bad = SWMap(lam=sw.lam * (1.0 + 1e-3), mu=sw.mu, params=sw.params)
        rep = constraint_residuals(bad)
        assert not rep.passed
        # identity residual ~ sqrt(2) * violation of lam*mu
        assert rep.identity == pytest.approx(np.sqrt(2.0) * 1e-3, rel=0.2)

    def test_commutative_residuals_exactly_zero(self):
        rep = constraint_residuals(solve_sw(make()))
        assert rep.identity == 0.0
        assert rep.theta_block == 0.0
        assert rep.eta_block == 0.0
