import math

import numpy as np
import pytest

from unruh_lab.errors import (
    DomainError,
    SingularFrequencyError,
    UnsupportedScenarioError,
)
from unruh_lab.scenarios import (
    ACCELERATED,
    INERTIAL,
    Scenario,
    commutator_ft,
    commutator_ft_inertial_closed,
    detailed_balance_residual,
    spectral_density,
    stationarity_defect,
    wightman_ft,
    wightman_ft_batch,
)

OMEGAS = [-15.0, -5.0, -1.3, -0.4, 0.4, 1.3, 5.0, 15.0]


def kms_scenarios():
    out = []
    for d in (1, 3):
        for m in (0.0, 1.0):
            for lam in (0.0, 1.0):
                out.append(Scenario(INERTIAL, d, m, lam, 0.8))
    out.append(Scenario(INERTIAL, 2, 0.5, 0.2, 2.0))
    out.append(Scenario(ACCELERATED, 1, 1.0, 0.0, 2 * math.pi))
    out.append(Scenario(ACCELERATED, 1, 0.1, 0.0, 5.0))
    out.append(Scenario(ACCELERATED, 3, 0.0, 0.0, 1.5))
    return out


class TestScenarioType:
    def test_validation(self):
        with pytest.raises(DomainError):
            Scenario("orbital", 3)
        with pytest.raises(DomainError):
            Scenario(INERTIAL, 4)
        with pytest.raises(DomainError):
            Scenario(INERTIAL, 3, m=-1.0)
        with pytest.raises(DomainError):
            Scenario(INERTIAL, 3, beta=0.0)

    def test_kms_flag(self):
        assert Scenario(INERTIAL, 3, 1.0, 2.0, 1.0).kms
        assert Scenario(ACCELERATED, 1, 1.0, 0.0, 1.0).kms
        assert not Scenario(ACCELERATED, 1, 1.0, 0.5, 1.0).kms

    def test_acceleration(self):
        s = Scenario(ACCELERATED, 1, 1.0, 0.0, 2 * math.pi)
        assert s.acceleration == pytest.approx(1.0)

    def test_beta_independence_classification(self):
        assert Scenario(INERTIAL, 1, 2.0, 1.0, 1.0).commutator_beta_independent
        assert Scenario(ACCELERATED, 3, 0.0, 0.0, 1.0).commutator_beta_independent
        assert not Scenario(ACCELERATED, 1, 1.0, 0.0, 1.0).commutator_beta_independent


class TestClosedCommutator:
    def test_d3_massless_value(self):
        assert commutator_ft_inertial_closed(1.0, 3, 0.0, 0.0) == pytest.approx(
            -1.0 / (2 * math.pi), rel=1e-14
        )

    def test_gap_from_mass(self):
        for d in (1, 2, 3):
            assert commutator_ft_inertial_closed(1.0, d, 2.0, 0.0) == 0.0

    def test_gap_from_cutoff(self):
        for d in (1, 2, 3):
            assert commutator_ft_inertial_closed(3.0, d, 0.0, 5.0) == 0.0

    def test_cross_check_against_massless_kms_difference(self, thermal_massless_d3):
        # independent route: C = W(w) - W(-w) of the massless KMS form
        for w in (0.3, 1.0, 4.0):
            direct = commutator_ft_inertial_closed(w, 3, 0.0, 0.0)
            via_w = wightman_ft(thermal_massless_d3, w) - wightman_ft(thermal_massless_d3, -w)
            assert via_w == pytest.approx(direct, rel=1e-12)


class TestWightman:
    def test_massless_d3_value(self, thermal_massless_d3):
        want = 1.0 / (2 * math.pi * (math.e - 1.0))
        assert wightman_ft(thermal_massless_d3, 1.0) == pytest.approx(want, rel=1e-13)

    def test_massless_d3_zero_limit(self, thermal_massless_d3):
        assert wightman_ft(thermal_massless_d3, 0.0) == pytest.approx(
            1.0 / (2 * math.pi), rel=1e-13
        )

    def test_massless_d1_pole_raises(self):
        s = Scenario(INERTIAL, 1, 0.0, 0.0, 1.0)
        with pytest.raises(SingularFrequencyError):
            wightman_ft(s, 0.0)

    def test_accelerated_balance_is_structural(self, accelerated_massive_d1):
        for w in (0.3, 1.0, 6.0):
            lhs = wightman_ft(accelerated_massive_d1, -w)
            rhs = math.exp(accelerated_massive_d1.beta * w) * wightman_ft(
                accelerated_massive_d1, w
            )
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_positivity_everywhere(self):
        for scn in kms_scenarios():
            for w in OMEGAS:
                assert wightman_ft(scn, w) >= 0.0

    def test_radial_matches_massless_limit(self):
        scn = Scenario(ACCELERATED, 3, 1e-6, 0.0, 1.0)
        want = 1.0 / (2 * math.pi * (math.e - 1.0))
        assert wightman_ft(scn, 1.0) == pytest.approx(want, rel=1e-3)

    def test_radial_d2_against_high_precision_reference(self):
        # frozen from a 30-digit mpmath evaluation of the radial mode integral
        refs = {
            (1.5, 2.0, 1.0): 0.014052476665139467,
            (0.7, 1.0, 0.5): 0.11981253960549496,
        }
        for (w, beta, m), want in refs.items():
            got = wightman_ft(Scenario(ACCELERATED, 2, m, 0.0, beta), w)
            assert got == pytest.approx(want, rel=1e-8)

    def test_nonkms_rejected(self):
        s = Scenario(ACCELERATED, 1, 1.0, 0.5, 1.0)
        with pytest.raises(UnsupportedScenarioError):
            wightman_ft(s, 1.0)

    def test_batch_matches_scalar(self):
        for scn in kms_scenarios():
            got = wightman_ft_batch(scn, np.array(OMEGAS))
            want = np.array([wightman_ft(scn, w) for w in OMEGAS])
            assert np.allclose(got, want, rtol=1e-11, atol=1e-300)


class TestCommutatorProperties:
    @pytest.mark.parametrize("scn", kms_scenarios())
    def test_oddness(self, scn):
        for w in (0.4, 1.3, 5.0):
            c_plus = commutator_ft(scn, w)
            c_minus = commutator_ft(scn, -w)
            assert c_plus + c_minus == pytest.approx(0.0, abs=1e-12 * max(abs(c_plus), 1e-30))

    @pytest.mark.parametrize("scn", kms_scenarios())
    def test_sign(self, scn):
        for w in OMEGAS:
            assert w * commutator_ft(scn, w) <= 0.0

    def test_two_routes_agree_inertial(self):
        scn = Scenario(INERTIAL, 1, 1.0, 0.3, 0.7)
        for w in (0.5, 1.5, 2.2, -3.3):
            via_w = commutator_ft(scn, w)
            closed = commutator_ft_inertial_closed(w, 1, 1.0, 0.3)
            assert via_w == pytest.approx(closed, rel=1e-12, abs=1e-300)

    def test_reconstruction_consistency(self):
        # -C * P reassembled from the spectral density equals W
        from unruh_lab.specfun import planck

        for scn in (Scenario(INERTIAL, 3, 1.0, 0.0, 1.2), Scenario(INERTIAL, 1, 0.5, 1.0, 0.6)):
            for w in (1.4, 2.5, -2.5, 6.0):
                c = commutator_ft_inertial_closed(w, scn.d, scn.m, scn.Lambda)
                want = -c * planck(w, scn.beta) if c != 0.0 else 0.0
                assert wightman_ft(scn, w) == pytest.approx(want, rel=1e-10, abs=1e-300)


class TestDetailedBalance:
    @pytest.mark.parametrize("scn", kms_scenarios())
    def test_residual_grid(self, scn):
        for w in (0.4, 1.3, 5.0, 15.0):
            assert detailed_balance_residual(scn, w) < 1e-8

    def test_radial_residual(self):
        scn = Scenario(ACCELERATED, 3, 1.0, 0.0, 2.0)
        assert detailed_balance_residual(scn, 1.5) < 1e-8

    def test_rejects_nonkms(self):
        with pytest.raises(UnsupportedScenarioError):
            detailed_balance_residual(Scenario(ACCELERATED, 1, 1.0, 0.5, 1.0), 1.0)


class TestSpectralDensity:
    def test_fields_consistent(self, accelerated_massive_d1):
        sd = spectral_density(accelerated_massive_d1, 1.0)
        assert sd.commutator == pytest.approx(sd.wightman_plus - sd.wightman_minus, rel=1e-14)
        assert sd.kms_flag


class TestStationarityDefect:
    def test_no_cutoff_accelerated_stationary(self):
        assert stationarity_defect(0.0, 1.0, 1.0, 0.3, 0.0, 1.0) < 1e-8

    def test_inertial_with_cutoff_stationary(self):
        assert stationarity_defect(0.5, 0.0, 1.0, 0.3, 0.0, 1.0) < 1e-8

    def test_cutoff_plus_acceleration_breaks_stationarity(self):
        assert stationarity_defect(0.5, 1.0, 1.0, 0.3, 0.0, 1.0) > 1e-7

    def test_defect_shrinks_with_cutoff(self):
        big = stationarity_defect(0.5, 1.0, 1.0, 0.3, 0.0, 1.0)
        small = stationarity_defect(0.01, 1.0, 1.0, 0.3, 0.0, 1.0)
        assert small < 0.2 * big

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            stationarity_defect(-0.1, 1.0, 1.0, 0.3, 0.0, 1.0)
        with pytest.raises(DomainError):
            stationarity_defect(0.0, 1.0, 0.0, 0.3, 0.0, 1.0)
