import math

import numpy as np
import pytest

from unruh_lab.antiunruh import (
    LABEL_NEITHER,
    LABEL_UNRESOLVED,
    CellResult,
    RegionScan,
    ScanSpec,
    StepControl,
    classify,
    d_beta_edr_d_beta,
    d_response_d_beta,
    scan_to_csv,
    weak_necessary_condition,
)
from unruh_lab.errors import DomainError
from unruh_lab.response import ResponseQuery
from unruh_lab.scenarios import ACCELERATED, INERTIAL, Scenario
from unruh_lab.switching import GaussianSwitching


@pytest.fixture(scope="module")
def sw():
    return GaussianSwitching()


class TestDerivatives:
    def test_adiabatic_kms_beta_edr_derivative_is_one(self, sw):
        scn = Scenario(ACCELERATED, 1, 1.0, 0.0, 2.0)
        q = ResponseQuery(1.5, math.inf, scn, sw)
        est = d_beta_edr_d_beta(q)
        assert est.value == pytest.approx(1.0, abs=1e-9)

    def test_inertial_response_derivative_negative_in_beta(self, sw):
        # excitation falls as beta grows (i.e. rises with temperature)
        for scn in (Scenario(INERTIAL, 3, 0.0, 0.0, 1.0),
                    Scenario(INERTIAL, 1, 1.0, 0.0, 0.5),
                    Scenario(INERTIAL, 3, 1.0, 1.0, 2.0)):
            q = ResponseQuery(2.0, 1.0, scn, sw)
            est = d_response_d_beta(q)
            assert est.value < 0.0
            assert abs(est.value) > 10.0 * est.error

    def test_both_rates_rise_with_temperature_beta_independent(self, sw):
        # for beta-independent commutators the spectral density falls with
        # beta at every frequency, so excitation AND deexcitation responses
        # both decrease with beta (stimulated processes grow with occupation);
        # this is what rules out weak Anti-Unruh on such trajectories
        for scn in (Scenario(INERTIAL, 3, 0.0, 0.0, 1.0),
                    Scenario(INERTIAL, 1, 0.5, 0.0, 0.8)):
            for O in (0.8, 2.0, 6.0):
                q = ResponseQuery(O, 0.7, scn, sw)
                plus = d_response_d_beta(q)
                minus = d_response_d_beta(q.with_omega(-O))
                assert plus.value < 0.0 and abs(plus.value) > 10 * plus.error
                assert minus.value < 0.0 and abs(minus.value) > 10 * minus.error

    def test_accelerated_beta_dependence_through_bessel(self, sw):
        # weak-AU cells exist at sigma=inf for the massive accelerated case
        scn = Scenario(ACCELERATED, 1, 1.0, 0.0, 1.0 / 1.6)
        q = ResponseQuery(0.5, math.inf, scn, sw)
        est = d_response_d_beta(q)
        assert est.value > 0.0  # dF/dbeta > 0 <=> dF/dT < 0: Anti-Unruh cell
        assert abs(est.value) > 10.0 * est.error


class TestWeakNecessaryCondition:
    def test_inertial_massless_false(self):
        scn = Scenario(INERTIAL, 3, 0.0, 0.0, 1.0)
        for w in (0.5, 1.0, 5.0, -0.5, -1.0, -5.0):
            assert not weak_necessary_condition(scn, w)

    def test_inertial_with_cutoff_false(self):
        scn = Scenario(INERTIAL, 1, 1.0, 0.3, 1.0)
        for w in (-6.0, -2.0, 1.5, 2.0, 4.0):
            assert not weak_necessary_condition(scn, w)

    def test_accelerated_massless_false(self):
        scn = Scenario(ACCELERATED, 3, 0.0, 0.0, 1.0)
        for w in (0.5, 2.0, -1.0):
            assert not weak_necessary_condition(scn, w)

    def test_accelerated_massive_true_somewhere(self):
        scn = Scenario(ACCELERATED, 1, 1.0, 0.0, 2 * math.pi)
        hits = [w for w in np.linspace(0.1, 3.0, 25) if weak_necessary_condition(scn, w)]
        assert hits


class TestClassify:
    def test_inertial_grid_no_anti_unruh(self, sw):
        spec = ScanSpec(
            INERTIAL, 3, 0.0,
            omegas=(0.5, 5.0), sigmas=(0.7, math.inf),
            t_kms=(0.5, 2.0, 10.0), masses=(0.0, 1.0), switching=sw,
        )
        scan = classify(spec)
        assert scan.count("weak") == 0
        assert scan.count("strong") == 0
        assert scan.count("both") == 0

    def test_accelerated_massless_no_anti_unruh(self, sw):
        for d in (1, 3):
            spec = ScanSpec(
                ACCELERATED, d, 0.0,
                omegas=(0.5, 5.0), sigmas=(1.0, math.inf),
                t_kms=(0.5, 5.0), masses=(0.0,), switching=sw,
            )
            scan = classify(spec)
            assert scan.count("weak") + scan.count("strong") + scan.count("both") == 0

    def test_strong_region_fig2b(self, sw):
        spec = ScanSpec(
            ACCELERATED, 1, 0.0,
            omegas=(1.0,), sigmas=(0.04,),
            t_kms=tuple(np.linspace(0.2, 2.0, 8)), masses=(1.0,), switching=sw,
        )
        scan = classify(spec)
        strong_cells = [c for c in scan.cells
                        if c.dTedr_dT < 0 and abs(c.dTedr_dT) > 10 * c.fd_error]
        assert strong_cells
        # observed structural relation: strong Anti-Unruh comes together with
        # weak (dF/dT < 0) everywhere on this grid, so the labels read "both"
        for c in strong_cells:
            assert c.label == "both"
            assert c.dF_dT < 0

    def test_unresolved_on_singular_cells(self, sw):
        # inertial massless d=1 at finite sigma crosses the IR pole
        spec = ScanSpec(
            INERTIAL, 1, 0.0,
            omegas=(0.5,), sigmas=(0.04,),
            t_kms=(1.0,), masses=(0.0,), switching=sw,
        )
        scan = classify(spec)
        assert scan.cells[0].label == LABEL_UNRESOLVED
        assert math.isnan(scan.cells[0].dF_dT)

    def test_label_stability_under_step_halving(self, sw):
        base = ScanSpec(
            ACCELERATED, 1, 0.0,
            omegas=(0.5, 2.0), sigmas=(math.inf,),
            t_kms=tuple(np.linspace(0.3, 8.0, 12)), masses=(1.0,), switching=sw,
        )
        halved = ScanSpec(
            ACCELERATED, 1, 0.0,
            omegas=(0.5, 2.0), sigmas=(math.inf,),
            t_kms=tuple(np.linspace(0.3, 8.0, 12)), masses=(1.0,), switching=sw,
            step=StepControl(rel_step=5e-5),
        )
        a = classify(base)
        b = classify(halved)
        same = sum(1 for x, y in zip(a.cells, b.cells) if x.label == y.label)
        assert same >= math.ceil(0.99 * len(a.cells))

    def test_deterministic_ordering(self, sw):
        spec = ScanSpec(
            INERTIAL, 3, 0.0,
            omegas=(1.0, 2.0), sigmas=(math.inf,),
            t_kms=(1.0, 3.0), masses=(0.0,), switching=sw,
        )
        a = classify(spec)
        b = classify(spec)
        assert scan_to_csv(a) == scan_to_csv(b)

    def test_thread_pool_matches_serial(self, sw, monkeypatch):
        spec = ScanSpec(
            ACCELERATED, 1, 0.0,
            omegas=(0.5, 2.0), sigmas=(math.inf, 1.0),
            t_kms=(0.5, 2.0, 6.0), masses=(1.0,), switching=sw,
        )
        serial = scan_to_csv(classify(spec))
        monkeypatch.setenv("UNRUH_LAB_THREADS", "4")
        parallel = scan_to_csv(classify(spec))
        assert parallel == serial

    def test_empty_axis_rejected(self, sw):
        with pytest.raises(DomainError):
            ScanSpec(INERTIAL, 3, 0.0, omegas=(), sigmas=(1.0,),
                     t_kms=(1.0,), masses=(0.0,), switching=sw)


class TestCSV:
    def test_schema_and_formatting(self, sw):
        spec = ScanSpec(
            INERTIAL, 3, 0.0,
            omegas=(1.0,), sigmas=(math.inf,),
            t_kms=(2.0,), masses=(0.0,), switching=sw,
        )
        text = scan_to_csv(classify(spec))
        lines = text.strip().split("\n")
        assert lines[0] == "Omega,sigma,T_kms,m,dF_dT,dTedr_dT,label,fd_err"
        fields = lines[1].split(",")
        assert fields[1] == "inf"
        assert fields[6] == LABEL_NEITHER
        float(fields[4])  # parses as a number
