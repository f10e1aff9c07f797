from unruh_lab import verify
from unruh_lab.scenarios import commutator_ft_inertial_closed


def test_fresh_build_all_pass():
    results = verify.run_all()
    assert all(r.passed for r in results), verify.format_report(results)


def test_injected_sign_flip_detected():
    flipped = lambda *args: -commutator_ft_inertial_closed(*args)
    results = verify.run_all(verify.VerifyKernel(commutator_closed=flipped))
    assert any(not r.passed for r in results)


def test_injected_wightman_corruption_detected():
    from unruh_lab.scenarios import wightman_ft

    corrupted = lambda scn, w, *a: 1.001 * wightman_ft(scn, w, *a)
    results = verify.run_all(verify.VerifyKernel(wightman=corrupted))
    assert any(not r.passed for r in results)


def test_report_format():
    results = verify.run_all()
    report = verify.format_report(results)
    assert report.count("[PASS]") == len(results)
    assert f"{len(results)}/{len(results)} checks passed" in report
