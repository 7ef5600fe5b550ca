import math

import pytest

import kendallwalk as kw


def test_catalog_lists_every_law():
    names = {entry["name"] for entry in kw.catalog()}
    assert names == {
        "dirac1",
        "uniform01",
        "pareto",
        "pareto2alpha",
        "lackmem",
        "kendall_stable",
        "cauchy_onesided",
        "student_like",
    }


def test_renewal_closed_form_point():
    assert kw.renewal_R("dirac1", [], 1.0, 2.0) == pytest.approx(3.0, abs=1e-12)
    ev = kw.renewal("uniform01", [], 1.0, 2.0)
    assert ev["R"] == pytest.approx(7.0, abs=1e-11)
    assert ev["EN2"] == pytest.approx(73.0, abs=1e-10)
    assert ev["VarN"] == pytest.approx(24.0, abs=1e-10)


def test_series_matches_transform_route():
    assert kw.series_R("pareto", [3.0], 1.0, 2.0) == pytest.approx(
        kw.renewal_R("pareto", [3.0], 1.0, 2.0), abs=1e-10
    )


def test_williamson_transform():
    ev = kw.williamson("uniform01", [], 1.0, 0.5)
    assert ev["G"] == pytest.approx(0.25, abs=1e-12)
    assert ev["H"] == pytest.approx(0.125, abs=1e-12)
    assert ev["F"] == pytest.approx(0.5, abs=1e-12)


def test_pmf_family():
    pmf = kw.pmf("dirac1", [], 1.0, 2.0, 3)
    assert pmf == pytest.approx([0.0, 0.25, 0.25, 0.1875], abs=1e-13)
    assert kw.pgf("dirac1", [], 1.0, 2.0, 0.5) == pytest.approx(2.0 / 9.0, abs=1e-13)


def test_char_fn_matches_transform():
    assert kw.char_fn("kendall_stable", [], 1.0, 0.7) == pytest.approx(
        math.exp(-0.7), abs=1e-9
    )


def test_sample_path_determinism():
    a = kw.sample_path("uniform01", [], 1.0, 10, 7, path_index=2)
    b = kw.sample_path("uniform01", [], 1.0, 10, 7, path_index=2)
    c = kw.sample_path("uniform01", [], 1.0, 10, 8, path_index=2)
    assert a == b
    assert a != c
    assert sorted(a) == a


def test_count_renewals_unit_mass():
    assert kw.count_renewals("dirac1", [], 1.0, 1.0, 11) == 1
    assert kw.count_renewals("dirac1", [], 1.0, 0.5, 11) == 0


def test_mc_stats_thread_invariance():
    one = kw.mc_renewal_stats("uniform01", [], 1.0, 5.0, 2000, 3, threads=1)
    four = kw.mc_renewal_stats("uniform01", [], 1.0, 5.0, 2000, 3, threads=4)
    assert one == four


def test_errors_map_to_python_types():
    with pytest.raises(ValueError):
        kw.renewal_R("nosuch", [], 1.0, 2.0)
    with pytest.raises(ValueError):
        kw.renewal_R("dirac1", [], 1.0, -1.0)
    with pytest.raises(ArithmeticError):
        kw.pgf("dirac1", [], 1.0, 2.0, 2.5)


def test_verify_single_suite_passes():
    results = kw.verify("closedform")
    assert len(results) == 1
    assert results[0]["pass"] is True
