"""Identity suite tests: passing runs, report structure, fault injection."""

import json

import pytest

from qdiv.macmahon import Family
from qdiv.verify import (
    Mismatch,
    Perturbation,
    VerificationReport,
    perturbable_targets,
    verify_method_agreement,
    verify_quasimodularity,
    verify_theorem_f,
    verify_theorem_g,
)


def test_theorem_f_seed_passes():
    r = verify_theorem_f(0, 150)
    assert r.passed
    assert r.checked_order == 150
    assert r.first_mismatch is None


def test_theorem_f_passes():
    assert verify_theorem_f(3, 60).passed


def test_theorem_f_odd_order():
    assert verify_theorem_f(2, 51).passed


def test_theorem_g_seed_passes():
    assert verify_theorem_g(0, 150).passed


def test_theorem_g_passes():
    assert verify_theorem_g(3, 60).passed


@pytest.mark.parametrize("family", [Family.A, Family.C])
@pytest.mark.parametrize("k", [1, 2])
def test_agreement_passes(family, k):
    r = verify_method_agreement(family, k, 60)
    assert r.passed
    assert r.parameters == {"family": family.value, "k": k, "order": 60}


def test_quasimodularity_passes_with_details():
    r = verify_quasimodularity(2, 60)
    assert r.passed
    assert r.details["A_1"]["terms"] == 2
    assert r.details["A_2"]["terms"] == 4
    assert r.details["C_1_probe"]["status"] == "no-decomposition"
    assert r.details["C_1_probe"]["witness_exponent"] == 2


def test_suite_argument_validation():
    with pytest.raises(ValueError):
        verify_theorem_f(-1, 50)
    with pytest.raises(ValueError):
        verify_method_agreement(Family.A, 0, 50)
    with pytest.raises(ValueError):
        verify_quasimodularity(0, 50)


# -- report structure ---------------------------------------------------------------


def test_report_invariant_fail_iff_mismatch():
    mm = Mismatch(None, 3, 1, 2)
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 10, "fail", None, 0.0)
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 10, "pass", mm, 0.0)
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 10, "maybe", None, 0.0)
    ok = VerificationReport("x", {}, 10, "fail", mm, 0.0)
    assert not ok.passed


def test_report_json_and_determinism():
    a = verify_theorem_g(1, 40).to_json_obj()
    b = verify_theorem_g(1, 40).to_json_obj()
    del a["elapsed"], b["elapsed"]
    assert a == b
    assert json.dumps(a)  # serializable
    assert a["status"] == "pass"
    assert a["first_mismatch"] is None


def test_mismatch_json_encoding():
    obj = Mismatch(3, 6, -5, None).to_json_obj()
    assert obj == {
        "x_degree": 3,
        "q_exponent": 6,
        "lhs_coefficient": "-5",
        "rhs_coefficient": None,
    }


def test_summary_line_contains_location_on_failure():
    r = verify_theorem_f(1, 50, perturb=Perturbation("A_1", 3))
    line = r.summary_line()
    assert line.startswith("FAIL theorem-f")
    assert "x^3" in line and "q^6" in line


# -- fault injection ------------------------------------------------------------------


def test_perturbed_a1_located_exactly():
    # bump A_1 at q^3; the q -> q^2 substitution puts the mismatch at x^3, q^6
    r = verify_theorem_f(1, 50, perturb=Perturbation("A_1", 3))
    assert not r.passed
    assert r.first_mismatch == Mismatch(3, 6, -5, -4)


@pytest.mark.parametrize("suite", ["theorem-f", "theorem-g", "agreement", "quasimodular"])
def test_every_perturbable_target_flips_to_fail(suite):
    k_max = 2
    order = 40
    for target in perturbable_targets(suite, k_max):
        p = Perturbation(target, 3)
        if suite == "theorem-f":
            r = verify_theorem_f(k_max, order, perturb=p)
        elif suite == "theorem-g":
            r = verify_theorem_g(k_max, order, perturb=p)
        elif suite == "agreement":
            r = verify_method_agreement(Family.A, k_max, order, perturb=p)
        else:
            r = verify_quasimodularity(k_max, order, perturb=p)
        assert not r.passed, f"{suite}: perturbing {target} did not fail"
        assert r.first_mismatch is not None
        assert 0 <= r.first_mismatch.q_exponent <= r.checked_order


def test_quasimodular_perturbation_beyond_solve_window():
    # exponent 30 is past the solve equations, so only deep verification sees it
    r = verify_quasimodularity(1, 60, perturb=Perturbation("A_1", 30))
    assert not r.passed
    assert r.first_mismatch.q_exponent == 30


def test_perturbation_of_unknown_target_is_inert():
    r = verify_theorem_f(1, 40, perturb=Perturbation("no-such-series", 3))
    assert r.passed


def test_perturbation_exponent_out_of_range():
    with pytest.raises(ValueError):
        verify_theorem_g(1, 40, perturb=Perturbation("C_1", 41))


def test_perturbable_targets_unknown_suite():
    with pytest.raises(ValueError):
        perturbable_targets("nonsense", 2)
