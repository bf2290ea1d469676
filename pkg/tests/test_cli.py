"""CLI contract tests: exit codes, formats, caps, stability."""

import json

from qdiv.cli import EXIT_INTERNAL, EXIT_NO_SOLUTION, EXIT_OK, EXIT_USAGE, main
from qdiv.verify import Mismatch, VerificationReport


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# -- coeffs -----------------------------------------------------------------------


def test_coeffs_csv_divisor_sums(capsys):
    rc, out, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "6",
                              "--format", "csv"])
    assert rc == EXIT_OK
    assert out.splitlines() == ["1,1", "2,3", "3,4", "4,7", "5,6", "6,12"]


def test_coeffs_below_threshold_all_zero(capsys):
    rc, out, _ = run(capsys, ["coeffs", "--family", "A", "--k", "2", "--order", "2",
                              "--format", "csv"])
    assert rc == EXIT_OK
    assert out.splitlines() == ["1,0", "2,0"]


def test_coeffs_family_c_text(capsys):
    rc, out, _ = run(capsys, ["coeffs", "--family", "C", "--k", "1", "--order", "3"])
    assert rc == EXIT_OK
    assert out.splitlines() == ["1\t1", "2\t2", "3\t4"]


def test_coeffs_json_schema(capsys):
    rc, out, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "4",
                              "--format", "json"])
    assert rc == EXIT_OK
    obj = json.loads(out)
    assert obj == {
        "family": "A",
        "k": 1,
        "method": "direct",
        "order": 4,
        "coeffs": ["0", "1", "3", "4", "7"],
    }


def test_coeffs_methods_agree(capsys):
    tables = {}
    for method in ("direct", "explicit", "recurrence", "oracle"):
        rc, out, _ = run(capsys, ["coeffs", "--family", "C", "--k", "2", "--order",
                                  "12", "--method", method, "--format", "csv"])
        assert rc == EXIT_OK
        tables[method] = out
    assert len(set(tables.values())) == 1


def test_coeffs_output_file(tmp_path, capsys):
    path = tmp_path / "table.csv"
    rc, out, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "3",
                              "--format", "csv", "--output", str(path)])
    assert rc == EXIT_OK
    assert out == ""
    assert path.read_text().splitlines() == ["1,1", "2,3", "3,4"]


def test_coeffs_oracle_cap(capsys):
    rc, _, err = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "61",
                              "--method", "oracle"])
    assert rc == EXIT_USAGE
    assert "--allow-slow" in err
    rc, out, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "61",
                              "--method", "oracle", "--allow-slow", "--format", "csv"])
    assert rc == EXIT_OK
    assert out.splitlines()[-1] == "61,62"  # sigma_1(61), 61 prime


def test_coeffs_k0_only_direct(capsys):
    rc, _, _ = run(capsys, ["coeffs", "--family", "A", "--k", "0", "--order", "5"])
    assert rc == EXIT_OK
    for method in ("explicit", "recurrence", "oracle"):
        rc, _, err = run(capsys, ["coeffs", "--family", "A", "--k", "0", "--order",
                                  "5", "--method", method])
        assert rc == EXIT_USAGE


def test_coeffs_invalid_family_usage_error(capsys):
    rc, _, _ = run(capsys, ["coeffs", "--family", "X", "--k", "1", "--order", "5"])
    assert rc == EXIT_USAGE


# -- decompose --------------------------------------------------------------------


def test_decompose_a1_json(capsys):
    rc, out, _ = run(capsys, ["decompose", "--k", "1", "--order", "100",
                              "--format", "json"])
    assert rc == EXIT_OK
    obj = json.loads(out)
    assert obj["weight_bound"] == 2
    assert obj["verified_order"] == 100
    assert sorted(obj["terms"], key=lambda t: t["a"]) == [
        {"a": 0, "b": 0, "c": 0, "coefficient": "1/24"},
        {"a": 1, "b": 0, "c": 0, "coefficient": "-1/24"},
    ]


def test_decompose_a2_residual_free(capsys):
    rc, out, _ = run(capsys, ["decompose", "--k", "2", "--order", "120",
                              "--format", "json"])
    assert rc == EXIT_OK
    obj = json.loads(out)
    assert len(obj["terms"]) <= 4


def test_decompose_weight_bound_zero_fails(capsys):
    rc, out, _ = run(capsys, ["decompose", "--k", "1", "--weight-bound", "0",
                              "--order", "50", "--format", "json"])
    assert rc == EXIT_NO_SOLUTION
    obj = json.loads(out)
    assert obj["status"] == "no-solution"
    assert obj["witness_exponent"] == 1


def test_decompose_text_failure(capsys):
    rc, out, _ = run(capsys, ["decompose", "--k", "1", "--weight-bound", "0",
                              "--order", "50"])
    assert rc == EXIT_NO_SOLUTION
    assert "no solution" in out
    assert "q^1" in out


def test_decompose_usage_errors(capsys):
    rc, _, _ = run(capsys, ["decompose", "--k", "0", "--order", "50"])
    assert rc == EXIT_USAGE
    rc, _, _ = run(capsys, ["decompose", "--k", "1", "--weight-bound", "3",
                            "--order", "50"])
    assert rc == EXIT_USAGE
    rc, _, err = run(capsys, ["decompose", "--k", "3", "--order", "10"])
    assert rc == EXIT_USAGE
    assert "too small" in err
    rc, _, _ = run(capsys, ["decompose", "--k", "1", "--order", "50",
                            "--format", "csv"])
    assert rc == EXIT_USAGE  # csv applies only to coefficient tables


# -- verify -----------------------------------------------------------------------


def test_verify_theorem_f_seed_depth(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "theorem-f", "--k-max", "0",
                              "--order", "200"])
    assert rc == EXIT_OK
    assert out.startswith("PASS theorem-f")


def test_verify_all_small(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "all", "--k-max", "1",
                              "--order", "40"])
    assert rc == EXIT_OK
    lines = out.strip().splitlines()
    # 2 agreement reports (A and C) + quasimodularity + theorem-f + theorem-g
    assert len(lines) == 5
    assert all(line.startswith("PASS") for line in lines)
    # deterministic aggregation by suite name
    names = [line.split()[1] for line in lines]
    assert names == sorted(names)


def test_verify_json_schema_stable(capsys):
    argv = ["verify", "--suite", "theorem-g", "--k-max", "1", "--order", "40",
            "--format", "json"]
    rc, out1, _ = run(capsys, argv)
    assert rc == EXIT_OK
    rc, out2, _ = run(capsys, argv)
    a, b = json.loads(out1), json.loads(out2)
    for obj in (*a, *b):
        del obj["elapsed"]
    assert a == b
    assert a[0]["identity_name"] == "theorem-g"
    assert a[0]["status"] == "pass"


def test_verify_agreement_requires_k(capsys):
    rc, _, err = run(capsys, ["verify", "--suite", "agreement", "--k-max", "0",
                              "--order", "50"])
    assert rc == EXIT_USAGE
    assert "k-max" in err


def test_verify_quasimodular_order_check(capsys):
    rc, _, err = run(capsys, ["verify", "--suite", "quasimodular", "--k-max", "4",
                              "--order", "10"])
    assert rc == EXIT_USAGE


def test_verify_failure_exits_no_solution(capsys, monkeypatch):
    failed = VerificationReport(
        identity_name="theorem-f",
        parameters={"k_max": 0, "order": 10},
        checked_order=10,
        status="fail",
        first_mismatch=Mismatch(1, 2, 3, 4),
        elapsed=0.0,
    )
    monkeypatch.setattr("qdiv.cli.verify_theorem_f", lambda k, o: failed)
    rc, out, _ = run(capsys, ["verify", "--suite", "theorem-f"])
    assert rc == EXIT_NO_SOLUTION
    assert out.startswith("FAIL")


def test_internal_error_exit_code(capsys, monkeypatch):
    def boom(k, o):
        raise RuntimeError("kaput")

    monkeypatch.setattr("qdiv.cli.verify_theorem_f", boom)
    rc, _, err = run(capsys, ["verify", "--suite", "theorem-f"])
    assert rc == EXIT_INTERNAL
    assert "kaput" in err


# -- global behaviour ---------------------------------------------------------------


def test_order_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QDIV_MAX_ORDER", "100")
    rc, _, err = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "200"])
    assert rc == EXIT_USAGE
    assert "QDIV_MAX_ORDER" in err


def test_order_cap_bad_value(capsys, monkeypatch):
    monkeypatch.setenv("QDIV_MAX_ORDER", "many")
    rc, _, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "5"])
    assert rc == EXIT_USAGE


def test_negative_order_usage(capsys):
    rc, _, _ = run(capsys, ["coeffs", "--family", "A", "--k", "1", "--order", "-3"])
    assert rc == EXIT_USAGE


def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == EXIT_USAGE


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "exit codes" in out
