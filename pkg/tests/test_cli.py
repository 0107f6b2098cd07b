import json
import subprocess
import sys

CMD = [sys.executable, "-m", "gencheb"]


def run_cli(*args):
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, timeout=300
    )


def test_cheb_u_prints_polynomial_text():
    result = run_cli("cheb", "u", "--n", "3")
    assert result.returncode == 0
    assert result.stdout == "8*x^3 - 4*x\n"


def test_cheb_t_json():
    result = run_cli("cheb", "t", "--n", "2", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload == {"schema": 1, "op": "cheb-t", "n": 2, "poly": "2*x^2 - 1"}


def test_negative_index_is_usage_error():
    result = run_cli("cheb", "u", "--n", "-1")
    assert result.returncode == 2


def test_unknown_subcommand_is_usage_error():
    result = run_cli("frobnicate")
    assert result.returncode == 2


def test_malformed_polynomial_is_usage_error():
    result = run_cli("gcn", "power", "--a", "x +", "--b", "1", "--n", "2")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_gcn_power_symbolic():
    result = run_cli("gcn", "power", "--a", "-1", "--b", "2*x", "--n", "3")
    assert result.returncode == 0
    assert "a_n = -2*x" in result.stdout
    assert "b_n = 4*x^2 - 1" in result.stdout


def test_gcn_roots_json():
    result = run_cli("gcn", "roots", "--a", "1", "--b", "1", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["h_plus"] == "1/2 + 1/2*sqrt(5)"
    assert payload["degenerate"] is False


def test_euler_series_matches_cosine():
    result = run_cli("euler", "series", "--a", "-1", "--b", "0", "--phi", "0")
    assert result.returncode == 0
    assert "c = 1.0" in result.stdout
    assert "s = 0.0" in result.stdout


def test_mat_pow_requires_unimodular_for_chebyshev():
    result = run_cli(
        "mat", "pow", "--entries", "1,1;0,2", "--n", "3", "--method", "chebyshev"
    )
    assert result.returncode == 2
    assert "determinant" in result.stderr


def test_mat_decompose_complex_entries():
    result = run_cli("mat", "decompose", "--entries", "0,0:-1;0:1,0")
    assert result.returncode == 0
    assert "beta2 = 1" in result.stdout


def test_u2_series_listing():
    result = run_cli("u2", "series", "--nmax", "4")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "U2_0 = 0"
    assert lines[-1] == "U2_4 = u^3 - 2*u*v + 1"


def test_hermite3_output():
    result = run_cli("hermite3", "--n", "3")
    assert result.stdout.strip() == "x^3 + 6*x*y + 6*z"


def test_verify_subsets_pass():
    result = run_cli("cheb", "verify", "--nmax", "6")
    assert result.returncode == 0
    result = run_cli("u2", "verify", "--nmax", "6")
    assert result.returncode == 0


def test_verify_all_small_and_deterministic():
    first = run_cli("verify", "all", "--nmax", "6")
    second = run_cli("verify", "all", "--nmax", "6")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert "0 failures" in first.stdout


def test_verify_json_schema():
    result = run_cli("verify", "all", "--nmax", "6", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["schema"] == 1
    assert payload["suite"] == "all"
    assert payload["failures"] == []
    assert isinstance(payload["millis"], int)


def test_failed_verification_exits_one():
    # An impossible tolerance forces numeric-suite failures.
    result = run_cli("verify", "all", "--nmax", "6", "--tol", "1e-30")
    assert result.returncode == 1
    assert "FAIL" in result.stdout
    payload = json.loads(
        run_cli(
            "verify", "all", "--nmax", "6", "--tol", "1e-30", "--format", "json"
        ).stdout
    )
    assert payload["failures"]
    assert {"case", "expected", "actual"} == set(payload["failures"][0])


def test_seed_changes_random_draws_but_not_status():
    a = run_cli("verify", "all", "--nmax", "6", "--seed", "1")
    b = run_cli("verify", "all", "--nmax", "6", "--seed", "2")
    assert a.returncode == 0 and b.returncode == 0


def test_bench_csv_header():
    result = run_cli(
        "mat", "bench", "--n-list", "4,8", "--trials", "1", "--format", "csv"
    )
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "method,n,median_ns,max_coeff_bits"
    assert len(lines) == 5
