import json

from nilcount.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main
from nilcount.qpoly import Laurent


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_ideal_markdown(capsys):
    code, out, _ = run_cli(capsys, "table", "--h", "1,3,5,6,7,7,7")
    assert code == EXIT_OK
    lines = [line for line in out.splitlines() if line.startswith("| (")]
    assert len(lines) == 15
    assert lines[0].startswith("| (7,) | 0 |")
    assert "(q-1)^4 * q^9" in out


def test_table_lambda_single_row(capsys):
    code, out, _ = run_cli(capsys, "table", "--lambda", "3")
    assert code == EXIT_OK
    rows = [line for line in out.splitlines() if line.startswith("| (")]
    assert len(rows) == 1 and "(1, 1, 1)" in rows[0]


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "table", "--lambda", "2,2", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["lambda"] == [2, 2]
    for row in payload["rows"]:
        poly = Laurent({int(e): c for e, c in row["poly"].items()})
        rebuilt = (
            Laurent.monomial(1, row["factors"]["q_pow"])
            * Laurent({1: 1, 0: -1}) ** row["factors"]["qm1_pow"]
            * Laurent.from_string(row["factors"]["residual"])
        )
        assert rebuilt == poly


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--lambda", "2,1", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "mu,expanded,q_pow,qm1_pow,residual"


def test_table_byte_stable(capsys):
    _, first, _ = run_cli(capsys, "table", "--h", "1,2,3,4")
    _, second, _ = run_cli(capsys, "table", "--h", "1,2,3,4")
    assert first == second


def test_brute_tally(capsys):
    code, out, _ = run_cli(capsys, "brute", "--h", "1,2,3", "--p", "2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["h"] == [1, 2, 3] and payload["p"] == 2
    tallies = {tuple(row["mu"]): row["count"] for row in payload["tallies"]}
    assert tallies == {(1, 1, 1): 1, (2, 1): 5, (3,): 2}


def test_brute_complete(capsys):
    code, out, _ = run_cli(capsys, "brute", "--h", "3,3,3", "--p", "5")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["tallies"] == [{"mu": [1, 1, 1], "count": 1}]


def test_brute_cosets(capsys):
    code, out, _ = run_cli(
        capsys, "brute", "--cosets", "--n", "2", "--p", "2", "--h1", "1,2", "--h2", "1,2"
    )
    assert code == EXIT_OK
    assert json.loads(out)["double_cosets"] == 2


def test_budget_exit_code(capsys):
    code, _, err = run_cli(capsys, "brute", "--h", "1,2,3,4,5,6,7,8", "--p", "3")
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_usage_exit_codes(capsys):
    code, _, _ = run_cli(capsys, "table", "--h", "1,99")
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys, "table")
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys, "verify", "--suite", "modular", "--n", "4", "--primes", "4")
    assert code == EXIT_USAGE


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "modular", "--n", "5")
    assert code == EXIT_OK and "passed" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "hermite", "--lambda", "2,2", "--n", "4")
    assert code == EXIT_OK
    code, out, _ = run_cli(capsys, "verify", "--suite", "bruteforce", "--n", "4", "--primes", "2,3")
    assert code == EXIT_OK and "passed" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, _, _ = run_cli(capsys, "table", "--lambda", "2,1", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    assert json.loads(target.read_text())["lambda"] == [2, 1]
