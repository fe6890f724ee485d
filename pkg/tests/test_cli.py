from click.testing import CliRunner

from btriangles.cli import main, run
from btriangles.identities import REGISTRY, IdentityRecord


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_triangle_human_readable():
    result = invoke("triangle", "--order", "2", "--rows", "3")
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "n=0: 1",
        "n=1: 1 2",
        "n=2: 1 3 4",
        "n=3: 1 4 7 8",
    ]


def test_triangle_tsv():
    result = invoke("triangle", "--order", "3", "--rows", "2", "--tsv")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["n=0\t1", "n=1\t1\t3", "n=2\t1\t4\t8"]


def test_triangle_rejects_bad_order():
    assert invoke("triangle", "--order", "0", "--rows", "3").exit_code == 2


def test_pathsum_value():
    result = invoke(
        "pathsum", "--order", "2", "--family", "T", "--c", "-1", "--l", "-1",
        "--n", "8",
    )
    assert result.exit_code == 0
    assert result.output == "73\n"


def test_pathsum_trace():
    result = invoke(
        "pathsum", "--order", "2", "--family", "S", "--c", "2", "--l", "-1",
        "--n", "4", "--trace",
    )
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "0\t4\t4\t16",
        "1\t3\t2\t7",
        "2\t2\t0\t1",
        "24",
    ]


def test_pathsum_sbar_total_differs_from_walk():
    result = invoke(
        "pathsum", "--order", "2", "--family", "Sbar", "--c", "2", "--l", "-1",
        "--n", "9",
    )
    assert result.output.strip() == "89"


def test_pathsum_rejects_inadmissible_step():
    result = invoke(
        "pathsum", "--order", "2", "--family", "S", "--c", "-1", "--l", "-1",
        "--n", "5",
    )
    assert result.exit_code == 2


def test_lambda_terms():
    result = invoke("lambda", "--c", "3", "--terms", "8")
    assert result.exit_code == 0
    assert [int(v) for v in result.output.split()] == [0, 0, 1, 1, 1, 2, 3, 4]


def test_lambda_rejects_small_c():
    assert invoke("lambda", "--c", "1", "--terms", "5").exit_code == 2


def test_verify_single_identity():
    result = invoke("verify", "--identity", "theorem1", "--n-max", "40")
    assert result.exit_code == 0
    assert result.output == "theorem1 n=[0..40] OK\n"


def test_verify_all_lists_every_identity_sorted():
    result = invoke("verify", "--all", "--n-max", "20")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    names = [line.split()[0] for line in lines]
    assert names == sorted(REGISTRY)
    assert all(line.endswith("OK") for line in lines)


def test_verify_jobs_output_is_deterministic():
    sequential = invoke("verify", "--all", "--n-max", "15")
    parallel = invoke("verify", "--all", "--n-max", "15", "--jobs", "4")
    assert parallel.exit_code == 0
    assert parallel.output == sequential.output


def test_verify_flag_exclusivity():
    assert invoke("verify", "--n-max", "10").exit_code == 2
    assert (
        invoke(
            "verify", "--all", "--identity", "theorem1", "--n-max", "10"
        ).exit_code
        == 2
    )


def test_verify_unknown_identity_is_usage_error():
    assert invoke("verify", "--identity", "thm99", "--n-max", "10").exit_code == 2


def test_verify_failure_exits_one(monkeypatch):
    rec = IdentityRecord(
        "bogus", lambda n: 0, lambda n: int(n == 2), 0, "negative control"
    )
    monkeypatch.setitem(REGISTRY, "bogus", rec)
    result = invoke("verify", "--identity", "bogus", "--n-max", "5")
    assert result.exit_code == 1
    assert "bogus FAIL at n=2: closed=0 oracle=1" in result.output


def test_derive_poly_printout():
    result = invoke("derive-poly", "--order", "4")
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "Q = 1/8 X^2 + 17/8 X + 10",
        "R = 1/4 X + 2",
    ]


def test_derive_poly_order_one_prints_zeros():
    result = invoke("derive-poly", "--order", "1")
    assert result.output.splitlines() == ["Q = 0", "R = 0"]


def test_sequence_prints_terms():
    result = invoke("sequence", "--id", "A000045", "--terms", "5")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["0", "1", "1", "2", "3"]


def test_sequence_exports_bfile(tmp_path):
    path = tmp_path / "out.txt"
    result = invoke(
        "sequence", "--id", "A000045", "--terms", "3", "--bfile", str(path)
    )
    assert result.exit_code == 0
    assert result.output == ""
    assert path.read_text() == "0 0\n1 1\n2 1\n"


def test_sequence_unknown_id():
    assert invoke("sequence", "--id", "A999999", "--terms", "5").exit_code == 2


def test_oeis_check_single():
    result = invoke("oeis-check", "--id", "A099568", "--terms", "40")
    assert result.exit_code == 0
    assert result.output == "A099568 n=[0..39] OK\n"


def test_oeis_check_all_offline():
    result = invoke("oeis-check", "--all", "--terms", "50")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 11
    assert all(line.endswith("OK") for line in lines)
    assert [line.split()[0] for line in lines] == sorted(
        line.split()[0] for line in lines
    )


def test_oeis_check_flag_exclusivity():
    assert invoke("oeis-check", "--terms", "10").exit_code == 2


def test_oeis_check_unknown_id():
    assert invoke("oeis-check", "--id", "A999999", "--terms", "10").exit_code == 2


def test_parse_error_exit_code():
    assert invoke("pathsum", "--order", "x").exit_code == 2


def test_run_helper_exit_codes():
    assert run(["derive-poly", "--order", "2"]) == 0
    assert run(["no-such-command"]) == 2
    assert run(["verify", "--n-max", "5"]) == 2
