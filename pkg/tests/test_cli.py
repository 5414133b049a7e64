"""CLI behaviour: JSON goldens, determinism, error codes, exit codes."""

import json
import subprocess
import sys

SPACES = [
    "SU_pq(2,3)",
    "SO0_pq(3,5)",
    "SOstar_2n(4)",
    "Sp_nR(3)",
    "Sp_pq(1,2)",
    "SLnR(4)",
    "SUstar_2n(3)",
    "TypeIV(8)",
    "RHn(3)",
    "CHn(2)",
    "QHn(2)",
    "CayH",
    "ConstPos(4)",
    "Flat(3)",
]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "symchar", *args],
        capture_output=True,
        text=True,
    )


def run_json(*args):
    proc = run_cli(*args)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    return json.loads(proc.stdout)


def test_classify_golden_slnr4():
    assert run_json("classify", "SLnR(4)") == {
        "family": "SL_nR",
        "params": [4],
        "dual": "SU(4)/SO(4)",
        "dim": 9,
        "rank_gu": 3,
        "rank_k": 2,
        "toral_rank": 1,
        "verdict": "RankGap_PontrjaginVanish",
        "euler_char_dual": 0,
        "minvol_positive": False,
    }


def test_classify_golden_su23():
    payload = run_json("classify", "SU_pq(2,3)")
    assert payload["verdict"] == "EqualRank_EulerNonzero"
    assert payload["toral_rank"] == 0
    assert payload["euler_char_dual"] == 10
    assert payload["minvol_positive"] is True


def test_classify_output_is_deterministic():
    first = run_cli("classify", "SO0_pq(3,5)")
    second = run_cli("classify", "SO0_pq(3,5)")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_pretty_flag_same_payload():
    plain = run_json("classify", "CayH")
    pretty_proc = run_cli("classify", "CayH", "--pretty")
    assert pretty_proc.returncode == 0
    assert json.loads(pretty_proc.stdout) == plain
    assert "\n" in pretty_proc.stdout.strip()


def test_dual_type_iv_has_null_groups():
    payload = run_json("dual", "TypeIV(5)")
    assert payload["gu"] is None and payload["k"] is None
    assert payload["dual"] == "compact Lie group"
    assert payload["dim"] == 5


def test_dual_quotient_fields():
    payload = run_json("dual", "QHn(3)")
    assert payload == {
        "family": "QuaternionicHyperbolic_n",
        "params": [3],
        "dual": "HP^3",
        "gu": "Sp(4)",
        "k": "Sp(1)xSp(3)",
        "rank_gu": 4,
        "rank_k": 4,
        "dim": 12,
    }


def test_p_class_cayley():
    payload = run_json("p-class", "CayH")
    assert payload["coefficients"] == [1, 6, 39]
    assert payload["generator_degree"] == 8
    assert payload["truncation_top"] == 2
    assert "notes" in payload


def test_p_class_requires_rank_one():
    proc = run_cli("p-class", "SU_pq(2,3)")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "unsupported-class"


def test_p_numbers_cayley_golden():
    assert run_json("p-numbers", "CayH") == {
        "dim": 16,
        "kind": "pontrjagin",
        "entries": {"4": 39, "3,1": 0, "2,2": 36, "2,1,1": 0, "1,1,1,1": 0},
    }


def test_p_numbers_rank_gap_vanish():
    payload = run_json("p-numbers", "SLnR(6)")
    assert payload["dim"] == 20
    assert len(payload["entries"]) == 7  # partitions of 5
    assert all(v == 0 for v in payload["entries"].values())


def test_p_numbers_odd_dimension_reason():
    payload = run_json("p-numbers", "SLnR(4)")
    assert payload["entries"] == {}
    assert payload["reason"] == "dimension-not-multiple-of-4"


def test_p_numbers_equal_rank_unsupported():
    proc = run_cli("p-numbers", "SU_pq(2,3)")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "unsupported-class"


def test_sw_numbers_cp2():
    payload = run_json("sw-numbers", "CHn(2)")
    assert payload["entries"]["w2^2"] == 1
    assert payload["entries"]["w4"] == 1
    assert payload["dim"] == 4
    assert payload["kind"] == "sw"


def test_sw_numbers_unsupported_for_quaternionic():
    proc = run_cli("sw-numbers", "QHn(2)")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "unsupported-class"


def test_transfer_pullback():
    payload = run_json("transfer", "--table", '{"4":39,"2,2":36}', "--deg", "2")
    assert payload["entries"] == {"4": 78, "2,2": 72}
    assert payload["dim"] == 16


def test_transfer_solve():
    payload = run_json(
        "transfer", "--table", '{"4":39,"2,2":36}', "--deg-t", "2", "--deg-f", "3"
    )
    assert payload["entries"] == {"4": 26, "2,2": 24}


def test_transfer_solve_inexact_errors():
    proc = run_cli(
        "transfer", "--table", '{"4":39}', "--deg-t", "1", "--deg-f", "2"
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "inconsistent-degrees"


def test_transfer_requires_a_mode():
    proc = run_cli("transfer", "--table", '{"4":39}')
    assert proc.returncode == 1


def test_mu_example_with_paren_keys():
    payload = run_json(
        "mu",
        "--m",
        '{"(4)": 13, "(2,2)": 12}',
        "--mu-dual",
        '{"4": 39, "2,2": 36}',
    )
    assert payload == {
        "mu": 3,
        "contributions": {"4": 3, "2,2": 3},
        "skipped": [],
    }


def test_mu_inconsistent_tables_error():
    proc = run_cli("mu", "--m", '{"4": 0}', "--mu-dual", '{"4": 39}')
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "inconsistent-tables"


def test_wall_from_space():
    assert run_json("wall", "CHn(2)")["verdict"] == "does_not_bound"
    assert run_json("wall", "CHn(3)")["verdict"] == "bounds"
    assert run_json("wall", "CayH")["verdict"] == "does_not_bound"
    assert run_json("wall", "SLnR(4)")["verdict"] == "insufficient_data"
    payload = run_json("wall", "CHn(1)")
    assert payload["verdict"] == "bounds"  # CP^1 is a 2-sphere


def test_wall_from_tables():
    assert run_json("wall", "--p", '{"1": 3}')["verdict"] == "does_not_bound"
    assert (
        run_json("wall", "--p", '{"1": 0}')["verdict"] == "insufficient_data"
    )
    payload = run_json(
        "wall", "--p", '{"1": 0}', "--sw", '{"w4": 0, "w2^2": 0}'
    )
    assert payload["verdict"] == "bounds"


def test_wall_table_from_file(tmp_path):
    table_file = tmp_path / "cay.json"
    table_file.write_text(
        '{"dim": 16, "kind": "pontrjagin", "entries": {"4": 39, "2,2": 36}}'
    )
    payload = run_json("wall", "--p", f"@{table_file}")
    assert payload["verdict"] == "does_not_bound"
    assert payload["dim"] == 16


def test_table_with_mismatched_degrees_rejected():
    proc = run_cli("mu", "--m", '{"4": 1, "2,1": 1}', "--mu-dual", '{"4": 1}')
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "bad-table"


def test_gl_order_cli():
    assert run_json("gl-order", "3", "2") == {"n": 3, "q": 2, "order": 168}
    proc = run_cli("gl-order", "2", "6")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "bad-prime-power"


def test_ds_check_cli():
    payload = run_json(
        "ds-check", "--mu", "3", "--k", "1", "--q1", "2", "--q2", "3"
    )
    assert payload["divides"] is True
    assert payload["order_product"] == 168 * 11232
    proc = run_cli("ds-check", "--mu", "3", "--k", "1", "--q1", "2", "--q2", "4")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "equal-characteristic"


def test_unknown_family_is_domain_error():
    proc = run_cli("classify", "Banana(2)")
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    assert payload["error"] == "unknown-family"
    assert "detail" in payload


def test_exceptional_family_error_code():
    proc = run_cli("classify", "E8(8)")
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "unsupported-family"


def test_malformed_spec_error_code():
    for bad in ["SLnR(x)", "SLnR(", "SU_pq(2)"]:
        proc = run_cli("classify", bad)
        assert proc.returncode == 1
        assert json.loads(proc.stdout)["error"] == "malformed-spec"


def test_usage_errors_exit_2():
    assert run_cli().returncode == 2
    assert run_cli("no-such-command").returncode == 2
    assert run_cli("gl-order", "two", "3").returncode == 2


def test_classification_round_trips_through_json():
    for space in SPACES:
        first = run_json("classify", space)
        params = ",".join(str(v) for v in first["params"])
        rebuilt = first["family"] + (f"({params})" if params else "")
        assert run_json("classify", rebuilt) == first


def test_all_spaces_classify_deterministically():
    for space in SPACES:
        a = run_cli("classify", space)
        b = run_cli("classify", space)
        assert a.stdout == b.stdout and a.returncode == 0
