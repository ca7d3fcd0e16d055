import io
import json

import pytest

from schedsim.cli import main
from schedsim.workload import parse_workload

TABLE2_CSV = "pid,burst\n1,15\n2,20\n3,7\n4,30\n5,4\n"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def table2_file(tmp_path):
    path = tmp_path / "table2.csv"
    path.write_text(TABLE2_CSV)
    return str(path)


@pytest.fixture(autouse=True)
def no_format_env(monkeypatch):
    monkeypatch.delenv("SCHEDSIM_FORMAT", raising=False)


def test_run_all_json(table2_file):
    code, out = run("run", "--algo", "all", "--workload", table2_file,
                    "--q", "6", "--k", "6", "--F", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    by_algo = {r["algorithm"]: r for r in doc["reports"]}
    assert [by_algo[a]["context_switches"] for a in ("FCFS", "SJF", "RR")] == [5, 5, 15]
    assert [by_algo[a]["avg_turnaround"] for a in ("FCFS", "SJF", "RR", "OMDRRS")] == [48.0, 32.6, 51.8, 36.2]
    assert [by_algo[a]["avg_waiting"] for a in ("FCFS", "SJF", "RR", "OMDRRS")] == [32.8, 17.4, 36.6, 21.0]
    assert [s["algorithm"] for s in doc["schedules"]] == ["FCFS", "SJF", "RR", "OMDRRS"]
    assert doc["workload"]["origin"] == "manual"


def test_rr_without_quantum_is_usage_error(table2_file, capsys):
    code, _ = run("run", "--algo", "rr", "--workload", table2_file)
    assert code == 2
    assert "--q" in capsys.readouterr().err


def test_omdrrs_without_k_is_usage_error(table2_file, capsys):
    code, _ = run("run", "--algo", "omdrrs", "--workload", table2_file)
    assert code == 2
    assert "--k" in capsys.readouterr().err


def test_run_generated_single_process():
    code, out = run("run", "--algo", "fcfs", "--generate", "count=1,min=9,max=9,seed=1", "--format", "json")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert (report["avg_turnaround"], report["avg_waiting"], report["context_switches"]) == (9, 0, 1)
    assert json.loads(out)["workload"]["seed"] == 1


def test_table_output(table2_file):
    code, out = run("run", "--algo", "omdrrs", "--workload", table2_file, "--k", "6", "--gantt")
    assert code == 0
    assert "OMDRRS(k=6,F=2)" in out
    assert "ATT 36.2  AWT 21.0" in out
    bar = next(line for line in out.splitlines() if line.startswith("|"))
    assert bar.split("|")[1].strip() == "P5"


def test_compare_alias(table2_file):
    _, a = run("compare", "--workload", table2_file, "--q", "6", "--k", "6")
    _, b = run("run", "--algo", "all", "--workload", table2_file, "--q", "6", "--k", "6")
    assert a == b and "SCH. CRITERIA" in a


def test_csv_and_json_agree(table2_file):
    args = ["run", "--algo", "all", "--workload", table2_file, "--q", "6", "--k", "6"]
    _, js = run(*args, "--format", "json")
    _, cs = run(*args, "--format", "csv")
    per_process, matrix = cs.strip().split("\n\n")
    rows = [line.split(",") for line in per_process.splitlines()[1:]]
    from_csv = {(a, int(p)): (int(t), int(w)) for a, p, _, t, w in rows}
    doc = json.loads(js)
    from_json = {(r["algorithm"], m["pid"]): (m["turnaround"], m["waiting"])
                 for r in doc["reports"] for m in r["per_process"]}
    assert from_csv == from_json
    mrows = {line.split(",")[0]: line.split(",")[1:] for line in matrix.splitlines()}
    assert [float(x) for x in mrows["TURNAROUND TIME"]] == doc["comparison"]["rows"]["TURNAROUND TIME"]
    assert [int(x) for x in mrows["CONTEXT SWITCH"]] == doc["comparison"]["rows"]["CONTEXT SWITCH"]


def test_single_algo_csv_columns(table2_file):
    _, out = run("run", "--algo", "sjf", "--workload", table2_file, "--format", "csv")
    assert out.splitlines()[:2] == ["pid,bt,tat,wt", "1,15,26,11"]


def test_env_var_sets_default_format(table2_file, monkeypatch):
    monkeypatch.setenv("SCHEDSIM_FORMAT", "json")
    _, out = run("run", "--algo", "fcfs", "--workload", table2_file)
    assert json.loads(out)["reports"][0]["context_switches"] == 5
    _, out = run("run", "--algo", "fcfs", "--workload", table2_file, "--format", "csv")
    assert out.startswith("pid,bt,tat,wt")


def test_json_workload_file(tmp_path):
    path = tmp_path / "w.json"
    path.write_text('[{"pid": 1, "burst": 3}, {"pid": 2, "burst": 2}]')
    code, out = run("run", "--algo", "sjf", "--workload", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["schedules"][0]["completions"] == {"1": 5, "2": 2}


@pytest.mark.parametrize(
    "content, message",
    [("pid,burst\n1,0\n", "row 1"), ("pid,burst\n1,5\n1,6\n", "row 2"), ("nope\n", "header")],
)
def test_bad_workload_file(tmp_path, capsys, content, message):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    code, _ = run("run", "--algo", "fcfs", "--workload", str(path))
    assert code == 2
    assert message in capsys.readouterr().err


def test_missing_file_and_bad_flags(tmp_path):
    assert run("run", "--algo", "fcfs", "--workload", str(tmp_path / "missing.csv"))[0] == 2
    assert run("run", "--algo", "bogus", "--workload", "x.csv")[0] == 2
    assert run("run", "--algo", "fcfs")[0] == 2
    assert run("run", "--algo", "omdrrs", "--generate", "count=3", "--k", "2", "--F", "1")[0] == 2
    assert run("run", "--algo", "fcfs", "--generate", "count=0")[0] == 2
    assert run("run", "--algo", "fcfs", "--generate", "count=2", "--gantt", "--width", "5")[0] == 2


def test_quantum_seed_is_deterministic(table2_file):
    args = ["run", "--algo", "all", "--workload", table2_file, "--quantum-seed", "11", "--format", "json"]
    _, a = run(*args)
    _, b = run(*args)
    assert a == b
    params = {r["algorithm"]: r["params"] for r in json.loads(a)["reports"]}
    assert 2 <= params["RR"]["q"] <= 30 and 2 <= params["OMDRRS"]["k"] <= 30


def test_generate_writes_file(tmp_path):
    path = tmp_path / "gen.csv"
    code, out = run("generate", "--count", "10", "--min", "4", "--max", "30", "--seed", "7", "--out", str(path))
    assert code == 0 and "seed: 7" in out
    w = parse_workload(path.read_text())
    assert len(w) == 10 and all(4 <= b <= 30 for b in w.bursts)


def test_generate_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        run("generate", "--count", "10", "--seed", "7", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_generate_errors(tmp_path):
    assert run("generate", "--count", "0")[0] == 2
    assert run("generate", "--count", "3", "--min", "5", "--max", "2")[0] == 2
    assert run("generate", "--count", "3", "--out", str(tmp_path / "no" / "dir.csv"))[0] == 2


def test_generated_file_runs_unchanged(tmp_path):
    for fmt in ("csv", "json"):
        path = tmp_path / f"w.{fmt}"
        run("generate", "--count", "6", "--seed", "3", "--format", fmt, "--out", str(path))
        code, _ = run("compare", "--workload", str(path), "--q", "4", "--k", "4")
        assert code == 0


def test_generate_stdout(capsys):
    code, out = run("generate", "--count", "2", "--seed", "5")
    assert code == 0 and out.startswith("pid,burst\n")
    assert "seed: 5" in capsys.readouterr().err


def test_reproduce_t2():
    code, out = run("reproduce", "T2")
    assert code == 0
    assert "diff (0 cells, 0 unexpected)" in out


def test_reproduce_t1_exits_zero_with_errata():
    code, out = run("reproduce", "t1")
    assert code == 0
    assert out.count("known erratum") == 4


def test_reproduce_t3_exits_zero_with_errata():
    code, out = run("reproduce", "T3")
    assert code == 0
    assert "computed 104.8 != published 106.3 (known erratum)" in out


def test_reproduce_t4():
    code, out = run("reproduce", "T4")
    assert code == 0, out


def test_reproduce_unknown_table():
    assert run("reproduce", "T9")[0] == 2
