import json
import subprocess
import sys

import pytest

from superlefschetz import __version__
from superlefschetz.cli import main
from superlefschetz.report import (
    ANCHORS,
    SUITES,
    CheckResult,
    ConfigError,
    SuiteConfig,
    applicable_suites,
    counts,
    exit_code,
    format_json,
    format_text,
    run,
)


def test_every_id_prefix_has_an_anchor():
    results = run(SuiteConfig("C", 1))
    for r in results:
        assert r.id.split(".")[0] in ANCHORS
        assert r.paper_ref == ANCHORS[r.id.split(".")[0]]
        assert r.id.split(".")[1:3] == ["C", "n1"]


def test_ids_unique_and_sorted():
    results = run(SuiteConfig("R", 2))
    ids = [r.id for r in results]
    assert ids == sorted(set(ids))
    assert len(ids) >= 20


@pytest.mark.parametrize("bad", [
    dict(algebra="O", n=2),
    dict(algebra="X"),
    dict(n=0),
    dict(max_degree=5),
    dict(algebra="R", suites=("kahler",)),
    dict(algebra="C", suites=("hyperkahler",)),
    dict(algebra="R", suites=("semiflat",)),
    dict(algebra="O", suites=("lefschetz",)),
    dict(suites=("nope",)),
])
def test_invalid_configs(bad):
    with pytest.raises(ConfigError):
        SuiteConfig(**bad).validate()


def test_applicable_suites():
    assert "kahler" in applicable_suites("C") and "kahler" not in applicable_suites("H")
    assert set(applicable_suites("R")) <= set(SUITES)
    assert SuiteConfig("H", suites=("lie", "normed")).selected() == ("normed", "lie")


def test_lefschetz_suite_counts():
    results = run(SuiteConfig("C", 1, suites=("lefschetz",)))
    assert [r.id for r in results] == [
        "lefschetz.C.n1.harmonic-invariance", "lefschetz.C.n1.torus-k0", "lefschetz.C.n1.torus-k1"]
    assert counts(results) == {"pass": 3, "fail": 0, "skipped": 0, "total": 3}


def test_witness_only_on_failure():
    r = CheckResult("a.R.n1.x", "pass", "ref", {"k": "v"}, 5)
    assert r.as_dict() == {"id": "a.R.n1.x", "status": "pass", "paper_ref": "ref", "witness": {"k": "v"}}
    assert r.as_dict(timing=True)["millis"] == 5
    results = run(SuiteConfig("C", 1, suites=("kahler",)))
    failing = [r for r in results if r.status == "fail"]
    assert failing and all(r.witness for r in failing)
    assert all(r.witness is None for r in results if r.status == "pass")


def test_exit_code_and_text_format():
    good = [CheckResult("x.R.n1.a", "pass", "ref"), CheckResult("x.R.n1.b", "skipped", "ref")]
    assert exit_code(good) == 0
    assert exit_code(good + [CheckResult("x.R.n1.c", "fail", "ref")]) == 1
    assert format_text(good) == "x.R.n1.a pass (ref)\nx.R.n1.b skipped (ref)\n"


def test_json_header():
    config = SuiteConfig("R", 1, suites=("normed",), seed=3)
    doc = json.loads(format_json(config, run(config)))
    assert doc["header"]["version"] == __version__
    assert doc["header"]["config"] == {"algebra": "R", "n": 1, "suites": ["normed"], "seed": 3, "max_degree": 2}
    assert doc["header"]["counts"]["total"] == len(doc["checks"])
    assert all("millis" not in c for c in doc["checks"])


def test_timing_is_opt_in(tmp_path):
    out = tmp_path / "r.json"
    main(["--suite", "operators", "--report", "json", "--timing", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert any("millis" in c for c in doc["checks"])


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["--algebra", "R", "--n", "1"]) == 0
    assert main(["--algebra", "C", "--n", "1", "--suite", "kahler"]) == 1
    assert main(["--algebra", "O", "--n", "2"]) == 2
    assert main(["--algebra", "R", "--suite", "kahler"]) == 2
    assert main(["--seed", str(2 ** 64)]) == 2
    with pytest.raises(SystemExit) as e:
        main(["--algebra", "Z"])
    assert e.value.code == 2


def test_cli_list(capsys):
    assert main(["--algebra", "C", "--n", "1", "--suite", "operators", "--list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert f"prop39.C.n1.eps1-eps2 {ANCHORS['prop39']}" in lines


def test_cli_determinism(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        main(["--algebra", "H", "--n", "1", "--suite", "lie", "--suite", "hyperkahler",
              "--seed", "11", "--report", "json", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superlefschetz", "--suite", "normed"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("cayley-dickson.R.n1.table-matches-doubling pass (plumbing)")
