import json

import pytest

from combburn.cli import EXIT_INPUT, EXIT_IO, EXIT_OK, EXIT_UNKNOWN, load_config, main, table_rows


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_burn_spine_example(capsys):
    code, out, _ = run(capsys, "burn", 20, 5)
    assert code == EXIT_OK
    assert "exact: 8" in out and "bnc: 10" in out and "regime: spine_linear" in out
    assert "bnc_tight: false" in out


def test_burn_offset_example(capsys):
    code, out, _ = run(capsys, "burn", 3, 18, "--s", 2)
    assert code == EXIT_OK and "t_greedy(S=2): 7" in out


def test_burn_trivial_and_oracle(capsys):
    assert "exact: 1" in run(capsys, "burn", 1, 1)[1]
    code, out, _ = run(capsys, "burn", 4, 7, "--exact-oracle", "--sequence")
    assert code == EXIT_OK and "oracle: 6" in out and "greedy_sequence" in out


def test_burn_errors(capsys):
    assert run(capsys, "burn", 0, 3)[0] == EXIT_INPUT
    assert run(capsys, "burn", 3, 3, "--s", 4)[0] == EXIT_INPUT
    assert run(capsys, "burn", 30, 30, "--exact-oracle")[0] == EXIT_UNKNOWN


def test_burn_budget_unknown(capsys, tmp_path):
    cfg = tmp_path / "c.conf"
    cfg.write_text("node_budget = 2\n")
    code, out, _ = run(capsys, "--config", cfg, "burn", 5, 6, "--exact-oracle")
    assert code == EXIT_UNKNOWN and "unknown" in out


def test_sweep(capsys, tmp_path):
    out_path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "sweep", 1, 1, out_path)
    assert code == EXIT_OK
    assert out_path.read_text() == "n,m,t_greedy,bnc,gap\n1,1,1,1,0\n"
    assert "max gap 0" in out


def test_sweep_threads_identical(capsys, tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "sweep", 40, 50, a)
    monkeypatch.setenv("COMBBURN_THREADS", "3")
    run(capsys, "sweep", 40, 50, b)
    assert a.read_bytes() == b.read_bytes()


def test_sweep_io_error(capsys, tmp_path):
    assert run(capsys, "sweep", 2, 2, tmp_path / "missing" / "x.csv")[0] == EXIT_IO


def test_verify_verdicts(capsys, data_dir):
    g = data_dir / "p16.edges"
    code, out, _ = run(capsys, "verify", g, data_dir / "p16_seq.json")
    assert code == EXIT_OK and out.strip() == "covered, strict"
    code, out, err = run(capsys, "verify", g, data_dir / "p16_seq_k3.json")
    assert out.splitlines() == ["not covered", "uncovered: 0 6 7 11 12 14 15"]
    assert "ignoring 1 center" in err
    code, out, _ = run(capsys, "verify", data_dir / "k1.edges", data_dir / "empty_k1.json")
    assert out.splitlines()[0] == "not covered"


def test_verify_not_strict(capsys, data_dir, tmp_path):
    seq = tmp_path / "s.json"
    seq.write_text('{"k": 5, "centers": [3, 4, 9, 13, 15]}')
    code, out, _ = run(capsys, "verify", data_dir / "p16.edges", seq)
    assert out.strip() == "covered, not strict"


def test_verify_parse_errors(capsys, data_dir, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("p 3\ne 0 1\ne 1 q\n")
    code, _, err = run(capsys, "verify", bad, data_dir / "p16_seq.json")
    assert code == EXIT_INPUT and "line 3" in err
    badseq = tmp_path / "bad.json"
    badseq.write_text('{"k": 2,\n "centers": [1,,]}')
    code, _, err = run(capsys, "verify", data_dir / "p16.edges", badseq)
    assert code == EXIT_INPUT and "line 2" in err
    code, _, _ = run(capsys, "verify", tmp_path / "nope.edges", badseq)
    assert code == EXIT_IO


def test_table_rows():
    rows = {m - n: (hb, b, bnc, shaded) for n, m, hb, b, bnc, shaded in table_rows(10, 10)}
    assert rows[5] == (10, "12", 13, True)
    assert rows[0] == (10, "10", 10, False)
    # true value of the uniform parameter on this row is n - 3
    assert rows[-4] == (7, "8", 8, False)
    assert [d for d, r in rows.items() if r[3]] == [-5, -3, 5]


def test_table_cli(capsys):
    code, out, _ = run(capsys, "table", 10, 11)
    assert code == EXIT_OK and len(out.splitlines()) == 2 + 22
    assert run(capsys, "table", 5, 4)[0] == EXIT_INPUT


def test_random(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code, out, _ = run(capsys, "random", 60, 1000, 7, a)
    assert code == EXIT_OK
    run(capsys, "random", 60, 1000, 7, b)
    assert a.read_bytes() == b.read_bytes()
    assert float(out.split("max |dev|:")[1].split()[0]) <= 0.05
    run(capsys, "random", 20, 1, 0, a)
    assert len(a.read_text().splitlines()) == 2
    assert run(capsys, "random", 61, 1, 0, a)[0] == EXIT_INPUT


def test_normalize(capsys, data_dir):
    code, out, _ = run(capsys, "normalize", 7, 4, data_dir / "c74_perturbed.json")
    trace = json.loads(out)
    assert code == EXIT_OK
    assert trace[-1]["sequence"] == {"k": 5, "centers": [[2, 1], [4, 1], [7, 4], [6, 4], [5, 4]]}
    code, out, _ = run(capsys, "normalize", 7, 4, data_dir / "c74_greedy.json")
    assert len(json.loads(out)) == 1
    code, _, err = run(capsys, "normalize", 7, 4, data_dir / "c74_truncated.json")
    assert code == EXIT_INPUT and "uncovered: 5,4" in err


def test_oracle(capsys, data_dir):
    g = data_dir / "p16.edges"
    assert json.loads(run(capsys, "oracle", g)[1])["k"] == 4
    assert json.loads(run(capsys, "oracle", g, "--refute", 3)[1]) == {"k": 3, "refuted": True}
    assert json.loads(run(capsys, "oracle", g, "--uniform")[1]) == {"hat_b": 4}
    code, out, _ = run(capsys, "oracle", g, "--budget", 1)
    assert code == EXIT_UNKNOWN and json.loads(out) == {"status": "budget_exhausted"}


def test_config(tmp_path, monkeypatch):
    cfg = tmp_path / "c.conf"
    cfg.write_text("# defaults\nthreads = 3\nnode-budget=99\n")
    monkeypatch.delenv("COMBBURN_THREADS", raising=False)
    assert load_config(str(cfg))["threads"] == 3
    assert load_config(str(cfg))["node_budget"] == 99
    monkeypatch.setenv("COMBBURN_THREADS", "5")
    assert load_config(str(cfg))["threads"] == 5


@pytest.mark.parametrize("text", ["threads\n", "colour = 2\n", "threads = x\n", "threads = 0\n"])
def test_config_errors(capsys, tmp_path, text):
    cfg = tmp_path / "c.conf"
    cfg.write_text(text)
    assert run(capsys, "--config", cfg, "table", 10, 10)[0] == EXIT_INPUT


def test_missing_config_is_io(capsys, tmp_path):
    assert run(capsys, "--config", tmp_path / "none", "table", 10, 10)[0] == EXIT_IO
