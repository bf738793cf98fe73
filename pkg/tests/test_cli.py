import io
import json

from onevar import cli


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text):
    p = tmp_path / "eqs.txt"
    p.write_text(text)
    return str(p)


def test_json_worked_example(tmp_path):
    code, out, _ = run(["--json", write(tmp_path, "Xaa = aXX\n")])
    assert code == 0
    doc = json.loads(out)
    assert doc["epsilon"] is False and doc["universal"] is False
    assert doc["finite"] == [{"length": 1, "string": "a"}]
    assert doc["family"] is None


def test_family_json(tmp_path):
    code, out, _ = run(["--json", write(tmp_path, "abX = Xab\n")])
    doc = json.loads(out)
    assert doc["epsilon"] is True
    fam = doc["family"]
    assert fam["period"] == "ab" and fam["prefix"] == "" and fam["period_length"] == 2


def test_one_document_per_line_skipping_comments(tmp_path):
    text = "# header\n\nXaa = aXX\nabX = Xab  # trailing\n"
    code, out, _ = run(["--json", write(tmp_path, text)])
    assert code == 0 and len(out.splitlines()) == 2


def test_stdin(monkeypatch):
    code, out, _ = run(["--json"], "aX = Xa\n", monkeypatch)
    assert code == 0 and json.loads(out)["family"]["period"] == "a"


def test_parse_error_exit_code(tmp_path):
    code, out, err = run(["--json", write(tmp_path, "Xaa = aXX\nab = = X\n")])
    assert code == cli.EXIT_PARSE
    assert "line 2: parse error" in err
    assert len(out.splitlines()) == 1


def test_invariant_exit_code(tmp_path, monkeypatch):
    real = cli.solve

    def broken(parsed, options):
        res = real(parsed, options)
        res.stats["violations"] = ["phase 0: injected"]
        return res

    monkeypatch.setattr(cli, "solve", broken)
    code, _, err = run([write(tmp_path, "Xaa = aXX\n")])
    assert code == cli.EXIT_INVARIANT and "invariant violation" in err


def test_oracle_mismatch_exit_code(tmp_path, monkeypatch):
    monkeypatch.setattr(cli, "oracle_agrees", lambda parsed, res, bound: False)
    code, _, err = run(["--oracle-check", "10", write(tmp_path, "Xaa = aXX\n")])
    assert code == cli.EXIT_ORACLE and "oracle mismatch" in err


def test_oracle_check_agrees(tmp_path):
    lines = "\n".join(["Xaa = aXX", "abX = Xab", "aXbX = XabX", "XbaX = abXX"]) + "\n"
    code, out, _ = run(["--json", "--oracle-check", "30", write(tmp_path, lines)])
    assert code == 0
    assert all(json.loads(l)["oracle"]["agrees"] for l in out.splitlines())


def test_exit_code_is_the_worst(tmp_path, monkeypatch):
    monkeypatch.setattr(cli, "oracle_agrees", lambda parsed, res, bound: False)
    code, _, _ = run(["--oracle-check", "5", write(tmp_path, "aX = Xa\nX = = a\n")])
    assert code == cli.EXIT_ORACLE


def test_gen_is_deterministic():
    a = run(["--gen", "30", "2", "--seed", "4", "--count", "5"])[1]
    b = run(["--gen", "30", "2", "--seed", "4", "--count", "5"])[1]
    c = run(["--gen", "30", "2", "--seed", "5", "--count", "5"])[1]
    assert a == b != c
    lines = a.splitlines()
    assert len(lines) == 5 and all(len(l) - 3 <= 30 and "X" in l for l in lines)


def test_gen_then_solve_with_oracle(tmp_path):
    eqs = run(["--gen", "24", "2", "--plant", "--count", "20"])[1]
    code, _, _ = run(["--oracle-check", "40", write(tmp_path, eqs)])
    assert code == 0


def test_gen_rejects_bad_size():
    code, _, err = run(["--gen", "2", "2"])
    assert code == cli.EXIT_PARSE and "error" in err


def test_bench_rows():
    code, out, _ = run(["--bench", "power", "--sizes", "64", "128", "--json"])
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(rows) == 4
    assert {r["engine"] for r in rows} == {"baseline", "linear"}
    assert all(r["comparisons"] > 0 and r["wall_time"] >= 0 for r in rows)


def test_bench_table():
    code, out, _ = run(["--bench", "dense-X", "--sizes", "256"])
    assert code == 0 and out.splitlines()[0].startswith("family")


def test_text_truncation(tmp_path):
    w = "ab" * 20 + "c"
    code, out, _ = run(["--expand-limit", "10", write(tmp_path, f"{w}X = X{w}\n")])
    assert code == 0 and "(truncated)" in out
    code, out, _ = run(["--expand-limit", "1000", write(tmp_path, f"{w}X = X{w}\n")])
    assert "(truncated)" not in out


def test_text_stats(tmp_path):
    code, out, _ = run(["--stats", write(tmp_path, "Xaa = aXX\n")])
    assert "stats: engine=linear" in out and "comparisons=" in out


def test_engines_print_identical_documents(tmp_path):
    eqs = run(["--gen", "40", "3", "--plant", "--count", "30", "--seed", "11"])[1]
    path = write(tmp_path, eqs)
    docs = {}
    for engine in ("baseline", "linear"):
        for n in ("5", "100"):
            docs[engine, n] = run(["--json", "--engine", engine, "--short-threshold", n, path])[1]
    assert docs["baseline", "5"] == docs["linear", "5"]
    assert docs["baseline", "100"] == docs["linear", "100"]


def test_bad_threshold():
    out, errs = io.StringIO(), io.StringIO()
    assert cli.run(["--short-threshold", "1"], out, errs) == cli.EXIT_PARSE
    assert "N must be" in errs.getvalue()
