import json
import os
import subprocess
import sys

SRC = os.path.join(os.path.dirname(__file__), "..", "src")


def run_cli(*args, stdin=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "morgankit", *args],
        input=stdin, capture_output=True, text=True, env=env)


def test_decide_exit_codes():
    assert run_cli("decide", "--calculus", "g3dm", "~~p => p").returncode == 0
    assert run_cli("decide", "--calculus", "g3sdm", "p => ~~p").returncode == 1


def test_decide_parse_error_is_exit_2():
    r = run_cli("decide", "--calculus", "g3sdm", "p => (q")
    assert r.returncode == 2
    assert "position" in r.stderr


def test_namespace_error_is_exit_2():
    r = run_cli("decide", "--calculus", "g3sdm", "p' => p'")
    assert r.returncode == 2


def test_prove_prints_derivation():
    r = run_cli("prove", "--calculus", "g3sdm", "~~~p => ~p")
    assert r.returncode == 0
    assert "[=>~]" in r.stdout
    r = run_cli("prove", "--calculus", "g3sdm", "p => ~~p")
    assert r.returncode == 1
    assert "NOT DERIVABLE" in r.stdout


def test_prove_and_decide_agree():
    for text, want in [("~~p => p", 0), ("=> p | ~p", 1)]:
        a = run_cli("prove", "--calculus", "g3dm", text).returncode
        b = run_cli("decide", "--calculus", "g3dm", text).returncode
        assert a == b == want


def test_prove_json_roundtrips_through_render(tmp_path):
    r = run_cli("prove", "--calculus", "g3dm", "~(p & q) => ~p | ~q",
                "--format", "json")
    assert r.returncode == 0
    proof = tmp_path / "proof.json"
    proof.write_text(r.stdout)
    r2 = run_cli("render", "--format", "json", str(proof))
    assert r2.returncode == 0
    assert json.loads(r2.stdout) == json.loads(r.stdout)
    r3 = run_cli("render", "--format", "latex", str(proof))
    assert r3.returncode == 0
    assert r3.stdout.startswith(r"\begin{prooftree}")


def test_batch_mode_jsonl():
    r = run_cli("decide", "--calculus", "g3dm", "--batch",
                stdin="~~p => p\np => q\nbad (\n")
    assert r.returncode == 0
    lines = [json.loads(line) for line in r.stdout.splitlines()]
    assert lines[0]["derivable"] is True
    assert lines[1]["derivable"] is False
    assert "error" in lines[2]


def test_translate_f_pin():
    r = run_cli("translate", "--map", "f", "p | q")
    assert r.returncode == 0
    assert r.stdout.strip() == "~~(~~p | ~~q)"


def test_translate_k_writes_registry(tmp_path):
    reg = tmp_path / "registry.json"
    r = run_cli("translate", "--map", "k", "~~(p | q)", "--registry", str(reg))
    assert r.returncode == 0
    assert r.stdout.strip() == "#k0"
    obj = json.loads(reg.read_text())
    assert obj["entries"][0]["representative"] == "~~(p | q)"


def test_translate_sequents():
    r = run_cli("translate", "--map", "t", "*p, q => *~p")
    assert r.stdout.strip() == "q & ~p => ~~p"
    r = run_cli("translate", "--map", "g", "p => q")
    assert r.stdout.strip() == "p -> F -> F => q -> F -> F"


def test_interpolate_command():
    r = run_cli("interpolate", "--calculus", "g3sdm", "p ; q => p")
    assert r.returncode == 0
    assert "interpolant: p" in r.stdout
    r = run_cli("interpolate", "--calculus", "g3sdm", "q ; p => p")
    assert "interpolant: *F" in r.stdout


def test_validity_command():
    r = run_cli("validity", "--variety", "sdm", "--max-size", "4", "p => ~~p")
    assert r.returncode == 1
    assert "refuted" in r.stdout
    r = run_cli("validity", "--variety", "sdm", "--max-size", "4", "p => p")
    assert r.returncode == 0


def test_algebra_commands():
    r = run_cli("algebra", "dm4")
    obj = json.loads(r.stdout)
    assert obj["schema"] == "morgan-kit/algebra/v1"
    assert obj["size"] == 4
    r = run_cli("algebra", "enumerate", "--variety", "dm", "--max-size", "3")
    assert len(r.stdout.splitlines()) == 2  # the 2-chain and the Kleene 3-chain


def test_corpus_reproducible():
    a = run_cli("corpus", "--calculus", "g3sdm", "--seed", "7", "--count", "20")
    b = run_cli("corpus", "--calculus", "g3sdm", "--seed", "7", "--count", "20")
    assert a.stdout == b.stdout
    assert len(a.stdout.splitlines()) == 20
    c = run_cli("corpus", "--calculus", "g3sdm", "--seed", "8", "--count", "20")
    assert c.stdout != a.stdout


def test_check_embedding_command():
    r = run_cli("check-embedding", "--kind", "dm-to-cl-h", "--count", "40",
                "--seed", "3", "--max-weight", "14")
    assert r.returncode == 0
    assert "agreement: 40/40" in r.stdout
