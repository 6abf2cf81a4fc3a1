import json

import pytest

from hpkit import suite
from hpkit.cli import main
from hpkit.suite import binary_alphabet


@pytest.fixture
def alpha(tmp_path):
    path = tmp_path / "ab.json"
    path.write_text(json.dumps(binary_alphabet().to_json()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_step_example(capsys, alpha):
    code, out, _ = run(capsys, "step", "--alphabet", alpha, "--word", "aab", "-m", "1", "-k", "1", "--side", "right")
    assert code == 0 and out == '["aab","aabb"]\n'


def test_equiv_example(capsys, alpha):
    code, out, _ = run(capsys, "equiv", "--alphabet", alpha, "w1", "ab", "w2", "ba", "-m", "1", "-k", "1", "--mode", "right")
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "equiv", "--w1", "aabbb", "--w2", "aabbbb", "-m", "2", "-k", "1")
    assert code == 0 and out.strip() == "true"


def test_unknown_symbol_exits_2(capsys, alpha):
    code, _, err = run(capsys, "step", "--alphabet", alpha, "--word", "abc")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["step", "--bogus"],
    [],
    ["step", "--word", "ab", "-m", "0"],
    ["step"],
    ["closure", "--word", "ab", "--max-len", "-1"],
])
def test_usage_errors_exit_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_short_word_for_a_signature_exits_2(capsys):
    assert run(capsys, "sig", "--word", "a")[0] == 2


def test_missing_grammar_file_exits_2(capsys, tmp_path):
    assert run(capsys, "universal", "verify", "--grammar", str(tmp_path / "none.json"))[0] == 2


def test_cap_exceeded_exits_3(capsys):
    code, _, err = run(capsys, "closure", "--words", "aab", "abab", "-m", "2", "--side", "both",
                       "--max-len", "12", "--word-cap", "5")
    assert code == 3 and "error" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "closure", "--word", "aab", "--max-len", "6", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == ["aab", "aabb", "aabbb", "aabbbb"]


def test_text_format(capsys):
    code, out, _ = run(capsys, "step", "--word", "abab", "--side", "both", "--format", "text")
    assert out.split() == ["abab", "ababa", "babab"]


def test_word_file_for_multichar_symbols(capsys, tmp_path):
    alpha = tmp_path / "t.json"
    alpha.write_text(json.dumps({"symbols": ["x1", "y1"], "involution": [["x1", "y1"]]}))
    word = tmp_path / "w.json"
    word.write_text(json.dumps(["x1", "x1", "y1"]))
    code, out, _ = run(capsys, "step", "--alphabet", str(alpha), "--word-file", str(word))
    assert code == 0
    assert json.loads(out) == [["x1", "x1", "y1"], ["x1", "x1", "y1", "y1"]]
    assert run(capsys, "step", "--alphabet", str(alpha), "--word", "x1")[0] == 2


def test_every_command_runs(capsys, tmp_path):
    for argv in suite.cli_commands(tmp_path):
        code, out, err = run(capsys, *argv)
        assert code == 0, (argv, err)
        assert out


def test_gsm_apply_matches_step(capsys):
    _, a, _ = run(capsys, "gsm", "apply", "--word", "baa", "--side", "left")
    _, b, _ = run(capsys, "step", "--word", "baa", "--side", "left")
    assert a == b == '["baa","bbaa"]\n'


def test_reconstruct_matches_closure(capsys):
    _, a, _ = run(capsys, "reconstruct", "--words", "aab", "abb", "--max-len", "7")
    _, b, _ = run(capsys, "closure", "--words", "aab", "abb", "--side", "both", "--max-len", "7")
    assert a == b


def test_suite_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "suite", "--only", "8")
    assert code == 0 and "PASS" in out
    monkeypatch.setattr(suite, "CRITERIA", [(1, "always fails", lambda seed: (False, "forced"))])
    code, out, _ = run(capsys, "suite")
    assert code == 4 and "FAIL" in out


def test_repeated_runs_are_identical(tmp_path):
    for argv in suite.cli_commands(tmp_path):
        assert suite.run_cli_captured(argv) == suite.run_cli_captured(argv)
