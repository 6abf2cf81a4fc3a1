"""Acceptance property suites, shared by ``hpkit suite`` and the test-suite.

Every check compares a construction against brute force over the binary
alphabet ``a <-> b``; all comparisons are exact set or value equality.
Randomised sweeps draw from ``random.Random(seed)`` where the seed comes
from ``HPKIT_SEED`` (default 0).
"""
from __future__ import annotations

import contextlib
import io
import json
import os
import random
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

from .core import Alphabet
from .grammar import build_gl, build_gw, closure_via_classes, enumerate_grammar, reconstruct_closure
from .hairpin import HiParams, bhc_step, hi_closure_bounded, hi_step
from .signature import (
    compute_full_signature, compute_left_signature, compute_right_signature, extend_left, extend_right,
    signature_step,
)
from .transducer import apply_transducer, build_hi_gsm
from .universal import SourceRegularGrammar, random_regular_grammar, verify_universal

PARAMS = [(1, 1), (1, 2), (2, 1), (2, 2)]


def binary_alphabet() -> Alphabet:
    return Alphabet(["a", "b"], [("a", "b")])


def env_seed() -> int:
    return int(os.environ.get("HPKIT_SEED", "0"))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _random_language(rng, min_len, max_len, max_words=5):
    return [tuple(rng.choice("ab") for _ in range(rng.randint(min_len, max_len)))
            for _ in range(rng.randint(1, max_words))]


def check_step_definition(seed=0):
    A = binary_alphabet()
    checked = 0
    for m, k in PARAMS:
        p = HiParams(m, k, "right")
        for w in A.words_upto(8):
            if signature_step(w, m, k, A, "right") != set(hi_step(w, p, A)):
                return False, f"mismatch at w={''.join(w)!r}, m={m}, k={k}"
            checked += 1
    return True, f"{checked} (word, m, k) cases equal"


def check_incremental(seed=0):
    A = binary_alphabet()
    checked = 0
    for m, k in PARAMS:
        for w in A.words_upto(8, 2 * k):
            right = compute_right_signature(w, m, k, A)
            left = compute_left_signature(w, m, k, A)
            full = compute_full_signature(w, m, k, A)
            for a in A.symbols:
                wa, aw = w + (a,), (a,) + w
                ok = (
                    extend_right(right, a) == compute_right_signature(wa, m, k, A)
                    and extend_right(full, a) == compute_full_signature(wa, m, k, A)
                    and extend_left(a, left) == compute_left_signature(aw, m, k, A)
                    and extend_left(a, full) == compute_full_signature(aw, m, k, A)
                )
                if not ok:
                    return False, f"mismatch at w={''.join(w)!r}, a={a!r}, m={m}, k={k}"
                checked += 1
    return True, f"{checked} (word, symbol, m, k) cases equal for right, left and full signatures"


def check_gw(seed=0):
    A = binary_alphabet()
    pinned = enumerate_grammar(build_gw("aab", 1, 1, A), 6)
    if set(pinned) != {tuple("aab"), tuple("aabb"), tuple("aabbb"), tuple("aabbbb")}:
        return False, f"pinned rHI*_(1,1)(aab) up to 6 is {pinned!r}"
    checked = 0
    for m, k in PARAMS:
        p = HiParams(m, k, "right")
        for w in A.words_upto(6, 2 * k):
            got = enumerate_grammar(build_gw(w, m, k, A), 12)
            if got != hi_closure_bounded([w], p, 12, A):
                return False, f"mismatch at w={''.join(w)!r}, m={m}, k={k}"
            checked += 1
    return True, f"{checked} grammars equal to the closure up to length 12; pinned case ok"


def check_class_decomposition(seed=0):
    A = binary_alphabet()
    rng = random.Random(seed * 1000 + 4)
    for trial in range(50):
        lang = _random_language(rng, 0, 6)
        m, k = rng.choice(PARAMS)
        side = rng.choice(["right", "left"])
        got = closure_via_classes(lang, m, k, A, side, 10)
        if got != hi_closure_bounded(lang, HiParams(m, k, side), 10, A):
            return False, f"trial {trial}: L={[''.join(w) for w in lang]}, m={m}, k={k}, side={side}"
    return True, "50 random seed languages equal at max length 10"


def check_linear_pipeline(seed=0):
    A = binary_alphabet()
    rng = random.Random(seed * 1000 + 5)
    for trial in range(25):
        lang = _random_language(rng, 2, 6)
        got = reconstruct_closure(build_gl(lang, 1, 1, A), 8)
        if got != hi_closure_bounded(lang, HiParams(1, 1, "both"), 8, A):
            return False, f"trial {trial}: L={[''.join(w) for w in lang]}"
    return True, "25 random seed languages equal at max length 8"


def check_universal(seed=0):
    pinned = SourceRegularGrammar(("S",), ("a",), (("S", "a", "S"), ("S", "a", None)))
    report = verify_universal(pinned, 3)
    if not report.equal or set(report.universal_language) != {("a",), ("a", "a"), ("a", "a", "a")}:
        return False, f"pinned instance gave {report.universal_language!r}"
    rng = random.Random(seed * 1000 + 6)
    for trial in range(30):
        G = random_regular_grammar(rng)
        report = verify_universal(G, 5)
        if not (report.equal and report.bound_stable):
            return False, f"trial {trial}: {G.productions} counterexample {report.counterexample}"
    return True, "pinned instance and 30 random grammars equal at max length 5"


def check_gsm(seed=0):
    A = binary_alphabet()
    checked = 0
    for m, k in PARAMS:
        for side in ("right", "left"):
            T = build_hi_gsm(A, m, k, side)
            p = HiParams(m, k, side)
            for w in A.words_upto(8):
                if apply_transducer(T, w) != hi_step(w, p, A):
                    return False, f"mismatch at w={''.join(w)!r}, m={m}, k={k}, side={side}"
                checked += 1
    return True, f"{checked} (word, m, k, side) cases equal"


def check_containments(seed=0):
    A = binary_alphabet()
    p = HiParams(1, 1, "right")
    pinned_bhc, pinned_hi = bhc_step("baab", p, A), hi_step("baab", p, A)
    if set(pinned_bhc) != {tuple("baaba")} or set(pinned_hi) != {tuple("baab"), tuple("baaba"), tuple("baabb")}:
        return False, f"pinned case gave bhc={pinned_bhc!r}, hi={pinned_hi!r}"
    checked = 0
    for m, k in PARAMS:
        for side in ("right", "left", "both"):
            p = HiParams(m, k, side)
            wider = HiParams(m + 1, k, side)
            for w in A.words_upto(8):
                step = hi_step(w, p, A)
                if not bhc_step(w, p, A) <= step or not step <= hi_step(w, wider, A):
                    return False, f"containment fails at w={''.join(w)!r}, m={m}, k={k}, side={side}"
                checked += 1
    return True, f"{checked} cases; pinned strict case ok"


def cli_commands(workdir: Path) -> list:
    """Representative invocations of every CLI command, with the input files they need."""
    workdir = Path(workdir)
    alpha = workdir / "ab.json"
    alpha.write_text(json.dumps(binary_alphabet().to_json()))
    gram = workdir / "g.json"
    gram.write_text(json.dumps(SourceRegularGrammar(
        ("S", "X"), ("a", "b"), (("S", "a", "X"), ("X", "b", "S"), ("X", "b", None))).to_json()))
    A = ["--alphabet", str(alpha)]
    return [
        ["step", *A, "--word", "abab", "-m", "1", "-k", "1", "--side", "both"],
        ["iter", *A, "--word", "aab", "-m", "1", "-k", "1", "--side", "right", "--depth", "2"],
        ["closure", *A, "--words", "aab", "baa", "-m", "1", "-k", "1", "--side", "both", "--max-len", "7"],
        ["sig", *A, "--word", "aabb", "-m", "1", "-k", "1", "--mode", "full"],
        ["equiv", *A, "w1", "ab", "w2", "ba", "-m", "1", "-k", "1", "--mode", "right"],
        ["grammar", "gw", *A, "--word", "aab", "-m", "1", "-k", "1"],
        ["grammar", "gw", *A, "--word", "aab", "-m", "1", "-k", "1", "--format", "dot"],
        ["grammar", "gl", *A, "--words", "aab", "abb", "-m", "1", "-k", "1"],
        ["reconstruct", *A, "--words", "aab", "abb", "-m", "1", "-k", "1", "--max-len", "7"],
        ["universal", "encode", "--grammar", str(gram)],
        ["universal", "verify", "--grammar", str(gram), "--max-len", "5"],
        ["gsm", "build", *A, "-m", "1", "-k", "1", "--side", "left"],
        ["gsm", "apply", *A, "--word", "baa", "-m", "1", "-k", "1", "--side", "left"],
    ]


def run_cli_captured(argv) -> tuple:
    from .cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue().encode()


def run_cli_subprocess(argv, hash_seed: str) -> tuple:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed, HPKIT_SEED=str(env_seed()))
    proc = subprocess.run([sys.executable, "-m", "hpkit", *argv], capture_output=True, env=env)
    return proc.returncode, proc.stdout


def check_determinism(seed=0, subprocesses: bool = True):
    """Two in-process runs per command, plus two fresh interpreters with different hash seeds."""
    with tempfile.TemporaryDirectory() as tmp:
        commands = cli_commands(Path(tmp))
        for argv in commands:
            runs = [run_cli_captured(argv), run_cli_captured(argv)]
            if subprocesses:
                runs += [run_cli_subprocess(argv, "1"), run_cli_subprocess(argv, "2")]
            if any(r != runs[0] for r in runs):
                return False, f"output differs for {' '.join(argv[:2])}"
            if runs[0][0] != 0:
                return False, f"{' '.join(argv[:2])} exited with {runs[0][0]}"
    mode = "in-process and in two interpreters" if subprocesses else "in-process"
    return True, f"{len(commands)} commands byte-identical across runs ({mode})"


CRITERIA = [
    (1, "step/definition oracle", check_step_definition),
    (2, "incremental extension", check_incremental),
    (3, "G_w language equals one-sided closure", check_gw),
    (4, "class decomposition closure", check_class_decomposition),
    (5, "linear grammar reconstruction pipeline", check_linear_pipeline),
    (6, "universal strand encoding", check_universal),
    (7, "gsm equals one step", check_gsm),
    (8, "containments", check_containments),
    (9, "CLI determinism", check_determinism),
]


def run_criterion(number: int, seed: int | None = None) -> CriterionResult:
    seed = env_seed() if seed is None else seed
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            passed, detail = fn(seed)
            return CriterionResult(num, name, passed, detail, time.perf_counter() - t0)
    raise ValueError(f"no acceptance criterion {number}")


def run_suite(numbers=None, seed: int | None = None) -> list:
    numbers = [n for n, _, _ in CRITERIA] if not numbers else numbers
    return [run_criterion(n, seed) for n in numbers]
