"""A nondeterministic gsm with final outputs realising one incompletion step.

Right side: the machine copies its input and may guess the window
``gamma alpha`` (storing both), then insists that the input ends with
``rc(alpha)``; on acceptance it emits ``rc(gamma)`` as final output.
Left side: on the first symbol it may emit a guessed prefix ``p`` and then
checks the input has the shape ``alpha beta rc(alpha) gamma delta`` with
``rc(gamma) = p``. A plain copy path accepts every input unchanged.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product

from .core import Alphabet, LanguageSet, Word
from .errors import AlphabetError, CapExceeded

DEFAULT_STATE_CAP = 10**5


@dataclass(frozen=True)
class NondetTransducer:
    alphabet: Alphabet
    labels: tuple  # state i is described by labels[i]
    transitions: dict  # (state, symbol) -> tuple of (state, output word)
    initial: int
    finals: dict  # accepting state -> final output word

    @property
    def states(self) -> range:
        return range(len(self.labels))

    @property
    def state_count(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        trans = []
        for (q, a), targets in sorted(self.transitions.items(), key=lambda kv: (kv[0][0], self.alphabet.index[kv[0][1]])):
            for r, out in targets:
                trans.append({"from": q, "input": a, "to": r, "output": list(out)})
        return {
            "alphabet": self.alphabet.to_json(),
            "states": [_label_text(lab) for lab in self.labels],
            "initial": self.initial,
            "finals": {str(q): list(out) for q, out in sorted(self.finals.items())},
            "transitions": trans,
        }

    def to_dot(self) -> str:
        lines = ["digraph gsm {", "  rankdir=LR;", '  __start [shape=point];', f"  __start -> q{self.initial};"]
        for q, lab in enumerate(self.labels):
            attrs = [f'label="{_label_text(lab)}"']
            if q in self.finals:
                attrs.append("shape=doublecircle")
                attrs.append(f'xlabel="/{"".join(self.finals[q]) or "λ"}"')
            lines.append(f'  q{q} [{", ".join(attrs)}];')
        for (q, a), targets in sorted(self.transitions.items(), key=lambda kv: (kv[0][0], self.alphabet.index[kv[0][1]])):
            for r, out in targets:
                lines.append(f'  q{q} -> q{r} [label="{a}/{"".join(out) or "λ"}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label_text(lab) -> str:
    parts = []
    for x in lab[1:]:
        parts.append("".join(x) if isinstance(x, tuple) else str(x))
    return f"{lab[0]}({','.join(parts)})" if parts else lab[0]


# -- state logic --------------------------------------------------------------

def _right_machine(alphabet: Alphabet, m: int, k: int):
    rc = alphabet.rc

    def alpha_state(g, part):
        return ("alpha", g, part) if len(part) < k else ("beta", g, part)

    def stem_state(g, alpha, j):
        return ("stem", g, alpha, j)

    def step(state, s):
        kind = state[0]
        out = []
        if kind == "copy":
            out.append(state)
            out.append(("gamma", (s,)))
            out.append(alpha_state((), (s,)))
        elif kind == "gamma":
            g = state[1]
            if len(g) < m:
                out.append(("gamma", g + (s,)))
            out.append(alpha_state(g, (s,)))
        elif kind == "alpha":
            out.append(alpha_state(state[1], state[2] + (s,)))
        elif kind == "beta":
            g, alpha = state[1], state[2]
            out.append(state)
            if rc(alpha)[0] == s:
                out.append(stem_state(g, alpha, 1))
        elif kind == "stem":
            g, alpha, j = state[1], state[2], state[3]
            if j < k and rc(alpha)[j] == s:
                out.append(stem_state(g, alpha, j + 1))
        return [(t, (s,)) for t in out]

    def final(state):
        if state[0] == "copy":
            return ()
        if state[0] == "stem" and state[3] == k:
            return rc(state[1])
        return None

    return ("copy",), step, final


def _left_machine(alphabet: Alphabet, m: int, k: int):
    rc = alphabet.rc
    guesses = [p for n in range(1, m + 1) for p in product(alphabet.symbols, repeat=n)]

    def alpha_state(p, part):
        return ("A", p, part) if len(part) < k else ("B", p, part)

    def stem_state(p, alpha, j):
        return ("C", p, alpha, j) if j < k else ("G", p, 0)

    def step(state, s):
        kind = state[0]
        if kind == "init":
            moves = [(("copy",), (s,))]
            moves += [(alpha_state(p, (s,)), p + (s,)) for p in guesses]
            return moves
        out = []
        if kind in ("copy", "D"):
            out.append(state)
        elif kind == "A":
            out.append(alpha_state(state[1], state[2] + (s,)))
        elif kind == "B":
            p, alpha = state[1], state[2]
            out.append(state)
            if rc(alpha)[0] == s:
                out.append(stem_state(p, alpha, 1))
        elif kind == "C":
            p, alpha, j = state[1], state[2], state[3]
            if rc(alpha)[j] == s:
                out.append(stem_state(p, alpha, j + 1))
        elif kind == "G":
            p, j = state[1], state[2]
            gamma = rc(p)
            if gamma[j] == s:
                out.append(("D",) if j + 1 == len(gamma) else ("G", p, j + 1))
        return [(t, (s,)) for t in out]

    def final(state):
        return () if state[0] in ("init", "copy", "D") else None

    return ("init",), step, final


def build_hi_gsm(alphabet: Alphabet, m: int, k: int, side: str = "right",
                 state_cap: int = DEFAULT_STATE_CAP) -> NondetTransducer:
    """Build the one-step machine for ``side`` in ``{'right', 'left'}``.

    States are explored breadth-first from the initial state, then states
    that cannot reach acceptance are dropped; ``state_count`` is what is
    left.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    if len(alphabet) < 1:
        raise ValueError("alphabet must not be empty")
    if side == "right":
        init, step, final = _right_machine(alphabet, m, k)
    elif side == "left":
        init, step, final = _left_machine(alphabet, m, k)
    else:
        raise ValueError("build_hi_gsm side must be 'right' or 'left'")

    ids = {init: 0}
    labels = [init]
    edges: dict = {}
    queue = deque([init])
    while queue:
        state = queue.popleft()
        q = ids[state]
        for s in alphabet.symbols:
            targets = []
            for t, out in step(state, s):
                if t not in ids:
                    if len(ids) >= state_cap:
                        raise CapExceeded("state", state_cap, len(ids) + 1)
                    ids[t] = len(labels)
                    labels.append(t)
                    queue.append(t)
                targets.append((ids[t], out))
            if targets:
                edges[(q, s)] = targets
    finals = {ids[st]: final(st) for st in labels if final(st) is not None}

    # keep only states that can still reach acceptance
    back: dict = {}
    for (q, _), targets in edges.items():
        for r, _ in targets:
            back.setdefault(r, set()).add(q)
    live = set(finals)
    stack = list(finals)
    while stack:
        r = stack.pop()
        for q in back.get(r, ()):
            if q not in live:
                live.add(q)
                stack.append(q)
    live.add(0)
    keep = sorted(live)
    renum = {q: i for i, q in enumerate(keep)}
    transitions = {}
    for (q, s), targets in edges.items():
        if q not in renum:
            continue
        kept = tuple((renum[r], out) for r, out in targets if r in renum)
        if kept:
            transitions[(renum[q], s)] = kept
    return NondetTransducer(
        alphabet=alphabet,
        labels=tuple(labels[q] for q in keep),
        transitions=transitions,
        initial=0,
        finals={renum[q]: out for q, out in finals.items() if q in renum},
    )


def identity_transducer(alphabet: Alphabet) -> NondetTransducer:
    return NondetTransducer(alphabet, (("copy",),), {(0, s): ((0, (s,)),) for s in alphabet.symbols}, 0, {0: ()})


def apply_transducer(T: NondetTransducer, w) -> LanguageSet:
    """Outputs of all accepting runs on ``w``, each followed by its state's final output."""
    configs = {(T.initial, ())}
    for s in w:
        if s not in T.alphabet:
            raise AlphabetError(f"symbol {s!r} not in the transducer's input alphabet")
        nxt = set()
        for q, out in configs:
            for r, emitted in T.transitions.get((q, s), ()):
                nxt.add((r, out + emitted))
        configs = nxt
        if not configs:
            break
    return LanguageSet((out + T.finals[q] for q, out in configs if q in T.finals), T.alphabet)


def apply_transducer_language(T: NondetTransducer, lang) -> LanguageSet:
    out = set()
    for w in lang:
        out |= apply_transducer(T, w)
    return LanguageSet(out, T.alphabet)


def export_transducer(T: NondetTransducer, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(T.to_json(), indent=2, ensure_ascii=False) + "\n"
    if fmt == "dot":
        return T.to_dot()
    raise ValueError(f"unknown transducer format {fmt!r}")
