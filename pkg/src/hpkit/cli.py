"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 invalid input (alphabet, word, grammar
shape), 3 a resource cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .core import Alphabet, LanguageSet
from .errors import AlphabetError, CapExceeded, HairpinError
from .grammar import DEFAULT_CLASS_CAP, build_gl, build_gw, export_grammar, reconstruct_closure
from .hairpin import DEFAULT_WORD_CAP, HiParams, hi_closure_report, hi_iter, hi_step_language
from .signature import compute_signature, equivalent
from .transducer import apply_transducer_language, build_hi_gsm, export_transducer
from .universal import encode_regular_grammar, load_source_grammar, verify_universal

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("hpkit")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class RunConfig:
    alphabet: Alphabet
    m: int = 1
    k: int = 1
    side: str = "right"
    max_len: int = 10
    depth: int = 1
    class_cap: int = DEFAULT_CLASS_CAP
    word_cap: int = DEFAULT_WORD_CAP
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        for name in ("m", "k", "class_cap", "word_cap"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.max_len < 0 or self.depth < 0:
            raise UsageError("--max-len and --depth must be non-negative")


def _binary() -> Alphabet:
    return Alphabet(["a", "b"], [("a", "b")])


def _config(args) -> RunConfig:
    alphabet = Alphabet.load(args.alphabet) if getattr(args, "alphabet", None) else _binary()
    return RunConfig(
        alphabet=alphabet,
        m=getattr(args, "m", 1),
        k=getattr(args, "k", 1),
        side=getattr(args, "side", "right"),
        max_len=getattr(args, "max_len", 10),
        depth=getattr(args, "depth", 1),
        class_cap=getattr(args, "class_cap", DEFAULT_CLASS_CAP),
        word_cap=getattr(args, "word_cap", DEFAULT_WORD_CAP),
        output=getattr(args, "output", None),
        format=getattr(args, "format", "json"),
    )


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _parse_word(cfg: RunConfig, text: str):
    if not cfg.alphabet.compact:
        raise AlphabetError("this alphabet has multi-character symbols; pass words with --word-file")
    return cfg.alphabet.parse_word(text)


def _single_word(cfg: RunConfig, args):
    if getattr(args, "word_file", None):
        return cfg.alphabet.parse_word(_read_json(args.word_file))
    if args.word is None:
        raise UsageError("a word is required (--word or --word-file)")
    return _parse_word(cfg, args.word)


def _language(cfg: RunConfig, args) -> list:
    words = []
    if getattr(args, "word", None) is not None:
        words.append(_parse_word(cfg, args.word))
    for w in getattr(args, "words", None) or []:
        words.append(_parse_word(cfg, w))
    if getattr(args, "word_file", None):
        doc = _read_json(args.word_file)
        if doc and all(isinstance(x, list) for x in doc):
            words.extend(cfg.alphabet.parse_word(x) for x in doc)
        else:
            words.append(cfg.alphabet.parse_word(doc))
    if not words:
        raise UsageError("at least one word is required (--word, --words or --word-file)")
    return words


def _emit(cfg: RunConfig, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_language(cfg: RunConfig, lang: LanguageSet):
    if cfg.format == "text":
        _emit(cfg, "\n".join(" ".join(w) if not cfg.alphabet.compact else "".join(w) or "λ" for w in lang))
    else:
        _emit(cfg, json.dumps(lang.to_json(), ensure_ascii=False, separators=(",", ":")))


def _emit_doc(cfg: RunConfig, doc):
    _emit(cfg, json.dumps(doc, ensure_ascii=False, indent=2))


# -- commands -----------------------------------------------------------------

def cmd_step(args):
    cfg = _config(args)
    _emit_language(cfg, hi_step_language([_single_word(cfg, args)], HiParams(cfg.m, cfg.k, cfg.side), cfg.alphabet))


def cmd_iter(args):
    cfg = _config(args)
    _emit_language(cfg, hi_iter(_language(cfg, args), HiParams(cfg.m, cfg.k, cfg.side), cfg.depth, cfg.alphabet))


def cmd_closure(args):
    cfg = _config(args)
    report = hi_closure_report(_language(cfg, args), HiParams(cfg.m, cfg.k, cfg.side), cfg.max_len,
                               cfg.alphabet, cfg.word_cap)
    for w in report.oversized_seeds:
        print(f"warning: seed {cfg.alphabet.format_word(w)!r} is longer than --max-len; passed through",
              file=sys.stderr)
    _emit_language(cfg, report.words)


def cmd_sig(args):
    cfg = _config(args)
    sig = compute_signature(_single_word(cfg, args), cfg.m, cfg.k, cfg.alphabet, args.mode)
    _emit_doc(cfg, sig.to_json())


def cmd_equiv(args):
    cfg = _config(args)
    pos = list(args.pairs or [])
    if len(pos) == 4 and pos[0] == "w1" and pos[2] == "w2":
        w1, w2 = pos[1], pos[3]
    elif len(pos) == 2:
        w1, w2 = pos
    elif not pos and args.w1 is not None and args.w2 is not None:
        w1, w2 = args.w1, args.w2
    else:
        raise UsageError("equiv takes 'w1 WORD w2 WORD', two words, or --w1/--w2")
    result = equivalent(_parse_word(cfg, w1), _parse_word(cfg, w2), cfg.m, cfg.k, cfg.alphabet, args.mode)
    _emit(cfg, json.dumps(result))


def _emit_grammar(cfg: RunConfig, G):
    if cfg.format == "dot":
        _emit(cfg, export_grammar(G, "dot"))
    elif cfg.format == "text":
        lines = []
        for p in G.productions:
            rhs = " ".join([*p.pre, *([p.nt] if p.nt else []), *p.post]) or "λ"
            lines.append(f"{p.lhs} -> {rhs}")
        _emit(cfg, "\n".join(lines))
    else:
        _emit(cfg, export_grammar(G, "json"))


def cmd_grammar_gw(args):
    cfg = _config(args)
    if cfg.side not in ("right", "left"):
        raise UsageError("grammar gw takes --side right or left")
    _emit_grammar(cfg, build_gw(_single_word(cfg, args), cfg.m, cfg.k, cfg.alphabet, cfg.side, cfg.class_cap))


def cmd_grammar_gl(args):
    cfg = _config(args)
    _emit_grammar(cfg, build_gl(_language(cfg, args), cfg.m, cfg.k, cfg.alphabet, cfg.class_cap))


def cmd_reconstruct(args):
    cfg = _config(args)
    G = build_gl(_language(cfg, args), cfg.m, cfg.k, cfg.alphabet, cfg.class_cap)
    _emit_language(cfg, reconstruct_closure(G, cfg.max_len))


def cmd_universal_encode(args):
    cfg = _config(args)
    inst = encode_regular_grammar(load_source_grammar(args.grammar))
    if cfg.format == "text":
        _emit(cfg, " ".join(inst.strand))
    else:
        _emit_doc(cfg, inst.to_json())


def cmd_universal_verify(args):
    cfg = _config(args)
    report = verify_universal(load_source_grammar(args.grammar), cfg.max_len)
    if cfg.format == "text":
        _emit(cfg, f"equal={str(report.equal).lower()} bound_stable={str(report.bound_stable).lower()}")
    else:
        _emit_doc(cfg, report.to_json())


def _gsm(cfg: RunConfig, args):
    if cfg.side not in ("right", "left"):
        raise UsageError("gsm takes --side right or left")
    return build_hi_gsm(cfg.alphabet, cfg.m, cfg.k, cfg.side, args.state_cap)


def cmd_gsm_build(args):
    cfg = _config(args)
    T = _gsm(cfg, args)
    print(f"states: {T.state_count}", file=sys.stderr)
    if cfg.format == "dot":
        _emit(cfg, export_transducer(T, "dot"))
    else:
        _emit(cfg, export_transducer(T, "json"))


def cmd_gsm_apply(args):
    cfg = _config(args)
    T = _gsm(cfg, args)
    _emit_language(cfg, apply_transducer_language(T, _language(cfg, args)))


def cmd_suite(args):
    from .suite import run_suite

    results = run_suite(args.only, args.seed)
    width = max(len(r.name) for r in results)
    lines = [f"{'#':>2}  {'criterion':<{width}}  result  detail"]
    for r in results:
        lines.append(f"{r.number:>2}  {r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in results) else 4


# -- parser -------------------------------------------------------------------

def _common(p, *, params=True, side=None, word=False, words=False, fmt=("json", "text")):
    p.add_argument("--alphabet", help="alphabet JSON file (default: binary a<->b)")
    if params:
        p.add_argument("-m", type=int, default=1, help="prolongation bound (default 1)")
        p.add_argument("-k", type=int, default=1, help="stem length (default 1)")
    if side:
        p.add_argument("--side", choices=side, default="right")
    if word:
        p.add_argument("--word", help="compact word string")
    if words:
        p.add_argument("--words", nargs="+", metavar="WORD", help="compact word strings")
    if word or words:
        p.add_argument("--word-file", help="JSON token array, or array of token arrays")
    p.add_argument("--format", choices=fmt, default=fmt[0])
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hpkit", description="Bounded hairpin incompletion toolkit.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sides3 = ("right", "left", "both")
    sides2 = ("right", "left")

    p = sub.add_parser("step", help="one incompletion step")
    _common(p, side=sides3, word=True)
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("iter", help="n-fold iteration")
    _common(p, side=sides3, word=True, words=True)
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_iter)

    p = sub.add_parser("closure", help="iterated closure up to a length bound")
    _common(p, side=sides3, word=True, words=True)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--word-cap", type=int, default=DEFAULT_WORD_CAP)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("sig", help="canonical signature of a word")
    _common(p, word=True, fmt=("json",))
    p.add_argument("--mode", choices=("right", "left", "full"), default="right")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("equiv", help="signature equivalence of two words")
    _common(p, fmt=("json",))
    p.add_argument("pairs", nargs="*", help="'w1 WORD w2 WORD' or two words")
    p.add_argument("--w1")
    p.add_argument("--w2")
    p.add_argument("--mode", choices=("right", "left", "full"), default="right")
    p.set_defaults(func=cmd_equiv)

    g = sub.add_parser("grammar", help="grammar constructions")
    gsub = g.add_subparsers(dest="grammar_command", parser_class=_Parser)
    p = gsub.add_parser("gw", help="one-sided closure grammar of a word")
    _common(p, side=sides2, word=True, fmt=("json", "dot", "text"))
    p.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP)
    p.set_defaults(func=cmd_grammar_gw)
    p = gsub.add_parser("gl", help="two-sided closure grammar of a finite language")
    _common(p, word=True, words=True, fmt=("json", "dot", "text"))
    p.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP)
    p.set_defaults(func=cmd_grammar_gl)

    p = sub.add_parser("reconstruct", help="two-sided closure through the linear grammar")
    _common(p, word=True, words=True)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP)
    p.set_defaults(func=cmd_reconstruct)

    u = sub.add_parser("universal", help="strand encoding of regular grammars")
    usub = u.add_subparsers(dest="universal_command", parser_class=_Parser)
    p = usub.add_parser("encode", help="encode a right-linear grammar")
    p.add_argument("--grammar", required=True, help="source grammar JSON")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_universal_encode)
    p = usub.add_parser("verify", help="compare L(G) with the strand's closure image")
    p.add_argument("--grammar", required=True, help="source grammar JSON")
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_universal_verify)

    t = sub.add_parser("gsm", help="one-step transducer")
    tsub = t.add_subparsers(dest="gsm_command", parser_class=_Parser)
    p = tsub.add_parser("build", help="build and dump the transducer")
    _common(p, side=sides2, fmt=("json", "dot"))
    p.add_argument("--state-cap", type=int, default=10**5)
    p.set_defaults(func=cmd_gsm_build)
    p = tsub.add_parser("apply", help="apply the transducer to words")
    _common(p, side=sides2, word=True, words=True)
    p.add_argument("--state-cap", type=int, default=10**5)
    p.set_defaults(func=cmd_gsm_apply)

    p = sub.add_parser("suite", help="run the acceptance property suites")
    p.add_argument("--only", type=int, nargs="+", metavar="N", help="criterion numbers to run")
    p.add_argument("--seed", type=int, help="sweep seed (default: $HPKIT_SEED or 0)")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s: %(message)s")
        func = getattr(args, "func", None)
        if func is None:
            raise UsageError("a command is required; see --help")
        code = func(args)
        return EXIT_OK if code is None else code
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (HairpinError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
