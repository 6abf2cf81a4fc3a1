"""Bounded hairpin incompletion on formal languages."""
from .core import (
    LAMBDA, Alphabet, LanguageSet, circular_permutations, factor_sets, left_derivative, rc,
    right_derivative, substitute,
)
from .errors import AlphabetError, CapExceeded, HairpinError, LengthError, ShapeError
from .grammar import (
    LinearGrammar, Production, RightLinearGrammar, build_gl, build_gw, closure_via_classes,
    enumerate_grammar, export_grammar, import_grammar, reconstruct_closure,
)
from .hairpin import (
    Decomposition, HiParams, bhc_step, hi_closure_bounded, hi_closure_report, hi_iter, hi_step,
)
from .signature import (
    FullSignature, LeftSignature, RightSignature, applicable_completions, compute_full_signature,
    compute_left_signature, compute_right_signature, equivalent, extend_left, extend_right,
)
from .transducer import NondetTransducer, apply_transducer, build_hi_gsm
from .universal import (
    EncodedInstance, SourceRegularGrammar, encode_regular_grammar, universal_language_bounded,
    verify_universal,
)

__version__ = "0.1.0"
