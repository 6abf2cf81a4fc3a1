import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hpkit import Alphabet  # noqa: E402


def W(s):
    return tuple(s)


def S(*words):
    return {tuple(w) for w in words}


@pytest.fixture
def ab():
    return Alphabet(["a", "b"], [("a", "b")])


@pytest.fixture
def acgt():
    return Alphabet(["A", "C", "G", "T"], [("A", "T"), ("C", "G")])
