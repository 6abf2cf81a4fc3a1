"""Exception hierarchy shared by every hpkit module."""


class HairpinError(Exception):
    """Base class for all hpkit errors."""


class AlphabetError(HairpinError, ValueError):
    """A symbol or word does not belong to the alphabet, or the involution is malformed."""


class LengthError(HairpinError, ValueError):
    """A word is too short for the requested operation."""


class ShapeError(HairpinError, ValueError):
    """A grammar does not have the required production shape."""


class CapExceeded(HairpinError, RuntimeError):
    """A configured resource cap (words, classes, states, sentential forms) was hit."""

    def __init__(self, what, cap, count=None):
        self.what = what
        self.cap = cap
        self.count = count
        msg = f"{what} cap of {cap} exceeded"
        if count is not None:
            msg += f" (reached {count})"
        super().__init__(msg)
