from typing import Optional


class LexiconError(Exception):
    """Base class for suffix lexicon validation failures."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DuplicateSuffix(LexiconError):
    """The same suffix (after NFC) appears twice."""

    def __init__(self, suffix: str, line_number: Optional[int] = None, first_line: Optional[int] = None):
        self.suffix = suffix
        self.first_line = first_line
        detail = f"duplicate suffix '{suffix}'"
        if first_line is not None:
            detail += f" (first defined on line {first_line})"
        super().__init__(detail, line_number)


class InvalidScalar(LexiconError):
    """A suffix holds a scalar outside the Gujarati block."""

    def __init__(self, suffix: str, scalar: str, line_number: Optional[int] = None):
        self.suffix = suffix
        self.scalar = scalar
        super().__init__(
            f"suffix '{suffix}' contains non-Gujarati scalar U+{ord(scalar):04X}",
            line_number,
        )


class EmptyLexicon(LexiconError):
    """No suffixes remain after comments and blank lines are dropped."""

    def __init__(self):
        super().__init__("lexicon contains no suffixes")


class LexiconUnavailable(LexiconError):
    """The lexicon file could not be opened or decoded."""
