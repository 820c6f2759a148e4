import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Union

from script import is_normalized_word, normalize

logger = logging.getLogger(__name__)


class GoldError(Exception):
    """Base class for gold standard failures."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GoldFormatError(GoldError):
    """A gold line does not hold a valid word/stem pair."""


class EmptyGold(GoldError):
    """The gold standard holds no pairs."""

    def __init__(self):
        super().__init__("gold standard contains no pairs")


@dataclass(frozen=True)
class GoldPair:
    """A word and the stem a human judged correct for it."""

    word: str
    gold_stem: str

    def __post_init__(self):
        if not self.gold_stem or not self.word.startswith(self.gold_stem):
            raise ValueError(f"gold stem '{self.gold_stem}' is not a non-empty prefix of '{self.word}'")


def load_gold(source: Union[TextIO, Iterable[str]]) -> List[GoldPair]:
    """Parse a gold TSV stream of ``word<TAB>stem`` lines.

    Blank lines and ``#`` comments are skipped; both columns are NFC
    normalized.

    Raises:
        GoldFormatError: A line is malformed (carries the line number)
    """
    pairs: List[GoldPair] = []
    for line_number, line in enumerate(source, start=1):
        text = line.rstrip('\r\n')
        if not text.strip() or text.lstrip().startswith('#'):
            continue

        fields = text.split('\t')
        if len(fields) != 2:
            raise GoldFormatError(f"expected 'word<TAB>stem', found {len(fields)} field(s)", line_number)

        word, gold_stem = (normalize(field.strip()) for field in fields)
        if not is_normalized_word(word):
            raise GoldFormatError(f"'{word}' is not a Gujarati word", line_number)
        try:
            pairs.append(GoldPair(word, gold_stem))
        except ValueError as e:
            raise GoldFormatError(str(e), line_number)

    logger.info(f"Loaded {len(pairs)} gold pairs")
    return pairs


def load_gold_file(path: Union[str, Path]) -> List[GoldPair]:
    """Load gold pairs from a UTF-8 file."""
    try:
        with open(path, 'r', encoding='utf-8-sig') as handle:
            return load_gold(handle)
    except UnicodeDecodeError as e:
        raise GoldFormatError(f"gold file {path} is not valid UTF-8: {e.reason}")
