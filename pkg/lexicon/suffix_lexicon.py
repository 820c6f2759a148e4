import logging
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, TextIO, Tuple, Union

from script import is_gujarati, normalize
from .errors import DuplicateSuffix, EmptyLexicon, InvalidScalar, LexiconError, LexiconUnavailable
from .suffix_trie import ReversedSuffixTrie

logger = logging.getLogger(__name__)

StemGuard = Callable[[str], bool]

_SOURCE_DIRECTIVE = re.compile(r'^#\s*source:\s*(\S+)\s*$')
_ASCII_WHITESPACE = ' \t\n\r\x0b\x0c'


class SuffixSource(Enum):
    """Where a suffix entry comes from."""

    SUGGESTED = 'suggested'
    EXAMPLE = 'example'
    OBSERVED = 'observed'
    USER = 'user'


@dataclass(frozen=True)
class SuffixEntry:
    """One validated suffix of the lexicon."""

    suffix: str
    source: SuffixSource = SuffixSource.USER

    @property
    def length(self) -> int:
        return len(self.suffix)

    def sort_key(self) -> Tuple[int, str]:
        return (-self.length, self.suffix)


def validate_suffix(raw: str, line_number: Optional[int] = None) -> str:
    """Normalize a suffix and check that it is pure Gujarati.

    Args:
        raw: Suffix text as read
        line_number: Source line used in error messages

    Returns:
        str: The NFC form of the suffix

    Raises:
        InvalidScalar: If any scalar falls outside the Gujarati block
    """
    suffix = normalize(raw)
    for scalar in suffix:
        if not is_gujarati(scalar):
            raise InvalidScalar(suffix, scalar, line_number)
    return suffix


class SuffixLexicon:
    """Immutable suffix set indexed for longest-match lookup."""

    def __init__(self, entries: Iterable[SuffixEntry]):
        seen: Dict[str, SuffixEntry] = {}
        for entry in entries:
            suffix = validate_suffix(entry.suffix)
            if not suffix:
                raise LexiconError("empty suffix")
            if suffix in seen:
                raise DuplicateSuffix(suffix)
            seen[suffix] = SuffixEntry(suffix, entry.source)

        if not seen:
            raise EmptyLexicon()

        self._entries = tuple(sorted(seen.values(), key=SuffixEntry.sort_key))
        self._index: ReversedSuffixTrie[SuffixEntry] = ReversedSuffixTrie(
            [(entry.suffix, entry) for entry in self._entries]
        )
        self.max_suffix_len = self._entries[0].length
        self._suffixes = frozenset(seen)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, suffix: str) -> bool:
        return suffix in self._suffixes

    def enumerate(self) -> List[SuffixEntry]:
        """Entries longest first, ties broken by ascending scalar order."""
        return list(self._entries)

    def indexed_entries(self) -> List[SuffixEntry]:
        """Entries as stored in the trie index, in enumerate order."""
        return sorted(self._index, key=SuffixEntry.sort_key)

    def counts_by_source(self) -> Dict[str, int]:
        counts = Counter(entry.source.value for entry in self._entries)
        return {source.value: counts.get(source.value, 0) for source in SuffixSource}

    def matches(self, word: str) -> List[SuffixEntry]:
        """Every entry that is a strict suffix of ``word``, longest first."""
        return [entry for entry, _ in self._index.suffixes_of(word, max_length=len(word) - 1)]

    def longest_match(self, word: str, guard: Optional[StemGuard] = None) -> Optional[Tuple[SuffixEntry, str]]:
        """Find the longest strict suffix of ``word`` whose removal passes ``guard``.

        Args:
            word: Normalized word
            guard: Predicate on the candidate stem; any non-empty stem
                passes when omitted

        Returns:
            Optional[Tuple[SuffixEntry, str]]: The matched entry and the
            remaining stem, or None when no suffix qualifies
        """
        for entry in self.matches(word):
            stem = word[:-entry.length]
            if guard is None or guard(stem):
                return entry, stem
        return None


def _parse_lines(lines: Iterable[str]) -> List[SuffixEntry]:
    entries: List[SuffixEntry] = []
    first_seen: Dict[str, int] = {}
    source = SuffixSource.USER

    for line_number, line in enumerate(lines, start=1):
        text = line.strip(_ASCII_WHITESPACE)
        if not text:
            continue
        if text.startswith('#'):
            directive = _SOURCE_DIRECTIVE.match(text)
            if directive:
                try:
                    source = SuffixSource(directive.group(1))
                except ValueError:
                    raise LexiconError(f"unknown source tag '{directive.group(1)}'", line_number)
            continue

        suffix = validate_suffix(text, line_number)
        if suffix in first_seen:
            raise DuplicateSuffix(suffix, line_number, first_seen[suffix])
        first_seen[suffix] = line_number
        entries.append(SuffixEntry(suffix, source))

    return entries


def load_lexicon(source: Union[TextIO, Iterable[str]]) -> SuffixLexicon:
    """Load and validate a lexicon from a text stream.

    One suffix per line; blank lines and ``#`` comments are skipped, and a
    ``# source: <tag>`` comment sets the provenance of the entries after it.

    Raises:
        DuplicateSuffix: A suffix occurs twice
        InvalidScalar: A suffix holds a non-Gujarati scalar
        EmptyLexicon: Nothing but comments and blank lines
    """
    entries = _parse_lines(source)
    if not entries:
        raise EmptyLexicon()

    lexicon = SuffixLexicon(entries)
    logger.info(f"Loaded {len(lexicon)} suffixes (longest: {lexicon.max_suffix_len} scalars)")
    return lexicon


def load_lexicon_file(path: Union[str, Path]) -> SuffixLexicon:
    """Load a lexicon from a UTF-8 file (a leading BOM is tolerated)."""
    try:
        with open(path, 'r', encoding='utf-8-sig') as handle:
            return load_lexicon(handle)
    except OSError as e:
        raise LexiconUnavailable(f"cannot read lexicon {path}: {e.strerror or e}")
    except UnicodeDecodeError as e:
        raise LexiconUnavailable(f"lexicon {path} is not valid UTF-8: {e.reason}")
