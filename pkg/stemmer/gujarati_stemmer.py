import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from lexicon import SuffixEntry
from script import normalize
from .policy import StemMode, StemPolicy


@dataclass(frozen=True)
class StemResult:
    """A word, its stem, and the suffixes removed in removal order."""

    word: str
    stem: str
    removed: Tuple[SuffixEntry, ...] = ()

    @property
    def suffix_chain(self) -> str:
        """Removed suffixes joined with '+', empty when nothing was removed."""
        return '+'.join(entry.suffix for entry in self.removed)

    def reconstruct(self) -> str:
        """Stem followed by the removed suffixes, last removed innermost."""
        return self.stem + ''.join(entry.suffix for entry in reversed(self.removed))


class GujaratiStemmer:
    """Longest-match suffix stripper driven by a StemPolicy."""

    def __init__(self, policy: StemPolicy):
        """Initialize the stemmer with a stripping policy.

        Args:
            policy: Lexicon, mode and guard to stem with
        """
        self.policy = policy
        self.logger = logging.getLogger(__name__)

    def stem(self, word: str) -> StemResult:
        """Stem a single word.

        In single-pass mode at most one suffix is removed. In iterative
        mode the longest match is removed repeatedly until none applies;
        every removal shortens the stem, so the loop terminates.

        Args:
            word: Gujarati word (normalized here if it is not already NFC)

        Returns:
            StemResult: Words with no qualifying suffix come back unchanged
        """
        word = normalize(word)
        if not word:
            raise ValueError("cannot stem an empty word")

        lexicon = self.policy.lexicon
        guard = self.policy.guard_predicate
        stem = word
        removed: List[SuffixEntry] = []

        while True:
            match = lexicon.longest_match(stem, guard)
            if match is None:
                break
            entry, stem = match
            removed.append(entry)
            if self.policy.mode is StemMode.SINGLE_PASS:
                break

        if not removed:
            self.logger.debug(f"No suffix removed from {word}")

        return StemResult(word, stem, tuple(removed))

    def iter_stem(self, words: Iterable[str]) -> Iterator[StemResult]:
        for word in words:
            yield self.stem(word)

    def stem_batch(self, words: Iterable[str]) -> List[StemResult]:
        """Stem every word, preserving input order."""
        return list(self.iter_stem(words))


def stem(policy: StemPolicy, word: str) -> StemResult:
    return GujaratiStemmer(policy).stem(word)


def stem_batch(policy: StemPolicy, words: Iterable[str]) -> List[StemResult]:
    return GujaratiStemmer(policy).stem_batch(words)


def iter_stem(policy: StemPolicy, words: Iterable[str]) -> Iterator[StemResult]:
    return GujaratiStemmer(policy).iter_stem(words)
