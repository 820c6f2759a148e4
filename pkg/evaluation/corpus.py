from dataclasses import dataclass
from typing import Dict, List, Sequence

from script import normalize, scalar_length
from stemmer import GujaratiStemmer, StemPolicy


@dataclass(frozen=True)
class CorpusStats:
    """Summary of a word corpus and the stem groups it forms."""

    total_words: int = 0
    unique_words: int = 0
    multi_member_groups: int = 0
    single_member_groups: int = 0
    min_len: int = 0
    max_len: int = 0

    def rows(self) -> List[tuple]:
        """Labelled fields in report order."""
        return [
            ('Total Words', self.total_words),
            ('Unique Words', self.unique_words),
            ('Stem Groups with more than one word', self.multi_member_groups),
            ('Stem Groups with only one word', self.single_member_groups),
            ('Min Length', self.min_len),
            ('Max Length', self.max_len),
        ]

    def to_dict(self) -> dict:
        return {
            'total_words': self.total_words,
            'unique_words': self.unique_words,
            'multi_member_groups': self.multi_member_groups,
            'single_member_groups': self.single_member_groups,
            'min_len': self.min_len,
            'max_len': self.max_len,
        }


def group_by_stem(policy: StemPolicy, words: Sequence[str]) -> Dict[str, List[str]]:
    """Map each predicted stem to the sorted distinct words that share it."""
    stemmer = GujaratiStemmer(policy)
    groups: Dict[str, List[str]] = {}
    for word in sorted(set(normalize(w) for w in words)):
        groups.setdefault(stemmer.stem(word).stem, []).append(word)
    return dict(sorted(groups.items()))


def corpus_stats(policy: StemPolicy, words: Sequence[str]) -> CorpusStats:
    """Count words, distinct words and stem groups; lengths are scalar counts."""
    if not words:
        return CorpusStats()

    distinct = set(normalize(w) for w in words)
    groups = group_by_stem(policy, list(distinct))
    multi = sum(1 for members in groups.values() if len(members) > 1)
    lengths = [scalar_length(word) for word in distinct]

    return CorpusStats(
        total_words=len(words),
        unique_words=len(distinct),
        multi_member_groups=multi,
        single_member_groups=len(groups) - multi,
        min_len=min(lengths),
        max_len=max(lengths),
    )
