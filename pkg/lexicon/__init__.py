from .errors import DuplicateSuffix, EmptyLexicon, InvalidScalar, LexiconError, LexiconUnavailable
from .suffix_lexicon import (
    StemGuard,
    SuffixEntry,
    SuffixLexicon,
    SuffixSource,
    load_lexicon,
    load_lexicon_file,
    validate_suffix,
)
from .suffix_trie import ReversedSuffixTrie

__all__ = [
    'DuplicateSuffix',
    'EmptyLexicon',
    'InvalidScalar',
    'LexiconError',
    'LexiconUnavailable',
    'ReversedSuffixTrie',
    'StemGuard',
    'SuffixEntry',
    'SuffixLexicon',
    'SuffixSource',
    'load_lexicon',
    'load_lexicon_file',
    'validate_suffix',
]
