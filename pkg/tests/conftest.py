import random
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import pytest

from lexicon import SuffixEntry, SuffixLexicon, load_lexicon_file
from script import normalize
from stemmer import GuardKind, StemMode, StemPolicy

SEED_LEXICON_PATH = Path(__file__).resolve().parent.parent / 'data' / 'gujarati_suffixes.txt'

CONSONANTS = [chr(c) for c in range(0x0A95, 0x0AB9 + 1) if c not in (0x0AA9, 0x0AB1, 0x0AB4)]
INDEPENDENT_VOWELS = ['અ', 'આ', 'ઇ', 'ઈ', 'ઉ', 'ઊ', 'એ', 'ઐ', 'ઓ', 'ઔ']
VOWEL_SIGNS = ['ા', 'િ', 'ી', 'ુ', 'ૂ', 'ે', 'ૈ', 'ો', 'ૌ']
MODIFIERS = ['ં', 'ઁ', 'ઃ', '્', '઼']


@pytest.fixture(scope='session')
def seed_lexicon_path() -> Path:
    return SEED_LEXICON_PATH


@pytest.fixture(scope='session')
def seed_lexicon() -> SuffixLexicon:
    return load_lexicon_file(SEED_LEXICON_PATH)


@pytest.fixture(scope='session')
def policy(seed_lexicon) -> StemPolicy:
    return StemPolicy(lexicon=seed_lexicon)


@pytest.fixture(scope='session')
def iterative_policy(seed_lexicon) -> StemPolicy:
    return StemPolicy(lexicon=seed_lexicon, mode=StemMode.ITERATIVE)


@pytest.fixture(scope='session')
def nonempty_policy(seed_lexicon) -> StemPolicy:
    return StemPolicy(lexicon=seed_lexicon, guard=GuardKind.NON_EMPTY)


def _random_word(rng: random.Random, suffixes: List[str]) -> str:
    pieces = []
    opener = rng.random()
    if opener < 0.6:
        pieces.append(rng.choice(CONSONANTS))
    elif opener < 0.85:
        pieces.append(rng.choice(INDEPENDENT_VOWELS))
    else:
        pieces.append(rng.choice(VOWEL_SIGNS))

    for _ in range(rng.randint(0, 6)):
        pool = rng.random()
        if pool < 0.5:
            pieces.append(rng.choice(CONSONANTS))
        elif pool < 0.85:
            pieces.append(rng.choice(VOWEL_SIGNS))
        else:
            pieces.append(rng.choice(MODIFIERS))

    for _ in range(rng.choice([0, 1, 1, 2])):
        pieces.append(rng.choice(suffixes))

    return normalize(''.join(pieces))


@pytest.fixture(scope='session')
def random_words(seed_lexicon) -> Callable[..., List[str]]:
    """Seeded generator of Gujarati-block words, biased towards lexicon endings."""
    suffixes = [entry.suffix for entry in seed_lexicon.enumerate()]

    def generate(count: int = 10_000, seed: int = 20240601) -> List[str]:
        rng = random.Random(seed)
        return [_random_word(rng, suffixes) for _ in range(count)]

    return generate


@pytest.fixture(scope='session')
def linear_scan() -> Callable[..., Optional[Tuple[SuffixEntry, str]]]:
    """Reference longest match: first passing entry of the longest-first list."""

    def scan(lexicon: SuffixLexicon, word: str, guard=None):
        for entry in lexicon.enumerate():
            if entry.length < len(word) and word.endswith(entry.suffix):
                stem = word[:-entry.length]
                if guard is None or guard(stem):
                    return entry, stem
        return None

    return scan
