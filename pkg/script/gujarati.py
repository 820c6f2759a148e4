import unicodedata
from enum import Enum
from typing import Iterator, List, NewType, Union

NormalizedWord = NewType('NormalizedWord', str)

BLOCK_START = 0x0A80
BLOCK_END = 0x0AFF

ZWJ = '\u200d'
ZWNJ = '\u200c'
JOINERS = frozenset([ZWJ, ZWNJ])

# Abbreviation sign and rupee sign delimit words like digits do
_PUNCTUATION = frozenset(['\u0af0', '\u0af1'])


class CodepointClass(Enum):
    """Orthographic role of a Gujarati scalar value."""

    INDEPENDENT_VOWEL = 'IndependentVowel'
    CONSONANT = 'Consonant'
    VOWEL_SIGN = 'VowelSign'
    ANUSVARA = 'Anusvara'
    VISARGA = 'Visarga'
    CANDRABINDU = 'Candrabindu'
    VIRAMA = 'Virama'
    NUKTA = 'Nukta'
    DIGIT = 'Digit'
    OTHER = 'Other'


BASE_CLASSES = frozenset([CodepointClass.INDEPENDENT_VOWEL, CodepointClass.CONSONANT])

_SINGLE_SCALARS = {
    0x0A81: CodepointClass.CANDRABINDU,
    0x0A82: CodepointClass.ANUSVARA,
    0x0A83: CodepointClass.VISARGA,
    0x0ABC: CodepointClass.NUKTA,
    0x0ACD: CodepointClass.VIRAMA,
    0x0AF9: CodepointClass.CONSONANT,
}

_RANGES = (
    (0x0A85, 0x0A94, CodepointClass.INDEPENDENT_VOWEL),
    (0x0AE0, 0x0AE1, CodepointClass.INDEPENDENT_VOWEL),
    (0x0A95, 0x0AB9, CodepointClass.CONSONANT),
    (0x0ABE, 0x0ACC, CodepointClass.VOWEL_SIGN),
    (0x0AE2, 0x0AE3, CodepointClass.VOWEL_SIGN),
    (0x0AE6, 0x0AEF, CodepointClass.DIGIT),
)


def normalize(text: str) -> str:
    """Return the NFC form of ``text``.

    Matching is codepoint-exact, so every word and suffix passes through
    here before it is compared. Idempotent.
    """
    return unicodedata.normalize('NFC', text)


def is_gujarati(scalar: str) -> bool:
    """True if ``scalar`` lies in the Gujarati block."""
    return BLOCK_START <= ord(scalar) <= BLOCK_END


def classify(scalar: Union[str, int]) -> CodepointClass:
    """Classify a single scalar value by its place in the Gujarati block.

    Args:
        scalar: One-character string or integer code point

    Returns:
        CodepointClass: The scalar's class; anything outside the block,
        and unassigned code points inside it, are ``OTHER``
    """
    if isinstance(scalar, str):
        if len(scalar) != 1:
            raise ValueError(f"classify expects a single scalar, got {len(scalar)}")
        code = ord(scalar)
    else:
        code = scalar

    if not BLOCK_START <= code <= BLOCK_END:
        return CodepointClass.OTHER
    if unicodedata.category(chr(code)) == 'Cn':
        return CodepointClass.OTHER

    single = _SINGLE_SCALARS.get(code)
    if single is not None:
        return single

    for start, end, codepoint_class in _RANGES:
        if start <= code <= end:
            return codepoint_class

    return CodepointClass.OTHER


def has_orthographic_base(word: str) -> bool:
    """True iff ``word`` holds at least one consonant or independent vowel."""
    return any(classify(scalar) in BASE_CLASSES for scalar in word)


def scalar_length(word: str) -> int:
    """Length of ``word`` in Unicode scalar values after NFC."""
    return len(normalize(word))


def is_normalized_word(word: str) -> bool:
    """Check the invariants of a normalized word.

    A normalized word is non-empty, already in NFC, and made of Gujarati
    block scalars plus ZWJ/ZWNJ.
    """
    if not word or normalize(word) != word:
        return False
    return all(is_gujarati(scalar) or scalar in JOINERS for scalar in word)


def _is_word_material(scalar: str) -> bool:
    if scalar in JOINERS:
        return True
    if not is_gujarati(scalar) or scalar in _PUNCTUATION:
        return False
    return classify(scalar) is not CodepointClass.DIGIT


def _finish_token(run: List[str]) -> str:
    return normalize(''.join(run).strip(ZWJ + ZWNJ))


def iter_tokens(text: str) -> Iterator[NormalizedWord]:
    """Yield the Gujarati words of ``text`` in order.

    A word is a maximal run of Gujarati-block scalars; ZWJ/ZWNJ may occur
    inside a word but are stripped from its edges. Everything else,
    including Gujarati digits, separates words and is dropped.
    """
    run: List[str] = []
    for scalar in normalize(text):
        if _is_word_material(scalar):
            run.append(scalar)
            continue
        if run:
            token = _finish_token(run)
            if token:
                yield NormalizedWord(token)
            run = []

    if run:
        token = _finish_token(run)
        if token:
            yield NormalizedWord(token)


def tokenize(text: str) -> List[NormalizedWord]:
    """Split ``text`` into a list of normalized Gujarati words."""
    return list(iter_tokens(text))
