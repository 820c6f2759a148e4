import unicodedata

import pytest
from hypothesis import given, strategies as st

from script import (
    CodepointClass,
    classify,
    has_orthographic_base,
    is_normalized_word,
    normalize,
    scalar_length,
    tokenize,
)
from script.gujarati import JOINERS, _is_word_material

gujarati_text = st.text(alphabet=st.characters(min_codepoint=0x0A80, max_codepoint=0x0AFF), max_size=20)
mixed_text = st.text(
    alphabet=st.one_of(
        st.characters(min_codepoint=0x0A80, max_codepoint=0x0AFF),
        st.sampled_from([' ', ',', '.', 'a', 'Z', '1', '\n', '\t', '\u200d', '\u200c']),
    ),
    max_size=40,
)


def test_normalize_keeps_nfc_word():
    assert normalize('ગુજરાત') == 'ગુજરાત'


def test_normalize_empty():
    assert normalize('') == ''


def test_normalize_nukta_has_no_precomposed_form():
    assert normalize('જ\u0abc') == 'જ\u0abc'


def test_normalize_reorders_virama_after_nukta():
    # nukta (ccc 7) sorts before virama (ccc 9)
    assert normalize('જ\u0acd\u0abc') == 'જ\u0abc\u0acd'


@given(gujarati_text)
def test_normalize_is_idempotent(text):
    once = normalize(text)
    assert normalize(once) == once
    assert unicodedata.is_normalized('NFC', once)


@pytest.mark.parametrize('scalar, expected', [
    ('સ', CodepointClass.CONSONANT),
    ('ી', CodepointClass.VOWEL_SIGN),
    ('ં', CodepointClass.ANUSVARA),
    ('ઁ', CodepointClass.CANDRABINDU),
    ('ઃ', CodepointClass.VISARGA),
    ('્', CodepointClass.VIRAMA),
    ('઼', CodepointClass.NUKTA),
    ('અ', CodepointClass.INDEPENDENT_VOWEL),
    ('ઔ', CodepointClass.INDEPENDENT_VOWEL),
    ('ૠ', CodepointClass.INDEPENDENT_VOWEL),
    ('ૢ', CodepointClass.VOWEL_SIGN),
    ('ૹ', CodepointClass.CONSONANT),
    ('૦', CodepointClass.DIGIT),
    ('૯', CodepointClass.DIGIT),
    ('\u0abd', CodepointClass.OTHER),
    ('\u0a80', CodepointClass.OTHER),
    ('a', CodepointClass.OTHER),
    (0x0AB9, CodepointClass.CONSONANT),
])
def test_classify(scalar, expected):
    assert classify(scalar) is expected


def test_classify_is_total_over_block():
    for code in range(0x0A80, 0x0B00):
        first = classify(chr(code))
        assert isinstance(first, CodepointClass)
        assert classify(code) is first


def test_classify_rejects_multiple_scalars():
    with pytest.raises(ValueError):
        classify('સે')


@pytest.mark.parametrize('word, expected', [
    ('સે', True),
    ('ો', False),
    ('', False),
    ('ઓ', True),
    ('ાં', False),
])
def test_has_orthographic_base(word, expected):
    assert has_orthographic_base(word) is expected


def test_has_orthographic_base_matches_classification_per_scalar():
    bases = {CodepointClass.CONSONANT, CodepointClass.INDEPENDENT_VOWEL}
    for code in range(0x0A80, 0x0B00):
        assert has_orthographic_base(chr(code)) == (classify(code) in bases)


def test_scalar_length_counts_scalars():
    assert scalar_length('દેશ') == 3
    assert scalar_length('ભાજપનો') == 6


@pytest.mark.parametrize('text, expected', [
    ('ગુજરાત, ભારત', ['ગુજરાત', 'ભારત']),
    ('abc 123', []),
    ('શહેરી વિસ્તારોમાં', ['શહેરી', 'વિસ્તારોમાં']),
    ('', []),
    ('ગુજરાત૧૨ભારત', ['ગુજરાત', 'ભારત']),
    ('\u200dગુજરાત\u200c', ['ગુજરાત']),
    ('ક્\u200dષ', ['ક્\u200dષ']),
    ('\u200d \u200c', []),
    ('ભારતhelloગુજરાત', ['ભારત', 'ગુજરાત']),
])
def test_tokenize(text, expected):
    assert tokenize(text) == expected


def only_delimiters(gap):
    return not any(_is_word_material(c) and c not in JOINERS for c in gap)


@given(mixed_text)
def test_tokens_are_normalized_words_in_order(text):
    normalized = normalize(text)
    position = 0
    for token in tokenize(text):
        assert is_normalized_word(token)
        assert token[0] not in JOINERS and token[-1] not in JOINERS
        found = normalized.find(token, position)
        assert found >= position
        assert only_delimiters(normalized[position:found])
        position = found + len(token)
    assert only_delimiters(normalized[position:])


@pytest.mark.parametrize('text', ['ગુજરાત, ભારત', '\u200dગુજરાત\u200c ક્\u200dષ', 'ભારતhelloગુજરાત૧૨'])
def test_tokens_and_delimiters_rebuild_text(text):
    normalized = normalize(text)
    rebuilt = []
    position = 0
    for token in tokenize(text):
        found = normalized.find(token, position)
        rebuilt.append(normalized[position:found])
        rebuilt.append(token)
        position = found + len(token)
    rebuilt.append(normalized[position:])
    assert ''.join(rebuilt) == normalized
    assert all(only_delimiters(gap) for gap in rebuilt[0::2])


def test_is_normalized_word():
    assert is_normalized_word('દેશ')
    assert not is_normalized_word('')
    assert not is_normalized_word('દેશ ')
    assert not is_normalized_word('જ\u0acd\u0abc')
