from .gujarati import (
    CodepointClass,
    NormalizedWord,
    classify,
    has_orthographic_base,
    is_gujarati,
    is_normalized_word,
    iter_tokens,
    normalize,
    scalar_length,
    tokenize,
)

__all__ = [
    'CodepointClass',
    'NormalizedWord',
    'classify',
    'has_orthographic_base',
    'is_gujarati',
    'is_normalized_word',
    'iter_tokens',
    'normalize',
    'scalar_length',
    'tokenize',
]
