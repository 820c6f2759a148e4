from .gujarati_stemmer import GujaratiStemmer, StemResult, iter_stem, stem, stem_batch
from .policy import GuardKind, StemMode, StemPolicy

__all__ = [
    'GuardKind',
    'GujaratiStemmer',
    'StemMode',
    'StemPolicy',
    'StemResult',
    'iter_stem',
    'stem',
    'stem_batch',
]
