from .corpus import CorpusStats, corpus_stats, group_by_stem
from .gold import EmptyGold, GoldError, GoldFormatError, GoldPair, load_gold, load_gold_file
from .judge import Verdict, judge
from .metrics import EvalReport, Judgement, evaluate, format_percent, format_significant, tally

__all__ = [
    'CorpusStats',
    'EmptyGold',
    'EvalReport',
    'GoldError',
    'GoldFormatError',
    'GoldPair',
    'Judgement',
    'Verdict',
    'corpus_stats',
    'evaluate',
    'format_percent',
    'format_significant',
    'group_by_stem',
    'judge',
    'load_gold',
    'load_gold_file',
    'tally',
]
