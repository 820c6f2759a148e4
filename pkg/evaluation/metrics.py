import logging
from dataclasses import dataclass, field
from decimal import Context, Decimal, ROUND_HALF_EVEN
from fractions import Fraction
from typing import Dict, List, Sequence

from stemmer import GujaratiStemmer, StemPolicy
from .gold import EmptyGold, GoldPair
from .judge import Verdict, judge

logger = logging.getLogger(__name__)


def format_percent(value: Fraction, places: int = 1) -> str:
    """Render a rational in [0, 1] as a percentage, rounding half to even.

    Integer arithmetic only, so 2745/3000 always renders as '91.5%'.
    """
    scale = 10 ** places
    quotient, remainder = divmod(value.numerator * 100 * scale, value.denominator)
    twice = 2 * remainder
    if twice > value.denominator or (twice == value.denominator and quotient % 2 == 1):
        quotient += 1

    whole, fraction = divmod(quotient, scale)
    if places == 0:
        return f"{whole}%"
    return f"{whole}.{fraction:0{places}d}%"


def format_significant(value: Fraction, digits: int = 4) -> str:
    """Render a rational in fixed-point form with exactly ``digits`` significant figures.

    Rounds half to even, then pads trailing zeros: 2745/3000 renders as
    '0.9150', 1 as '1.000' and 1/10**8 as '0.00000001000'.
    """
    context = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    rounded = context.divide(Decimal(value.numerator), Decimal(value.denominator))
    if not rounded:
        return f"{0:.{digits - 1}f}"
    places = max(digits - rounded.adjusted() - 1, 0)
    return f"{rounded:.{places}f}"


@dataclass(frozen=True)
class Judgement:
    """One scored gold pair."""

    word: str
    gold_stem: str
    predicted_stem: str
    verdict: Verdict


@dataclass(frozen=True)
class EvalReport:
    """Verdict tallies over a gold standard."""

    total: int
    correct: int
    over_stemmed: int
    under_stemmed: int
    other_errors: int
    errors: List[Judgement] = field(default_factory=list, compare=False)

    def __post_init__(self):
        if self.correct + self.over_stemmed + self.under_stemmed + self.other_errors != self.total:
            raise ValueError("verdict counts do not sum to total")

    @property
    def accuracy(self) -> Fraction:
        return Fraction(self.correct, self.total) if self.total else Fraction(0)

    @property
    def accuracy_percent(self) -> str:
        return format_percent(self.accuracy)

    @property
    def error_count(self) -> int:
        return self.total - self.correct

    def error_shares(self) -> Dict[str, Fraction]:
        """Each error bucket as a fraction of all errors."""
        if not self.error_count:
            return {'over_stemmed': Fraction(0), 'under_stemmed': Fraction(0), 'other': Fraction(0)}
        return {
            'over_stemmed': Fraction(self.over_stemmed, self.error_count),
            'under_stemmed': Fraction(self.under_stemmed, self.error_count),
            'other': Fraction(self.other_errors, self.error_count),
        }

    def to_dict(self) -> dict:
        return {
            'total': self.total,
            'correct': self.correct,
            'over_stemmed': self.over_stemmed,
            'under_stemmed': self.under_stemmed,
            'other': self.other_errors,
            'accuracy': format_significant(self.accuracy),
            'accuracy_fraction': f"{self.correct}/{self.total}",
            'accuracy_percent': self.accuracy_percent,
            'error_shares': {
                bucket: format_percent(share) for bucket, share in self.error_shares().items()
            },
        }


def tally(judgements: Sequence[Judgement]) -> EvalReport:
    counts = {verdict: 0 for verdict in Verdict}
    for judgement in judgements:
        counts[judgement.verdict] += 1

    return EvalReport(
        total=len(judgements),
        correct=counts[Verdict.CORRECT],
        over_stemmed=counts[Verdict.OVER_STEMMED],
        under_stemmed=counts[Verdict.UNDER_STEMMED],
        other_errors=counts[Verdict.OTHER],
        errors=[j for j in judgements if j.verdict is not Verdict.CORRECT],
    )


def evaluate(policy: StemPolicy, gold: Sequence[GoldPair]) -> EvalReport:
    """Stem every gold word and tally the verdicts.

    Raises:
        EmptyGold: If ``gold`` holds no pairs
    """
    if not gold:
        raise EmptyGold()

    stemmer = GujaratiStemmer(policy)
    judgements = []
    for pair in gold:
        predicted = stemmer.stem(pair.word).stem
        judgements.append(Judgement(pair.word, pair.gold_stem, predicted, judge(predicted, pair.gold_stem)))

    report = tally(judgements)
    logger.info(
        f"Evaluated {report.total} pairs: {report.correct} correct, "
        f"{report.over_stemmed} over, {report.under_stemmed} under, {report.other_errors} other"
    )
    return report
