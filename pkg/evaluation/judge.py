from enum import Enum


class Verdict(Enum):
    """Outcome of comparing a predicted stem with the gold stem."""

    CORRECT = 'correct'
    OVER_STEMMED = 'over_stemmed'
    UNDER_STEMMED = 'under_stemmed'
    OTHER = 'other'


def judge(predicted_stem: str, gold_stem: str) -> Verdict:
    """Classify a prediction by the prefix relation between the two stems.

    A predicted stem that is a strict prefix of the gold stem lost too much
    (over-stemmed); one that strictly extends it kept too much
    (under-stemmed). Stems that diverge are OTHER.
    """
    if not predicted_stem or not gold_stem:
        raise ValueError("judge expects two non-empty stems")

    if predicted_stem == gold_stem:
        return Verdict.CORRECT
    if gold_stem.startswith(predicted_stem):
        return Verdict.OVER_STEMMED
    if predicted_stem.startswith(gold_stem):
        return Verdict.UNDER_STEMMED
    return Verdict.OTHER
