from dataclasses import dataclass
from enum import Enum

from lexicon import StemGuard, SuffixLexicon
from script import has_orthographic_base


class StemMode(Enum):
    """How many longest-match removals a single stem call performs."""

    SINGLE_PASS = 'single'
    ITERATIVE = 'iterative'


class GuardKind(Enum):
    """Which stems a removal is allowed to leave behind."""

    ORTHOGRAPHIC_BASE = 'base'
    NON_EMPTY = 'nonempty'


def _non_empty(stem: str) -> bool:
    return bool(stem)


def _orthographic_base(stem: str) -> bool:
    return bool(stem) and has_orthographic_base(stem)


_GUARDS = {
    GuardKind.ORTHOGRAPHIC_BASE: _orthographic_base,
    GuardKind.NON_EMPTY: _non_empty,
}


@dataclass(frozen=True)
class StemPolicy:
    """Immutable stripping policy shared by every stem call."""

    lexicon: SuffixLexicon
    mode: StemMode = StemMode.SINGLE_PASS
    guard: GuardKind = GuardKind.ORTHOGRAPHIC_BASE

    @property
    def guard_predicate(self) -> StemGuard:
        return _GUARDS[self.guard]
