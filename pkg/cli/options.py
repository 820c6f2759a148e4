import argparse
import logging

from config import RunConfig
from lexicon import load_lexicon_file
from stemmer import GuardKind, StemMode, StemPolicy


def policy_options() -> argparse.ArgumentParser:
    """Parent parser holding the flags every stemming command accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--lexicon', metavar='PATH', help='suffix lexicon file (default: GUJSTEM_LEXICON or the seed lexicon)')
    parent.add_argument('--mode', choices=[mode.value for mode in StemMode], help='single-pass or iterative stripping')
    parent.add_argument('--guard', choices=[guard.value for guard in GuardKind], help='stem guard')
    parent.add_argument('--output', metavar='PATH', help='write to PATH instead of standard output')
    return parent


def build_policy(config: RunConfig) -> StemPolicy:
    """Load the configured lexicon; nothing is processed before this succeeds."""
    lexicon = load_lexicon_file(config.lexicon_path)
    logging.getLogger(__name__).info(
        f"Policy ready: mode={config.mode.value}, guard={config.guard.value}, lexicon={config.lexicon_path}"
    )
    return StemPolicy(lexicon=lexicon, mode=config.mode, guard=config.guard)
