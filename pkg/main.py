import argparse
import logging
import sys
from typing import List, Optional

from config import Config
from cli import init_eval_commands, init_lexicon_commands, init_stem_commands


def create_parser() -> argparse.ArgumentParser:
    """Parser factory: registers every command group."""
    parser = argparse.ArgumentParser(
        prog='gujstem',
        description='Lightweight longest-match suffix stripping stemmer for Gujarati.',
    )
    parser.add_argument(
        '--log-level', default=None,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='logging verbosity on standard error (default: GUJSTEM_LOG_LEVEL or WARNING)',
    )

    subparsers = parser.add_subparsers(dest='command', metavar='{stem,eval,stats,lexicon}')
    subparsers.required = True

    init_stem_commands(subparsers)
    init_eval_commands(subparsers)
    init_lexicon_commands(subparsers)

    return parser


def setup_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=getattr(logging, (level or Config.LOG_LEVEL).upper(), logging.WARNING),
        format=Config.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
