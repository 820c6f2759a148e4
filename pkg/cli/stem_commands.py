import json
import logging

from config import RunConfig
from evaluation import corpus_stats, group_by_stem
from script import iter_tokens
from stemmer import GujaratiStemmer
from utils import EXIT_OK, open_input, open_output, setup_error_handlers
from .options import build_policy, policy_options


def init_stem_commands(subparsers):
    """Register the ``stem`` and ``stats`` commands."""
    parent = policy_options()

    stem_parser = subparsers.add_parser(
        'stem', parents=[parent],
        help='stem Gujarati text to word/stem/suffix TSV',
    )
    stem_parser.add_argument('input', nargs='?', help='input text file (default: standard input)')

    stats_parser = subparsers.add_parser(
        'stats', parents=[parent],
        help='summarise a corpus: word counts, stem groups, length range',
    )
    stats_parser.add_argument('input', nargs='?', help='input text file (default: standard input)')
    stats_parser.add_argument('--json', action='store_true', help='emit JSON')
    stats_parser.add_argument('--groups', action='store_true', help='also list every stem group')

    @setup_error_handlers
    def cmd_stem(args) -> int:
        """Stem every token of the input, one TSV line per token."""
        config = RunConfig.from_args(args)
        stemmer = GujaratiStemmer(build_policy(config))

        count = 0
        with open_input(config.input_path) as source, open_output(config.output_path) as sink:
            for line in source:
                for token in iter_tokens(line):
                    result = stemmer.stem(token)
                    sink.write(f"{result.word}\t{result.stem}\t{result.suffix_chain}\n")
                    count += 1

        logging.info(f"Stemmed {count} tokens")
        return EXIT_OK

    @setup_error_handlers
    def cmd_stats(args) -> int:
        """Print corpus statistics in report order."""
        config = RunConfig.from_args(args)
        policy = build_policy(config)

        with open_input(config.input_path) as source:
            words = [token for line in source for token in iter_tokens(line)]

        stats = corpus_stats(policy, words)
        groups = group_by_stem(policy, words) if args.groups else {}

        with open_output(config.output_path) as sink:
            if args.json:
                payload = stats.to_dict()
                if args.groups:
                    payload['groups'] = groups
                sink.write(json.dumps(payload, ensure_ascii=False, indent=2) + '\n')
            else:
                for label, value in stats.rows():
                    sink.write(f"{label}: {value}\n")
                for stem, members in groups.items():
                    sink.write(f"{stem}\t{len(members)}\t{','.join(members)}\n")

        logging.info(f"Corpus stats over {stats.total_words} words")
        return EXIT_OK

    stem_parser.set_defaults(handler=cmd_stem)
    stats_parser.set_defaults(handler=cmd_stats)
    return subparsers
