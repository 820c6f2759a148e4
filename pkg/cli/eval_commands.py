import json
import logging

from config import RunConfig
from evaluation import evaluate, load_gold_file
from utils import EXIT_OK, open_output, setup_error_handlers
from .options import build_policy, policy_options


def init_eval_commands(subparsers):
    """Register the ``eval`` command."""
    eval_parser = subparsers.add_parser(
        'eval', parents=[policy_options()],
        help='score the stemmer against a gold word<TAB>stem file',
    )
    eval_parser.add_argument('gold', help='gold standard TSV file')
    eval_parser.add_argument('--json', action='store_true', help='emit JSON')
    eval_parser.add_argument('--errors', action='store_true', help='list every incorrect prediction')

    @setup_error_handlers
    def cmd_eval(args) -> int:
        """Evaluate against the gold file and print the verdict tallies."""
        config = RunConfig.from_args(args)
        policy = build_policy(config)
        gold = load_gold_file(args.gold)
        report = evaluate(policy, gold)

        with open_output(config.output_path) as sink:
            if args.json:
                payload = report.to_dict()
                if args.errors:
                    payload['errors'] = [
                        {
                            'word': j.word,
                            'gold': j.gold_stem,
                            'predicted': j.predicted_stem,
                            'verdict': j.verdict.value,
                        }
                        for j in report.errors
                    ]
                sink.write(json.dumps(payload, ensure_ascii=False, indent=2) + '\n')
            else:
                sink.write(f"total: {report.total}\n")
                sink.write(f"correct: {report.correct}\n")
                sink.write(f"over-stemmed: {report.over_stemmed}\n")
                sink.write(f"under-stemmed: {report.under_stemmed}\n")
                sink.write(f"other: {report.other_errors}\n")
                sink.write(f"accuracy: {report.accuracy_percent}\n")
                if args.errors:
                    for j in report.errors:
                        sink.write(f"{j.word}\t{j.gold_stem}\t{j.predicted_stem}\t{j.verdict.value}\n")

        logging.info(f"Evaluation accuracy {report.accuracy_percent} over {report.total} pairs")
        return EXIT_OK

    eval_parser.set_defaults(handler=cmd_eval)
    return subparsers
