import logging

from config import Config
from lexicon import load_lexicon_file
from utils import EXIT_OK, open_output, setup_error_handlers


def init_lexicon_commands(subparsers):
    """Register ``lexicon check`` and ``lexicon list``."""
    lexicon_parser = subparsers.add_parser('lexicon', help='inspect and validate suffix lexicons')
    actions = lexicon_parser.add_subparsers(dest='lexicon_command', metavar='{check,list}')
    actions.required = True

    check_parser = actions.add_parser('check', help='validate a lexicon file and summarise it')
    list_parser = actions.add_parser('list', help='print suffixes longest first')
    for parser in (check_parser, list_parser):
        parser.add_argument('path', nargs='?', help='lexicon file (default: GUJSTEM_LEXICON or the seed lexicon)')
        parser.add_argument('--lexicon', metavar='PATH', help='same as the positional path')
        parser.add_argument('--output', metavar='PATH', help='write to PATH instead of standard output')

    def _resolve(args):
        path = args.path or args.lexicon or Config.LEXICON_PATH
        output = None if args.output in (None, '-') else args.output
        return path, output

    @setup_error_handlers
    def cmd_lexicon_check(args) -> int:
        """Validate the lexicon; print entry count, longest suffix and provenance counts."""
        path, output = _resolve(args)
        lexicon = load_lexicon_file(path)

        with open_output(output) as sink:
            sink.write(f"entries: {len(lexicon)}\n")
            sink.write(f"max suffix length: {lexicon.max_suffix_len}\n")
            for source, count in lexicon.counts_by_source().items():
                sink.write(f"source {source}: {count}\n")

        logging.info(f"Lexicon {path} is valid")
        return EXIT_OK

    @setup_error_handlers
    def cmd_lexicon_list(args) -> int:
        path, output = _resolve(args)
        lexicon = load_lexicon_file(path)

        with open_output(output) as sink:
            for entry in lexicon.enumerate():
                sink.write(f"{entry.suffix}\t{entry.length}\t{entry.source.value}\n")
        return EXIT_OK

    check_parser.set_defaults(handler=cmd_lexicon_check)
    list_parser.set_defaults(handler=cmd_lexicon_list)
    return subparsers
