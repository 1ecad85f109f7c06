import argparse
import os
from argparse import ArgumentParser

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.engine.options import (SearchOptions, RANK_BY_CORE, RANK_BY_ID, load_search_options,
                                          options_from_env, validate_search_options)
from bicliquecount.engine.toplevel import SplitStrategy
from bicliquecount.graph.loader import GraphFormat, GraphParseError, LoadedGraph, STDIN_PATH, read_graph_file
from bicliquecount.reporters.json_reporter import RunReport, write_report_file

logger = setup_console_logging(__name__)


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} is not an integer') from None
    if number < 1:
        raise argparse.ArgumentTypeError(f'{value!r} must be at least 1')
    return number


def unit_fraction(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} is not a number') from None
    if not 0.0 <= number <= 1.0:
        raise argparse.ArgumentTypeError(f'{value!r} must be within [0, 1]')
    return number


class InputPathAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        if values != STDIN_PATH and os.path.isdir(values):
            parser.error(f'{option_string} {values} is a directory, you must provide an edge list file')
        setattr(namespace, self.dest, values)


input_parser = ArgumentParser(add_help=False)
input_parser.add_argument('--input', '-input', '-i', required=True, action=InputPathAction,
                          help='Edge list to read, "-" for stdin')
input_parser.add_argument('--allow_empty', '--allow-empty', action='store_true',
                          help='Read an input without edges as an empty graph instead of failing')
input_parser.add_argument('--format', '-format', dest='graph_format', default=GraphFormat.PLAIN.value,
                          choices=[f.value for f in GraphFormat], help='Edge list format (default: %(default)s)')

output_parser = ArgumentParser(add_help=False)
output_mode = output_parser.add_mutually_exclusive_group()
output_mode.add_argument('--json', '-json', dest='plain', action='store_false', default=False,
                         help='Print the full JSON report (default)')
output_mode.add_argument('--plain', '-plain', dest='plain', action='store_true',
                         help='Print bare results only, for scripting')
output_parser.add_argument('--report_file', '--report-file', default=None,
                           help='Also write the JSON report to this file')
output_parser.add_argument('--verbose', '-v', action='store_true', help='Log debug messages')
output_parser.add_argument('--quiet', '-q', action='store_true', help='Log errors only')

pq_parser = ArgumentParser(add_help=False)
pq_parser.add_argument('--p', '-p', type=int, required=True, help='Number of U nodes in a biclique')
pq_parser.add_argument('--q', type=int, required=True, help='Number of V nodes in a biclique')

search_parser = ArgumentParser(add_help=False)
search_parser.add_argument('--strategy', '-strategy', default=None, choices=SplitStrategy.names(),
                           help='How each U node is split at the top level (default: estimator, or '
                                'estimator-index with --index)')
search_parser.add_argument('--threads', '-threads', type=positive_int, default=None,
                           help='Worker processes for the top-level roots (default: 1)')
search_parser.add_argument('--index', '-index', default=None, help='Cost index file built by the index command')
search_parser.add_argument('--x', type=positive_int, default=None, help='Estimator x (default: min(p, q))')
search_parser.add_argument('--y', type=positive_int, default=None, help='Estimator y (default: min(p, q))')
search_parser.add_argument('--options_file', '--options-file', default=None,
                           help='JSON file of search options (keys of SearchOptions)')
search_parser.add_argument('--no_core_reduction', '--no-core-reduction', action='store_true', default=None,
                           help='Search the whole graph instead of its core')
search_parser.add_argument('--rank_order', '--rank-order', choices=[RANK_BY_CORE, RANK_BY_ID], default=None,
                           help='Node order directing the search (default: core)')
search_parser.add_argument('--no_early_termination', '--no-early-termination', action='store_true', default=None,
                           help='Always branch down to the leaves')
search_parser.add_argument('--recompute_nonnbr', '--recompute-nonnbr', action='store_true', default=None,
                           help='Recompute non-neighbor counts at every search node')
search_parser.add_argument('--debug_checks', '--debug-checks', action='store_true', default=None,
                           help='Verify the search state at every search node (slow)')
search_parser.add_argument('--max_depth', '--max-depth', type=positive_int, default=None,
                           help='Search depth cap (also BICLIQUE_MAX_DEPTH)')
search_parser.add_argument('--progress', action='store_true', default=None, help='Show a progress bar')


def load_input(args) -> LoadedGraph:
    try:
        loaded = read_graph_file(args.input, GraphFormat(args.graph_format), args.allow_empty)
    except OSError as e:
        raise GraphParseError(f'Cannot read {args.input}: {e.strerror or e}') from e
    logger.debug(f'Loaded {loaded.graph.u_count}x{loaded.graph.v_count} graph with {loaded.graph.edge_count} edges '
                 f'from {args.input}')
    return loaded


def search_options_from_args(args) -> SearchOptions:
    """Defaults, then environment, then the options file, then explicit flags."""
    options = options_from_env()
    if args.options_file:
        options = load_search_options(args.options_file, options)
    flags = {
        'core_reduction': None if args.no_core_reduction is None else not args.no_core_reduction,
        'rank_order': args.rank_order,
        'early_termination': None if args.no_early_termination is None else not args.no_early_termination,
        'incremental_nonnbr': None if args.recompute_nonnbr is None else not args.recompute_nonnbr,
        'debug_checks': args.debug_checks,
        'max_depth': args.max_depth,
        'workers': args.threads,
        'progress': args.progress,
    }
    return validate_search_options(options._replace(**{k: v for k, v in flags.items() if v is not None}))


def emit(report: RunReport, args, plain_lines=()):
    if args.report_file:
        write_report_file(report, args.report_file)
        logger.debug(f'Report written to {args.report_file}')
    if args.plain:
        for line in plain_lines:
            print(line)
    else:
        print(report.to_json())
