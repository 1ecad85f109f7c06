from typing import NamedTuple, Optional, Tuple

from bicliquecount.commands.arguments import (emit, input_parser, load_input, output_parser, pq_parser,
                                              positive_int, search_options_from_args, search_parser)
from bicliquecount.commands.console import setup_console_logging
from bicliquecount.common import Stopwatch
from bicliquecount.engine.options import SearchOptions, check_pq
from bicliquecount.engine.toplevel import SplitStrategy, top_level_count
from bicliquecount.estimator.index import CostIndex, build_cost_index, load_cost_index
from bicliquecount.graph.bipartite import graph_stats
from bicliquecount.graph.loader import LoadedGraph
from bicliquecount.modes.local import local_count
from bicliquecount.modes.ranged import RangeBounds, range_count
from bicliquecount.reporters.json_reporter import RunReport, stats_as_dict

logger = setup_console_logging(__name__)


class SearchSetup(NamedTuple):
    options: SearchOptions
    strategy: SplitStrategy
    index: Optional[CostIndex]
    estimator_parameters: Tuple[int, int]
    index_build_ms: Optional[float]


def resolve_search(args, loaded: LoadedGraph, default_m: int) -> SearchSetup:
    """Options, strategy and cost index of a counting run. A missing index for estimator-index is built here."""
    options = search_options_from_args(args)
    g = loaded.graph
    x = args.x or default_m
    y = args.y or default_m
    strategy = SplitStrategy(args.strategy) if args.strategy else \
        (SplitStrategy.ESTIMATOR_INDEX if args.index else SplitStrategy.ESTIMATOR)

    index, index_build_ms = None, None
    if args.index:
        index = load_cost_index(args.index)
        index.check_graph(g)
        if strategy != SplitStrategy.ESTIMATOR_INDEX:
            logger.warning(f'--index is only used by the {SplitStrategy.ESTIMATOR_INDEX.value} strategy, '
                           f'ignoring it for {strategy.value}')
            index = None
        elif (index.x, index.y) != (x, y):
            logger.debug(f'Using index built at ({index.x},{index.y})')
    elif strategy == SplitStrategy.ESTIMATOR_INDEX:
        watch = Stopwatch()
        with watch.running():
            index = build_cost_index(g, None, x, y, options.cost_ceiling)
        index_build_ms = round(watch.milliseconds, 3)
    return SearchSetup(options=options, strategy=strategy, index=index, estimator_parameters=(x, y),
                       index_build_ms=index_build_ms)


def new_report(args, subcommand: str, loaded: LoadedGraph, setup: SearchSetup, **parameters) -> RunReport:
    x, y = setup.estimator_parameters
    return RunReport(command=list(args.command_echo),
                     subcommand=subcommand,
                     graph={**stats_as_dict(graph_stats(loaded.graph)),
                            'duplicates_dropped': loaded.duplicates_dropped,
                            'input': args.input},
                     parameters={**parameters, 'x': x, 'y': y, 'options': setup.options._asdict()},
                     strategy=setup.strategy.value,
                     index_build_ms=setup.index_build_ms)


class CountBaseApp:
    def create_count_sub_parser(self, sub_parser):
        count_parser = sub_parser.add_parser('count', help='Count the (p,q)-bicliques of a bipartite graph',
                                             parents=[input_parser, pq_parser, search_parser, output_parser])
        count_parser.set_defaults(func=self.run_count)
        return count_parser

    def create_local_sub_parser(self, sub_parser):
        local_parser = sub_parser.add_parser('local', help='Count the (p,q)-bicliques containing each node',
                                             parents=[input_parser, pq_parser, search_parser, output_parser])
        local_parser.add_argument('--top', '-top', type=positive_int, default=None,
                                  help='Only report the K nodes with the largest counts')
        local_parser.set_defaults(func=self.run_local)
        return local_parser

    def create_range_sub_parser(self, sub_parser):
        range_parser = sub_parser.add_parser('range', help='Count the (p,q)-bicliques for every p and q in a range',
                                             parents=[input_parser, search_parser, output_parser])
        for name, side in (('p', 'U'), ('q', 'V')):
            range_parser.add_argument(f'--{name}_min', f'--{name}-min', type=int, required=True,
                                      help=f'Smallest number of {side} nodes')
            range_parser.add_argument(f'--{name}_max', f'--{name}-max', type=int, required=True,
                                      help=f'Largest number of {side} nodes')
        range_parser.set_defaults(func=self.run_range)
        return range_parser

    @staticmethod
    def run_count(args):
        check_pq(args.p, args.q)
        loaded = load_input(args)
        setup = resolve_search(args, loaded, min(args.p, args.q))
        report = new_report(args, 'count', loaded, setup, p=args.p, q=args.q)

        watch = Stopwatch()
        with watch.running():
            total, metrics = top_level_count(loaded.graph, args.p, args.q, setup.strategy, options=setup.options,
                                             index=setup.index, estimator_parameters=setup.estimator_parameters)
        report.counts = {'total': str(total)}
        report.metrics = metrics.as_dict()
        logger.info(f'{total} ({args.p},{args.q})-bicliques, {float(metrics.combinatorial_fraction):.1%} counted '
                    f'combinatorially')
        emit(report.finish(watch.milliseconds), args, plain_lines=[str(total)])

    @staticmethod
    def run_local(args):
        check_pq(args.p, args.q)
        loaded = load_input(args)
        setup = resolve_search(args, loaded, min(args.p, args.q))
        report = new_report(args, 'local', loaded, setup, p=args.p, q=args.q, top=args.top)

        watch = Stopwatch()
        with watch.running():
            local, metrics = local_count(loaded.graph, args.p, args.q, setup.strategy, options=setup.options,
                                         index=setup.index, estimator_parameters=setup.estimator_parameters)
        total = local.total
        sum_u, sum_v = sum(local.u_counts), sum(local.v_counts)
        identities_hold = local.identities_hold(total)
        if not identities_hold:
            logger.error(f'Local counts are inconsistent: sum_U={sum_u}, sum_V={sum_v}, total={total}')

        labels = {'U': loaded.u_labels, 'V': loaded.v_labels}
        if args.top:
            rows = [(side, labels[side][node], count) for side, node, count in local.top(args.top)]
        else:
            rows = [('U', label, count) for label, count in zip(loaded.u_labels, local.u_counts)] + \
                   [('V', label, count) for label, count in zip(loaded.v_labels, local.v_counts)]

        report.counts = {
            'total': str(total),
            'sum_u': str(sum_u),
            'sum_v': str(sum_v),
            'identities_hold': identities_hold,
            'nodes': [{'side': side, 'id': label, 'count': str(count)} for side, label, count in rows],
        }
        report.metrics = metrics.as_dict()
        check_line = (f'# sum_U={sum_u} p*total={args.p * total} sum_V={sum_v} q*total={args.q * total} '
                      f'{"ok" if identities_hold else "MISMATCH"}')
        emit(report.finish(watch.milliseconds), args,
             plain_lines=[f'{side} {label} {count}' for side, label, count in rows] + [check_line])

    @staticmethod
    def run_range(args):
        bounds = RangeBounds(args.p_min, args.p_max, args.q_min, args.q_max).check()
        loaded = load_input(args)
        setup = resolve_search(args, loaded, min(bounds.p_l, bounds.q_l))
        report = new_report(args, 'range', loaded, setup, **bounds._asdict())

        watch = Stopwatch()
        with watch.running():
            matrix, metrics = range_count(loaded.graph, bounds, setup.strategy, options=setup.options,
                                          index=setup.index, estimator_parameters=setup.estimator_parameters)
        report.counts = {
            'p_values': list(range(bounds.p_l, bounds.p_u + 1)),
            'q_values': list(range(bounds.q_l, bounds.q_u + 1)),
            'matrix': [[str(count) for count in row] for row in matrix.cells],
        }
        report.metrics = metrics.as_dict()
        emit(report.finish(watch.milliseconds), args,
             plain_lines=[f'{p} {q} {count}' for p, q, count in matrix.items()])
