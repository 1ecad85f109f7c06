from bicliquecount.commands.arguments import emit, input_parser, load_input, output_parser, positive_int
from bicliquecount.commands.console import setup_console_logging
from bicliquecount.common import Stopwatch
from bicliquecount.engine.options import DEFAULT_COST_CEILING
from bicliquecount.estimator.index import build_cost_index, save_cost_index
from bicliquecount.graph.bipartite import graph_stats
from bicliquecount.reporters.json_reporter import RunReport, stats_as_dict

logger = setup_console_logging(__name__)


class IndexBaseApp:
    def create_index_sub_parser(self, sub_parser):
        index_parser = sub_parser.add_parser('index',
                                             help='Precompute the node-split/edge-split choice of every U node',
                                             parents=[input_parser, output_parser])
        index_parser.add_argument('--x', type=positive_int, required=True, help='Biclique size used for U')
        index_parser.add_argument('--y', type=positive_int, required=True, help='Biclique size used for V')
        index_parser.add_argument('--out', '-out', '-o', required=True, help='Where to write the index')
        index_parser.set_defaults(func=self.run_index)
        return index_parser

    @staticmethod
    def run_index(args):
        loaded = load_input(args)
        watch = Stopwatch()
        with watch.running():
            index = build_cost_index(loaded.graph, None, args.x, args.y, DEFAULT_COST_CEILING)
        save_cost_index(index, args.out)
        logger.info(f'Wrote index of {index.u_count} U nodes to {args.out}')

        fraction = index.node_split_fraction
        report = RunReport(command=list(args.command_echo),
                           subcommand='index',
                           graph=stats_as_dict(graph_stats(loaded.graph)),
                           parameters={'x': args.x, 'y': args.y, 'out': args.out},
                           counts={'u_count': index.u_count,
                                   'edge_split_nodes': index.edge_split.count(True),
                                   'node_split_fraction': fraction,
                                   'graph_hash': index.graph_hash},
                           index_build_ms=round(watch.milliseconds, 3))
        emit(report.finish(watch.milliseconds), args, plain_lines=[args.out])
