import sys

from bicliquecount import __version__
from bicliquecount.commands.arguments import emit, input_parser, load_input, output_parser, pq_parser
from bicliquecount.common import Stopwatch
from bicliquecount.engine.options import check_pq
from bicliquecount.graph.bipartite import graph_stats
from bicliquecount.graph.cores import pq_core_reduce
from bicliquecount.graph.loader import write_graph
from bicliquecount.reporters.json_reporter import RunReport, stats_as_dict, write_report_file


class InfoBaseApp:
    def create_stats_sub_parser(self, sub_parser):
        stats_parser = sub_parser.add_parser('stats', help='Print node, edge and degree statistics of a graph',
                                             parents=[input_parser, output_parser])
        stats_parser.set_defaults(func=self.run_stats)
        return stats_parser

    def create_reduce_sub_parser(self, sub_parser):
        reduce_parser = sub_parser.add_parser('reduce', help='Write the (p,q)-core of a graph',
                                              parents=[input_parser, pq_parser, output_parser])
        reduce_parser.add_argument('--out', '-out', '-o', default=None, help='Output edge list (default: stdout)')
        reduce_parser.set_defaults(func=self.run_reduce)
        return reduce_parser

    def create_version_sub_parser(self, sub_parser):
        version_parser = sub_parser.add_parser('version', help='Print the bicliquecount version')
        version_parser.set_defaults(func=self.version)
        return version_parser

    @staticmethod
    def version(_args):
        print(__version__)

    @staticmethod
    def run_stats(args):
        watch = Stopwatch()
        with watch.running():
            loaded = load_input(args)
            stats = graph_stats(loaded.graph)
        report = RunReport(command=list(args.command_echo),
                           subcommand='stats',
                           graph={**stats_as_dict(stats), 'duplicates_dropped': loaded.duplicates_dropped},
                           parameters={'input': args.input})
        emit(report.finish(watch.milliseconds), args,
             plain_lines=[f'{stats.u_count} {stats.v_count} {stats.edge_count}'])

    @staticmethod
    def run_reduce(args):
        check_pq(args.p, args.q)
        loaded = load_input(args)
        watch = Stopwatch()
        with watch.running():
            reduction = pq_core_reduce(loaded.graph, args.p, args.q)
        # the core keeps the external ids of the input
        u_labels = [loaded.u_labels[u] for u in reduction.u_ids]
        v_labels = [loaded.v_labels[v] for v in reduction.v_ids]
        report = RunReport(command=list(args.command_echo),
                           subcommand='reduce',
                           graph=stats_as_dict(graph_stats(loaded.graph)),
                           parameters={'p': args.p, 'q': args.q, 'out': args.out},
                           counts={'reduced': stats_as_dict(graph_stats(reduction.graph))})
        report.finish(watch.milliseconds)
        if args.out:
            with open(args.out, 'w', encoding='utf-8') as fp:
                write_graph(reduction.graph, fp, u_labels, v_labels)
            emit(report, args, plain_lines=[args.out])
        else:
            # stdout carries the edge list, the report can only go to a file
            write_graph(reduction.graph, sys.stdout, u_labels, v_labels)
            if args.report_file:
                write_report_file(report, args.report_file)
