import sys

from bicliquecount.commands.arguments import InputPathAction, unit_fraction
from bicliquecount.commands.console import setup_console_logging
from bicliquecount.engine.options import BicliqueArgumentError
from bicliquecount.graph.bipartite import graph_stats
from bicliquecount.graph.loader import GraphFormat, GraphParseError, read_graph_file, write_graph
from bicliquecount.oracle.generators import (random_bipartite, random_bipartite_with_degrees, sample_edges,
                                             sample_nodes)

logger = setup_console_logging(__name__)


class GenerateBaseApp:
    def create_generate_sub_parser(self, sub_parser):
        generate_parser = sub_parser.add_parser('generate',
                                                help='Write a seeded random or sampled bipartite graph as an edge '
                                                     'list')
        model = generate_parser.add_mutually_exclusive_group(required=True)
        model.add_argument('--probability', type=unit_fraction,
                           help='Independent edge probability, needs --u_count and --v_count')
        model.add_argument('--edges', type=int, help='Exact edge count, needs --avg_degree_u and --avg_degree_v')
        model.add_argument('--sample_edges', '--sample-edges', type=unit_fraction,
                           help='Keep this fraction of the edges of --input')
        model.add_argument('--sample_nodes', '--sample-nodes', type=unit_fraction,
                           help='Keep this fraction of the nodes of each side of --input')
        generate_parser.add_argument('--u_count', type=int, help='Number of U nodes')
        generate_parser.add_argument('--v_count', type=int, help='Number of V nodes')
        generate_parser.add_argument('--avg_degree_u', type=float, help='Average degree of the U nodes')
        generate_parser.add_argument('--avg_degree_v', type=float, help='Average degree of the V nodes')
        generate_parser.add_argument('--input', '-input', '-i', action=InputPathAction,
                                     help='Graph to sample from')
        generate_parser.add_argument('--format', '-format', dest='graph_format', default=GraphFormat.PLAIN.value,
                                     choices=[f.value for f in GraphFormat])
        generate_parser.add_argument('--seed', type=int, default=None, help='Random seed')
        generate_parser.add_argument('--out', '-out', '-o', default=None, help='Output file (default: stdout)')
        generate_parser.add_argument('--verbose', '-v', action='store_true', help='Log debug messages')
        generate_parser.add_argument('--quiet', '-q', action='store_true', help='Log errors only')
        generate_parser.set_defaults(func=self.run_generate)
        return generate_parser

    @staticmethod
    def _require(args, *names):
        missing = [f'--{name}' for name in names if getattr(args, name) is None]
        if missing:
            raise BicliqueArgumentError(f'generate needs {" and ".join(missing)} for this model')

    def run_generate(self, args):
        if args.probability is not None:
            self._require(args, 'u_count', 'v_count')
            if args.u_count < 0 or args.v_count < 0:
                raise BicliqueArgumentError('--u_count and --v_count must not be negative')
            g = random_bipartite(args.u_count, args.v_count, args.probability, args.seed)
        elif args.edges is not None:
            self._require(args, 'avg_degree_u', 'avg_degree_v')
            g = random_bipartite_with_degrees(args.edges, args.avg_degree_u, args.avg_degree_v, args.seed)
        else:
            self._require(args, 'input')
            try:
                source = read_graph_file(args.input, GraphFormat(args.graph_format)).graph
            except OSError as e:
                raise GraphParseError(f'Cannot read {args.input}: {e.strerror or e}') from e
            if args.sample_edges is not None:
                g = sample_edges(source, args.sample_edges, args.seed)
            else:
                g = sample_nodes(source, args.sample_nodes, args.seed)

        stats = graph_stats(g)
        logger.info(f'Generated {stats.u_count}x{stats.v_count} graph with {stats.edge_count} edges')
        if args.out:
            with open(args.out, 'w', encoding='utf-8') as fp:
                write_graph(g, fp)
        else:
            write_graph(g, sys.stdout)
