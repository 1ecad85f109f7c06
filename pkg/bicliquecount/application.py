import logging
import sys
from argparse import ArgumentParser, RawTextHelpFormatter

from bicliquecount.commands.console import setup_console_logging, set_console_log_level
from bicliquecount.engine.options import BicliqueArgumentError, SearchOptionsError
from bicliquecount.engine.state import SearchDepthExceeded
from bicliquecount.estimator.index import CostIndexError
from bicliquecount.graph.loader import GraphParseError
from bicliquecount.oracle.brute_force import OracleBudgetExceeded

logger = setup_console_logging(__name__)

EXIT_OK = 0
EXIT_ARGUMENTS = 2
EXIT_PARSE = 3
EXIT_RESOURCES = 4

EXIT_CODES = (
    ((BicliqueArgumentError, SearchOptionsError, CostIndexError), EXIT_ARGUMENTS),
    ((GraphParseError,), EXIT_PARSE),
    ((SearchDepthExceeded, OracleBudgetExceeded, MemoryError, RecursionError), EXIT_RESOURCES),
)


def exit_code_for(error: BaseException):
    for error_types, code in EXIT_CODES:
        if isinstance(error, error_types):
            return code
    return None


def main():
    # Need to call setup_console_logging like this as this module is always called from another.
    setup_console_logging("__main__")
    sys.exit(BicliqueBaseApp().run(sys_argv=sys.argv[1:]))


class BicliqueBaseApp:
    def __init__(self, count_app=None, index_app=None, info_app=None, generate_app=None):
        if not count_app:
            from bicliquecount.commands.counting import CountBaseApp
            count_app = CountBaseApp()
        self.count_app = count_app

        if not index_app:
            from bicliquecount.commands.indexing import IndexBaseApp
            index_app = IndexBaseApp()
        self.index_app = index_app

        if not info_app:
            from bicliquecount.info import InfoBaseApp
            info_app = InfoBaseApp()
        self.info_app = info_app

        if not generate_app:
            from bicliquecount.commands.generate import GenerateBaseApp
            generate_app = GenerateBaseApp()
        self.generate_app = generate_app
        self.arg_parser = None

    def run(self, sys_argv=None) -> int:
        if not self.arg_parser:
            self.arg_parser = self.create_arg_parser()

        try:
            arguments = self.arg_parser.parse_args(sys_argv)
        except SystemExit as e:
            # argparse already printed the usage error (or the help)
            return e.code if isinstance(e.code, int) else EXIT_ARGUMENTS

        # run default help
        if not hasattr(arguments, "func"):
            self.arg_parser.print_help()
            return EXIT_ARGUMENTS

        arguments.command_echo = ['bicliquecount'] + list(sys_argv if sys_argv is not None else sys.argv[1:])
        if getattr(arguments, 'verbose', False):
            set_console_log_level(logging.DEBUG)
        elif getattr(arguments, 'quiet', False):
            set_console_log_level(logging.ERROR)

        try:
            arguments.func(arguments)
        except Exception as e:
            code = exit_code_for(e)
            if code is None:
                raise
            logger.error(f'{type(e).__name__}: {e}', exc_info=getattr(arguments, 'verbose', False))
            return code
        return EXIT_OK

    def create_arg_parser(self, description=None) -> ArgumentParser:
        if not description:
            description = """
Exact (p,q)-biclique counting in bipartite graphs: global counts, per node counts and counts over a range of
biclique sizes, with a cost index choosing how each node is searched."""
        main_parser = ArgumentParser(prog='bicliquecount', description=description,
                                     formatter_class=RawTextHelpFormatter)
        sub_parser = main_parser.add_subparsers()

        self.count_app.create_count_sub_parser(sub_parser)
        self.count_app.create_local_sub_parser(sub_parser)
        self.count_app.create_range_sub_parser(sub_parser)
        self.index_app.create_index_sub_parser(sub_parser)
        self.info_app.create_stats_sub_parser(sub_parser)
        self.info_app.create_reduce_sub_parser(sub_parser)
        self.info_app.create_version_sub_parser(sub_parser)
        self.generate_app.create_generate_sub_parser(sub_parser)

        self.arg_parser = main_parser
        return main_parser
