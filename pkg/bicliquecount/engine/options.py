import json
import os
import sys
from typing import NamedTuple, Optional

MAX_DEPTH_ENV_NAME = 'BICLIQUE_MAX_DEPTH'
DEBUG_CHECKS_ENV_NAME = 'BICLIQUE_DEBUG_CHECKS'

DEFAULT_MAX_DEPTH = 5000
DEFAULT_COST_CEILING = 1e300

RANK_BY_CORE = 'core'
RANK_BY_ID = 'id'


class BicliqueArgumentError(ValueError):
    pass


class SearchOptionsError(Exception):
    pass


# Data-only representation of the engine knobs. This EXACTLY reflects what an options file may contain.
class SearchOptions(NamedTuple):
    core_reduction: bool = True
    rank_order: str = RANK_BY_CORE
    early_termination: bool = True

    # False recomputes every non-neighbor count at each search node instead of updating them on removal
    incremental_nonnbr: bool = True

    # recompute non-neighbor and edge counts at every search node and verify backtracking restores the state
    debug_checks: bool = False

    max_depth: int = DEFAULT_MAX_DEPTH
    workers: int = 1
    cost_ceiling: float = DEFAULT_COST_CEILING
    progress: bool = False


def _env_flag(value: str) -> bool:
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def options_from_env(options: Optional[SearchOptions] = None, environ=None) -> SearchOptions:
    options = options or SearchOptions()
    environ = os.environ if environ is None else environ
    overrides = {}
    if environ.get(MAX_DEPTH_ENV_NAME):
        try:
            overrides['max_depth'] = int(environ[MAX_DEPTH_ENV_NAME])
        except ValueError as e:
            raise SearchOptionsError(f'{MAX_DEPTH_ENV_NAME} must be an integer, got '
                                     f'{environ[MAX_DEPTH_ENV_NAME]!r}') from e
    if environ.get(DEBUG_CHECKS_ENV_NAME):
        overrides['debug_checks'] = _env_flag(environ[DEBUG_CHECKS_ENV_NAME])
    return validate_search_options(options._replace(**overrides))


def load_search_options(path: str, base: Optional[SearchOptions] = None) -> SearchOptions:
    try:
        with open(path) as fp:
            raw = json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        raise SearchOptionsError(f'Failed to load search options from {path}') from e
    if not isinstance(raw, dict):
        raise SearchOptionsError(f'{path} must contain a JSON object')
    unknown = set(raw) - set(SearchOptions._fields)
    if unknown:
        raise SearchOptionsError(f'Unknown search option(s) in {path}: {", ".join(sorted(unknown))}')
    return validate_search_options((base or SearchOptions())._replace(**raw))


def validate_search_options(options: SearchOptions) -> SearchOptions:
    if options.rank_order not in (RANK_BY_CORE, RANK_BY_ID):
        raise SearchOptionsError(f'rank_order must be {RANK_BY_CORE!r} or {RANK_BY_ID!r}')
    if options.max_depth < 1:
        raise SearchOptionsError('max_depth must be positive')
    if options.workers < 1:
        raise SearchOptionsError('workers must be positive')
    if not options.cost_ceiling > 0:
        raise SearchOptionsError('cost_ceiling must be positive')
    return options


def check_pq(p: int, q: int):
    if p < 1 or q < 1:
        raise BicliqueArgumentError(f'p and q must be at least 1, got p={p}, q={q}')


def ensure_recursion_limit(max_depth: int):
    # every search level costs a couple of interpreter frames
    needed = 2 * max_depth + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
