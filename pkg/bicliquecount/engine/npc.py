from bicliquecount.engine.binomial import BigCount
from bicliquecount.engine.counters import LeafCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.options import SearchOptions
from bicliquecount.engine.pivots import find_pivots, min_nonneighbor_partition
from bicliquecount.engine.state import SearchDepthExceeded, SearchState, StateIntegrityError

_DEFAULT_OPTIONS = SearchOptions()


def _count_leaf(state: SearchState, counter: LeafCounter, metrics: SearchMetrics) -> BigCount:
    value = counter.leaf(state)
    if counter.at_hold_limit(state):
        metrics.hold_limit_leaves += 1
        metrics.counted_at_hold_limit += value
    else:
        metrics.no_edge_leaves += 1
        metrics.counted_combinatorially += value
    return value


def npc_count(state: SearchState,
              counter: LeafCounter,
              metrics: SearchMetrics,
              options: SearchOptions = _DEFAULT_OPTIONS,
              depth: int = 0) -> BigCount:
    """
    Count the bicliques (X, Y) with H_U ⊆ X ⊆ H_U ∪ P_U ∪ C_U and H_V ⊆ Y ⊆ H_V ∪ P_V ∪ C_V.

    The state is handed back exactly as it was received.
    """
    metrics.npc_calls += 1
    if depth > options.max_depth:
        raise SearchDepthExceeded(f'Search depth exceeded the cap of {options.max_depth}')
    if not state.incremental:
        state.recompute()
    if options.debug_checks:
        state.verify()
        at_entry = state.snapshot()

    if counter.is_leaf(state):
        value = _count_leaf(state, counter, metrics)
    else:
        entry = state.mark()
        try:
            value = _branch(state, counter, metrics, options, depth)
        finally:
            state.undo(entry)

    if options.debug_checks and state.snapshot() != at_entry:
        raise StateIntegrityError(f'Search state at depth {depth} was not restored on backtrack')
    return value


def _branch(state: SearchState, counter: LeafCounter, metrics: SearchMetrics, options: SearchOptions,
            depth: int) -> BigCount:
    find_pivots(state)
    if not state.incremental:
        state.recompute()

    if options.early_termination:
        value = counter.terminate_early(state)
        if value is not None:
            metrics.early_terminations += 1
            metrics.counted_combinatorially += value
            return value

    if state.edge_count == 0:
        return _count_leaf(state, counter, metrics)

    partition = min_nonneighbor_partition(state)
    side = partition.side
    total = 0
    for x in partition.nodes:
        # x leaves the candidates for good at this level; only its own branch holds it
        state.remove_candidate(side, x)
        mark = state.mark()
        state.restrict_to_neighbors(side, x)
        state.hold(side, x)
        total += npc_count(state, counter, metrics, options, depth + 1)
        state.undo(mark)
    return total + npc_count(state, counter, metrics, options, depth + 1)
