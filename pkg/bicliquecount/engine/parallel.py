"""Process pool execution of top-level roots. Workers share nothing mutable; results merge in root order."""
import math
import multiprocessing
from typing import Sequence

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.engine.binomial import BigCount
from bicliquecount.engine.counters import LeafCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.options import SearchOptions, ensure_recursion_limit
from bicliquecount.engine.toplevel import count_roots

logger = setup_console_logging(__name__)

CHUNKS_PER_WORKER = 4

_worker_context = {}


def _init_worker(prepared, counter, decisions, options):
    _worker_context.update(prepared=prepared, counter=counter, decisions=decisions, options=options)


def _count_chunk(roots):
    options = _worker_context['options']
    ensure_recursion_limit(options.max_depth)
    prepared = _worker_context['prepared']
    counter = _worker_context['counter'].spawn()
    metrics = SearchMetrics()
    total = count_roots(prepared.graph, prepared.rank, roots, _worker_context['decisions'], counter, metrics,
                        options)
    return total, counter, metrics


def root_chunks(root_count: int, workers: int):
    size = max(1, math.ceil(root_count / (workers * CHUNKS_PER_WORKER)))
    return [range(start, min(start + size, root_count)) for start in range(0, root_count, size)]


def count_roots_in_pool(prepared,
                        counter: LeafCounter,
                        decisions: Sequence[bool],
                        metrics: SearchMetrics,
                        options: SearchOptions) -> BigCount:
    chunks = root_chunks(prepared.graph.u_count, options.workers)
    logger.debug(f'Counting {prepared.graph.u_count} roots in {len(chunks)} chunks on {options.workers} workers')
    total = 0
    with multiprocessing.Pool(processes=options.workers,
                              initializer=_init_worker,
                              initargs=(prepared, counter.spawn(), list(decisions), options)) as pool:
        # imap keeps chunk order, so merging is deterministic
        for chunk_total, chunk_counter, chunk_metrics in pool.imap(_count_chunk, chunks):
            total += chunk_total
            counter.absorb(chunk_counter)
            metrics.merge(chunk_metrics)
    return total
