from abc import ABC, abstractmethod
from typing import Optional

from bicliquecount.engine.binomial import BigCount
from bicliquecount.engine.pivots import count_contribution, early_terminate
from bicliquecount.engine.state import SearchState


class LeafCounter(ABC):
    """
    What the search does where it stops branching.

    The search itself only sums the values returned here; a counter may also accumulate mode specific results
    (per node vectors, range matrices). Hold sets are limited to p_limit U nodes and q_limit V nodes.
    """
    track_members = False

    def __init__(self, p_limit: int, q_limit: int):
        self.p_limit = p_limit
        self.q_limit = q_limit

    def at_hold_limit(self, state: SearchState) -> bool:
        return state.hold_size[0] >= self.p_limit or state.hold_size[1] >= self.q_limit

    def is_leaf(self, state: SearchState) -> bool:
        return state.edge_count == 0 or self.at_hold_limit(state)

    @abstractmethod
    def leaf(self, state: SearchState) -> BigCount:
        """Account for every biclique encoded by a leaf and return how many there are."""

    @abstractmethod
    def terminate_early(self, state: SearchState) -> Optional[BigCount]:
        """Count a search node without branching, or None when the search must go on."""

    @abstractmethod
    def spawn(self) -> 'LeafCounter':
        """An empty counter with the same parameters, for a worker."""

    def absorb(self, other: 'LeafCounter'):
        """Add the accumulated results of a worker's counter to this one."""


class SingleCounter(LeafCounter):
    def __init__(self, p: int, q: int):
        super().__init__(p, q)
        self.p = p
        self.q = q

    def leaf(self, state: SearchState) -> BigCount:
        return count_contribution(*state.sizes(), self.p, self.q)

    def terminate_early(self, state: SearchState) -> Optional[BigCount]:
        return early_terminate(state, self.p, self.q)

    def spawn(self) -> 'SingleCounter':
        return SingleCounter(self.p, self.q)
