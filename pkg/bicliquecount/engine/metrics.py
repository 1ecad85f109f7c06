from dataclasses import dataclass, fields
from fractions import Fraction

from bicliquecount.engine.binomial import BigCount


@dataclass
class SearchMetrics:
    npc_calls: int = 0
    no_edge_leaves: int = 0  # leaves reached because no edge is left between the candidate sets
    hold_limit_leaves: int = 0  # leaves reached because a hold set is full
    early_terminations: int = 0
    node_split_roots: int = 0
    edge_split_roots: int = 0

    # every counted biclique lands in exactly one of these two
    counted_combinatorially: BigCount = 0
    counted_at_hold_limit: BigCount = 0

    @property
    def total(self) -> BigCount:
        return self.counted_combinatorially + self.counted_at_hold_limit

    @property
    def combinatorial_fraction(self) -> Fraction:
        total = self.total
        return Fraction(self.counted_combinatorially, total) if total else Fraction(0)

    def merge(self, other: 'SearchMetrics') -> 'SearchMetrics':
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def as_dict(self) -> dict:
        fraction = self.combinatorial_fraction
        return {
            **{f.name: str(getattr(self, f.name)) if f.name.startswith('counted_') else getattr(self, f.name)
               for f in fields(self)},
            'combinatorial_fraction': {
                'numerator': str(fraction.numerator),
                'denominator': str(fraction.denominator),
                'decimal': f'{float(fraction):.6f}',
            },
        }
