import datetime
import json
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pytz

from bicliquecount import __version__
from bicliquecount.common import process_memory_mb, read_json, write_json_atomically
from bicliquecount.graph.bipartite import GraphStats


def stats_as_dict(stats: GraphStats) -> dict:
    return {f.name: getattr(stats, f.name) for f in fields(stats)}


def convert_to_serializable(obj):
    # ints are written as decimal strings by the callers, so only containers and rationals need help here
    if isinstance(obj, Fraction):
        return {'numerator': str(obj.numerator), 'denominator': str(obj.denominator), 'decimal': f'{float(obj):.6f}'}
    if isinstance(obj, dict):
        return {str(k): convert_to_serializable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [convert_to_serializable(v) for v in obj]
    return obj


def utc_now_iso() -> str:
    return datetime.datetime.now(tz=pytz.utc).isoformat()


@dataclass
class RunReport:
    command: List[str]
    subcommand: str
    graph: Dict[str, Any]
    parameters: Dict[str, Any]
    strategy: Optional[str] = None
    counts: Dict[str, Any] = field(default_factory=dict)  # decimal strings
    metrics: Optional[Dict[str, Any]] = None
    wall_clock_ms: float = 0.0
    index_build_ms: Optional[float] = None
    memory_mb: float = 0.0
    started_at: str = field(default_factory=utc_now_iso)
    version: str = __version__

    def finish(self, wall_clock_ms: float) -> 'RunReport':
        self.wall_clock_ms = round(wall_clock_ms, 3)
        self.memory_mb = round(process_memory_mb(), 1)
        return self

    def as_dict(self) -> dict:
        return convert_to_serializable(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=4)


def write_report_file(report: RunReport, report_file: str):
    write_json_atomically(report.as_dict(), report_file)


def load_report(report_file: str) -> RunReport:
    raw = read_json(report_file)
    names = {f.name for f in fields(RunReport)}
    return RunReport(**{k: v for k, v in raw.items() if k in names})
