import json
import os
import time
from contextlib import contextmanager
from tempfile import NamedTemporaryFile

import psutil


def silent_mkdir(path, exist_ok=True, **kwargs):
    if path:
        os.makedirs(path, exist_ok=exist_ok, **kwargs)


def write_json_atomically(data, path):
    silent_mkdir(os.path.dirname(path))

    # readers never see a half written file
    with NamedTemporaryFile(mode='w', encoding='utf-8', dir=os.path.dirname(path) or '.', delete=False) as f:
        json.dump(data,
                  fp=f,
                  sort_keys=True,
                  indent=4)
        f.flush()
        os.fsync(f.fileno())

    os.chmod(f.name, 0o644)
    os.replace(f.name, path)


def read_json(path):
    with open(path, encoding='utf-8') as fp:
        return json.load(fp)


def process_memory_mb() -> float:
    """Memory of this process in MiB (pss if available, else rss)."""
    try:
        mem_info = psutil.Process().memory_full_info()
    except psutil.AccessDenied:
        mem_info = psutil.Process().memory_info()
    return getattr(mem_info, 'pss', mem_info.rss) / (1024.0 * 1024.0)


class Stopwatch:
    def __init__(self):
        self.elapsed = 0.0

    @property
    def milliseconds(self) -> float:
        return self.elapsed * 1000.0

    @contextmanager
    def running(self):
        started = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed += time.perf_counter() - started
