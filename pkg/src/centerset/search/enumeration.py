"""Exhaustive scans over every labeled graph on ``n <= 8`` vertices.

A labeled graph is an upper-triangle edge mask: bit ``e`` is the pair
``edge_pairs(n)[e]``, listed in graph6 column order (0,1),(0,2),(1,2),(0,3),...

Masks are processed in chunks as numpy arrays. Each adjacency row is a
``uint8`` bitset, so one BFS level for a whole chunk is ``n`` vectorised
OR/AND passes. Chunks are independent and their results merge by addition
or concatenation, so the outcome never depends on the worker count.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Any

import numpy as np

from ..errors import OrderTooLarge
from ..graph import Graph

MAX_ENUMERATION_ORDER = 8
JOBS_ENV = "CENTERSET_JOBS"
_CHUNK_BITS = 20


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def edge_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def mask_to_graph(n: int, mask: int) -> Graph:
    rows = [0] * n
    for e, (i, j) in enumerate(edge_pairs(n)):
        if mask >> e & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for i, j in g.edges():
        mask |= 1 << edge_index(i, j)
    return mask


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _check_order(n: int) -> None:
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(
            f"exhaustive enumeration is capped at n={MAX_ENUMERATION_ORDER} "
            f"(got n={n}); supply a graph6 corpus instead"
        )
    if n < 2:
        raise OrderTooLarge(f"exhaustive enumeration needs n >= 2, got n={n}")


@dataclass
class ProfileBatch:
    """Metrics for the connected graphs among one chunk of masks."""

    n: int
    total: int
    masks: np.ndarray
    radius: np.ndarray
    diameter: np.ndarray
    center_size: np.ndarray


def _adjacency_rows(n: int, masks: np.ndarray) -> list[np.ndarray]:
    rows = [np.zeros(masks.shape, dtype=np.uint8) for _ in range(n)]
    for e, (i, j) in enumerate(edge_pairs(n)):
        bit = ((masks >> e) & 1).astype(np.uint8)
        rows[i] |= bit << j
        rows[j] |= bit << i
    return rows


def _eccentricity(n: int, rows: list[np.ndarray], v: int) -> tuple[np.ndarray, np.ndarray]:
    size = rows[0].shape[0]
    seen = np.full(size, 1 << v, dtype=np.uint8)
    frontier = seen.copy()
    ecc = np.zeros(size, dtype=np.uint8)
    for _ in range(n - 1):
        nxt = np.zeros(size, dtype=np.uint8)
        for u in range(n):
            nxt |= rows[u] * ((frontier >> u) & 1)
        nxt &= ~seen
        if not nxt.any():
            break
        ecc += nxt != 0
        seen |= nxt
        frontier = nxt
    return ecc, seen


def profile_masks(n: int, masks: np.ndarray) -> ProfileBatch:
    masks = np.asarray(masks, dtype=np.uint32)
    full = (1 << n) - 1
    rows = _adjacency_rows(n, masks)
    ecc0, seen0 = _eccentricity(n, rows, 0)
    keep = seen0 == full
    masks_c = masks[keep]
    rows = [row[keep] for row in rows]
    ecc = np.empty((n, masks_c.shape[0]), dtype=np.uint8)
    ecc[0] = ecc0[keep]
    for v in range(1, n):
        ecc[v] = _eccentricity(n, rows, v)[0]
    rad = ecc.min(axis=0)
    return ProfileBatch(
        n=n,
        total=int(masks.shape[0]),
        masks=masks_c,
        radius=rad,
        diameter=ecc.max(axis=0),
        center_size=(ecc == rad).sum(axis=0).astype(np.uint8),
    )


def _chunks(n: int) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    step = min(total, 1 << _CHUNK_BITS)
    return [(lo, lo + step) for lo in range(0, total, step)]


def _run_chunk(job: tuple[Callable[[ProfileBatch], Any], int, int, int]) -> Any:
    worker, n, lo, hi = job
    return worker(profile_masks(n, np.arange(lo, hi, dtype=np.uint32)))


def scan_labeled(
    n: int,
    worker: Callable[[ProfileBatch], Any],
    combine: Callable[[Iterable[Any]], Any],
    jobs: int | None = None,
) -> Any:
    """Apply ``worker`` to every chunk of labeled graphs and ``combine`` the parts.

    ``worker`` must be picklable (a module-level function or a
    ``functools.partial`` of one) when ``jobs > 1``. Parts reach ``combine``
    in chunk order.
    """
    _check_order(n)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    tasks = [(worker, n, lo, hi) for lo, hi in _chunks(n)]
    if jobs == 1 or len(tasks) == 1:
        return combine(map(_run_chunk, tasks))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return combine(pool.map(_run_chunk, tasks))


@dataclass
class EnumerationSummary:
    """Observed ``(radius, center size)`` pairs over a set of graphs of one order."""

    n: int
    total_graphs: int = 0
    connected_graphs: int = 0
    table: dict[int, dict[int, int]] = field(default_factory=dict)

    def add(self, radius: int, center_size: int, count: int = 1) -> None:
        row = self.table.setdefault(radius, {})
        row[center_size] = row.get(center_size, 0) + count

    def merge(self, other: EnumerationSummary) -> EnumerationSummary:
        if other.n != self.n:
            raise ValueError("cannot merge summaries of different orders")
        out = EnumerationSummary(self.n, self.total_graphs + other.total_graphs,
                                 self.connected_graphs + other.connected_graphs)
        for src in (self.table, other.table):
            for r, row in src.items():
                for s, c in row.items():
                    out.add(r, s, c)
        out.table = _sorted_table(out.table)
        return out

    def observed(self) -> dict[int, list[int]]:
        return {r: sorted(row) for r, row in sorted(self.table.items())}


def _sorted_table(table: dict[int, dict[int, int]]) -> dict[int, dict[int, int]]:
    return {r: dict(sorted(row.items())) for r, row in sorted(table.items())}


def _summary_part(batch: ProfileBatch) -> tuple[int, int, np.ndarray]:
    key = batch.radius.astype(np.int64) * 16 + batch.center_size
    return batch.total, int(batch.masks.shape[0]), np.bincount(key, minlength=16 * 16)


def _summary_combine(n: int, parts: Iterable[tuple[int, int, np.ndarray]]) -> EnumerationSummary:
    total = connected = 0
    counts = np.zeros(16 * 16, dtype=np.int64)
    for t, c, hist in parts:
        total += t
        connected += c
        counts[: hist.shape[0]] += hist
    summary = EnumerationSummary(n, total, connected)
    for key in np.flatnonzero(counts):
        summary.add(int(key) // 16, int(key) % 16, int(counts[key]))
    summary.table = _sorted_table(summary.table)
    return summary


def enumerate_labeled(n: int, jobs: int | None = None) -> EnumerationSummary:
    """Scan all ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices."""
    return scan_labeled(n, _summary_part, partial(_summary_combine, n), jobs)


def empirical_omega(n: int, jobs: int | None = None) -> dict[int, list[int]]:
    """Observed center sizes per radius, over all connected graphs of order ``n``."""
    if n < 3:
        raise OrderTooLarge(f"empirical_omega needs n >= 3, got n={n}")
    return enumerate_labeled(n, jobs).observed()


def _select_part(r: int, s: int, batch: ProfileBatch) -> np.ndarray:
    return batch.masks[(batch.radius == r) & (batch.center_size == s)]


def _concat(parts: Iterable[np.ndarray]) -> np.ndarray:
    parts = list(parts)
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint32)


def select_masks(n: int, r: int, s: int, jobs: int | None = None) -> np.ndarray:
    """Edge masks of every labeled graph with radius ``r`` and center size ``s``."""
    return scan_labeled(n, partial(_select_part, r, s), _concat, jobs)
