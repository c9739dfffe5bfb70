"""Induced paths and geodesic cycles, and exhaustive checks of the two lemmas.

Per-graph routines work on any graph up to 16 vertices. The exhaustive
scans reuse the chunked enumerator; the induced-path scan tests every
candidate path pattern against whole chunks at once instead of calling the
per-graph search, which keeps n = 7 to a few seconds.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import permutations

import numpy as np

from ..codec import graph6_encode
from ..errors import OrderTooLarge
from ..graph import Graph, bits
from ..metrics import bfs_distances, metric_profile
from .enumeration import ProfileBatch, edge_index, mask_to_graph, scan_labeled

MAX_LEMMA_ORDER = 16


def _cap(g: Graph) -> None:
    if g.order > MAX_LEMMA_ORDER:
        raise OrderTooLarge(f"exact search is capped at {MAX_LEMMA_ORDER} vertices, got {g.order}")


def longest_induced_path_order(g: Graph) -> int:
    """Number of vertices of a longest induced path."""
    _cap(g)
    rows = g.rows
    n = g.order
    full = (1 << n) - 1
    best = 1

    def grow(last: int, length: int, blocked: int) -> None:
        # blocked: path vertices plus neighbours of every path vertex except `last`
        nonlocal best
        if length > best:
            best = length
        if length + (full & ~blocked).bit_count() <= best:
            return
        for x in bits(rows[last] & ~blocked):
            grow(x, length + 1, blocked | rows[last] | 1 << last | 1 << x)

    for v in range(n):
        grow(v, 1, 1 << v)
    return best


def _distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.order)]


def find_geodesic_cycle(g: Graph, length: int) -> list[int] | None:
    """A cycle of the given length whose cycle distances equal graph distances."""
    _cap(g)
    if length < 3 or length > g.order:
        return None
    dist = _distance_matrix(g)
    rows = g.rows
    n = g.order

    def ok(walk: list[int], x: int) -> bool:
        j = len(walk)
        for i, w in enumerate(walk):
            gap = j - i
            if dist[w][x] != min(gap, length - gap):
                return False
        return True

    def grow(walk: list[int], used: int) -> list[int] | None:
        if len(walk) == length:
            return walk
        start = walk[0]
        for x in bits(rows[walk[-1]] & ~used):
            # start is the smallest cycle vertex; second < last removes reflections
            if x < start:
                continue
            if len(walk) == length - 1 and x < walk[1]:
                continue
            if ok(walk, x):
                found = grow(walk + [x], used | 1 << x)
                if found:
                    return found
        return None

    for v in range(n):
        found = grow([v], 1 << v)
        if found:
            return found
    return None


def has_geodesic_cycle(g: Graph, lengths: Iterable[int]) -> bool:
    return any(find_geodesic_cycle(g, L) is not None for L in sorted(set(lengths)))


@dataclass(frozen=True)
class LemmaCheck:
    holds: bool
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.holds


def check_lemma2(g: Graph) -> LemmaCheck:
    """Radius ``r`` forces an induced path on ``2r - 1`` vertices."""
    _cap(g)
    r = metric_profile(g).radius
    return LemmaCheck(longest_induced_path_order(g) >= 2 * r - 1)


def lemma3_applies(n: int, r: int, d: int) -> bool:
    return n <= 3 * r - 2 and d <= 2 * r - 2


def check_lemma3(g: Graph) -> LemmaCheck:
    """If ``n <= 3r - 2`` and ``diam <= 2r - 2`` there is a geodesic ``2r``- or ``(2r+1)``-cycle."""
    _cap(g)
    prof = metric_profile(g)
    r = prof.radius
    if not lemma3_applies(g.order, r, prof.diameter):
        return LemmaCheck(True, vacuous=True)
    return LemmaCheck(has_geodesic_cycle(g, (2 * r, 2 * r + 1)))


@dataclass
class LemmaScanReport:
    lemma: str
    orders: list[int] = field(default_factory=list)
    connected_graphs: int = 0
    checked: int = 0
    vacuous: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: LemmaScanReport) -> LemmaScanReport:
        return LemmaScanReport(
            self.lemma,
            self.orders + other.orders,
            self.connected_graphs + other.connected_graphs,
            self.checked + other.checked,
            self.vacuous + other.vacuous,
            self.violations + other.violations,
        )


@lru_cache(maxsize=None)
def induced_path_patterns(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Edge masks (required, forbidden) for every induced ``k``-vertex path in ``K_n``."""
    need, forbid = [], []
    for seq in permutations(range(n), k):
        if k > 1 and seq[0] > seq[-1]:
            continue
        req = 0
        for a, b in zip(seq, seq[1:]):
            req |= 1 << edge_index(a, b)
        allp = 0
        for i in range(k):
            for j in range(i + 1, k):
                allp |= 1 << edge_index(seq[i], seq[j])
        need.append(req)
        forbid.append(allp & ~req)
    return np.array(need, dtype=np.uint32), np.array(forbid, dtype=np.uint32)


def _lemma2_part(batch: ProfileBatch) -> tuple[int, int, list[int]]:
    n = batch.n
    bad: list[int] = []
    for r in np.unique(batch.radius):
        r = int(r)
        k = 2 * r - 1
        sel = batch.masks[batch.radius == r]
        if k <= 1:
            continue
        need, forbid = induced_path_patterns(n, k)
        if sel.shape[0] >= need.shape[0]:
            found = np.zeros(sel.shape, dtype=bool)
            for req, no in zip(need, forbid):
                found |= ((sel & req) == req) & ((sel & no) == 0)
        else:
            found = np.array([bool((((m & need) == need) & ((m & forbid) == 0)).any()) for m in sel], dtype=bool)
        bad.extend(int(m) for m in sel[~found])
    connected = int(batch.masks.shape[0])
    return connected, connected, bad


def _lemma3_part(batch: ProfileBatch) -> tuple[int, int, list[int]]:
    n = batch.n
    r = batch.radius.astype(np.int64)
    d = batch.diameter.astype(np.int64)
    applies = (n <= 3 * r - 2) & (d <= 2 * r - 2)
    bad = []
    for m, rr in zip(batch.masks[applies], r[applies]):
        g = mask_to_graph(n, int(m))
        if not has_geodesic_cycle(g, (2 * int(rr), 2 * int(rr) + 1)):
            bad.append(int(m))
    return int(batch.masks.shape[0]), int(applies.sum()), bad


def _combine_lemma(lemma: str, n: int, parts: Iterable[tuple[int, int, list[int]]]) -> LemmaScanReport:
    report = LemmaScanReport(lemma, [n])
    for connected, checked, bad in parts:
        report.connected_graphs += connected
        report.checked += checked
        report.vacuous += connected - checked
        report.violations += [graph6_encode(mask_to_graph(n, m)) for m in bad]
    return report


def scan_lemma2(max_n: int, jobs: int | None = None, min_n: int = 2) -> LemmaScanReport:
    """Check the induced-path lemma on every connected labeled graph of order ``min_n..max_n``."""
    report = LemmaScanReport("induced-path")
    for n in range(min_n, max_n + 1):
        report = report.merge(scan_labeled(n, _lemma2_part, partial(_combine_lemma, "induced-path", n), jobs))
    return report


def scan_lemma3(max_n: int, jobs: int | None = None, min_n: int = 2) -> LemmaScanReport:
    """Check the geodesic-cycle lemma wherever its hypotheses hold, orders ``min_n..max_n``."""
    report = LemmaScanReport("geodesic-cycle")
    for n in range(min_n, max_n + 1):
        report = report.merge(scan_labeled(n, _lemma3_part, partial(_combine_lemma, "geodesic-cycle", n), jobs))
    return report
