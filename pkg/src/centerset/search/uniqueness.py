"""Uniqueness up to isomorphism, over exhaustive scans or graph6 corpora."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from ..codec import graph6_decode, graph6_encode
from ..errors import MixedOrders
from ..graph import Graph, is_connected
from ..metrics import metric_profile
from .enumeration import EnumerationSummary, mask_to_graph, select_masks
from .isomorphism import are_isomorphic

Predicate = Callable[[int, int, int], bool]


@dataclass(frozen=True)
class UniquenessReport:
    n: int
    r: int
    s: int
    reference: str
    is_unique: bool
    labeled_match_count: int
    counterexample: str | None = None


def unique_up_to_iso(n: int, r: int, s: int, reference: Graph, jobs: int | None = None) -> UniquenessReport:
    """Is every labeled graph of order ``n``, radius ``r``, center size ``s`` a copy of ``reference``?"""
    masks = select_masks(n, r, s, jobs)
    counterexample = None
    for m in masks:
        g = mask_to_graph(n, int(m))
        if not are_isomorphic(g, reference):
            counterexample = graph6_encode(g)
            break
    return UniquenessReport(
        n, r, s,
        reference=graph6_encode(reference),
        is_unique=counterexample is None and masks.shape[0] > 0,
        labeled_match_count=int(masks.shape[0]),
        counterexample=counterexample,
    )


def corpus_scan(
    records: Iterable[str],
    predicate: Predicate | None = None,
) -> tuple[EnumerationSummary, list[Graph]]:
    """Tabulate ``(radius, center size)`` over graph6 records of a single order.

    Disconnected records count towards ``total_graphs`` only. Connected graphs
    for which ``predicate(n, r, s)`` holds are returned.
    """
    summary: EnumerationSummary | None = None
    matches: list[Graph] = []
    for line in records:
        line = line.strip()
        if not line or line.startswith(">>graph6<<") and len(line) == len(">>graph6<<"):
            continue
        g = graph6_decode(line)
        if summary is None:
            summary = EnumerationSummary(g.order)
        elif g.order != summary.n:
            raise MixedOrders(f"corpus mixes orders {summary.n} and {g.order}")
        summary.total_graphs += 1
        if not is_connected(g):
            continue
        summary.connected_graphs += 1
        prof = metric_profile(g)
        size = len(prof.center)
        summary.add(prof.radius, size)
        if predicate is not None and predicate(g.order, prof.radius, size):
            matches.append(g)
    if summary is None:
        return EnumerationSummary(0), matches
    summary.table = {r: dict(sorted(row.items())) for r, row in sorted(summary.table.items())}
    return summary, matches


def unique_in_corpus(records: Iterable[str], r: int, s: int, reference: Graph) -> UniquenessReport:
    """Corpus counterpart of :func:`unique_up_to_iso` (counts records, not labelings)."""
    summary, matches = corpus_scan(records, lambda _n, rr, ss: rr == r and ss == s)
    counterexample = next((graph6_encode(g) for g in matches if not are_isomorphic(g, reference)), None)
    return UniquenessReport(
        summary.n or reference.order, r, s,
        reference=graph6_encode(reference),
        is_unique=counterexample is None and bool(matches),
        labeled_match_count=len(matches),
        counterexample=counterexample,
    )
