"""Exact order dimension for small posets.

The dimension is the least ``t`` such that the ordered incomparable pairs can
be split into ``t`` sets, each reversible by one linear extension. We try
``t = 2, 3, ...`` and backtrack over bucket assignments. Every bucket keeps
the transitive closure of ``P`` plus the reversals assigned to it, so a
bucket becomes infeasible exactly when the new reversal would close a
cycle, i.e. when the bucket's pair set gains an alternating cycle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import IsChain, LimitExceeded, NotUnitInterval, SizeBound
from .instances import DIMENSION_THREE_UNIT_PATTERNS
from .intervals import is_unit_interval_order
from .poset import Poset, Realizer, contains_subposet, iter_bits, quotient_duplicates, reinflate_realizer, verify_realizer
from .reversal import linear_extension_reversing

log = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 14


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    realizer: Realizer
    nodes_explored: int = 0
    refuted: dict = field(default_factory=dict)
    """``{t: search nodes}`` for every ``t < dimension`` shown impossible."""

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "realizer": self.realizer.to_json(),
            "certificate": {
                "nodes_explored": self.nodes_explored,
                "refuted": {str(t): n for t, n in sorted(self.refuted.items())},
            },
        }


class _Search:
    def __init__(self, P: Poset):
        self.P = P
        n = len(P)
        self.n = n
        self.pairs = [(u, v) for u in range(n) for v in iter_bits(P.inc_mask(u))]
        self.pairs = self._by_conflict_degree(self.pairs)
        self.nodes = 0

    def _by_conflict_degree(self, pairs):
        up = self.P.up

        def leq(a, b):
            return a == b or bool(up[a] >> b & 1)

        # (x1,y1), (x2,y2) is a 2-cycle when x1 <= y2 and x2 <= y1
        degree = [0] * len(pairs)
        for a, (x1, y1) in enumerate(pairs):
            for b in range(a + 1, len(pairs)):
                x2, y2 = pairs[b]
                if leq(x1, y2) and leq(x2, y1):
                    degree[a] += 1
                    degree[b] += 1
        order = sorted(range(len(pairs)), key=lambda k: -degree[k])
        return [pairs[k] for k in order]

    def _add(self, above, u, v):
        """Closure after forcing ``v`` below ``u``."""
        new = list(above)
        addmask = (1 << u) | above[u]
        for w in range(self.n):
            if w == v or above[w] >> v & 1:
                new[w] |= addmask
        return new

    def run(self, t: int):
        buckets = [list(self.P.up) for _ in range(t)]
        pairs = self.pairs

        def rec(used: int) -> bool:
            self.nodes += 1
            best = None
            best_opts = None
            span = min(used + 1, t)
            for u, v in pairs:
                if any(b[v] >> u & 1 for b in buckets[:used]):
                    continue
                opts = [k for k in range(span) if not buckets[k][u] >> v & 1]
                if not opts:
                    return False
                if best is None or len(opts) < len(best_opts):
                    best, best_opts = (u, v), opts
                    if len(opts) == 1:
                        break
            if best is None:
                return True
            u, v = best
            for k in best_opts:
                saved = buckets[k]
                buckets[k] = self._add(saved, u, v)
                if rec(max(used, k + 1)):
                    return True
                buckets[k] = saved
            return False

        if not rec(0):
            return None
        exts = []
        for b in buckets:
            closure = Poset(self.P.elements, b)
            exts.append(linear_extension_reversing(closure, []))
        return Realizer(exts)


def exact_dimension(P: Poset, limit: int | None = None, max_size: int = DEFAULT_MAX_SIZE) -> DimensionResult:
    """Dimension of ``P`` with a verified witness realizer.

    Raises :class:`LimitExceeded` when the dimension is larger than
    ``limit`` and :class:`SizeBound` when ``P`` has more than ``max_size``
    elements.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    if len(P) > max_size:
        raise SizeBound(f"{len(P)} elements exceeds the bound of {max_size}", detail=max_size)
    if P.is_chain():
        return DimensionResult(1, Realizer([linear_extension_reversing(P, [])]))
    if limit == 1:
        raise LimitExceeded("dimension exceeds 1", detail=1)

    # twins do not change dimension once it is at least 2
    Pq, classes = quotient_duplicates(P)
    search = _Search(Pq)
    refuted = {1: 0}
    t = 2
    while True:
        if limit is not None and t > limit:
            raise LimitExceeded(f"dimension exceeds {limit}", detail=limit)
        before = search.nodes
        Rq = search.run(t)
        log.debug("t=%d explored %d nodes", t, search.nodes - before)
        if Rq is not None:
            break
        refuted[t] = search.nodes - before
        t += 1
    R = reinflate_realizer(Rq, classes)
    ok, uncovered = verify_realizer(P, R)
    if not ok:
        raise AssertionError(f"oracle produced a non-realizer, uncovered {uncovered}")
    return DimensionResult(t, R, search.nodes, refuted)


def dimension(P: Poset, **kwargs) -> int:
    return exact_dimension(P, **kwargs).dimension


def unit_dim3_by_pattern(P: Poset) -> bool:
    """Does a non-chain unit interval order contain FX2, H0 or G0?"""
    if not is_unit_interval_order(P):
        raise NotUnitInterval("poset is not a unit interval order")
    if P.is_chain():
        raise IsChain("poset is a chain")
    return any(contains_subposet(P, F) is not None for F in DIMENSION_THREE_UNIT_PATTERNS)
