"""Reversing sets of incomparable pairs with a single linear extension.

A set ``S`` of incomparable pairs can be reversed by one linear extension
exactly when it contains no strict alternating cycle. We decide this by
topologically sorting ``P`` plus one edge ``v -> u`` for every ``(u, v)`` in
``S``; when the sort gets stuck, the directed cycle it finds is shortened
into a strict alternating cycle and returned as the certificate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InternalCycle, NotDisjoint, NotIntervalOrder, PairNotIncomparable
from .intervals import down_sets_form_chain, find_two_plus_two
from .poset import IncPair, Poset, iter_bits


@dataclass(frozen=True)
class CycleWitness:
    """Pairs ``(x_1, y_1), ..., (x_k, y_k)`` with ``x_i <= y_{i+1}`` cyclically."""

    pairs: tuple[IncPair, ...]

    def __len__(self):
        return len(self.pairs)

    def strict_comparabilities(self) -> int:
        """Number of links ``x_i <= y_{i+1}`` that are not equalities."""
        k = len(self.pairs)
        return sum(
            1 for i in range(k) if self.pairs[i].first != self.pairs[(i + 1) % k].second
        )

    def to_json(self) -> list:
        return [list(p) for p in self.pairs]


def is_strict_alternating_cycle(P: Poset, pairs: Sequence[tuple[str, str]]) -> bool:
    """Check the defining conditions literally, with reflexive ``<=``."""
    k = len(pairs)
    if k < 2:
        return False
    for i in range(k):
        x = pairs[i][0]
        for j in range(k):
            y = pairs[j][1]
            if j == (i + 1) % k:
                if not P.leq(x, y):
                    return False
            elif not P.incomparable(x, y):
                return False
    return True


def _check_pairs(P: Poset, S: Iterable[tuple[str, str]]) -> list[tuple[int, int]]:
    out = []
    for u, v in S:
        i, j = P.idx(u), P.idx(v)
        if i == j or not P.inc_mask(i) >> j & 1:
            raise PairNotIncomparable(f"({u!r}, {v!r}) is not an incomparable pair", detail=[u, v])
        out.append((i, j))
    return out


def _shorten(P: Poset, cyc: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Shortcut an alternating cycle (index pairs) until it is strict."""

    def leq(a, b):
        return a == b or bool(P.up[a] >> b & 1)

    while True:
        k = len(cyc)
        for i in range(k):
            x = cyc[i][0]
            for j in range(k):
                if j == (i + 1) % k or j == i:
                    continue
                y = cyc[j][1]
                if leq(x, y):
                    # x_i <= y_j: keep pairs j, j+1, ..., i
                    span = (i - j) % k + 1
                    cyc = [cyc[(j + s) % k] for s in range(span)]
                    break
                if leq(y, x):
                    # x_{j-1} <= y_j <= x_i <= y_{i+1}: keep pairs i+1, ..., j-1
                    span = (j - i - 2) % k + 1
                    cyc = [cyc[(i + 1 + s) % k] for s in range(span)]
                    break
            else:
                continue
            break
        else:
            return cyc


def _sort_or_cycle(P: Poset, idx_pairs: list[tuple[int, int]]):
    n = len(P)
    succ = list(P.up)
    for u, v in idx_pairs:
        succ[v] |= 1 << u
    indeg = [0] * n
    for i in range(n):
        for j in iter_bits(succ[i]):
            indeg[j] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in iter_bits(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(order) == n:
        return order, None

    remaining = (1 << n) - 1
    for i in order:
        remaining &= ~(1 << i)
    pred = [0] * n
    for i in iter_bits(remaining):
        for j in iter_bits(succ[i] & remaining):
            pred[j] |= 1 << i
    # every remaining node has a remaining predecessor; walk back until a repeat
    node = (remaining & -remaining).bit_length() - 1
    seen: dict[int, int] = {}
    path = []
    while node not in seen:
        seen[node] = len(path)
        path.append(node)
        node = (pred[node] & -pred[node]).bit_length() - 1
    back = path[seen[node]:]
    nodes = back[::-1]

    reversed_edges = {(v, u) for u, v in idx_pairs}
    m = len(nodes)
    s_edges = []
    for s in range(m):
        a, b = nodes[s], nodes[(s + 1) % m]
        if (a, b) in reversed_edges:
            s_edges.append((b, a))
    return None, _shorten(P, s_edges)


def linear_extension_reversing(P: Poset, S: Iterable[tuple[str, str]]):
    """Linear extension placing ``u`` above ``v`` for each ``(u, v)`` in ``S``.

    Returns the extension as a tuple of ids, or a :class:`CycleWitness` found
    inside ``S`` when no such extension exists. Ties among available
    elements are broken by lowest index, so output is deterministic.
    """
    idx_pairs = _check_pairs(P, S)
    order, cyc = _sort_or_cycle(P, idx_pairs)
    if order is not None:
        return tuple(P.elements[i] for i in order)
    els = P.elements
    return CycleWitness(tuple(IncPair(els[x], els[y]) for x, y in cyc))


def find_strict_alternating_cycle(P: Poset, S: Iterable[tuple[str, str]]) -> CycleWitness | None:
    out = linear_extension_reversing(P, S)
    return out if isinstance(out, CycleWitness) else None


def extension_separating(Q: Poset, A: Iterable[str], B: Iterable[str]) -> tuple[str, ...]:
    """Linear extension of interval order ``Q`` with every ``a`` above every incomparable ``b``."""
    A, B = list(A), list(B)
    amask, bmask = Q.mask(A), Q.mask(B)
    if amask & bmask:
        raise NotDisjoint("A and B must be disjoint", detail=sorted(Q.ids(amask & bmask)))
    if not down_sets_form_chain(Q):
        raise NotIntervalOrder("separation needs an interval order", witness=find_two_plus_two(Q))
    els = Q.elements
    S = [(els[a], els[b]) for a in iter_bits(amask) for b in iter_bits(Q.inc_mask(a) & bmask)]
    out = linear_extension_reversing(Q, S)
    if isinstance(out, CycleWitness):
        raise InternalCycle("separating pair set is not reversible", detail=out.to_json())
    return out
