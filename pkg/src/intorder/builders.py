"""Explicit realizers for restricted interval orders.

* :func:`realizer_unit_oc` -- three extensions for posets with a unit-length
  representation mixing open, closed and half-open intervals.
* :func:`realizer_zero_one` -- three extensions for closed representations
  with lengths in ``{0, r}``.
* :func:`realizer_multi_length` -- ``3r + r(r-1)`` extensions for closed
  representations using ``r`` distinct lengths.

Each builder verifies its own output and raises :class:`SelfCheckFailed`
rather than return something that is not a realizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    GroundSetMismatch,
    Inconsistent,
    NotClosed,
    NotUnitMixed,
    NotZeroOne,
    SelfCheckFailed,
)
from .intervals import (
    MixedInterval,
    Representation,
    classify,
    is_consistent,
    open_all,
    poset_from_representation,
    scale,
)
from .poset import IncPair, Poset, Realizer, iter_bits, quotient_duplicates, reinflate_realizer, verify_realizer
from .reversal import CycleWitness, extension_separating, linear_extension_reversing


@dataclass(frozen=True)
class AntichainPartition:
    """Blocks ``A_1, ..., A_t`` (stored 0-based) from repeatedly removing minima."""

    blocks: tuple[tuple[str, ...], ...]

    def __len__(self):
        return len(self.blocks)

    def block_of(self) -> dict[str, int]:
        return {x: k for k, block in enumerate(self.blocks) for x in block}


def antichain_partition_minima(P: Poset) -> AntichainPartition:
    n = len(P)
    placed = 0
    blocks = []
    while placed != (1 << n) - 1:
        layer = [i for i in range(n) if not placed >> i & 1 and P.down[i] & ~placed == 0]
        for i in layer:
            placed |= 1 << i
        blocks.append(tuple(P.elements[i] for i in layer))
    return AntichainPartition(tuple(blocks))


def _check_input(P: Poset, rep: Mapping[str, MixedInterval]):
    try:
        ok = is_consistent(rep, P)
    except GroundSetMismatch as exc:
        raise Inconsistent(str(exc)) from None
    if not ok:
        raise Inconsistent("representation does not induce the given poset")


def _self_check(P: Poset, R: Realizer) -> Realizer:
    ok, uncovered = verify_realizer(P, R)
    if not ok:
        raise SelfCheckFailed("constructed realizer misses a pair", detail=list(uncovered))
    return R


def _reverse_or_fail(P: Poset, S) -> tuple[str, ...]:
    out = linear_extension_reversing(P, S)
    if isinstance(out, CycleWitness):
        raise SelfCheckFailed("pair set expected to be reversible is not", detail=out.to_json())
    return out


def _dual_blocks(blocks: Sequence[Sequence[str]], L1: Sequence[str]) -> list[list[str]]:
    pos = {x: k for k, x in enumerate(L1)}
    return [sorted(block, key=lambda x: -pos[x]) for block in blocks]


# -- unit intervals, any closure flags ------------------------------------


@dataclass(frozen=True)
class UnitOCConstruction:
    partition: AntichainPartition
    extensions: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]


def unit_oc_construction(P: Poset, rep: Mapping[str, MixedInterval]) -> UnitOCConstruction:
    """Raw three-extension construction, without duplicate handling or checks.

    Opening every interval gives a unit interval order ``Q`` with at least
    the comparabilities of ``P``; its height blocks are used to split the
    incomparable pairs of ``P``. Separation is applied to ``P`` itself, since
    consecutive-block pairs incomparable in ``P`` may be comparable in ``Q``.
    """
    Q = poset_from_representation(open_all(rep))
    partition = antichain_partition_minima(Q)
    even = [x for k, b in enumerate(partition.blocks) if k % 2 == 1 for x in b]
    odd = [x for k, b in enumerate(partition.blocks) if k % 2 == 0 for x in b]
    L1 = extension_separating(P, even, odd)
    L2 = extension_separating(P, odd, even)
    L3 = tuple(x for block in _dual_blocks(partition.blocks, L1) for x in block)
    return UnitOCConstruction(partition, (L1, L2, L3))


def realizer_unit_oc(P: Poset, rep: Mapping[str, MixedInterval]) -> Realizer:
    """Three-extension realizer for a poset with a unit mixed representation."""
    _check_input(P, rep)
    if not classify(rep).unit_mixed:
        raise NotUnitMixed("every interval must have length exactly 1")
    if len(P) == 0:
        return Realizer([(), (), ()])
    Pq, classes = quotient_duplicates(P)
    rep_q = Representation(rep).restrict(Pq.elements)
    built = unit_oc_construction(Pq, rep_q)
    return _self_check(P, reinflate_realizer(Realizer(built.extensions), classes))


# -- lengths 0 and 1 -----------------------------------------------------


@dataclass(frozen=True)
class ZeroOneDecomposition:
    unit_blocks: AntichainPartition
    thresholds: tuple[Fraction, ...]
    zero_buckets: tuple[tuple[str, ...], ...]
    pair_sets: tuple[frozenset, frozenset]


def _normalize_zero_one(rep: Mapping[str, MixedInterval]) -> Representation:
    info = classify(rep)
    if not info.all_closed:
        raise NotZeroOne("all intervals must be closed")
    positive = info.length_set - {0}
    if len(positive) > 1:
        raise NotZeroOne("more than one positive length", detail=[str(q) for q in sorted(positive)])
    rep = Representation(rep)
    if positive and positive != {1}:
        rep = scale(rep, 1 / next(iter(positive)))
    return rep


def zero_one_decomposition(P: Poset, rep: Mapping[str, MixedInterval]) -> ZeroOneDecomposition:
    """Blocks, thresholds, point buckets and the two pair sets for ``{0,1}`` input.

    ``rep`` must already be closed with lengths in ``{0, 1}``.
    """
    units = [x for x in P.elements if rep[x].length != 0]
    points = [x for x in P.elements if rep[x].length == 0]
    partition = antichain_partition_minima(P.subposet(units))
    t = len(partition)
    p = tuple(min(rep[x].right for x in block) for block in partition.blocks)

    buckets: list[list[str]] = [[] for _ in range(t + 1)]
    for d in sorted(points, key=lambda x: (rep[x].left, P.index[x])):
        c = rep[d].left
        # D_0: c <= p_1; D_i: p_i < c <= p_{i+1}; D_t: c > p_t
        k = 0
        while k < t and c > p[k]:
            k += 1
        buckets[k].append(d)

    # A[k] is block k (1-based); A_0 and A_{t+1} are empty
    A = [()] + list(partition.blocks) + [()]
    S1, S2 = set(), set()
    for k in range(t + 1):
        target = S1 if k % 2 == 1 else S2
        D = buckets[k]
        for lower, upper in ((A[k], A[k + 1]), (D, A[k + 1]), (A[k], D)):
            for x in lower:
                for y in upper:
                    if P.incomparable(x, y):
                        target.add(IncPair(x, y))
    return ZeroOneDecomposition(
        unit_blocks=partition,
        thresholds=p,
        zero_buckets=tuple(tuple(b) for b in buckets),
        pair_sets=(frozenset(S1), frozenset(S2)),
    )


def zero_one_extensions(P: Poset, dec: ZeroOneDecomposition) -> tuple[tuple[str, ...], ...]:
    S1, S2 = dec.pair_sets
    L1 = _reverse_or_fail(P, sorted(S1, key=lambda q: (P.index[q[0]], P.index[q[1]])))
    L2 = _reverse_or_fail(P, sorted(S2, key=lambda q: (P.index[q[0]], P.index[q[1]])))
    dual = _dual_blocks(dec.unit_blocks.blocks, L1)
    L3 = list(dec.zero_buckets[0])
    for block, bucket in zip(dual, dec.zero_buckets[1:]):
        L3.extend(block)
        L3.extend(bucket)
    return L1, L2, tuple(L3)


def realizer_zero_one(P: Poset, rep: Mapping[str, MixedInterval]) -> Realizer:
    """Three-extension realizer for a closed representation with lengths ``{0, r}``."""
    _check_input(P, rep)
    rep = _normalize_zero_one(rep)
    if len(P) == 0:
        return Realizer([(), (), ()])
    Pq, classes = quotient_duplicates(P)
    rep_q = rep.restrict(Pq.elements)
    exts = zero_one_extensions(Pq, zero_one_decomposition(Pq, rep_q))
    return _self_check(P, reinflate_realizer(Realizer(exts), classes))


# -- several lengths -----------------------------------------------------


def _lift(P: Poset, members: Sequence[str], L: Sequence[str]) -> tuple[str, ...]:
    """Extend a linear extension of the subposet on ``members`` to all of ``P``."""
    pos = {x: k for k, x in enumerate(L)}
    mask = P.mask(members)
    els = P.elements
    S = [
        (els[i], els[j])
        for i in iter_bits(mask)
        for j in iter_bits(P.inc_mask(i) & mask)
        if pos[els[i]] > pos[els[j]]
    ]
    return _reverse_or_fail(P, S)


def _class_realizer(sub: Poset, rep: Representation, length: Fraction) -> Realizer:
    if length == 0:
        return realizer_zero_one(sub, rep)
    return realizer_unit_oc(sub, scale(rep, 1 / length))


def realizer_multi_length(P: Poset, rep: Mapping[str, MixedInterval]) -> Realizer:
    """Realizer from length classes: three per class plus one per ordered class pair."""
    _check_input(P, rep)
    info = classify(rep)
    if not info.all_closed:
        raise NotClosed("all intervals must be closed")
    rep = Representation(rep)
    lengths = sorted(info.length_set)
    if len(lengths) <= 1:
        if not lengths:
            return Realizer([(), (), ()])
        return _class_realizer(P, rep, lengths[0])

    classes = [[x for x in P.elements if rep[x].length == ell] for ell in lengths]
    exts = []
    for members, ell in zip(classes, lengths):
        sub = P.subposet(members)
        for L in _class_realizer(sub, rep.restrict(sub.elements), ell):
            exts.append(_lift(P, members, L))
    for i, Ci in enumerate(classes):
        for j, Cj in enumerate(classes):
            if i != j:
                exts.append(extension_separating(P, Ci, Cj))
    return _self_check(P, Realizer(exts))
