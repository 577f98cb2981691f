"""Mixed open/closed intervals with exact rational endpoints.

Whether two intervals sharing an endpoint overlap depends only on the
closure flags at that endpoint, so all arithmetic is done with
:class:`fractions.Fraction` and never with floats.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    DegenerateInterval,
    EmptyInterval,
    GroundSetMismatch,
    NotIntervalOrder,
    ParseError,
)
from .poset import Poset, build_poset, contains_subposet

_RATIONAL_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(value) -> Fraction:
    """Parse an endpoint given as an int or a ``"p/q"`` / ``"n"`` string.

    Floats (and decimal strings) are rejected: the wire format is exact.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator: {value!r}") from None
    raise ParseError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class MixedInterval:
    """Bounded interval with independent closure at each end."""

    left: Fraction
    right: Fraction
    left_closed: bool = True
    right_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "left", Fraction(self.left))
        object.__setattr__(self, "right", Fraction(self.right))
        if self.left > self.right:
            raise EmptyInterval(f"left endpoint exceeds right: {self}")
        if self.left == self.right and not (self.left_closed and self.right_closed):
            raise EmptyInterval(f"degenerate interval must be closed: {self}")

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    @property
    def closed(self) -> bool:
        return self.left_closed and self.right_closed

    @property
    def open(self) -> bool:
        return not self.left_closed and not self.right_closed

    def __str__(self):
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        return f"{lb}{self.left},{self.right}{rb}"

    def to_json(self) -> dict:
        return {
            "left": format_rational(self.left),
            "right": format_rational(self.right),
            "left_closed": self.left_closed,
            "right_closed": self.right_closed,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MixedInterval":
        try:
            flags = doc.get("left_closed", True), doc.get("right_closed", True)
            if not all(isinstance(f, bool) for f in flags):
                raise ParseError("closure flags must be booleans")
            return cls(parse_rational(doc["left"]), parse_rational(doc["right"]), *flags)
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed interval: {exc}") from None


def closed(a, b) -> MixedInterval:
    return MixedInterval(Fraction(a), Fraction(b), True, True)


def open_(a, b) -> MixedInterval:
    return MixedInterval(Fraction(a), Fraction(b), False, False)


def point(c) -> MixedInterval:
    return MixedInterval(Fraction(c), Fraction(c), True, True)


def precedes(I: MixedInterval, J: MixedInterval) -> bool:
    """True iff ``I`` lies entirely to the left of ``J``."""
    if I.right != J.left:
        return I.right < J.left
    return not (I.right_closed and J.left_closed)


def intersects(I: MixedInterval, J: MixedInterval) -> bool:
    return not precedes(I, J) and not precedes(J, I)


class Representation(Mapping):
    """Immutable map from element ids to :class:`MixedInterval`, in insertion order."""

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Mapping[str, MixedInterval] | Iterable[tuple[str, MixedInterval]] = ()):
        self._intervals = dict(intervals)

    def __getitem__(self, x):
        return self._intervals[x]

    def __iter__(self) -> Iterator[str]:
        return iter(self._intervals)

    def __len__(self):
        return len(self._intervals)

    def __repr__(self):
        body = ", ".join(f"{x}: {I}" for x, I in self._intervals.items())
        return f"Representation({{{body}}})"

    def __eq__(self, other):
        if isinstance(other, Representation):
            return self._intervals == other._intervals
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._intervals.items()))

    def restrict(self, ids: Iterable[str]) -> "Representation":
        return Representation((x, self._intervals[x]) for x in ids)

    def to_json(self) -> dict:
        return {"intervals": {x: I.to_json() for x, I in self._intervals.items()}}

    @classmethod
    def from_json(cls, doc: dict) -> "Representation":
        try:
            items = doc["intervals"].items()
        except (KeyError, AttributeError, TypeError) as exc:
            raise ParseError(f"malformed representation: {exc}") from None
        return cls((x, MixedInterval.from_json(I)) for x, I in items)


def poset_from_representation(rep: Mapping[str, MixedInterval]) -> Poset:
    ids = list(rep)
    ivs = [rep[x] for x in ids]
    rank = {q: k for k, q in enumerate(sorted({I.left for I in ivs} | {I.right for I in ivs}))}
    # integer keys with precedes(I, J) iff rkey(I) <= lkey(J)
    rkeys = [2 * rank[I.right] + I.right_closed for I in ivs]
    lkeys = [2 * rank[I.left] + (not I.left_closed) for I in ivs]
    by_left = sorted(range(len(ivs)), key=lkeys.__getitem__, reverse=True)
    # suffix[k]: mask of the k intervals with the largest left keys
    suffix = [0]
    for j in by_left:
        suffix.append(suffix[-1] | 1 << j)
    sorted_lkeys = [lkeys[j] for j in by_left]
    up = []
    for r in rkeys:
        lo, hi = 0, len(sorted_lkeys)
        while lo < hi:
            mid = (lo + hi) // 2
            if sorted_lkeys[mid] >= r:
                lo = mid + 1
            else:
                hi = mid
        up.append(suffix[lo])
    # precedence between intervals is already transitive
    return Poset(ids, up)


def is_consistent(rep: Mapping[str, MixedInterval], P: Poset) -> bool:
    if set(rep) != set(P.elements) or len(rep) != len(P):
        raise GroundSetMismatch("representation and poset have different ground sets")
    return poset_from_representation(rep) == P


@dataclass(frozen=True)
class ReprClass:
    all_closed: bool
    all_unit: bool
    unit_oc: bool
    unit_mixed: bool
    lengths_01: bool
    length_set: frozenset

    def to_json(self) -> dict:
        return {
            "all_closed": self.all_closed,
            "all_unit": self.all_unit,
            "unit_oc": self.unit_oc,
            "unit_mixed": self.unit_mixed,
            "lengths_01": self.lengths_01,
            "length_set": [format_rational(q) for q in sorted(self.length_set)],
        }


def classify(rep: Mapping[str, MixedInterval]) -> ReprClass:
    ivs = list(rep.values())
    lengths = frozenset(I.length for I in ivs)
    all_closed = all(I.closed for I in ivs)
    all_unit = lengths <= {1}
    return ReprClass(
        all_closed=all_closed,
        all_unit=all_unit,
        unit_oc=all_unit and all(I.closed or I.open for I in ivs),
        unit_mixed=all_unit,
        lengths_01=all_closed and lengths <= {0, 1},
        length_set=lengths,
    )


def open_all(rep: Mapping[str, MixedInterval]) -> Representation:
    out = {}
    for x, I in rep.items():
        if I.length == 0:
            raise DegenerateInterval(f"cannot open the point interval of {x!r}", detail=x)
        out[x] = MixedInterval(I.left, I.right, False, False)
    return Representation(out)


def scale(rep: Mapping[str, MixedInterval], factor) -> Representation:
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    return Representation(
        (x, MixedInterval(I.left * factor, I.right * factor, I.left_closed, I.right_closed))
        for x, I in rep.items()
    )


TWO_PLUS_TWO = build_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
ONE_PLUS_THREE = build_poset(["a", "b", "c", "d"], [("a", "b"), ("b", "c")])


def down_sets_form_chain(P: Poset) -> bool:
    """Interval-order test: distinct down sets are totally ordered by inclusion."""
    sets = sorted(set(P.down), key=int.bit_count)
    return all(a & b == a for a, b in zip(sets, sets[1:]))


def find_two_plus_two(P: Poset) -> dict[str, str] | None:
    return contains_subposet(P, TWO_PLUS_TWO)


def find_one_plus_three(P: Poset) -> dict[str, str] | None:
    return contains_subposet(P, ONE_PLUS_THREE)


def is_interval_order(P: Poset) -> bool:
    return down_sets_form_chain(P)


def is_unit_interval_order(P: Poset) -> bool:
    return is_interval_order(P) and find_one_plus_three(P) is None


def canonical_closed_representation(P: Poset) -> Representation:
    """Closed integer representation built from ranks of down sets and up sets.

    ``x`` gets ``[i, j]`` where ``i`` is the rank of ``D(x)`` among distinct
    down sets (by inclusion) and ``j`` the rank of ``U(x)`` among distinct up
    sets (by reverse inclusion), both 1-based.
    """
    if not down_sets_form_chain(P):
        raise NotIntervalOrder("poset contains an induced 2+2", witness=find_two_plus_two(P))
    downs = sorted(set(P.down), key=int.bit_count)
    ups = sorted(set(P.up), key=lambda m: -m.bit_count())
    drank = {m: k + 1 for k, m in enumerate(downs)}
    urank = {m: k + 1 for k, m in enumerate(ups)}
    rep = Representation(
        (x, closed(drank[P.down[i]], urank[P.up[i]])) for i, x in enumerate(P.elements)
    )
    if not is_consistent(rep, P):
        raise AssertionError("canonical representation failed its self-check")
    return rep


def strict_relations_preserved(before: Poset, after: Poset) -> bool:
    return all(after.up[i] & m == m for i, m in enumerate(before.up))

