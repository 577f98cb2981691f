"""Finite posets, incomparable pairs, linear extensions and realizers.

A :class:`Poset` stores only the strict relation ``x < y``; the reflexive
``x <= y`` is derived. Elements are opaque string ids; each gets a dense
index in input order, and the relation is kept as per-element bitmasks so
that set operations on up/down sets are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CycleError,
    InvalidExtension,
    NeedTwoExtensions,
    NotAPermutation,
    ParseError,
    UnknownElement,
)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class IncPair(NamedTuple):
    """Ordered incomparable pair. Reversing it places ``first`` above ``second``."""

    first: str
    second: str


class Poset:
    """Immutable finite strict partial order.

    Build instances with :func:`build_poset` (which closes the relation
    transitively) or :meth:`Poset.from_json`.

    Attributes:
        elements: ids in input order; position is the internal index.
        up: ``up[i]`` is the bitmask of indices strictly above ``i``.
        down: ``down[i]`` is the bitmask of indices strictly below ``i``.
    """

    __slots__ = ("elements", "index", "up", "down", "_key")

    def __init__(self, elements: Sequence[str], up: Sequence[int]):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("element ids must be distinct")
        self.up = tuple(up)
        down = [0] * len(self.elements)
        for i, mask in enumerate(self.up):
            for j in iter_bits(mask):
                down[j] |= 1 << i
        self.down = tuple(down)
        self._key = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"Poset({len(self)} elements, {self.num_relations()} relations)"

    def _frozen(self):
        if self._key is None:
            self._key = (frozenset(self.elements), frozenset(self.relations()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self._frozen() == other._frozen()

    def __hash__(self):
        return hash(self._frozen())

    def idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}", detail=x) from None

    def less(self, x: str, y: str) -> bool:
        return bool(self.up[self.idx(x)] >> self.idx(y) & 1)

    def leq(self, x: str, y: str) -> bool:
        return x == y or self.less(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.less(y, x)

    def incomparable(self, x: str, y: str) -> bool:
        return not self.comparable(x, y)

    def inc_mask(self, i: int) -> int:
        """Indices incomparable to index ``i`` (``i`` itself excluded)."""
        full = (1 << len(self.elements)) - 1
        return full & ~(self.up[i] | self.down[i] | (1 << i))

    def ids(self, mask: int) -> set[str]:
        return {self.elements[i] for i in iter_bits(mask)}

    def mask(self, ids: Iterable[str]) -> int:
        m = 0
        for x in ids:
            m |= 1 << self.idx(x)
        return m

    def relations(self) -> list[tuple[str, str]]:
        """All strict relations ``(lower, upper)`` in index order."""
        return [
            (x, self.elements[j])
            for i, x in enumerate(self.elements)
            for j in iter_bits(self.up[i])
        ]

    def num_relations(self) -> int:
        return sum(m.bit_count() for m in self.up)

    def cover_relations(self) -> list[tuple[str, str]]:
        out = []
        for i, x in enumerate(self.elements):
            above = self.up[i]
            covers = above
            for j in iter_bits(above):
                covers &= ~self.up[j]
            out.extend((x, self.elements[j]) for j in iter_bits(covers))
        return out

    def is_chain(self) -> bool:
        return all(self.inc_mask(i) == 0 for i in range(len(self)))

    def minimal(self) -> list[str]:
        return [x for i, x in enumerate(self.elements) if not self.down[i]]

    def subposet(self, ids: Iterable[str]) -> "Poset":
        """Induced subposet on ``ids``, keeping this poset's element order."""
        keep = self.mask(ids)
        order = [i for i in range(len(self)) if keep >> i & 1]
        pos = {i: k for k, i in enumerate(order)}
        up = []
        for i in order:
            m = 0
            for j in iter_bits(self.up[i] & keep):
                m |= 1 << pos[j]
            up.append(m)
        return Poset([self.elements[i] for i in order], up)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "relations": [list(r) for r in self.relations()]}

    @classmethod
    def from_json(cls, doc: dict) -> "Poset":
        try:
            elements = doc["elements"]
            relations = doc.get("relations", [])
            if not all(isinstance(x, str) for x in elements):
                raise ParseError("element ids must be strings")
            pairs = [tuple(r) for r in relations]
            if any(len(r) != 2 for r in pairs):
                raise ParseError("relations must be [lower, upper] pairs")
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed poset document: {exc}") from None
        return build_poset(elements, pairs)


def build_poset(elements: Iterable[str], relations: Iterable[tuple[str, str]] = ()) -> Poset:
    """Transitive closure of ``relations`` over ``elements``.

    >>> P = build_poset("abc", [("a", "b"), ("b", "c")])
    >>> P.less("a", "c")
    True
    """
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("element ids must be distinct")
    n = len(elements)
    up = [0] * n
    for x, y in relations:
        for e in (x, y):
            if e not in index:
                raise UnknownElement(f"relation references unknown element {e!r}", detail=e)
        up[index[x]] |= 1 << index[y]
    # Warshall on bitsets
    for k in range(n):
        bit = 1 << k
        reach_k = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= reach_k
    for i in range(n):
        if up[i] >> i & 1:
            cyc = sorted(elements[j] for j in range(n) if up[i] >> j & 1 and up[j] >> i & 1)
            raise CycleError("relation has a directed cycle", detail=cyc)
    return Poset(elements, up)


def down_set(P: Poset, x: str) -> set[str]:
    return P.ids(P.down[P.idx(x)])


def up_set(P: Poset, x: str) -> set[str]:
    return P.ids(P.up[P.idx(x)])


def incomparable_pairs(P: Poset) -> list[IncPair]:
    """All ordered incomparable pairs, sorted by (index of first, index of second)."""
    els = P.elements
    return [IncPair(els[i], els[j]) for i in range(len(P)) for j in iter_bits(P.inc_mask(i))]


def _positions(P: Poset, order: Sequence[str]) -> list[int]:
    if len(order) != len(P) or set(order) != set(P.elements):
        raise NotAPermutation("order is not a permutation of the ground set", detail=list(order))
    pos = [0] * len(P)
    for rank, x in enumerate(order):
        pos[P.index[x]] = rank
    return pos


def is_linear_extension(P: Poset, order: Sequence[str]) -> bool:
    pos = _positions(P, order)
    return all(pos[i] < pos[j] for i in range(len(P)) for j in iter_bits(P.up[i]))


@dataclass(frozen=True)
class Realizer:
    extensions: tuple[tuple[str, ...], ...]

    def __init__(self, extensions: Iterable[Sequence[str]]):
        object.__setattr__(self, "extensions", tuple(tuple(L) for L in extensions))

    def __len__(self):
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)

    def to_json(self) -> dict:
        return {"extensions": [list(L) for L in self.extensions]}

    @classmethod
    def from_json(cls, doc: dict) -> "Realizer":
        try:
            exts = doc["extensions"]
            if not all(isinstance(x, str) for L in exts for x in L):
                raise ParseError("extension entries must be element ids")
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed realizer document: {exc}") from None
        return cls(exts)


def verify_realizer(P: Poset, R: Realizer | Iterable[Sequence[str]]) -> tuple[bool, IncPair | None]:
    """Check that every incomparable pair is reversed by some member of ``R``.

    Returns ``(True, None)`` or ``(False, first_uncovered_pair)``.
    Raises :class:`InvalidExtension` if a member is not a linear extension.
    """
    positions = []
    for k, L in enumerate(R):
        if not is_linear_extension(P, L):
            raise InvalidExtension(f"member {k} is not a linear extension", detail=list(L))
        positions.append(_positions(P, L))
    for i in range(len(P)):
        for j in iter_bits(P.inc_mask(i)):
            if not any(pos[i] > pos[j] for pos in positions):
                return False, IncPair(P.elements[i], P.elements[j])
    return True, None


@dataclass(frozen=True)
class HoldingsClass:
    representative: str
    duplicates: tuple[str, ...] = ()

    @property
    def members(self) -> tuple[str, ...]:
        return (self.representative, *self.duplicates)


def holdings_classes(P: Poset) -> list[HoldingsClass]:
    """Group elements sharing both down set and up set; first id is the representative."""
    groups: dict[tuple[int, int], list[str]] = {}
    for i, x in enumerate(P.elements):
        groups.setdefault((P.down[i], P.up[i]), []).append(x)
    return [HoldingsClass(g[0], tuple(g[1:])) for g in groups.values()]


def quotient_duplicates(P: Poset) -> tuple[Poset, list[HoldingsClass]]:
    classes = holdings_classes(P)
    return P.subposet(c.representative for c in classes), classes


def reinflate_realizer(R: Realizer, classes: Sequence[HoldingsClass]) -> Realizer:
    """Expand a realizer of the quotient back to the original ground set.

    Class members sit consecutively: ascending in the first extension,
    descending in the second, ascending in every other one.
    """
    members = {c.representative: c.members for c in classes}
    if len(R) < 2 and any(len(m) > 1 for m in members.values()):
        raise NeedTwoExtensions("need at least two extensions to separate duplicated holdings")
    out = []
    for k, L in enumerate(R):
        ext = []
        for r in L:
            group = members.get(r, (r,))
            ext.extend(reversed(group) if k == 1 else group)
        out.append(ext)
    return Realizer(out)


def contains_subposet(P: Poset, Q: Poset) -> dict[str, str] | None:
    """Find an induced copy of ``Q`` in ``P``.

    Returns a map ``f`` from Q's ids to P's ids with ``x <_Q y`` iff
    ``f(x) <_P f(y)``, or ``None``.
    """
    n, m = len(P), len(Q)
    if m > n:
        return None
    # most constrained pattern elements first
    order = sorted(range(m), key=lambda q: -(Q.up[q].bit_count() + Q.down[q].bit_count()))
    full = (1 << n) - 1
    up_deg = [P.up[p].bit_count() for p in range(n)]
    down_deg = [P.down[p].bit_count() for p in range(n)]
    base = []
    for q in order:
        cand = 0
        for p in range(n):
            if up_deg[p] >= Q.up[q].bit_count() and down_deg[p] >= Q.down[q].bit_count():
                cand |= 1 << p
        base.append(cand)
    image = [0] * m

    def extend(k: int, used: int) -> bool:
        if k == m:
            return True
        q = order[k]
        cand = base[k] & ~used
        for j in range(k):
            qj = order[j]
            pj = image[qj]
            if Q.up[qj] >> q & 1:
                cand &= P.up[pj]
            elif Q.down[qj] >> q & 1:
                cand &= P.down[pj]
            else:
                cand &= full & ~(P.up[pj] | P.down[pj])
            if not cand:
                return False
        for p in iter_bits(cand):
            image[q] = p
            if extend(k + 1, used | 1 << p):
                return True
        return False

    if not extend(0, 0):
        return None
    return {Q.elements[q]: P.elements[image[q]] for q in range(m)}


def linear_extensions(P: Poset) -> Iterator[tuple[str, ...]]:
    """Enumerate every linear extension (exponential; small posets only)."""
    n = len(P)
    prefix: list[int] = []

    def rec(placed: int):
        if len(prefix) == n:
            yield tuple(P.elements[i] for i in prefix)
            return
        for i in range(n):
            if not placed >> i & 1 and P.down[i] & ~placed == 0:
                prefix.append(i)
                yield from rec(placed | 1 << i)
                prefix.pop()

    yield from rec(0)


def unordered_incomparable_pairs(P: Poset) -> list[tuple[str, str]]:
    return [(x, y) for x, y in combinations(P.elements, 2) if P.incomparable(x, y)]
