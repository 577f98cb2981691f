"""Named fixtures and seeded generators.

The three dimension-3 unit interval orders ``FX2``, ``H0`` and ``G0`` are
stored as the cover relations of their Hasse diagrams (lower point below).
Random generators draw from a counter-based Philox stream keyed by
``(seed, index)`` so that shards and reruns reproduce exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidPolicy, UnknownName
from .intervals import MixedInterval, Representation, closed, open_, poset_from_representation
from .poset import Poset, build_poset


@dataclass(frozen=True)
class NamedInstance:
    name: str
    poset: Poset
    representation: Representation | None = None

    def to_json(self) -> dict:
        doc = {"name": self.name, "poset": self.poset.to_json()}
        if self.representation is not None:
            doc["representation"] = self.representation.to_json()
        return doc


FX2 = build_poset(
    ["a1", "b1", "a2", "b2", "c", "a3", "b3"],
    [
        ("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a2", "b3"), ("a1", "b3"),
        ("a3", "b3"), ("a1", "c"), ("a3", "c"), ("b2", "c"),
    ],
)

H0 = build_poset(
    ["a1", "a2", "b1", "b2", "b3", "c", "d"],
    [
        ("b1", "c"), ("b1", "b2"), ("b2", "b3"), ("d", "b3"),
        ("b1", "a2"), ("a1", "a2"), ("a1", "b3"),
    ],
)

G0 = build_poset(
    ["a1", "a2", "a3", "b1", "b2", "b3", "c"],
    [
        ("a1", "a2"), ("a2", "a3"), ("b1", "a3"), ("b1", "b2"), ("b2", "b3"),
        ("c", "b3"), ("a1", "c"), ("a1", "b2"), ("a2", "b3"),
    ],
)

DIMENSION_THREE_UNIT_PATTERNS = (FX2, H0, G0)

FIGURE2_REPRESENTATION = Representation({
    "x1": closed(0, 1),
    "x2": open_(1, 2),
    "x3": MixedInterval(Fraction(2), Fraction(3), True, False),
    "x4": closed(3, 4),
    "y": closed(1, 2),
    "z": closed(2, 3),
})

FIGURE2 = build_poset(
    ["x1", "x2", "x3", "x4", "y", "z"],
    [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x2", "z"), ("y", "x4")],
)

ONE_PLUS_THREE_REPRESENTATION = Representation({
    "x1": closed(0, 1),
    "x2": open_(1, 2),
    "x3": closed(2, 3),
    "y": closed(1, 2),
})

_NAMED = {
    "two_plus_two": lambda: NamedInstance(
        "two_plus_two", build_poset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    ),
    "one_plus_three": lambda: NamedInstance(
        "one_plus_three",
        build_poset(["x1", "x2", "x3", "y"], [("x1", "x2"), ("x2", "x3")]),
        ONE_PLUS_THREE_REPRESENTATION,
    ),
    "FX2": lambda: NamedInstance("FX2", FX2),
    "H0": lambda: NamedInstance("H0", H0),
    "G0": lambda: NamedInstance("G0", G0),
    "figure2": lambda: NamedInstance("figure2", FIGURE2, FIGURE2_REPRESENTATION),
}

NAMES = tuple(_NAMED)


def named(name: str) -> NamedInstance:
    try:
        return _NAMED[name]()
    except KeyError:
        raise UnknownName(f"unknown instance {name!r}; choose from {', '.join(NAMES)}", detail=name) from None


def canonical_interval_order(n: int) -> tuple[Poset, Representation]:
    """All closed intervals ``[i, j]`` with ``1 <= i <= j <= n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rep = Representation(
        (f"[{i},{j}]", closed(i, j)) for i in range(1, n + 1) for j in range(i, n + 1)
    )
    return poset_from_representation(rep), rep


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


FLAG_POLICIES = ("all_closed", "oc", "mixed")


def random_representation(
    n: int,
    lengths: Iterable,
    flag_policy: str = "all_closed",
    grid: int = 1,
    seed: int = 0,
    index: int = 0,
    span: int | None = None,
    weights: Sequence[float] | None = None,
) -> Representation:
    """``n`` random intervals with lengths drawn from ``lengths``.

    Left endpoints are uniform on ``{0, 1/grid, ..., span}``; ``span``
    defaults to ``max(1, n // 3)`` so the derived poset has some height.
    Zero-length intervals are always doubly closed.
    """
    if flag_policy not in FLAG_POLICIES:
        raise InvalidPolicy(f"unknown flag policy {flag_policy!r}", detail=flag_policy)
    lengths = [Fraction(q) for q in lengths]
    if n < 0 or grid < 1:
        raise ValueError("need n >= 0 and grid >= 1")
    if not lengths or any(q < 0 for q in lengths):
        raise InvalidPolicy("lengths must be a nonempty set of nonnegative rationals")
    if span is None:
        span = max(1, n // 3)
    rng = rng_for(seed, index)
    slots = rng.integers(0, span * grid + 1, size=n)
    picks = rng.choice(len(lengths), size=n, p=weights)
    flags = rng.random(size=(n, 2)) < 0.5
    out = {}
    for k in range(n):
        left = Fraction(int(slots[k]), grid)
        length = lengths[int(picks[k])]
        if length == 0 or flag_policy == "all_closed":
            lc = rc = True
        elif flag_policy == "oc":
            lc = rc = bool(flags[k, 0])
        else:
            lc, rc = bool(flags[k, 0]), bool(flags[k, 1])
        out[f"v{k}"] = MixedInterval(left, left + length, lc, rc)
    return Representation(out)


def random_poset(n: int, p: float = 0.3, seed: int = 0, index: int = 0) -> Poset:
    """Closure of a random DAG, with relabelled elements so index order is not a linear extension."""
    rng = rng_for(seed, index)
    perm = rng.permutation(n)
    coins = rng.random(size=(n, n)) < p
    names = [f"e{k}" for k in range(n)]
    rel = [
        (names[perm[i]], names[perm[j]])
        for i in range(n)
        for j in range(i + 1, n)
        if coins[i, j]
    ]
    return build_poset(names, rel)
