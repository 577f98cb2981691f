import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import posets
from intorder.errors import NotDisjoint, NotIntervalOrder, PairNotIncomparable
from intorder.instances import random_representation
from intorder.intervals import poset_from_representation
from intorder.poset import build_poset, incomparable_pairs, is_linear_extension
from intorder.reversal import (
    CycleWitness,
    extension_separating,
    find_strict_alternating_cycle,
    is_strict_alternating_cycle,
    linear_extension_reversing,
)
from oracles import brute_reversible


def test_single_pair():
    assert linear_extension_reversing(build_poset("xy"), [("x", "y")]) == ("y", "x")


def test_both_orientations_give_two_cycle():
    P = build_poset("xy")
    out = linear_extension_reversing(P, [("x", "y"), ("y", "x")])
    assert isinstance(out, CycleWitness)
    assert set(out.pairs) == {("x", "y"), ("y", "x")}
    assert is_strict_alternating_cycle(P, out.pairs)
    assert out.strict_comparabilities() == 0


def test_two_cycle_with_one_strict_comparability():
    # x2 < y1, x1 incomparable to both
    P = build_poset(["x1", "y1", "x2"], [("x2", "y1")])
    out = linear_extension_reversing(P, [("x1", "y1"), ("x2", "x1")])
    assert isinstance(out, CycleWitness)
    assert len(out) == 2
    assert is_strict_alternating_cycle(P, out.pairs)
    assert out.strict_comparabilities() == 1


def test_empty_pair_set():
    P = build_poset("abc", [("a", "b")])
    assert find_strict_alternating_cycle(P, []) is None
    anti = build_poset("xy")
    w = find_strict_alternating_cycle(anti, incomparable_pairs(anti))
    assert w is not None and len(w) == 2


def test_rejects_comparable_pairs():
    P = build_poset("ab", [("a", "b")])
    with pytest.raises(PairNotIncomparable):
        linear_extension_reversing(P, [("a", "b")])
    with pytest.raises(PairNotIncomparable):
        linear_extension_reversing(P, [("a", "a")])


def test_validator_rejects_non_strict():
    P = build_poset(["a", "b", "c", "d"])
    assert not is_strict_alternating_cycle(P, [("a", "b")])
    # a 3-cycle on an antichain is not alternating at all
    assert not is_strict_alternating_cycle(P, [("a", "b"), ("c", "d"), ("b", "a")])


@given(posets(max_size=6), st.data())
def test_soundness_and_completeness(P, data):
    inc = incomparable_pairs(P)
    S = data.draw(st.lists(st.sampled_from(inc), max_size=6, unique=True)) if inc else []
    out = linear_extension_reversing(P, S)
    if isinstance(out, CycleWitness):
        assert not brute_reversible(P, S)
        assert is_strict_alternating_cycle(P, out.pairs)
        assert set(out.pairs) <= set(S)
    else:
        assert brute_reversible(P, S)
        assert is_linear_extension(P, out)
        pos = {x: k for k, x in enumerate(out)}
        assert all(pos[u] > pos[v] for u, v in S)


def test_deterministic_lowest_index_tie_break():
    P = build_poset("cab")
    assert linear_extension_reversing(P, []) == ("c", "a", "b")


def test_witnesses_in_interval_orders_have_one_strict_link():
    rng = random.Random(5)
    seen = 0
    for k in range(400):
        rep = random_representation(8, [0, 1, 2], "mixed", grid=2, seed=17, index=k)
        P = poset_from_representation(rep)
        inc = incomparable_pairs(P)
        if not inc:
            continue
        S = rng.sample(inc, min(len(inc), rng.randint(1, 10)))
        w = find_strict_alternating_cycle(P, S)
        if w is not None:
            seen += 1
            assert is_strict_alternating_cycle(P, w.pairs)
            assert w.strict_comparabilities() <= 1
    assert seen > 50


def test_separating_examples(one_plus_three):
    assert extension_separating(build_poset("ab"), ["a"], ["b"]) == ("b", "a")
    assert extension_separating(one_plus_three, ["d"], ["a", "b", "c"]) == ("a", "b", "c", "d")
    assert extension_separating(one_plus_three, ["a", "b", "c"], ["d"]) == ("d", "a", "b", "c")


def test_separating_errors(two_plus_two, one_plus_three):
    with pytest.raises(NotDisjoint):
        extension_separating(one_plus_three, ["a", "d"], ["d"])
    with pytest.raises(NotIntervalOrder):
        extension_separating(two_plus_two, ["a"], ["c"])


def test_separation_never_fails_on_interval_orders():
    """10^4 random interval orders with random disjoint A, B."""
    rng = random.Random(2024)
    for k in range(10_000):
        n = rng.randint(1, 12)
        rep = random_representation(n, [0, 1, 2, 3], "mixed", grid=2, seed=23, index=k)
        Q = poset_from_representation(rep)
        labels = [rng.randrange(3) for _ in Q.elements]
        A = [x for x, c in zip(Q.elements, labels) if c == 0]
        B = [x for x, c in zip(Q.elements, labels) if c == 1]
        L = extension_separating(Q, A, B)
        pos = {x: i for i, x in enumerate(L)}
        assert all(pos[a] > pos[b] for a in A for b in B if Q.incomparable(a, b))


def test_separation_fails_on_two_plus_two():
    # A = {a, c}, B = {b, d}: b < c and d < a close the cycle a < b < c < d < a
    P = build_poset("abcd", [("a", "b"), ("c", "d")])
    w = find_strict_alternating_cycle(P, [("c", "b"), ("a", "d")])
    assert w is not None
    assert w.strict_comparabilities() == 2
