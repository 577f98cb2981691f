from math import comb

import pytest
from hypothesis import given

from conftest import posets
from intorder.errors import CycleError, InvalidExtension, NeedTwoExtensions, NotAPermutation, UnknownElement
from intorder.instances import FIGURE2, FX2, named
from intorder.intervals import ONE_PLUS_THREE, TWO_PLUS_TWO
from intorder.poset import (
    IncPair,
    Poset,
    Realizer,
    build_poset,
    contains_subposet,
    down_set,
    holdings_classes,
    incomparable_pairs,
    is_linear_extension,
    linear_extensions,
    quotient_duplicates,
    reinflate_realizer,
    up_set,
    verify_realizer,
)
from oracles import all_labeled_posets, brute_contains, naive_less_closure


def test_build_poset_closes_transitively():
    P = build_poset("abc", [("a", "b"), ("b", "c")])
    assert set(P.relations()) == {("a", "b"), ("b", "c"), ("a", "c")}


def test_build_poset_rejects_cycle():
    with pytest.raises(CycleError):
        build_poset("ab", [("a", "b"), ("b", "a")])


def test_build_poset_unknown_element():
    with pytest.raises(UnknownElement):
        build_poset("ab", [("a", "z")])


def test_figure2_closure():
    P = FIGURE2
    for lo, hi in [("x1", "x3"), ("x1", "x4"), ("x2", "x4"), ("x1", "z")]:
        assert P.less(lo, hi)
    for other in ("x1", "x2", "x3", "z"):
        assert P.incomparable("y", other)


@given(posets())
def test_closure_matches_naive(P):
    assert set(P.relations()) == naive_less_closure(P.elements, P.cover_relations())


@given(posets())
def test_closure_idempotent(P):
    assert build_poset(P.elements, P.relations()) == P


def test_down_and_up_sets(one_plus_three):
    assert down_set(one_plus_three, "c") == {"a", "b"}
    assert up_set(one_plus_three, "d") == set()
    assert down_set(FX2, "c") == {"a1", "a2", "a3", "b2"}
    with pytest.raises(UnknownElement):
        down_set(one_plus_three, "q")


def test_incomparable_pairs_examples(two_plus_two):
    assert incomparable_pairs(build_poset("ab", [("a", "b")])) == []
    assert set(incomparable_pairs(build_poset("xy"))) == {("x", "y"), ("y", "x")}
    pairs = set(incomparable_pairs(two_plus_two))
    assert len(pairs) == 8
    assert pairs == {(u, v) for u in "ab" for v in "cd"} | {(v, u) for u in "ab" for v in "cd"}


@given(posets())
def test_incomparable_pairs_partition(P):
    pairs = incomparable_pairs(P)
    assert set(pairs) == {(v, u) for u, v in pairs}
    assert len(pairs) // 2 + P.num_relations() == comb(len(P), 2)


def test_is_linear_extension_examples():
    chain = build_poset("abc", [("a", "b"), ("b", "c")])
    assert is_linear_extension(chain, "abc")
    assert not is_linear_extension(chain, "bac")
    assert is_linear_extension(build_poset("xy"), "yx")
    with pytest.raises(NotAPermutation):
        is_linear_extension(chain, "ab")


def test_verify_realizer_examples():
    chain = build_poset("abc", [("a", "b"), ("b", "c")])
    assert verify_realizer(chain, Realizer(["abc"])) == (True, None)
    anti = build_poset("xy")
    assert verify_realizer(anti, Realizer(["xy", "yx"])) == (True, None)
    ok, missing = verify_realizer(anti, Realizer(["xy"]))
    # (x, y) needs x above y, which the lone extension never does
    assert not ok
    assert missing == IncPair("x", "y")
    with pytest.raises(InvalidExtension):
        verify_realizer(chain, Realizer(["bac"]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_extensions_realize_nonchains(n):
    for P in all_labeled_posets(n):
        exts = list(linear_extensions(P))
        if not P.is_chain():
            assert verify_realizer(P, exts)[0]


def test_holdings_examples():
    anti = build_poset("uv")
    classes = holdings_classes(anti)
    assert [c.members for c in classes] == [("u", "v")]
    Pq, cls = quotient_duplicates(anti)
    assert len(Pq) == 1
    R = reinflate_realizer(Realizer([("u",)]*2), cls)
    assert R.extensions == (("u", "v"), ("v", "u"))
    assert verify_realizer(anti, R)[0]

    Pq, cls = quotient_duplicates(FX2)
    assert Pq == FX2 and all(not c.duplicates for c in cls)


def test_reinflate_needs_two():
    _, cls = quotient_duplicates(build_poset("uv"))
    with pytest.raises(NeedTwoExtensions):
        reinflate_realizer(Realizer([("u",)]), cls)


def _plant_twins(P: Poset, k: int) -> Poset:
    """Add a twin of each of the first k elements."""
    els = list(P.elements)
    rel = list(P.relations())
    for x in els[:k]:
        t = x + "_twin"
        rel += [(t, y) for y in up_set(P, x)] + [(y, t) for y in down_set(P, x)]
        els.append(t)
    return build_poset(els, rel)


@given(posets(max_size=6))
def test_reinflate_realizes_original(P):
    Pt = _plant_twins(P, 2)
    Pq, cls = quotient_duplicates(Pt)
    exts = list(linear_extensions(Pq))
    if len(exts) == 1:
        exts = exts * 2
    assert verify_realizer(Pt, reinflate_realizer(Realizer(exts), cls))[0]


def test_contains_subposet_examples():
    f = contains_subposet(FIGURE2, ONE_PLUS_THREE)
    assert f is not None
    assert contains_subposet(FX2, TWO_PLUS_TWO) is None
    ident = contains_subposet(FX2, FX2)
    assert ident is not None and sorted(ident) == sorted(ident.values())


def test_contains_subposet_is_induced():
    # a chain a<b<c contains 2-chains but no 2-antichain
    chain = build_poset("abc", [("a", "b"), ("b", "c")])
    assert contains_subposet(chain, build_poset("xy")) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_contains_subposet_agrees_with_exhaustive(n):
    patterns = [TWO_PLUS_TWO, ONE_PLUS_THREE, build_poset("xyz"), build_poset("xyz", [("x", "y"), ("x", "z")])]
    for P in all_labeled_posets(n):
        for Q in patterns:
            assert (contains_subposet(P, Q) is not None) == brute_contains(P, Q)


def test_contains_subposet_size6_sample():
    from intorder.instances import random_poset

    for k in range(150):
        P = random_poset(6, p=0.3, seed=11, index=k)
        for Q in (TWO_PLUS_TWO, ONE_PLUS_THREE):
            f = contains_subposet(P, Q)
            assert (f is not None) == brute_contains(P, Q)
            if f is not None:
                assert all(Q.less(a, b) == P.less(f[a], f[b]) for a in Q for b in Q if a != b)


def test_json_roundtrip():
    P = named("figure2").poset
    assert Poset.from_json(P.to_json()) == P
    R = Realizer(["ab", "ba"])
    assert Realizer.from_json(R.to_json()) == R
