from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qap.bitcore import (
    BitWord,
    cosets,
    dot,
    maximal_subgroups,
    solve_affine,
    span,
)

W = BitWord.parse


def words(p: int):
    return st.integers(0, (1 << p) - 1).map(lambda b: BitWord(b, p))


def test_parse_and_str_roundtrip():
    assert str(W("101")) == "101"
    assert W("101").bits == 5
    assert W("101").p == 3
    with pytest.raises(ValueError):
        W("10a")
    with pytest.raises(ValueError):
        BitWord(8, 3)


def test_units_are_positional_from_the_left():
    assert str(BitWord.unit(3, 1)) == "100"
    assert str(BitWord.unit(3, 3)) == "001"


def test_dot_examples():
    assert dot(W("000"), W("101")) == 0
    assert dot(W("101"), W("001")) == 1
    assert dot(W("011"), W("011")) == 0


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        dot(W("01"), W("011"))
    with pytest.raises(ValueError):
        W("01") ^ W("011")


@given(words(4), words(4), words(4))
def test_dot_bilinearity(a, b, c):
    assert dot(a ^ b, c) == dot(a, c) ^ dot(b, c)


def test_span_examples():
    empty = span([], p=3)
    assert empty.rank == 0 and len(empty) == 1
    assert [str(w) for w in empty.members()] == ["000"]

    g = span([W("001"), W("010")])
    assert g.rank == 2
    assert [str(w) for w in g.members()] == ["000", "001", "010", "011"]

    g2 = span([W("011"), W("101"), W("110")])
    assert g2.rank == 2
    assert [str(w) for w in g2.members()] == ["000", "011", "101", "110"]


@given(st.lists(words(4), max_size=5))
def test_span_contains_generators_and_is_closed(gens):
    g = span(gens, p=4)
    members = g.members()
    assert len(members) == 1 << g.rank
    for w in gens:
        assert w in g
    for a, b in itertools.product(members[:8], repeat=2):
        assert (a ^ b) in g


def test_maximal_subgroups_of_z2_squared():
    g = span([W("01"), W("10")])
    subs = maximal_subgroups(g)
    listed = [tuple(str(w) for w in s.members()) for s in subs]
    assert listed == [("00", "01"), ("00", "10"), ("00", "11")]


def test_maximal_subgroups_count_and_distinctness():
    for rank, p in ((3, 3), (2, 4)):
        gens = [BitWord(1 << i, p) for i in range(rank)]
        g = span(gens)
        subs = maximal_subgroups(g)
        assert len(subs) == (1 << rank) - 1
        assert len({s.basis for s in subs}) == len(subs)
        for s in subs:
            assert s.rank == rank - 1
            assert s.is_subgroup_of(g)


def test_maximal_subgroups_of_trivial_group_empty():
    assert maximal_subgroups(span([], p=3)) == []


def test_cosets_examples():
    g = span([W("001"), W("010")])
    h = span([W("001")])
    cs = cosets(h, g)
    assert [str(c.leader) for c in cs] == ["000", "010"]
    assert [tuple(str(w) for w in c.elements) for c in cs] == [
        ("000", "001"),
        ("010", "011"),
    ]

    whole = cosets(g, g)
    assert len(whole) == 1 and len(whole[0].elements) == 4

    trivial = cosets(span([], p=3), span([W("100")]))
    assert [str(c.leader) for c in trivial] == ["000", "100"]
    assert all(len(c.elements) == 1 for c in trivial)


def test_cosets_requires_subgroup():
    with pytest.raises(ValueError):
        cosets(span([W("100")]), span([W("001")]))


@given(st.lists(words(4), min_size=1, max_size=4), st.integers(0, 4))
def test_cosets_partition_property(gens, take):
    g = span(gens, p=4)
    h = span(gens[: min(take, len(gens))], p=4)
    cs = cosets(h, g)
    seen = [w.bits for c in cs for w in c.elements]
    assert sorted(seen) == sorted(w.bits for w in g.members())
    assert all(len(c.elements) == len(h) for c in cs)


def test_solve_affine_examples():
    assert solve_affine([], 3) == W("000")
    assert solve_affine([(W("100"), 1)], 3) == W("100")
    assert solve_affine([(W("10"), 1), (W("10"), 0)], 2) is None


@given(
    st.integers(2, 5).flatmap(
        lambda p: st.tuples(
            st.just(p),
            st.lists(st.tuples(words(p), st.integers(0, 1)), max_size=4),
        )
    )
)
def test_solve_affine_agrees_with_brute_force(case):
    p, constraints = case
    got = solve_affine(constraints, p)
    brute = [
        x
        for x in range(1 << p)
        if all((x & w.bits).bit_count() & 1 == b for w, b in constraints)
    ]
    if not brute:
        assert got is None
    else:
        assert got is not None and got.bits == min(brute)
