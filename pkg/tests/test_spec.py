from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import words
from hangwire.construct import chain, chain_updown
from hangwire.spec import (
    Convention,
    Spec,
    combine,
    embed,
    essential_removals,
    parse_spec,
    separates_above,
    solved_spec,
    solves,
    subset_order,
    translate,
)
from hangwire.word import Word, commutator, mask_nails, nail_mask, parse_word, restrict


def subsets(n):
    for size in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(1, n + 1), size))


def test_threshold_falls():
    f = Spec.threshold(2, 4)
    assert f.falls({1, 2}) and not f.falls({3}) and f.falls({1, 2, 3, 4})
    assert f.falls(0b0011) and not f.falls(0)


def test_falls_rejects_outside_universe():
    with pytest.raises(ValueError):
        Spec.threshold(1, 3).falls({4})


@pytest.mark.parametrize("k, n, expected", [(3, 4, 2), (1, 4, 4), (5, 4, 0), (0, 4, 5)])
def test_translate(k, n, expected):
    assert translate(k, n) == expected
    assert translate(expected, n, Convention.DEMAINE) == k


def test_translate_range():
    with pytest.raises(ValueError):
        translate(6, 4)
    with pytest.raises(ValueError):
        translate(-1, 4)


def test_wastlund_n_plus_one_is_demaine_zero():
    w = Spec.threshold(3, 2, Convention.WASTLUND)
    d = Spec.threshold(0, 2, Convention.DEMAINE)
    assert np.array_equal(w.fall_table(), d.fall_table())
    assert w.fall_table().all()
    assert str(w) == "3-of-2@wastlund"


@pytest.mark.parametrize("n", range(1, 7))
def test_conventions_agree_on_every_removal(n):
    for k in range(1, n + 1):
        w = Spec.threshold(k, n, Convention.WASTLUND)
        for s in subsets(n):
            assert w.falls(s) == (len(s) >= n - k + 1)


@pytest.mark.parametrize(
    "text, k, n",
    [("2-of-4", 2, 4), ("3-of-4@wastlund", 2, 4), (" 1-of-3@Demaine ", 1, 3), ("3-of-2@wastlund", 0, 2)],
)
def test_parse_spec(text, k, n):
    f = parse_spec(text)
    assert (f.k, f.n) == (k, n)


def test_parse_spec_convention_argument_only_without_suffix():
    assert parse_spec("1-of-4", "wastlund").k == 4
    assert parse_spec("1-of-4@demaine", "wastlund").k == 1


@pytest.mark.parametrize("text", ["2of4", "5-of-4", "0-of-4@wastlund", "2-of-4@foo", "2-of-0"])
def test_parse_spec_rejects(text):
    with pytest.raises(ValueError):
        parse_spec(text)


def test_subset_order():
    assert subset_order(3) == [0, 1, 2, 4, 3, 5, 6, 7]


def test_essential_removals_threshold():
    ess = essential_removals(Spec.threshold(2, 4))
    assert [sorted(mask_nails(s)) for s in ess.must_fall] == [
        [1, 2], [1, 3], [2, 3], [1, 4], [2, 4], [3, 4]
    ]
    assert [sorted(mask_nails(s)) for s in ess.must_hang] == [[1], [2], [3], [4]]


def test_essential_removals_of_table_match_threshold():
    for n in range(1, 6):
        for k in range(1, n + 1):
            f = Spec.threshold(k, n)
            g = Spec.from_table(n, f.fall_table())
            ess_f, ess_g = essential_removals(f), essential_removals(g)
            assert sorted(ess_f.must_fall) == sorted(ess_g.must_fall)
            assert sorted(ess_f.must_hang) == sorted(ess_g.must_hang)


def test_essential_removals_brute_force():
    # minimal fall sets and maximal hang sets of "1 and 2, or 3"
    f = Spec.from_table(3, lambda s: (s & 3) == 3 or bool(s & 4))
    ess = essential_removals(f)
    sets = list(subsets(3))
    falls = [s for s in sets if f.falls(s)]
    hangs = [s for s in sets if not f.falls(s)]
    minimal = {s for s in falls if not any(t < s for t in falls)}
    maximal = {s for s in hangs if not any(t > s for t in hangs)}
    assert {mask_nails(s) for s in ess.must_fall} == minimal == {frozenset({1, 2}), frozenset({3})}
    assert {mask_nails(s) for s in ess.must_hang} == maximal


@pytest.mark.parametrize(
    "word, k, n",
    [("1+2-1-2", 1, 2), ("1+2", 2, 2), ("1+2+3", 3, 3), ("1+2+3-1-2-3", 2, 3)],
)
def test_solves_examples(word, k, n):
    assert solves(parse_word(word), Spec.threshold(k, n)).ok


def test_commutator_is_not_a_2_of_2():
    v = solves(parse_word("1+2-1-2"), Spec.threshold(2, 2))
    assert not v.ok and v.counterexample.removed == {1}
    assert v.counterexample.expected == "hang"
    v = solves(parse_word("1+2"), Spec.threshold(1, 2))
    assert not v.ok
    assert v.counterexample.removed == {1}
    assert v.counterexample.expected == "fall"
    assert str(v) == "counterexample S={1}: expected fall, got 2"


def test_solves_counterexample_is_first_in_order():
    v = solves(parse_word("1+2+3"), Spec.threshold(1, 3), "full")
    assert v.counterexample.removed == {1}
    v = solves(Word(), Spec.threshold(2, 3), "full")
    assert v.counterexample.removed == frozenset() and v.counterexample.expected == "hang"


def test_solves_rejects_stray_nails():
    with pytest.raises(ValueError):
        solves(parse_word("1+5"), Spec.threshold(1, 4))
    with pytest.raises(ValueError):
        solves(parse_word("1"), Spec.threshold(1, 1), "partial")


def test_solves_zero_threshold():
    f = Spec.threshold(0, 3)
    assert solves(Word(), f, "full").ok
    assert not solves(parse_word("1"), f).ok


@settings(max_examples=300, deadline=None)
@given(words(max_nail=5, max_size=24), st.integers(1, 5))
def test_full_and_essential_agree(w, k):
    f = Spec.threshold(k, 5)
    assert solves(w, f, "full").ok == solves(w, f, "essential").ok


@settings(max_examples=100, deadline=None)
@given(words(max_nail=8, max_size=40), st.integers(1, 8))
def test_full_and_essential_agree_on_eight_nails(w, k):
    f = Spec.threshold(k, 8)
    assert solves(w, f, "full").ok == solves(w, f, "essential").ok


@settings(max_examples=200, deadline=None)
@given(words(max_nail=4, max_size=20))
def test_solved_spec_matches_restriction(w):
    f = solved_spec(w, 4)
    for s in subsets(4):
        assert f.falls(s) == (restrict(w, s) == ())
    assert f.is_monotone()


def test_from_table_validation():
    with pytest.raises(ValueError):
        Spec.from_table(2, [False, True, True, False])  # {1,2} hangs above {1}
    with pytest.raises(ValueError):
        Spec.from_table(2, [False, False, False, False])


@pytest.mark.parametrize("n", range(1, 6))
def test_threshold_monotone(n):
    t = Spec.threshold(2 if n > 1 else 1, n).fall_table()
    for s in range(1 << n):
        for j in range(n):
            assert t[s] <= t[s | (1 << j)]


def test_combine_and_embed():
    left = embed(Spec.threshold(2, 2), [1, 2], 4)
    right = embed(Spec.threshold(2, 2), [3, 4], 4)
    either = combine(left, right, "or")
    both = combine(left, right, "and")
    for s in subsets(4):
        assert either.falls(s) == ({1, 2} <= s or {3, 4} <= s)
        assert both.falls(s) == (s == {1, 2, 3, 4})
    with pytest.raises(ValueError):
        combine(left, Spec.threshold(1, 3), "or")
    with pytest.raises(ValueError):
        combine(left, right, "xor")


@pytest.mark.parametrize(
    "a, b",
    [
        ((1, 2), (3, 4)),
        ((1,), (2, 3)),
        ((1, 3), (2, 4)),
    ],
)
def test_commutator_of_disjoint_solutions_solves_the_or(a, b):
    n = len(a) + len(b)
    fa = embed(Spec.threshold(len(a) - 1 if len(a) > 1 else 1, len(a)), a, n)
    fb = embed(Spec.threshold(len(b) - 1 if len(b) > 1 else 1, len(b)), b, n)
    wa = chain_updown(a) if len(a) > 1 else Word(a)
    wb = chain_updown(b) if len(b) > 1 else Word(b)
    assert solves(wa, fa, "full").ok and solves(wb, fb, "full").ok
    assert solves(commutator(wa, wb), combine(fa, fb, "or"), "full").ok


def staircase(n1, n2, k, corners):
    """Falls when (left removed, right removed) dominates some (j, k - j)."""
    left = set(range(1, n1 + 1))

    def fall(s):
        ls = sum(1 for j in range(n1) if s >> j & 1)
        rs = bin(s).count("1") - ls
        return any(ls >= j and rs >= k - j for j in corners)

    return Spec.from_table(n1 + n2, fall)


def test_separates_above_staircase():
    f0 = staircase(2, 2, 2, [0])
    f1 = staircase(2, 2, 2, [1])
    expected = {}
    for s in subsets(4):
        above = [t for t in subsets(4) if s <= t]
        expected[s] = any(f0.falls(t) != f1.falls(t) for t in above)
    for s, sep in expected.items():
        assert separates_above(f0, f1, s) == sep
    assert separates_above(f0, f1, set())
    assert separates_above(f0, f1, {3, 4})
    assert not separates_above(f0, f1, {1, 3, 4})
    assert not separates_above(f0, f1, nail_mask({1, 2, 3, 4}))


def test_separates_above_identical_specs():
    f = Spec.threshold(2, 4)
    assert not any(separates_above(f, f, s) for s in range(16))
