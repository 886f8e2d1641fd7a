import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import letters, nail_sets, words
from hangwire.word import (
    ZERO,
    Comm,
    Leaf,
    Neg,
    Sum,
    Word,
    WordSyntaxError,
    analyze,
    commutator,
    concat,
    conjugate,
    cyclic_reduce,
    expand,
    flatten,
    format_expr,
    format_word,
    invert,
    parse_word,
    reduce,
    restrict,
    symbol_count,
)


def reduce_in_random_order(seq, rng):
    """Cancel a random adjacent inverse pair until none is left."""
    seq = list(seq)
    while True:
        spots = [i for i in range(len(seq) - 1) if seq[i] == -seq[i + 1]]
        if not spots:
            return tuple(seq)
        i = rng.choice(spots)
        del seq[i : i + 2]


def strip_conjugating_pairs(seq):
    seq = list(seq)
    while len(seq) >= 2 and seq[0] == -seq[-1]:
        seq = seq[1:-1]
    return tuple(seq)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([1, 2, -2, -1, 3], [3]),
        ([1, 2, -1, -2], [1, 2, -1, -2]),
        ([1, -1], []),
    ],
)
def test_reduce_examples(raw, expected):
    assert reduce(raw) == tuple(expected)


@pytest.mark.parametrize(
    "w, expected",
    [([1, 2], [-2, -1]), ([], []), ([1, 2, -1, -2], [2, 1, -2, -1])],
)
def test_invert_examples(w, expected):
    assert invert(Word(w)) == tuple(expected)


@pytest.mark.parametrize(
    "a, b, expected",
    [([1, 2], [-2, 3], [1, 3]), ([1], [-1], []), ([1, 2], [3], [1, 2, 3])],
)
def test_concat_examples(a, b, expected):
    assert concat(Word(a), Word(b)) == tuple(expected)


@pytest.mark.parametrize(
    "a, b, expected",
    [([1], [2], [1, 2, -1, -2]), ([1], [1], []), ([1, 2], [3], [1, 2, 3, -2, -1, -3])],
)
def test_commutator_examples(a, b, expected):
    assert commutator(Word(a), Word(b)) == tuple(expected)


@pytest.mark.parametrize(
    "removed, expected",
    [({1}, []), (set(), [1, 2, -1, -2]), ({3}, [1, 2, -1, -2])],
)
def test_restrict_examples(removed, expected):
    assert restrict(Word([1, 2, -1, -2]), removed) == tuple(expected)


def test_restrict_accepts_bitmask():
    assert restrict(Word([1, 2, -1, -2]), 0b10) == ()


def test_analyze_commutator():
    a = analyze(Word([1, 2, -1, -2]))
    assert a.support == {1, 2}
    assert a.net_exponent == {1: 0, 2: 0}
    assert a.cyclic_reduced == (1, 2, -1, -2)


def test_analyze_net_exponents_of_chain():
    assert analyze(Word([1, 2, 3])).net_exponent == {1: 1, 2: 1, 3: 1}


def test_analyze_cyclic_reduction_against_stripping():
    w = Word([3, 1, 2, -1, -3])
    assert analyze(w).cyclic_reduced == strip_conjugating_pairs(w) == (2,)


def test_flatten_examples():
    f = flatten(Comm(Leaf(1), Leaf(2)))
    assert f.word == (1, 2, -1, -2) and f.symbol_count == 4
    f = flatten(Sum(Leaf(1), Neg(Leaf(1))))
    assert f.word == () and f.symbol_count == 2
    assert flatten(ZERO) == ((), 0)


def test_symbol_count_doubles_per_commutator_level():
    tree = Comm(Comm(Leaf(1), Leaf(2)), Leaf(3))
    assert symbol_count(tree) == 2 * (4 + 1)
    assert len(expand(tree)) == symbol_count(tree)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+2-1-2", (1, 2, -1, -2)),
        ("", ()),
        ("  -3 + 12 ", (-3, 12)),
        ("+1", (1,)),
        ("0", ()),
    ],
)
def test_parse(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text, position", [("1+0", 2), ("1+x", 2), ("1 2", 2), ("1+-2", 2), ("65", 0)])
def test_parse_rejects(text, position):
    with pytest.raises(WordSyntaxError) as err:
        parse_word(text)
    assert err.value.position == position


def test_format():
    assert format_word(Word([1, 2, -1, -2])) == "1+2-1-2"
    assert format_word(Word()) == "0"
    assert format_expr(Comm(Sum(Leaf(1), Leaf(2)), Neg(Leaf(3)))) == "[1+2, -(3)]"


def test_letters_validated():
    with pytest.raises(ValueError):
        Word([0])
    with pytest.raises(ValueError):
        Word([65])
    with pytest.raises(TypeError):
        Word([1.0])


def test_word_is_not_repeatable_with_star():
    with pytest.raises(TypeError):
        Word([1]) * 2


# -- properties -----------------------------------------------------------------


@given(letters(), st.randoms(use_true_random=False))
def test_reduce_is_confluent(seq, r):
    assert reduce(seq) == reduce_in_random_order(seq, r)


@given(letters())
def test_reduce_idempotent_and_parity(seq):
    w = reduce(seq)
    assert reduce(w) == w
    assert len(w) <= len(seq) and (len(seq) - len(w)) % 2 == 0
    assert all(w[i] != -w[i + 1] for i in range(len(w) - 1))


@given(words(), words(), words())
def test_group_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + Word() == a == Word() + a
    assert a + invert(a) == () == invert(a) + a
    assert invert(invert(a)) == a
    assert invert(a + b) == invert(b) + invert(a)


@given(words(), words(), nail_sets(), nail_sets())
def test_restrict_is_a_homomorphism(a, b, s, t):
    assert restrict(a + b, s) == restrict(a, s) + restrict(b, s)
    assert restrict(invert(a), s) == invert(restrict(a, s))
    assert restrict(commutator(a, b), s) == commutator(restrict(a, s), restrict(b, s))
    assert restrict(a, s | t) == restrict(restrict(a, s), t)


@given(words(max_nail=3, max_size=6), words(max_nail=3, max_size=6))
def test_commutator_vanishes_iff_commute(a, b):
    assert (commutator(a, b) == ()) == (a + b == b + a)
    assert commutator(a, b) == invert(commutator(b, a))


@given(words(max_nail=2, max_size=4), st.integers(-3, 3), st.integers(-3, 3))
def test_powers_of_a_common_element_commute(base, p, q):
    from hangwire.word import repeat

    assert commutator(repeat(base, p), repeat(base, q)) == ()


@given(words(), words(), nail_sets())
def test_conjugates_vanish_together(w, g, s):
    assert (restrict(conjugate(w, g), s) == ()) == (restrict(w, s) == ())


@given(words())
def test_cyclic_reduce_against_stripping(w):
    c = cyclic_reduce(w)
    assert c == strip_conjugating_pairs(w)
    assert len(c) < 2 or c[0] != -c[-1]


@given(words())
def test_text_round_trip(w):
    assert parse_word(format_word(w)) == w


def _exprs(depth):
    leaf = st.integers(1, 4).flatmap(lambda j: st.sampled_from((Leaf(j), Leaf(-j))))
    if depth == 0:
        return leaf
    sub = _exprs(depth - 1)
    return st.one_of(
        leaf,
        st.just(ZERO),
        st.lists(sub, min_size=1, max_size=3).map(lambda cs: Sum(tuple(cs))),
        sub.map(Neg),
        st.tuples(sub, sub).map(lambda ab: Comm(*ab)),
    )


@given(_exprs(3))
def test_flatten_matches_expansion(e):
    f = flatten(e)
    raw = expand(e)
    assert f.symbol_count == len(raw)
    assert f.word == reduce(raw)
    assert (f.symbol_count - len(f.word)) % 2 == 0


@given(_exprs(3), nail_sets(4))
def test_zero_stays_zero_under_removal(e, s):
    w = flatten(e).word
    if w == ():
        assert restrict(w, s) == ()
