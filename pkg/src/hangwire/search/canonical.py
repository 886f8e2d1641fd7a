"""Canonical representatives under relabelling, sign flips, reversal and rotation."""

from __future__ import annotations

from hangwire.word import Word, as_word, cyclic_reduce


def letter_code(x: int) -> int:
    """Sort key of a letter: +1 < -1 < +2 < -2 < ..."""
    return 2 * x - 2 if x > 0 else -2 * x - 1


def word_key(w) -> tuple:
    return tuple(letter_code(x) for x in w)


def normalize(letters) -> tuple:
    """Relabel nails by first occurrence and make each first occurrence positive."""
    label: dict = {}
    sign: dict = {}
    out = []
    for x in letters:
        nail = abs(x)
        if nail not in label:
            label[nail] = len(label) + 1
            sign[nail] = 1 if x > 0 else -1
        y = label[nail]
        out.append(y if x * sign[nail] > 0 else -y)
    return tuple(out)


def orbit_candidates(w: Word):
    """Normalized forms of every rotation of ``w`` and of its reversal."""
    size = len(w)
    back = tuple(reversed(w))
    for seq in (tuple(w), back):
        for r in range(size):
            yield normalize(seq[r:] + seq[:r])


def canonical_form(w) -> Word:
    """Least normalized rotation of ``w`` or its reversal, after cyclic reduction."""
    w = cyclic_reduce(as_word(w))
    if not w:
        raise ValueError("the zero word has no canonical form")
    return Word._trusted(min(orbit_candidates(w), key=word_key))


def is_canonical(w) -> bool:
    w = as_word(w)
    return bool(w) and cyclic_reduce(w) == w and canonical_form(w) == w


def equivalent(a, b) -> bool:
    a, b = as_word(a), as_word(b)
    if not a or not b:
        raise ValueError("equivalence is defined for nonzero words")
    return canonical_form(a) == canonical_form(b)
