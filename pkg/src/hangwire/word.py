"""Words in the free group on nails, written additively.

A letter is a nonzero int: ``+j`` wraps nail ``j`` one way, ``-j`` the
other. A :class:`Word` is a freely reduced tuple of letters; ``a + b`` is
the reduced concatenation and ``-a`` the inverse, so the algebra reads the
way the wire is described (``1 + 2 - 1 - 2``).

Expressions (:class:`Leaf`, :class:`Sum`, :class:`Neg`, :class:`Comm`,
:data:`ZERO`) keep the pre-reduction structure so symbol counts can be
reported before cancellation.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

import numpy as np

MAX_NAIL = 64


_LETTERS = frozenset(range(-MAX_NAIL, MAX_NAIL + 1)) - {0}


def _check_letter(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
        raise TypeError(f"letter must be an int, got {x!r}")
    x = int(x)
    if x == 0 or abs(x) > MAX_NAIL:
        raise ValueError(f"letter {x} is not a signed nail in 1..{MAX_NAIL}")
    return x


def _checked(letters: Iterable[int]) -> tuple:
    t = tuple(letters)
    # set operations keep the common all-int case out of the interpreter loop
    if set(map(type, t)) <= {int} and _LETTERS.issuperset(t):
        return t
    return tuple(map(_check_letter, t))


def _reduce(t: tuple) -> tuple:
    out: list = []
    for x in t:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


_new = tuple.__new__
_neg = operator.neg
_cat = tuple.__add__


class Word(tuple):
    """Freely reduced word. Constructing one reduces its input."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return _new(cls, _reduce(_checked(letters)))

    @classmethod
    def _trusted(cls, letters) -> "Word":
        return _new(cls, letters)

    def __add__(self, other) -> "Word":
        if other.__class__ is not Word:
            other = Word(other)
        if not self or not other or self[-1] != -other[0]:
            return _new(Word, _cat(self, other))
        i = 1
        n = min(len(self), len(other))
        while i < n and self[-1 - i] == -other[i]:
            i += 1
        return _new(Word, self[: len(self) - i] + other[i:])

    def __radd__(self, other) -> "Word":
        return Word(other) + self

    def __neg__(self) -> "Word":
        return _new(Word, map(_neg, reversed(self)))

    def __sub__(self, other) -> "Word":
        if other.__class__ is not Word:
            other = Word(other)
        return self + _new(Word, map(_neg, reversed(other)))

    def __mul__(self, count):
        raise TypeError("use repeat() for multiples; Word * int would be tuple repetition")

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    @property
    def support(self) -> frozenset:
        return frozenset(abs(x) for x in self)


ZERO_WORD = Word._trusted(())


def reduce(letters: Iterable[int]) -> Word:
    return Word(letters)


def invert(w: Word) -> Word:
    return -as_word(w)


def concat(a: Word, b: Word) -> Word:
    return as_word(a) + as_word(b)


def commutator(a: Word, b: Word) -> Word:
    """``a + b - a - b``."""
    a, b = as_word(a), as_word(b)
    return (a + b) - (b + a)


def repeat(w: Word, times: int) -> Word:
    w = as_word(w)
    if times < 0:
        w, times = -w, -times
    out = ZERO_WORD
    for _ in range(times):
        out = out + w
    return out


def conjugate(w: Word, g: Word) -> Word:
    """``g + w - g``."""
    g = as_word(g)
    return g + as_word(w) - g


def as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)


def nail_mask(nails: Iterable[int]) -> int:
    mask = 0
    for j in nails:
        if not 1 <= j <= MAX_NAIL:
            raise ValueError(f"nail {j} outside 1..{MAX_NAIL}")
        mask |= 1 << (j - 1)
    return mask


def mask_nails(mask: int) -> frozenset:
    return frozenset(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


@lru_cache(maxsize=4096)
def _removed_letters(mask: int) -> frozenset:
    nails = mask_nails(mask)
    return frozenset(nails) | frozenset(-j for j in nails)


def restrict(w: Word, removed) -> Word:
    """Set the nails in ``removed`` to zero and reduce.

    ``removed`` is an iterable of nails or an int bitmask.
    """
    mask = removed if isinstance(removed, int) else nail_mask(removed)
    w = as_word(w)
    if not mask:
        return w
    gone = _removed_letters(mask)
    out: list = []
    for x in w:
        if x in gone:
            continue
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return _new(Word, out)


class Analysis(NamedTuple):
    support: frozenset
    net_exponent: dict
    cyclic_reduced: Word


def cyclic_reduce(w: Word) -> Word:
    w = as_word(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return Word._trusted(w[i : j + 1])


def analyze(w: Word) -> Analysis:
    w = as_word(w)
    net: dict = {}
    for x in w:
        net[abs(x)] = net.get(abs(x), 0) + (1 if x > 0 else -1)
    return Analysis(frozenset(net), dict(sorted(net.items())), cyclic_reduce(w))


# -- text form ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*([+-]?)\s*(\d+)\s*")
_SIGN = re.compile(r"\s*[+-]?\s*")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_word(text: str) -> Word:
    """Parse ``"1+2-1-2"``; the empty (or blank) string and ``"0"`` are the zero word."""
    if text.strip() in ("", "0"):
        return ZERO_WORD
    letters = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = _SIGN.match(text, pos).end()
            found = repr(text[bad]) if bad < len(text) else "end of input"
            raise WordSyntaxError(f"expected a signed nail, found {found}", bad)
        sign, digits = m.groups()
        if letters and not sign:
            raise WordSyntaxError("missing '+' or '-' between nails", m.start(2))
        value = int(digits)
        if value == 0:
            raise WordSyntaxError("0 is not a nail", m.start(2))
        if value > MAX_NAIL:
            raise WordSyntaxError(f"nail {value} exceeds {MAX_NAIL}", m.start(2))
        letters.append(-value if sign == "-" else value)
        pos = m.end()
    return Word(letters)


def format_word(w) -> str:
    if not w:
        return "0"
    parts = [str(w[0])]
    parts.extend(f"+{x}" if x > 0 else str(x) for x in w[1:])
    return "".join(parts)


# -- expressions ---------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class Leaf:
    letter: int

    def __post_init__(self):
        _check_letter(self.letter)


@dataclass(frozen=True, eq=True)
class Zero:
    pass


@dataclass(frozen=True, eq=True)
class Sum:
    children: tuple

    def __init__(self, *children):
        if len(children) == 1 and isinstance(children[0], (list, tuple)):
            children = tuple(children[0])
        object.__setattr__(self, "children", tuple(children))


@dataclass(frozen=True, eq=True)
class Neg:
    child: "Expr"


@dataclass(frozen=True, eq=True)
class Comm:
    left: "Expr"
    right: "Expr"


ZERO = Zero()
Expr = Union[Leaf, Zero, Sum, Neg, Comm]


def letters_expr(w) -> Expr:
    """An expression spelling ``w`` letter by letter (no structure)."""
    w = as_word(w)
    if not w:
        return ZERO
    if len(w) == 1:
        return Leaf(w[0])
    return Sum(tuple(Leaf(x) for x in w))


class Flattened(NamedTuple):
    word: Word
    symbol_count: int


def symbol_count(e: Expr, _memo=None) -> int:
    """Letters in the fully expanded expression, before any reduction."""
    memo = {} if _memo is None else _memo
    key = id(e)
    if key in memo:
        return memo[key][1]
    if isinstance(e, Leaf):
        count = 1
    elif isinstance(e, Zero):
        count = 0
    elif isinstance(e, Sum):
        count = sum(symbol_count(c, memo) for c in e.children)
    elif isinstance(e, Neg):
        count = symbol_count(e.child, memo)
    elif isinstance(e, Comm):
        count = 2 * (symbol_count(e.left, memo) + symbol_count(e.right, memo))
    else:
        raise TypeError(f"not an expression: {e!r}")
    memo[key] = (e, count)
    return count


def evaluate(e: Expr, _memo=None) -> Word:
    memo = {} if _memo is None else _memo
    key = id(e)
    if key in memo:
        return memo[key][1]
    if isinstance(e, Leaf):
        w = Word._trusted((e.letter,))
    elif isinstance(e, Zero):
        w = ZERO_WORD
    elif isinstance(e, Sum):
        w = ZERO_WORD
        for c in e.children:
            w = w + evaluate(c, memo)
    elif isinstance(e, Neg):
        w = -evaluate(e.child, memo)
    elif isinstance(e, Comm):
        a, b = evaluate(e.left, memo), evaluate(e.right, memo)
        w = (a + b) - (b + a)
    else:
        raise TypeError(f"not an expression: {e!r}")
    memo[key] = (e, w)
    return w


def expand(e: Expr) -> list:
    """The unreduced letter sequence of ``e``."""
    if isinstance(e, Leaf):
        return [e.letter]
    if isinstance(e, Zero):
        return []
    if isinstance(e, Sum):
        out = []
        for c in e.children:
            out.extend(expand(c))
        return out
    if isinstance(e, Neg):
        return [-x for x in reversed(expand(e.child))]
    if isinstance(e, Comm):
        a, b = expand(e.left), expand(e.right)
        return a + b + [-x for x in reversed(a)] + [-x for x in reversed(b)]
    raise TypeError(f"not an expression: {e!r}")


def flatten(e: Expr) -> Flattened:
    return Flattened(evaluate(e), symbol_count(e))


def format_expr(e: Expr) -> str:
    """Compact text: ``[a, b]`` for commutators, ``-(...)`` for negation."""
    if isinstance(e, Leaf):
        return str(e.letter)
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, Sum):
        parts = []
        for i, c in enumerate(e.children):
            s = format_expr(c)
            if i and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return "".join(parts) if len(parts) > 1 else (parts[0] if parts else "0")
    if isinstance(e, Neg):
        return f"-({format_expr(e.child)})"
    if isinstance(e, Comm):
        return f"[{format_expr(e.left)}, {format_expr(e.right)}]"
    raise TypeError(f"not an expression: {e!r}")
