"""Concrete 2-of-4 solutions, from Demaine's 80-symbol tree down to length 16."""

from __future__ import annotations

from hangwire.construct import (
    LADDER_ORIENTATIONS,
    ConstructionReport,
    chain_updown,
    chain_updown_expr,
    extension_expr,
    report,
)
from hangwire.word import Comm, Leaf, Sum, letters_expr, parse_word


def _s(*letters):
    return Sum(tuple(Leaf(x) for x in letters))


def _c(a, b):
    return Comm(a, b)


def demaine_tree():
    """Demaine et al.'s six pair-sum leaves under one commutator tree."""
    return _c(_c(_s(1, 2), _c(_s(1, 3), _s(1, 4))), _c(_s(2, 3), _c(_s(2, 4), _s(3, 4))))


W1 = parse_word("1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4")
W2 = parse_word("1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4")

_EXHIBITS = {
    "demaine80": demaine_tree,
    "reoriented58": lambda: _c(
        _c(_s(1, 2), _c(_s(3, 1), _s(4, 1))),
        _c(_s(3, 2), _c(_s(2, 4), _s(3, 4))),
    ),
    "reoriented54": lambda: _c(
        _c(_c(_s(2, 1), _s(3, 1)), _s(3, 4)),
        _c(_s(4, 1), _c(_s(3, 2), _s(4, 2))),
    ),
    "dropped52": lambda: _c(_c(_s(1, 2), _c(_s(1, 3), _s(1, 4))), _c(_s(2, 3), _s(2, 4))),
    "atoms44": lambda: _c(_c(_s(1, 2), chain_updown_expr((1, 3, 4))), chain_updown_expr((2, 3, 4))),
    "huffman-good32": lambda: _c(_c(_s(1, 2), _s(3, 4)), Sum(_c(Leaf(1), Leaf(2)), _c(Leaf(3), Leaf(4)))),
    "huffman-bad44": lambda: _c(_c(_s(1, 2), Sum(_c(Leaf(1), Leaf(2)), _c(Leaf(3), Leaf(4)))), _s(3, 4)),
    "extension24": lambda: extension_expr(chain_updown(3), LADDER_ORIENTATIONS["[1,[2,3]]"], 4),
    "extension22": lambda: extension_expr(chain_updown(3), LADDER_ORIENTATIONS["[[1,2],3]"], 4),
    "extension20": lambda: extension_expr(chain_updown(3), LADDER_ORIENTATIONS["[1,[3,2]]"], 4),
    "extension18": lambda: extension_expr(chain_updown(3), LADDER_ORIENTATIONS["[[2,1],3]"], 4),
    "optimal16-w1": lambda: letters_expr(W1),
    "optimal16-w2": lambda: letters_expr(W2),
}

NAMES = tuple(_EXHIBITS)


def catalog(name: str, verify: str = "full") -> ConstructionReport:
    try:
        build = _EXHIBITS[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}") from None
    return report(name, build(), 2, 4, verify)
