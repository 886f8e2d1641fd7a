"""Picture-hanging puzzles as words in the free group on nails."""

from hangwire.spec import Spec, parse_spec, solves
from hangwire.word import Comm, Leaf, Neg, Sum, Word, ZERO, commutator, flatten, parse_word, restrict

__version__ = "0.1.0"

__all__ = [
    "Comm",
    "Leaf",
    "Neg",
    "Spec",
    "Sum",
    "Word",
    "ZERO",
    "commutator",
    "flatten",
    "parse_spec",
    "parse_word",
    "restrict",
    "solves",
]
