"""Puzzle specifications: which removals must make the picture fall.

Removal sets are int bitmasks over nails ``1..n`` (bit ``j - 1`` is nail
``j``). Thresholds are stored in Demaine's convention (fall iff at least
``k`` removed); Wästlund's convention (hang iff at least ``k`` remain) is
translated on the way in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

import numpy as np

from hangwire import kernels
from hangwire.word import MAX_NAIL, Word, as_word, format_word, mask_nails, nail_mask, restrict

MAX_TABLE_NAILS = 20


class Convention(str, Enum):
    DEMAINE = "demaine"
    WASTLUND = "wastlund"


def translate(k: int, n: int, source: Convention | str = Convention.WASTLUND) -> int:
    """Convert a threshold between conventions; the map is its own inverse.

    Wästlund's ``n + 1``-of-``n`` (never hangs) maps to Demaine's ``0``-of-``n``.
    """
    Convention(source)
    if not 0 <= k <= n + 1:
        raise ValueError(f"threshold {k} out of range for {n} nails")
    return n - k + 1


def _as_mask(removed) -> int:
    return removed if isinstance(removed, (int, np.integer)) else nail_mask(removed)


@dataclass(frozen=True)
class Spec:
    """A monotone specification on nails ``1..n``.

    Either a threshold (``k`` set, Demaine convention) or an explicit
    table of fall outcomes indexed by removal bitmask.
    """

    n: int
    k: Optional[int] = None
    convention: Convention = Convention.DEMAINE
    table: Optional[bytes] = field(default=None, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_NAIL:
            raise ValueError(f"nail count {self.n} outside 1..{MAX_NAIL}")
        if (self.k is None) == (self.table is None):
            raise ValueError("a spec is either a threshold or a table")
        if self.k is not None and not 0 <= self.k <= self.n:
            raise ValueError(f"threshold {self.k} out of range for {self.n} nails")
        if self.table is not None:
            if self.n > MAX_TABLE_NAILS:
                raise ValueError(f"table specs are limited to {MAX_TABLE_NAILS} nails")
            if len(self.table) != 1 << self.n:
                raise ValueError("table size must be 2**n")

    @classmethod
    def threshold(cls, k: int, n: int, convention: Convention | str = Convention.DEMAINE) -> "Spec":
        convention = Convention(convention)
        if convention is Convention.WASTLUND:
            k = translate(k, n, convention)
        return cls(n=n, k=k, convention=convention)

    @classmethod
    def from_table(cls, n: int, fall) -> "Spec":
        """Build from a sequence or callable giving the outcome per bitmask."""
        size = 1 << n
        if callable(fall):
            values = bytes(bool(fall(s)) for s in range(size))
        else:
            values = bytes(bool(x) for x in fall)
        spec = cls(n=n, table=values)
        if not spec.is_monotone():
            raise ValueError("specification is not monotone")
        if not values[size - 1]:
            raise ValueError("specification must fall when every nail is removed")
        return spec

    @property
    def is_threshold(self) -> bool:
        return self.k is not None

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def falls(self, removed) -> bool:
        s = _as_mask(removed)
        if s & ~self.full:
            raise ValueError(f"removal {sorted(mask_nails(s))} outside nails 1..{self.n}")
        if self.k is not None:
            return bin(s).count("1") >= self.k
        return bool(self.table[s])

    def fall_table(self) -> np.ndarray:
        if self.table is not None:
            return np.frombuffer(self.table, dtype=np.uint8).astype(bool)
        if self.n > MAX_TABLE_NAILS:
            raise ValueError("too many nails to tabulate")
        sizes = np.array([bin(s).count("1") for s in range(1 << self.n)])
        return sizes >= self.k

    def is_monotone(self) -> bool:
        if self.k is not None:
            return True
        t = self.fall_table()
        idx = np.arange(1 << self.n)
        for j in range(self.n):
            lower = idx[(idx >> j) & 1 == 0]
            if np.any(t[lower] & ~t[lower | (1 << j)]):
                return False
        return True

    def __str__(self) -> str:
        if self.k is None:
            return f"table-{self.n}"
        if self.convention is Convention.WASTLUND:
            return f"{translate(self.k, self.n, Convention.DEMAINE)}-of-{self.n}@wastlund"
        return f"{self.k}-of-{self.n}"


_SPEC_TEXT = re.compile(r"^\s*(\d+)\s*-of-\s*(\d+)\s*(?:@\s*(demaine|wastlund))?\s*$", re.IGNORECASE)


def parse_spec(text: str, convention: Convention | str | None = None) -> Spec:
    """Parse ``"K-of-N"`` with an optional ``@demaine``/``@wastlund`` suffix.

    An explicit ``convention`` argument applies only when the text has no
    suffix.
    """
    m = _SPEC_TEXT.match(text)
    if not m:
        raise ValueError(f"cannot parse puzzle {text!r}; expected K-of-N[@demaine|@wastlund]")
    k, n = int(m.group(1)), int(m.group(2))
    conv = m.group(3) or convention or Convention.DEMAINE
    conv = Convention(str(conv.value if isinstance(conv, Convention) else conv).lower())
    if conv is Convention.WASTLUND and not 1 <= k <= n + 1:
        raise ValueError(f"threshold {k} out of range for {n} nails")
    if conv is Convention.DEMAINE and not 0 <= k <= n:
        raise ValueError(f"threshold {k} out of range for {n} nails")
    return Spec.threshold(k, n, conv)


def subset_order(n: int) -> list:
    """All bitmasks over ``n`` nails, by size then numeric value."""
    if n > MAX_TABLE_NAILS:
        raise ValueError(f"full enumeration is limited to {MAX_TABLE_NAILS} nails")
    return sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))


def _masks_of_size(n: int, size: int) -> list:
    if size < 0 or size > n:
        return []
    return sorted(sum(1 << (j - 1) for j in c) for c in combinations(range(1, n + 1), size))


class EssentialRemovals(NamedTuple):
    must_fall: list
    must_hang: list


def essential_removals(f: Spec) -> EssentialRemovals:
    """Minimal fall sets and maximal hang sets, as bitmasks in enumeration order."""
    if f.k is not None:
        return EssentialRemovals(_masks_of_size(f.n, f.k), _masks_of_size(f.n, f.k - 1))
    t = f.fall_table()
    bits = [1 << j for j in range(f.n)]
    must_fall, must_hang = [], []
    for s in subset_order(f.n):
        if t[s]:
            if not any(s & b and t[s ^ b] for b in bits):
                must_fall.append(s)
        elif not any(not s & b and not t[s | b] for b in bits):
            must_hang.append(s)
    return EssentialRemovals(must_fall, must_hang)


class Counterexample(NamedTuple):
    removed: frozenset
    expected: str
    got: Word


@dataclass(frozen=True)
class Verdict:
    counterexample: Optional[Counterexample] = None
    checked: int = 0

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        c = self.counterexample
        removed = "{" + ",".join(map(str, sorted(c.removed))) + "}"
        return f"counterexample S={removed}: expected {c.expected}, got {format_word(c.got)}"

    def to_record(self):
        if self.ok:
            return "ok"
        c = self.counterexample
        return {"removed": sorted(c.removed), "expected": c.expected, "got": format_word(c.got)}


def masks_array(masks: Iterable[int]) -> np.ndarray:
    return np.array(list(masks), dtype=np.uint64).view(np.int64)


def word_array(w) -> np.ndarray:
    return np.asarray(as_word(w), dtype=np.int64)


def solves(w, f: Spec, mode: str = "essential") -> Verdict:
    """Check ``w`` against ``f`` on every removal (``full``) or the essential ones."""
    w = as_word(w)
    stray = [j for j in w.support if j > f.n]
    if stray:
        raise ValueError(f"word uses nails {sorted(stray)} outside 1..{f.n}")
    if mode == "full":
        order = subset_order(f.n)
        expected = f.fall_table()[order]
    elif mode == "essential":
        ess = essential_removals(f)
        tagged = [(s, True) for s in ess.must_fall] + [(s, False) for s in ess.must_hang]
        tagged.sort(key=lambda t: (bin(t[0]).count("1"), t[0]))
        order = [s for s, _ in tagged]
        expected = np.array([e for _, e in tagged], dtype=bool)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    got = kernels.vanishing(word_array(w), masks_array(order))
    bad = np.flatnonzero(got != expected)
    if bad.size == 0:
        return Verdict(None, len(order))
    s = order[int(bad[0])]
    outcome = "fall" if expected[bad[0]] else "hang"
    return Verdict(Counterexample(mask_nails(s), outcome, restrict(w, s)), len(order))


def solved_spec(w, n: int) -> Spec:
    """The table spec a word realizes on nails ``1..n``."""
    got = kernels.vanishing(word_array(w), masks_array(range(1 << n)))
    return Spec.from_table(n, got)


def combine(f1: Spec, f2: Spec, op: str) -> Spec:
    """Pointwise ``and`` (min) or ``or`` (max) of two specs, as a table."""
    if f1.n != f2.n:
        raise ValueError(f"universe mismatch: {f1.n} vs {f2.n} nails")
    a, b = f1.fall_table(), f2.fall_table()
    if op == "and":
        return Spec.from_table(f1.n, a & b)
    if op == "or":
        return Spec.from_table(f1.n, a | b)
    raise ValueError(f"unknown operator {op!r}")


def embed(f: Spec, nails: Iterable[int], n: int) -> Spec:
    """Lift ``f`` on ``1..f.n`` to ``n`` nails, relabelling ``i`` to ``nails[i-1]``."""
    nails = list(nails)
    if len(nails) != f.n:
        raise ValueError("need one target nail per source nail")
    t = f.fall_table()

    def outcome(s):
        local = 0
        for i, j in enumerate(nails):
            if s >> (j - 1) & 1:
                local |= 1 << i
        return t[local]

    return Spec.from_table(n, outcome)


def separates_above(f1: Spec, f2: Spec, removed) -> bool:
    """Whether some superset of ``removed`` gets different outcomes."""
    if f1.n != f2.n:
        raise ValueError(f"universe mismatch: {f1.n} vs {f2.n} nails")
    s = _as_mask(removed)
    a, b = f1.fall_table(), f2.fall_table()
    supersets = np.arange(1 << f1.n)
    supersets = supersets[(supersets & s) == s]
    return bool(np.any(a[supersets] != b[supersets]))
