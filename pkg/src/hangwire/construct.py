"""Explicit solution families with exact length accounting.

All builders return expressions (so symbol counts before reduction are
available) or :class:`ConstructionReport` records bundling the expression,
its reduced word and a verdict from the solves-checker.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from hangwire.spec import Spec, Verdict, solves, subset_order
from hangwire.word import (
    ZERO,
    Comm,
    Expr,
    Leaf,
    Sum,
    Word,
    as_word,
    evaluate,
    format_word,
    Neg,
    letters_expr,
    mask_nails,
    restrict,
    symbol_count,
)


def _nails(nails) -> tuple:
    if isinstance(nails, int):
        if nails < 1:
            raise ValueError(f"need at least one nail, got {nails}")
        return tuple(range(1, nails + 1))
    nails = tuple(nails)
    if not nails:
        raise ValueError("empty nail set")
    if len(set(nails)) != len(nails):
        raise ValueError(f"repeated nails in {nails}")
    return nails


@dataclass(frozen=True)
class ConstructionReport:
    method: str
    k: int
    n: int
    expr: Expr
    word: Word
    unreduced: int
    reduced: int
    verdict: Optional[Verdict]

    def to_record(self) -> dict:
        return {
            "method": self.method,
            "k": self.k,
            "n": self.n,
            "word": format_word(self.word),
            "unreduced": self.unreduced,
            "reduced": self.reduced,
            "verdict": None if self.verdict is None else self.verdict.to_record(),
        }


def report(method: str, expr: Expr, k: int, n: int, verify: Optional[str] = "essential") -> ConstructionReport:
    """Flatten ``expr`` and check it against Demaine ``k``-of-``n``.

    ``verify`` is ``"essential"``, ``"full"`` or ``None`` to skip checking.
    """
    word = evaluate(expr)
    verdict = solves(word, Spec.threshold(k, n), verify) if verify else None
    return ConstructionReport(method, k, n, expr, word, symbol_count(expr), len(word), verdict)


# -- the easy cases ----------------------------------------------------------


def chain_expr(nails) -> Expr:
    nails = _nails(nails)
    if len(nails) == 1:
        return Leaf(nails[0])
    return Sum(tuple(Leaf(j) for j in nails))


def chain(nails) -> Word:
    """``1 + 2 + ... + n``: solves n-of-n with n letters."""
    return evaluate(chain_expr(nails))


def chain_updown_expr(nails) -> Expr:
    nails = _nails(nails)
    if len(nails) < 2:
        raise ValueError("chain_updown needs at least two nails")
    return Sum(tuple(Leaf(j) for j in nails) + tuple(Leaf(-j) for j in nails))


def chain_updown(nails) -> Word:
    """``1 + ... + n - 1 - ... - n``: solves (n-1)-of-n with 2n letters."""
    return evaluate(chain_updown_expr(nails))


def balanced_k1(nails) -> Expr:
    """Balanced commutator tree over the halves; solves 1-of-m."""
    nails = _nails(nails)
    if len(nails) == 1:
        return Leaf(nails[0])
    half = (len(nails) + 1) // 2
    return Comm(balanced_k1(nails[:half]), balanced_k1(nails[half:]))


# -- Huffman placement ---------------------------------------------------------


def huffman_tree(leaves: Sequence) -> Expr:
    """Combine ``(expr, length)`` pairs into one commutator tree.

    Repeatedly merges the two shortest items into ``Comm(first, second)``;
    the merged item is twice as long as its parts together. Ties go to the
    earlier leaf in ``leaves``, and every leaf precedes merged items.
    """
    leaves = list(leaves)
    if not leaves:
        raise ValueError("huffman_tree needs at least one leaf")
    heap = [(length, i, expr) for i, (expr, length) in enumerate(leaves)]
    heapq.heapify(heap)
    counter = len(heap)
    while len(heap) > 1:
        la, _, a = heapq.heappop(heap)
        lb, _, b = heapq.heappop(heap)
        heapq.heappush(heap, (2 * (la + lb), counter, Comm(a, b)))
        counter += 1
    return heap[0][2]


def huffman_cost(lengths: Iterable[int]) -> int:
    """Total length of the Huffman tree over leaves of the given lengths."""
    heap = list(lengths)
    if not heap:
        raise ValueError("no lengths")
    heapq.heapify(heap)
    while len(heap) > 1:
        a = heapq.heappop(heap)
        b = heapq.heappop(heap)
        heapq.heappush(heap, 2 * (a + b))
    return heap[0]


# -- binary splitting ----------------------------------------------------------


class SplitPlan(NamedTuple):
    left: tuple
    right: tuple
    feasible_j: range


def split_plan(k: int, nails) -> SplitPlan:
    nails = _nails(nails)
    if len(nails) < 2:
        raise ValueError("cannot split a single nail")
    half = (len(nails) + 1) // 2
    left, right = nails[:half], nails[half:]
    return SplitPlan(left, right, range(max(0, k - len(right)), min(k, len(left)) + 1))


def disjunct(k: int, j: int, plan: SplitPlan) -> Expr:
    """Cross term: at least ``j`` removed on the left and ``k - j`` on the right."""
    if j == 0:
        return _split_expr(k, plan.right)
    if j == k:
        return _split_expr(k, plan.left)
    return Sum(_split_expr(j, plan.left), _split_expr(k - j, plan.right))


@lru_cache(maxsize=None)
def _split_expr(k: int, nails: tuple) -> Expr:
    m = len(nails)
    if not 1 <= k <= m:
        raise ValueError(f"threshold {k} out of range for {m} nails")
    if k == 1:
        return balanced_k1(nails)
    if k == m:
        return chain_expr(nails)
    if k == m - 1:
        return chain_updown_expr(nails)
    plan = split_plan(k, nails)
    leaves = [disjunct(k, j, plan) for j in plan.feasible_j]
    return huffman_tree([(d, symbol_count(d)) for d in leaves])


def demaine_split(k: int, nails, verify: Optional[str] = "essential") -> ConstructionReport:
    """Binary-splitting k-of-n solution with Huffman commutator trees."""
    nails = _nails(nails)
    if not 1 <= k <= len(nails):
        raise ValueError(f"threshold {k} out of range for {len(nails)} nails")
    expr = _split_expr(k, nails)
    return report("split", expr, k, len(nails), verify if max(nails) == len(nails) else None)


def l2_closed_form(i: int) -> int:
    """Unreduced 2-of-2^i length, ``(8/3)·6^i - 4·4^i``, as an exact integer."""
    if i < 2:
        raise ValueError("closed form holds for i >= 2")
    return (8 * 6**i) // 3 - 4 * 4**i


def l2_recurrence(i: int) -> int:
    if i < 2:
        raise ValueError("recurrence starts at i = 2")
    value = 32
    for step in range(3, i + 1):
        value = 6 * value + 2 * 4**step
    return value


@lru_cache(maxsize=None)
def split_length(k: int, m: int) -> int:
    """Unreduced length of the splitting construction, lengths only."""
    if not 1 <= k <= m:
        raise ValueError(f"threshold {k} out of range for {m} nails")
    if k == 1:
        if m == 1:
            return 1
        half = (m + 1) // 2
        return 2 * (split_length(1, half) + split_length(1, m - half))
    if k == m:
        return m
    if k == m - 1:
        return 2 * m
    m1 = (m + 1) // 2
    m2 = m - m1
    lengths = []
    for j in range(max(0, k - m2), min(k, m1) + 1):
        if j == 0:
            lengths.append(split_length(k, m2))
        elif j == k:
            lengths.append(split_length(k, m1))
        else:
            lengths.append(split_length(j, m1) + split_length(k - j, m2))
    return huffman_cost(lengths)


class LengthRow(NamedTuple):
    i: int
    n: int
    length: int
    ratio: Optional[float]


def length_table(k: int, i_max: int) -> list:
    """Unreduced ``L_k(2^i)`` for ``2^i >= k`` up to ``i_max``, with successive ratios."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = []
    prev = None
    for i in range(0, i_max + 1):
        n = 1 << i
        if n < k:
            continue
        length = split_length(k, n)
        rows.append(LengthRow(i, n, length, None if prev is None else length / prev))
        prev = length
    return rows


# -- co-rank two ---------------------------------------------------------------


def _corank2_expr(nails: tuple) -> Expr:
    if len(nails) == 2:
        return ZERO
    half = len(nails) // 2
    left, right = nails[:half], nails[half:]
    # argument order keeps every junction cancellation-free
    cross1 = Comm(chain_updown_expr(right), chain_expr(left))
    cross2 = Comm(chain_expr(right), chain_updown_expr(left))
    return Sum(_corank2_expr(left), cross1, cross2, _corank2_expr(right))


def wastlund_corank2(nails, verify: Optional[str] = "essential") -> ConstructionReport:
    """(n-2)-of-n for n a power of two, length exactly 6·n·log2(n/2).

    W(V) = W(L) + [2-of-R, 1-of-L] + [1-of-R, 2-of-L] + W(R) with the
    thresholds in the hang-iff-enough-remain convention; the blocks are
    the linear chains, and W on two nails is empty.
    """
    nails = _nails(nails)
    n = len(nails)
    if n < 2 or n & (n - 1):
        raise ValueError(f"nail count {n} is not a power of two >= 2")
    return report("wastlund", _corank2_expr(nails), n - 2, n, verify if max(nails) == n else None)


def corank2_length(i: int) -> int:
    return 6 * (i - 1) * 2**i


# -- one-step extension --------------------------------------------------------


def extension_expr(a, b, new_nail: int) -> Expr:
    """``A + n + B - A - n`` with ``A`` and ``B`` words or expressions."""
    a_expr = a if not isinstance(a, (Word, tuple, list)) else letters_expr(a)
    b_expr = b if not isinstance(b, (Word, tuple, list)) else letters_expr(b)
    return Sum(a_expr, Leaf(new_nail), b_expr, Neg(a_expr), Leaf(-new_nail))


def extend(k: int, a, b, new_nail: Optional[int] = None, check: bool = False) -> Word:
    """Solve k-of-n from a k-of-(n-1) word ``a`` and a (k-1)-of-(n-1) word ``b``."""
    a, b = as_word(a), as_word(b)
    n = new_nail if new_nail is not None else max(a.support | b.support | {0}) + 1
    if not 2 <= k <= n - 1:
        raise ValueError(f"extension needs 2 <= k <= n - 1, got k={k}, n={n}")
    if any(j >= n for j in a.support | b.support):
        raise ValueError(f"inputs must live on nails 1..{n - 1}")
    if check:
        for w, kk, name in ((a, k, "A"), (b, k - 1, "B")):
            v = solves(w, Spec.threshold(kk, n - 1))
            if not v.ok:
                raise ValueError(f"{name} does not solve {kk}-of-{n - 1}: {v}")
    nail = Word._trusted((n,))
    return a + nail + b - a - nail


def extension_report(k: int, a, b, new_nail: int, method: str = "extension", verify="essential") -> ConstructionReport:
    return report(method, extension_expr(a, b, new_nail), k, new_nail, verify)


LADDER_ORIENTATIONS = {
    "[1,[2,3]]": Comm(Leaf(1), Comm(Leaf(2), Leaf(3))),
    "[[1,2],3]": Comm(Comm(Leaf(1), Leaf(2)), Leaf(3)),
    "[1,[3,2]]": Comm(Leaf(1), Comm(Leaf(3), Leaf(2))),
    "[[2,1],3]": Comm(Comm(Leaf(2), Leaf(1)), Leaf(3)),
}


def extension_ladder(n: int = 4) -> list:
    """Lengths of the 2-of-4 extension over the four documented 1-of-3 orientations."""
    if n != 4:
        raise ValueError("the orientation ladder is documented for n = 4 only")
    a = chain_updown(3)
    return [(label, len(extend(2, a, evaluate(b), 4))) for label, b in LADDER_ORIENTATIONS.items()]


def junction_overlap(left: Word, right: Word) -> int:
    """Letters cancelled when ``right`` follows ``left``."""
    i = 0
    while i < min(len(left), len(right)) and left[-1 - i] == -right[i]:
        i += 1
    return i


def _orientations(e: Expr):
    if isinstance(e, Comm):
        for a in _orientations(e.left):
            for b in _orientations(e.right):
                yield Comm(a, b)
                yield Comm(b, a)
    else:
        yield e


def best_extension(k: int, a, b_tree: Expr, new_nail: int) -> Expr:
    """Pick the argument order of ``b_tree`` that cancels most against ``-a``.

    Greedy heuristic: scores only the junction between ``B`` and ``-A``.
    """
    a = as_word(a)
    best, best_score = None, -1
    for cand in _orientations(b_tree):
        score = junction_overlap(evaluate(cand), -a)
        if score > best_score:
            best, best_score = cand, score
    return best


# -- node-vanish audit ---------------------------------------------------------


class AuditEntry(NamedTuple):
    path: tuple
    removed: frozenset


class Audit(NamedTuple):
    vanishing: list
    harmless: list

    @property
    def clean(self) -> bool:
        return not self.vanishing


def node_vanish_audit(tree: Expr, f: Spec) -> Audit:
    """Find commutator nodes that vanish where ``f`` hangs.

    ``vanishing`` lists every (node path, removal) with the node zero while
    ``f`` hangs; an empty list means the tree solves ``f`` whenever the
    leaves' disjunction is ``f``. ``harmless`` lists collapses (node zero,
    both arguments nonzero) at removals where ``f`` falls. Paths are tuples
    of 0 (left) / 1 (right) from the root.
    """
    if f.n > 12:
        raise ValueError("audit enumerates subsets; limited to 12 nails")
    nodes = []

    def walk(e, path):
        if isinstance(e, Comm):
            nodes.append((path, e))
            walk(e.left, path + (0,))
            walk(e.right, path + (1,))

    walk(tree, ())
    vanishing, harmless = [], []
    for s in subset_order(f.n):
        cache = {}

        def value(e):
            key = id(e)
            if key not in cache:
                if isinstance(e, Comm):
                    a, b = value(e.left), value(e.right)
                    cache[key] = (a + b) - (b + a)
                else:
                    cache[key] = restrict(evaluate(e), s)
            return cache[key]

        falls = f.falls(s)
        for path, node in nodes:
            if value(node):
                continue
            if not falls:
                vanishing.append(AuditEntry(path, mask_nails(s)))
            elif value(node.left) and value(node.right):
                harmless.append(AuditEntry(path, mask_nails(s)))
    return Audit(vanishing, harmless)


def subtree(tree: Expr, path: Sequence[int]) -> Expr:
    for step in path:
        tree = tree.right if step else tree.left
    return tree

