"""Exhaustive search for canonical solutions of a given length."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from hangwire import kernels
from hangwire.search.canonical import word_key
from hangwire.spec import Spec, essential_removals, masks_array
from hangwire.word import Word, format_word

log = logging.getLogger(__name__)

MAX_SEARCH_NAILS = 6
PREFIX_DEPTH = 4
CHECKPOINT_NODES = 10**9
# estimated candidate count above which a run needs allow_long
LONG_RUN_ESTIMATE = 10**8


class LongRunRefused(RuntimeError):
    pass


@dataclass
class SearchOutcome:
    spec: Spec
    length: int
    solutions: list = field(default_factory=list)
    nodes: int = 0
    seconds: float = 0.0
    shards: int = 1
    shard_id: Optional[int] = None
    aborted: bool = False
    reason: str = ""

    def to_record(self) -> dict:
        return {
            "spec": str(self.spec),
            "length": self.length,
            "solutions": [format_word(w) for w in self.solutions],
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3),
            "sharding": {"shards": self.shards, "shard_id": self.shard_id},
            "aborted": self.aborted,
            "reason": self.reason,
        }


def balanced_search(f: Spec) -> bool:
    """Solutions with k < n have net exponent zero in every nail."""
    return f.k < f.n


def admissible(f: Spec, length: int) -> bool:
    if length < 1 or f.k == 0:
        return False
    if balanced_search(f):
        return length % 2 == 0 and length >= 2 * f.n
    return length >= f.n


def estimated_candidates(n: int, length: int) -> float:
    """Reduced words of the given length, divided by the relabel/sign group."""
    return (2 * n) * (2 * n - 1) ** (length - 1) / (math.factorial(n) * 2**n)


def is_long_run(f: Spec, length: int) -> bool:
    return estimated_candidates(f.n, length) > LONG_RUN_ESTIMATE


def _validate(f: Spec, length: int) -> None:
    if f.k is None:
        raise ValueError("search needs a threshold spec")
    if f.n > MAX_SEARCH_NAILS:
        raise ValueError(f"search is limited to {MAX_SEARCH_NAILS} nails")
    if length < 1:
        raise ValueError("length must be positive")


def shard_prefixes(f: Spec, length: int, depth: int = PREFIX_DEPTH) -> np.ndarray:
    """All surviving prefixes of ``depth`` letters, in enumeration order."""
    depth = max(0, min(depth, length - 1))
    if depth == 0:
        return np.zeros((1, 0), dtype=np.int64)
    fall, hang = _masks(f)
    out = np.zeros(((2 * f.n) ** depth, depth), dtype=np.int64)
    found, _, status = kernels.enumerate_words(
        f.n, length, balanced_search(f), fall, hang, np.zeros(0, dtype=np.int64), depth, 2**62, out
    )
    assert status == 0
    return out[:found]


def _masks(f: Spec):
    ess = essential_removals(f)
    return masks_array(ess.must_fall), masks_array(ess.must_hang)


def search_length(
    f: Spec,
    length: int,
    *,
    shards: int = 1,
    shard_id: Optional[int] = None,
    workers: int = 1,
    prefix_depth: int = PREFIX_DEPTH,
    max_nodes: Optional[int] = None,
    allow_long: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> SearchOutcome:
    """All canonical solutions of ``f`` with exactly ``length`` letters.

    With ``shard_id`` set, only that cell of the ``shards``-way prefix
    partition is searched. Otherwise all cells are searched, in
    ``workers`` processes when more than one. ``max_nodes`` caps the DFS;
    hitting it returns an outcome with ``aborted`` set.
    """
    _validate(f, length)
    if shard_id is not None and not 0 <= shard_id < shards:
        raise ValueError(f"shard id {shard_id} outside 0..{shards - 1}")
    outcome = SearchOutcome(f, length, shards=shards, shard_id=shard_id)
    if not admissible(f, length):
        outcome.reason = "excluded without enumeration"
        return outcome
    if is_long_run(f, length) and not allow_long:
        raise LongRunRefused(
            f"length {length} on {f.n} nails is a long run "
            f"(~{estimated_candidates(f.n, length):.1e} candidates); pass allow_long"
        )
    if shard_id is None and workers > 1 and shards > 1:
        return _search_parallel(f, length, shards, workers, prefix_depth, max_nodes)

    start = time.perf_counter()
    fall, hang = _masks(f)
    balanced = balanced_search(f)
    prefixes = shard_prefixes(f, length, prefix_depth)
    cells = range(len(prefixes)) if shard_id is None else range(shard_id, len(prefixes), shards)
    budget = max_nodes if max_nodes is not None else 2**62
    capacity = 64
    next_checkpoint = CHECKPOINT_NODES
    found = []
    for i in cells:
        while True:
            out = np.zeros((capacity, length), dtype=np.int64)
            count, nodes, status = kernels.enumerate_words(
                f.n, length, balanced, fall, hang, prefixes[i], length, budget - outcome.nodes, out
            )
            if status != 2:
                break
            capacity *= 4
        outcome.nodes += nodes
        found.extend(Word._trusted(tuple(int(x) for x in row)) for row in out[:count])
        if status == 1:
            outcome.aborted = True
            outcome.reason = f"node budget {budget} exhausted"
            break
        while outcome.nodes >= next_checkpoint:
            log.info("%s length %d: %d nodes, %d solutions", f, length, outcome.nodes, len(found))
            if progress is not None:
                progress(outcome.nodes, len(found))
            next_checkpoint += CHECKPOINT_NODES
    outcome.solutions = sorted(found, key=word_key)
    outcome.seconds = time.perf_counter() - start
    return outcome


def _shard_job(args):
    f, length, shards, shard_id, prefix_depth, max_nodes = args
    return search_length(
        f, length, shards=shards, shard_id=shard_id, prefix_depth=prefix_depth, max_nodes=max_nodes, allow_long=True
    )


def merge_outcomes(parts: list) -> SearchOutcome:
    first = parts[0]
    merged = SearchOutcome(first.spec, first.length, shards=first.shards)
    for part in parts:
        merged.solutions.extend(part.solutions)
        merged.nodes += part.nodes
        merged.seconds = max(merged.seconds, part.seconds)
        if part.aborted:
            merged.aborted = True
            merged.reason = part.reason
    merged.solutions.sort(key=word_key)
    return merged


def _search_parallel(f, length, shards, workers, prefix_depth, max_nodes) -> SearchOutcome:
    jobs = [(f, length, shards, i, prefix_depth, max_nodes) for i in range(shards)]
    start = time.perf_counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_shard_job, jobs))
    merged = merge_outcomes(parts)
    merged.seconds = time.perf_counter() - start
    return merged


@dataclass
class MinimumResult:
    spec: Spec
    min_length: Optional[int]
    solutions: list
    outcomes: list

    @property
    def found(self) -> bool:
        return self.min_length is not None


def find_minimum(f: Spec, max_length: int, **search_kwargs) -> MinimumResult:
    """Search increasing lengths until some length has solutions.

    Odd lengths are skipped when ``k < n``; lengths too short to use every
    nail are excluded without enumeration.
    """
    _validate(f, 1)
    outcomes = []
    step = 2 if balanced_search(f) else 1
    for length in range(step if step == 2 else 1, max_length + 1, step):
        outcome = search_length(f, length, **search_kwargs)
        outcomes.append(outcome)
        if outcome.aborted:
            break
        if outcome.solutions:
            return MinimumResult(f, length, outcome.solutions, outcomes)
    return MinimumResult(f, None, [], outcomes)
