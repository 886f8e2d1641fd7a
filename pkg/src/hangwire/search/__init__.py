from hangwire.search.canonical import canonical_form, equivalent, is_canonical, letter_code, normalize, word_key
from hangwire.search.engine import (
    LongRunRefused,
    MinimumResult,
    SearchOutcome,
    admissible,
    estimated_candidates,
    find_minimum,
    is_long_run,
    merge_outcomes,
    search_length,
    shard_prefixes,
)

__all__ = [
    "LongRunRefused",
    "MinimumResult",
    "SearchOutcome",
    "admissible",
    "canonical_form",
    "equivalent",
    "estimated_candidates",
    "find_minimum",
    "is_canonical",
    "is_long_run",
    "letter_code",
    "merge_outcomes",
    "normalize",
    "search_length",
    "shard_prefixes",
    "word_key",
]
