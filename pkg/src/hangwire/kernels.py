"""Hot loops: restriction checks and the enumeration DFS.

Words enter as int64 arrays of signed nail labels. Removal sets are int64
bitmasks with bit ``j - 1`` standing for nail ``j`` (nail 64 uses the sign
bit, which is harmless for the shift-and-test used here).
"""

import numpy as np

from hangwire._jit import jit


@jit
def reduced_length_after_removal(letters, mask, stack):
    """Freely reduced length of ``letters`` with the nails in ``mask`` deleted."""
    top = 0
    for i in range(letters.shape[0]):
        x = letters[i]
        nail = x if x > 0 else -x
        if (mask >> (nail - 1)) & 1:
            continue
        if top > 0 and stack[top - 1] == -x:
            top -= 1
        else:
            stack[top] = x
            top += 1
    return top


@jit
def vanishing(letters, masks):
    """For each mask, whether the word reduces to the empty word."""
    out = np.zeros(masks.shape[0], dtype=np.bool_)
    stack = np.empty(max(letters.shape[0], 1), dtype=np.int64)
    for m in range(masks.shape[0]):
        out[m] = reduced_length_after_removal(letters, masks[m], stack) == 0
    return out


@jit
def first_failure(letters, fall_masks, hang_masks):
    """Index of the first violated removal, or -1.

    Fall masks are numbered first, then hang masks continue the count.
    """
    stack = np.empty(max(letters.shape[0], 1), dtype=np.int64)
    for m in range(fall_masks.shape[0]):
        if reduced_length_after_removal(letters, fall_masks[m], stack) != 0:
            return m
    for m in range(hang_masks.shape[0]):
        if reduced_length_after_removal(letters, hang_masks[m], stack) == 0:
            return fall_masks.shape[0] + m
    return -1


@jit
def letter_code(letter):
    # +1 < -1 < +2 < -2 < ...
    if letter > 0:
        return 2 * letter - 2
    return -2 * letter - 1


@jit
def is_canonical(word, n, relabel, flip):
    """True when no rotation of ``word`` or its reversal normalizes below it.

    ``word`` must already be relabel/sign normalized and cyclically reduced.
    ``relabel`` and ``flip`` are scratch arrays of size ``n + 1``.
    """
    size = word.shape[0]
    for direction in (1, -1):
        for start in range(size):
            if direction == 1 and start == 0:
                continue
            for j in range(n + 1):
                relabel[j] = 0
                flip[j] = 1
            fresh = 1
            for i in range(size):
                x = word[(start + direction * i) % size]
                nail = x if x > 0 else -x
                if relabel[nail] == 0:
                    relabel[nail] = fresh
                    fresh += 1
                    flip[nail] = 1 if x > 0 else -1
                y = relabel[nail] if x * flip[nail] > 0 else -relabel[nail]
                a = letter_code(y)
                b = letter_code(word[i])
                if a < b:
                    return False
                if a > b:
                    break
    return True


@jit
def enumerate_words(n, length, balanced, fall_masks, hang_masks, prefix, stop, max_nodes, out):
    """Depth-first enumeration of S1/S2-normalized reduced words.

    Grows ``prefix`` up to ``stop`` letters. Pruning per step: no immediate
    inverse, nails introduced in label order with positive first
    occurrence, and enough letters left to reach every nail (twice with
    net exponent zero when ``balanced``). At ``stop == length`` complete
    words must also be cyclically reduced, pass the removal checks and be
    canonical; those are written to ``out``. At ``stop < length`` every
    surviving prefix is written instead.

    Returns ``(found, nodes, status)``; status 0 done, 1 node budget hit,
    2 ``out`` full.
    """
    word = np.zeros(length, dtype=np.int64)
    net = np.zeros(n + 1, dtype=np.int64)
    fresh_at = np.zeros(length, dtype=np.bool_)
    choice = np.full(length + 1, -1, dtype=np.int64)
    relabel = np.zeros(n + 1, dtype=np.int64)
    flip = np.ones(n + 1, dtype=np.int64)

    seen = 0
    imbalance = 0
    for i in range(prefix.shape[0]):
        x = prefix[i]
        nail = x if x > 0 else -x
        word[i] = x
        if nail > seen:
            seen = nail
            fresh_at[i] = True
        before = net[nail]
        net[nail] += 1 if x > 0 else -1
        imbalance += abs(net[nail]) - abs(before)

    found = 0
    nodes = 0
    start = prefix.shape[0]
    if start >= stop:
        return 0, 0, 0
    p = start
    while p >= start:
        c = choice[p]
        if c >= 0:
            x = word[p]
            nail = x if x > 0 else -x
            before = net[nail]
            net[nail] -= 1 if x > 0 else -1
            imbalance += abs(net[nail]) - abs(before)
            if fresh_at[p]:
                seen -= 1
                fresh_at[p] = False
        placed = False
        limit = seen + 1 if seen < n else n
        c += 1
        while c < 2 * limit:
            nail = c // 2 + 1
            x = nail if c % 2 == 0 else -nail
            c += 1
            if p > 0 and word[p - 1] == -x:
                continue
            fresh = nail > seen
            if fresh and x < 0:
                continue
            before = net[nail]
            after = before + (1 if x > 0 else -1)
            imb = imbalance + abs(after) - abs(before)
            unseen = n - (seen + 1 if fresh else seen)
            remaining = length - p - 1
            if balanced:
                if imb + 2 * unseen > remaining:
                    continue
            elif unseen > remaining:
                continue
            if p == length - 1 and length > 1 and word[0] == -x:
                continue
            word[p] = x
            net[nail] = after
            imbalance = imb
            if fresh:
                seen += 1
                fresh_at[p] = True
            choice[p] = c - 1
            placed = True
            break
        if not placed:
            choice[p] = -1
            p -= 1
            continue
        nodes += 1
        if nodes > max_nodes:
            return found, nodes, 1
        if p == stop - 1:
            if stop < length:
                if found >= out.shape[0]:
                    return found, nodes, 2
                for i in range(stop):
                    out[found, i] = word[i]
                found += 1
            else:
                if first_failure(word, fall_masks, hang_masks) < 0 and is_canonical(word, n, relabel, flip):
                    if found >= out.shape[0]:
                        return found, nodes, 2
                    for i in range(length):
                        out[found, i] = word[i]
                    found += 1
        else:
            p += 1
            choice[p] = -1
    return found, nodes, 0
