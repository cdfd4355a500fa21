"""Pure numpy versions of the compiled kernels, used when the extension is not built."""

from __future__ import annotations

import numpy as np

# Words held in the low-row lookup table at once.
_TABLE_WORDS = 1 << 22


def span_weights(rows: np.ndarray) -> np.ndarray:
    """Hamming weight of every XOR combination of ``rows``, indexed by selection mask."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    r, nwords = rows.shape
    low = r
    while low > 0 and (1 << low) * max(nwords, 1) > _TABLE_WORDS:
        low -= 1
    table = np.zeros((1 << low, nwords), dtype=np.uint64)
    for i in range(low):
        table[1 << i: 2 << i] = table[: 1 << i] ^ rows[i]
    out = np.empty(1 << r, dtype=np.int64)
    base = np.zeros(nwords, dtype=np.uint64)
    prev = 0
    for h in range(1 << (r - low)):
        gray = h ^ (h >> 1)
        changed = gray ^ prev
        if changed:
            base ^= rows[low + changed.bit_length() - 1]
        prev = gray
        start = gray << low
        out[start: start + (1 << low)] = np.bitwise_count(table ^ base).sum(axis=1)
    return out


def nested_pair(weights: np.ndarray, lower_bound: int = 0):
    """Find nonzero masks ``(i, j)``, i != j, whose codeword supports nest (i inside j)."""
    weights = np.asarray(weights, dtype=np.int64)
    idx = np.arange(1, len(weights))
    for j in np.flatnonzero(weights >= lower_bound):
        j = int(j)
        if j == 0:
            continue
        hits = (weights[idx] + weights[idx ^ j] == weights[j]) & (idx != j)
        if hits.any():
            return int(idx[np.argmax(hits)]), j
    return None
