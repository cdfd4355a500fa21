"""GF(2) row reduction on int bitsets."""

from __future__ import annotations

from typing import Iterable, List


def row_reduce(rows: Iterable[int]) -> List[int]:
    """Reduced echelon basis of the span of ``rows``; each pivot is the row's lowest set bit."""
    basis: List[int] = []
    for r in rows:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            low = r & -r
            basis = [b ^ r if b & low else b for b in basis]
            basis.append(r)
    basis.sort(key=lambda b: (b & -b).bit_length())
    return basis


def rank(rows: Iterable[int]) -> int:
    return len(row_reduce(rows))


def in_span(vec: int, basis: List[int]) -> bool:
    """Membership test against a basis returned by :func:`row_reduce`."""
    for b in basis:
        if vec & (b & -b):
            vec ^= b
    return vec == 0
