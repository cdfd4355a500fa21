"""Arithmetic in the non-unital ring E = {0, a, b, c}, vectors over E, the Gray map.

Every element is written uniquely as ``a*s + c*t`` with ``s, t`` in F2.  An
element's integer code packs that pair as ``s | (t << 1)``, so addition is XOR
of codes and ``b = a + c`` has code 3.

Multiplication follows ``a^2 = a, b^2 = b, ab = a, ba = b``.  Every product
``x*y`` equals ``x`` when ``y`` is a or b, and 0 when ``y`` is 0 or c, which
gives ``(a s1 + c t1)(a s2 + c t2) = a s1 s2 + c t1 s2``.  The opposite ring F
is E with the arguments of :func:`re_mul` swapped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

MAX_M = 16


class RingElement(IntEnum):
    ZERO = 0
    A = 1
    C = 2
    B = 3

    def __str__(self) -> str:
        return {0: "0", 1: "a", 2: "c", 3: "b"}[self.value]


ZERO, A, B, C = RingElement.ZERO, RingElement.A, RingElement.B, RingElement.C

_BY_SYMBOL = {"0": ZERO, "a": A, "b": B, "c": C}


def element(symbol: str) -> RingElement:
    """Parse one of ``'0', 'a', 'b', 'c'``."""
    try:
        return _BY_SYMBOL[symbol]
    except KeyError:
        raise ValueError(f"not an element of E: {symbol!r}") from None


def re_add(x: RingElement, y: RingElement) -> RingElement:
    return RingElement(x ^ y)


def re_mul(x: RingElement, y: RingElement) -> RingElement:
    # x*y = x if y in {a, b} else 0
    return RingElement(x) if y & 1 else ZERO


def re_decompose(x: RingElement) -> tuple[int, int]:
    """Return ``(s, t)`` with ``x = a*s + c*t``."""
    return x & 1, (x >> 1) & 1


def re_compose(s: int, t: int) -> RingElement:
    return RingElement((s & 1) | ((t & 1) << 1))


@dataclass(frozen=True)
class RingVector:
    """A vector ``x = a*alpha + c*beta`` in E^m, with alpha and beta stored as bitmasks.

    Bit ``i - 1`` of each mask holds coordinate ``i``.
    """

    m: int
    alpha: int = 0
    beta: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must lie in [1, {MAX_M}], got {self.m}")
        full = (1 << self.m) - 1
        if self.alpha & ~full or self.beta & ~full or self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha/beta have bits outside the first m positions")

    @classmethod
    def from_elements(cls, elements: Sequence[RingElement | str]) -> "RingVector":
        alpha = beta = 0
        for i, e in enumerate(elements):
            if isinstance(e, str):
                e = element(e)
            s, t = re_decompose(e)
            alpha |= s << i
            beta |= t << i
        return cls(len(elements), alpha, beta)

    @classmethod
    def zero(cls, m: int) -> "RingVector":
        return cls(m, 0, 0)

    def __getitem__(self, i: int) -> RingElement:
        if not 0 <= i < self.m:
            raise IndexError(i)
        return re_compose(self.alpha >> i, self.beta >> i)

    def __iter__(self):
        return (self[i] for i in range(self.m))

    def __len__(self) -> int:
        return self.m

    def __add__(self, other: "RingVector") -> "RingVector":
        _check_lengths(self, other)
        return RingVector(self.m, self.alpha ^ other.alpha, self.beta ^ other.beta)

    __sub__ = __add__

    def scale_left(self, e: RingElement) -> "RingVector":
        """``e * x`` coordinate-wise: each coordinate x_i becomes e if x_i is a or b."""
        s, t = re_decompose(e)
        return RingVector(self.m, self.alpha if s else 0, self.alpha if t else 0)

    def scale_right(self, e: RingElement) -> "RingVector":
        """``x * e`` coordinate-wise."""
        return self if e & 1 else RingVector.zero(self.m)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self) + ")"


def _check_lengths(x: RingVector, y: RingVector) -> None:
    if x.m != y.m:
        raise ValueError(f"length mismatch: {x.m} != {y.m}")


def _parity(v: int) -> int:
    return v.bit_count() & 1


def rv_dot(x: RingVector, y: RingVector) -> RingElement:
    """``sum_i x_i * y_i`` with the left factor taken from ``x``."""
    _check_lengths(x, y)
    # sum_i (a s_i + c t_i) s'_i = a <alpha, alpha'> + c <beta, alpha'>
    return re_compose(_parity(x.alpha & y.alpha), _parity(x.beta & y.alpha))


def rv_dot_tables(x: RingVector, y: RingVector) -> RingElement:
    """Same as :func:`rv_dot`, walking the element tables coordinate by coordinate."""
    _check_lengths(x, y)
    acc = ZERO
    for xi, yi in zip(x, y):
        acc = re_add(acc, re_mul(xi, yi))
    return acc


def gray_map(x: RingVector) -> tuple[int, int]:
    """Gray image of ``x`` as ``(bits, length)``.

    Coordinate ``a*s + c*t`` maps to ``(t, s + t)``; the image is laid out as
    the block ``(beta | alpha + beta)``, so bit ``i`` is ``beta_i`` and bit
    ``m + i`` is ``alpha_i + beta_i``.
    """
    return x.beta | ((x.alpha ^ x.beta) << x.m), 2 * x.m


def gray_unmap(bits: int, m: int) -> RingVector:
    full = (1 << m) - 1
    beta = bits & full
    return RingVector(m, ((bits >> m) & full) ^ beta, beta)


def lee_weight(x: RingVector) -> int:
    return x.beta.bit_count() + (x.alpha ^ x.beta).bit_count()


def lee_distance(x: RingVector, y: RingVector) -> int:
    return lee_weight(x - y)


def element_lee_weight(x: RingElement) -> int:
    return (0, 1, 2, 1)[x]


def elements_lee_weight(word: Iterable[RingElement]) -> int:
    return sum(element_lee_weight(e) for e in word)
