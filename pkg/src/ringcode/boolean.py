"""Vectors of F2^m, simplicial complexes, the indicator Psi and character sums chi.

Vectors are bitmasks: bit ``i - 1`` holds coordinate ``i`` of ``[m] = {1..m}``.
Subsets of ``[m]`` are given as iterables of 1-based indices and are turned
into masks with :func:`subset_mask`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .ring import MAX_M


@dataclass(frozen=True, order=True)
class BinaryVector:
    m: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must lie in [1, {MAX_M}], got {self.m}")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"bits {self.bits:#x} exceed length {self.m}")

    @classmethod
    def from_tuple(cls, coords: Sequence[int]) -> "BinaryVector":
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {i + 1} is {c!r}, expected 0 or 1")
            bits |= c << i
        return cls(len(coords), bits)

    @classmethod
    def from_support(cls, m: int, support: Iterable[int]) -> "BinaryVector":
        return cls(m, subset_mask(support, m))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.m) if self.bits >> i & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self.bits >> i & 1 for i in range(self.m))

    def dot(self, other: "BinaryVector") -> int:
        _same_length(self, other)
        return (self.bits & other.bits).bit_count() & 1

    def __add__(self, other: "BinaryVector") -> "BinaryVector":
        _same_length(self, other)
        return BinaryVector(self.m, self.bits ^ other.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_tuple())


Vec = Union[BinaryVector, int]


def _same_length(v: BinaryVector, w: BinaryVector) -> None:
    if v.m != w.m:
        raise ValueError(f"length mismatch: {v.m} != {w.m}")


def _bits(v: Vec) -> int:
    return v.bits if isinstance(v, BinaryVector) else v


def subset_mask(subset: Iterable[int], m: int) -> int:
    """Mask of a subset of ``[m]`` given by 1-based indices."""
    mask = 0
    for i in subset:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= m:
            raise ValueError(f"index {i!r} is not in [1, {m}]")
        mask |= 1 << (i - 1)
    return mask


def mask_subset(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def parse_subset(text: str, m: int) -> list[int]:
    """Parse ``"1,3,4"`` (1-based, strictly ascending); the empty string is the empty set."""
    text = text.strip()
    if not text:
        return []
    try:
        items = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed subset {text!r}") from None
    if any(b <= a for a, b in zip(items, items[1:])):
        raise ValueError(f"subset {text!r} is not strictly ascending")
    subset_mask(items, m)
    return items


def covers(v: BinaryVector, w: BinaryVector) -> bool:
    """True iff Supp(w) is contained in Supp(v)."""
    _same_length(v, w)
    return w.bits & ~v.bits == 0


class SimplicialComplex:
    """Down-closed subset of F2^m described by its maximal faces."""

    def __init__(self, m: int, maximal_faces: Iterable[Vec]):
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m must lie in [1, {MAX_M}], got {m}")
        faces = sorted({_bits(f) for f in maximal_faces})
        if not faces:
            raise ValueError("a simplicial complex needs at least one maximal face")
        for f in faces:
            if f >> m:
                raise ValueError(f"face {f:#x} exceeds length {m}")
        for f, g in combinations(faces, 2):
            if f & ~g == 0 or g & ~f == 0:
                raise ValueError(f"faces {f:#x} and {g:#x} are comparable")
        self.m = m
        self.maximal_faces = tuple(faces)

    def __contains__(self, v: Vec) -> bool:
        b = _bits(v)
        return any(b & ~f == 0 for f in self.maximal_faces)

    def __repr__(self) -> str:
        faces = ", ".join(str(BinaryVector(self.m, f)) for f in self.maximal_faces)
        return f"SimplicialComplex(m={self.m}, faces=[{faces}])"


def simplex_from_subset(m: int, subset: Iterable[int]) -> SimplicialComplex:
    """The complex generated by one subset M of [m]; it has 2^|M| members."""
    return SimplicialComplex(m, [subset_mask(subset, m)])


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in ascending numeric order."""
    # Enumerating s -> (s - mask) & mask walks submasks upward from 0.
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


def complex_members(delta: SimplicialComplex) -> list[BinaryVector]:
    """Every member of ``delta`` once, ascending by bitmask."""
    seen: set[int] = set()
    for f in delta.maximal_faces:
        seen.update(submasks(f))
    return [BinaryVector(delta.m, b) for b in sorted(seen)]


def complex_size_inclusion_exclusion(delta: SimplicialComplex) -> int:
    total = 0
    faces = delta.maximal_faces
    for r in range(1, len(faces) + 1):
        for group in combinations(faces, r):
            inter = group[0]
            for f in group[1:]:
                inter &= f
            total += (-1) ** (r + 1) * (1 << inter.bit_count())
    return total


def generating_function_eval(delta: SimplicialComplex, y: Sequence[int]) -> int:
    """Evaluate the generating function of ``delta`` at an integer point.

    The value is ``sum over members v of prod_i y_i^{v_i}``, computed from the
    maximal faces by inclusion-exclusion.
    """
    if len(y) != delta.m:
        raise ValueError(f"expected {delta.m} values, got {len(y)}")
    total = 0
    faces = delta.maximal_faces
    for r in range(1, len(faces) + 1):
        for group in combinations(faces, r):
            inter = group[0]
            for f in group[1:]:
                inter &= f
            term = 1
            for i in range(delta.m):
                if inter >> i & 1:
                    term *= 1 + y[i]
            total += (-1) ** (r + 1) * term
    return total


def generating_function_direct(delta: SimplicialComplex, y: Sequence[int]) -> int:
    total = 0
    for v in complex_members(delta):
        term = 1
        for i in range(delta.m):
            if v.bits >> i & 1:
                term *= y[i]
        total += term
    return total


class SimplexComplement:
    """Lazy view of ``F2^m minus Delta_M``: membership and size without materializing."""

    def __init__(self, m: int, subset: Iterable[int]):
        self.m = m
        self.mask = subset_mask(subset, m)

    def __contains__(self, v: Vec) -> bool:
        return _bits(v) & ~self.mask != 0

    def __len__(self) -> int:
        return (1 << self.m) - (1 << self.mask.bit_count())

    def __iter__(self) -> Iterator[BinaryVector]:
        for b in range(1 << self.m):
            if b & ~self.mask:
                yield BinaryVector(self.m, b)


def psi(alpha: Vec, subset: Iterable[int] | int) -> int:
    """1 if Supp(alpha) misses M, else 0.  ``subset`` is a mask or 1-based indices."""
    mask = subset if isinstance(subset, int) else subset_mask(subset, MAX_M)
    return int(_bits(alpha) & mask == 0)


def chi(alpha: Vec, q: Iterable[Vec]) -> int:
    """Character sum ``sum_{t in q} (-1)^{alpha . t}``."""
    a = _bits(alpha)
    return sum(-1 if (a & _bits(t)).bit_count() & 1 else 1 for t in q)


def chi_simplex_fast(alpha: Vec, mask: int) -> int:
    """chi over Delta_M in closed form: ``2^|M| * Psi(alpha|M)``."""
    return (1 << mask.bit_count()) if _bits(alpha) & mask == 0 else 0


def chi_complement_fast(alpha: Vec, mask: int, m: int) -> int:
    """chi over the complement of Delta_M: ``2^m [alpha = 0] - chi(Delta_M)``."""
    full = (1 << m) if _bits(alpha) == 0 else 0
    return full - chi_simplex_fast(alpha, mask)


def chi_full_fast(alpha: Vec, m: int) -> int:
    """chi over all of F2^m."""
    return (1 << m) if _bits(alpha) == 0 else 0


def count_psi(m: int, mask: int, target: int) -> int:
    k = mask.bit_count()
    if target:
        return 1 << (m - k)
    return ((1 << k) - 1) << (m - k)


def count_psi_pair(m: int, mask_m: int, mask_n: int) -> int:
    """Number of v with Psi(v|M) = Psi(v|N) = 0."""
    def zeros(k: int) -> int:
        return ((1 << k) - 1) << (m - k)

    return zeros(mask_m.bit_count()) + zeros(mask_n.bit_count()) - zeros((mask_m | mask_n).bit_count())


def count_psi_joint(m: int, mask: int, case: tuple[int, int]) -> int:
    """Number of pairs (v, w) with Psi(w|M), Psi(v+w|M) equal to ``case``.

    The count runs over pairs where v, w and v + w are all nonzero, which is
    the range the weight-distribution case analysis needs.
    """
    k = mask.bit_count()
    hit = ((1 << k) - 1) << (m - k)  # |{Psi = 0}|
    miss = 1 << (m - k)  # |{Psi = 1}|, including 0
    formulas = {
        (0, 0): (hit - 1) * hit,
        (0, 1): hit * (miss - 1),
        (1, 0): hit * (miss - 1),
        (1, 1): (miss - 1) * (miss - 2),
    }
    try:
        return formulas[tuple(case)]
    except KeyError:
        raise ValueError(f"case must be a pair of bits, got {case!r}") from None
