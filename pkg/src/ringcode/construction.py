"""Defining sets D = a*D1 + c*D2 built from simplicial complexes, and the codes they define.

A left code sends a message v in E^m to ``(v . d)_{d in D}``, a right code to
``(d . v)_{d in D}``.  Five families of defining sets are supported, keyed by
the complexes used for D1 and D2:

====  =====================================
T1    a*Delta_M   + c*Delta_N
T2    a*Delta_M^c + c*Delta_N
T3    a*Delta_M   + c*Delta_N^c
T4    a*Delta_M^c + c*Delta_N^c
T5    E^m minus (a*Delta_M + c*Delta_N)
====  =====================================
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Mapping

import numpy as np

from . import kernels
from .boolean import (
    chi_complement_fast,
    chi_full_fast,
    chi_simplex_fast,
    mask_subset,
    submasks,
    subset_mask,
)
from .ring import MAX_M, RingElement, RingVector, rv_dot

Side = Literal["left", "right"]
TYPES = ("T1", "T2", "T3", "T4", "T5")
SIDES = ("left", "right")

DEFAULT_MAX_M = 8


class DegenerateDefiningSet(ValueError):
    """The requested defining set is empty."""


class TooLarge(ValueError):
    """An exhaustive computation was requested beyond the configured cap."""


def exhaustive_max_m() -> int:
    """Cap on m for 4^m enumerations; ``RINGCODE_MAX_M`` overrides it."""
    value = os.environ.get("RINGCODE_MAX_M")
    return int(value) if value else DEFAULT_MAX_M


def _check_cap(m: int, cap: int | None = None) -> None:
    cap = exhaustive_max_m() if cap is None else cap
    if m > cap:
        raise TooLarge(f"m={m} exceeds the exhaustive cap {cap} (set RINGCODE_MAX_M to override)")


@dataclass(frozen=True)
class DefiningSetSpec:
    m: int
    type: str
    M: tuple[int, ...] = ()
    N: tuple[int, ...] = ()
    side: Side = "left"

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not 1 <= self.m <= MAX_M:
            raise ValueError(f"m must be an integer in [1, {MAX_M}], got {self.m!r}")
        if self.type not in TYPES:
            raise ValueError(f"type must be one of {TYPES}, got {self.type!r}")
        if self.side not in SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        for name in ("M", "N"):
            subset = tuple(getattr(self, name))
            if any(b <= a for a, b in zip(subset, subset[1:])):
                raise ValueError(f"{name} must be strictly ascending, got {list(subset)}")
            subset_mask(subset, self.m)
            object.__setattr__(self, name, subset)

    @classmethod
    def from_masks(cls, m: int, type: str, mask_m: int, mask_n: int, side: Side) -> "DefiningSetSpec":
        return cls(m, type, tuple(mask_subset(mask_m)), tuple(mask_subset(mask_n)), side)

    @classmethod
    def from_dict(cls, data: Mapping) -> "DefiningSetSpec":
        unknown = set(data) - {"m", "type", "M", "N", "side"}
        if unknown:
            raise ValueError(f"unknown spec fields: {sorted(unknown)}")
        try:
            return cls(
                m=data["m"],
                type=data["type"],
                M=tuple(data.get("M", ())),
                N=tuple(data.get("N", ())),
                side=str(data.get("side", "left")).lower(),
            )
        except KeyError as exc:
            raise ValueError(f"spec is missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "DefiningSetSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"spec is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError("spec JSON must be an object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {"m": self.m, "type": self.type, "M": list(self.M), "N": list(self.N), "side": self.side}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def with_side(self, side: Side) -> "DefiningSetSpec":
        return DefiningSetSpec(self.m, self.type, self.M, self.N, side)

    @property
    def mask_m(self) -> int:
        return subset_mask(self.M, self.m)

    @property
    def mask_n(self) -> int:
        return subset_mask(self.N, self.m)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def blocks(self) -> list[tuple["FactorSet", "FactorSet"]]:
        """D as a disjoint union of products ``a*D1 + c*D2``."""
        m, M, N = self.m, self.mask_m, self.mask_n
        simplex_m, simplex_n = FactorSet("simplex", M, m), FactorSet("simplex", N, m)
        comp_m, comp_n = FactorSet("complement", M, m), FactorSet("complement", N, m)
        if self.type == "T1":
            return [(simplex_m, simplex_n)]
        if self.type == "T2":
            return [(comp_m, simplex_n)]
        if self.type == "T3":
            return [(simplex_m, comp_n)]
        if self.type == "T4":
            return [(comp_m, comp_n)]
        return [(comp_m, FactorSet("full", 0, m)), (simplex_m, comp_n)]

    @property
    def size(self) -> int:
        return sum(len(d1) * len(d2) for d1, d2 in self.blocks())

    def size_closed_form(self) -> int:
        m, km, kn = self.m, len(self.M), len(self.N)
        return {
            "T1": 2 ** (km + kn),
            "T2": (2**m - 2**km) * 2**kn,
            "T3": 2**km * (2**m - 2**kn),
            "T4": (2**m - 2**km) * (2**m - 2**kn),
            "T5": 2 ** (2 * m) - 2 ** (km + kn),
        }[self.type]

    @property
    def is_degenerate(self) -> bool:
        return self.size_closed_form() == 0

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
        return f"{self.type}/{self.side} m={self.m} M={fmt(self.M)} N={fmt(self.N)}"


@dataclass(frozen=True)
class FactorSet:
    """One of Delta_S, its complement, or all of F2^m."""

    kind: Literal["simplex", "complement", "full"]
    mask: int
    m: int

    def __len__(self) -> int:
        if self.kind == "simplex":
            return 1 << self.mask.bit_count()
        if self.kind == "complement":
            return (1 << self.m) - (1 << self.mask.bit_count())
        return 1 << self.m

    def __contains__(self, t: int) -> bool:
        inside = t & ~self.mask == 0
        if self.kind == "simplex":
            return inside
        if self.kind == "complement":
            return not inside
        return True

    def __iter__(self) -> Iterator[int]:
        if self.kind == "simplex":
            yield from submasks(self.mask)
        else:
            for t in range(1 << self.m):
                if t in self:
                    yield t

    def chi(self, alpha: int) -> int:
        if self.kind == "simplex":
            return chi_simplex_fast(alpha, self.mask)
        if self.kind == "complement":
            return chi_complement_fast(alpha, self.mask, self.m)
        return chi_full_fast(alpha, self.m)


@dataclass(frozen=True)
class OrderedDefiningSet:
    """Materialized D: parallel arrays of the a-part t1 and c-part t2 of each element."""

    spec: DefiningSetSpec
    t1: np.ndarray = field(repr=False)
    t2: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.t1)

    @property
    def elements(self) -> list[RingVector]:
        m = self.spec.m
        return [RingVector(m, int(x), int(y)) for x, y in zip(self.t1, self.t2)]


def materialize(spec: DefiningSetSpec) -> OrderedDefiningSet:
    """List D in canonical order: t1 ascending, then t2 ascending."""
    if spec.is_degenerate:
        raise DegenerateDefiningSet(f"defining set of {spec} is empty")
    m = spec.m
    if spec.type == "T5":
        if m > 12:
            raise TooLarge(f"T5 with m={m} has 4^m candidate elements")
        t1, t2 = np.divmod(np.arange(1 << (2 * m), dtype=np.int64), 1 << m)
        keep = ((t1 & ~spec.mask_m) != 0) | ((t2 & ~spec.mask_n) != 0)
        t1, t2 = t1[keep], t2[keep]
    else:
        ((d1, d2),) = spec.blocks()
        first = np.fromiter(d1, dtype=np.int64)
        second = np.fromiter(d2, dtype=np.int64)
        t1 = np.repeat(first, len(second))
        t2 = np.tile(second, len(first))
    return OrderedDefiningSet(spec, t1, t2)


def encode(ods: OrderedDefiningSet, v: RingVector, side: Side | None = None) -> list[RingElement]:
    """Codeword of message ``v``: ``v . d`` (left) or ``d . v`` (right) for each d in D."""
    side = side or ods.spec.side
    if v.m != ods.spec.m:
        raise ValueError(f"message has length {v.m}, expected {ods.spec.m}")
    if side == "left":
        return [rv_dot(v, d) for d in ods.elements]
    return [rv_dot(d, v) for d in ods.elements]


def _parity(x: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(x) & 1).astype(np.uint8)


def gray_generator_bits(ods: OrderedDefiningSet, side: Side | None = None) -> np.ndarray:
    """Gray images of the codewords of the 2m messages ``a*e_i`` then ``c*e_i``.

    Returns a ``(2m, 2|D|)`` 0/1 array in block layout ``(t-bits | s+t bits)``.
    Because encoding is additive, the codeword of ``a*alpha + c*beta`` is the
    XOR of the rows selected by the bits of ``alpha | beta << m``.
    """
    side = side or ods.spec.side
    m, n = ods.spec.m, len(ods)
    out = np.zeros((2 * m, 2 * n), dtype=np.uint8)
    for i in range(m):
        unit = np.int64(1 << i)
        if side == "left":
            # (a e_i).d = a <e_i, t1>;  (c e_i).d = c <e_i, t1>
            s = _parity(ods.t1 & unit)
            out[i, n:] = s
            out[m + i, :n] = s
            out[m + i, n:] = s
        else:
            # d.(a e_i) = a <t1, e_i> + c <t2, e_i>;  d.(c e_i) = 0
            s = _parity(ods.t1 & unit)
            t = _parity(ods.t2 & unit)
            out[i, :n] = t
            out[i, n:] = s ^ t
    return out


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into little-endian uint64 words, bit j of row r -> coordinate j."""
    rows, n = bits.shape
    nwords = max(1, (n + 63) // 64)
    padded = np.zeros((rows, nwords * 64), dtype=np.uint8)
    padded[:, :n] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed.view("<u8").astype(np.uint64))


def message_weights(ods: OrderedDefiningSet, side: Side | None = None) -> np.ndarray:
    """Lee weight of the codeword of every message, indexed by ``alpha | beta << m``."""
    return kernels.span_weights(pack_rows(gray_generator_bits(ods, side)))


def message_index(v: RingVector) -> int:
    return v.alpha | (v.beta << v.m)


def lee_weight_formula(spec: DefiningSetSpec, v: RingVector) -> int:
    """Lee weight of the codeword of ``v`` from character sums, without encoding."""
    if v.m != spec.m:
        raise ValueError(f"message has length {v.m}, expected {spec.m}")
    return _formula(spec.blocks(), spec.side, v.alpha, v.beta)


def _formula(blocks, side: str, alpha: int, beta: int) -> int:
    twice = 0
    for d1, d2 in blocks:
        n1, n2 = len(d1), len(d2)
        if side == "left":
            twice += 2 * n1 * n2 - n2 * (d1.chi(beta) + d1.chi(alpha ^ beta))
        else:
            c2 = d2.chi(alpha)
            twice += 2 * n1 * n2 - n1 * c2 - d1.chi(alpha) * c2
    assert twice % 2 == 0
    return twice // 2


@dataclass(frozen=True)
class LeeDistribution:
    """Weight -> frequency, counted per message (4^m total) or per codeword."""

    entries: dict[int, int]
    basis: Literal["message", "codeword"] = "message"

    def __post_init__(self) -> None:
        clean = {int(w): int(f) for w, f in sorted(self.entries.items()) if f}
        object.__setattr__(self, "entries", clean)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def per_codeword(self, kernel: int) -> "LeeDistribution":
        if self.basis != "message":
            raise ValueError("distribution is already per codeword")
        bad = {w: f for w, f in self.entries.items() if f % kernel}
        if bad:
            raise ValueError(f"frequencies {bad} are not divisible by kernel size {kernel}")
        return LeeDistribution({w: f // kernel for w, f in self.entries.items()}, "codeword")

    def nonzero_weights(self) -> list[int]:
        return [w for w in self.entries if w]

    def to_dict(self) -> dict[str, int]:
        return {str(w): f for w, f in self.entries.items()}


def distribution_bruteforce(spec: DefiningSetSpec, method: Literal["encode", "formula"] = "encode") -> LeeDistribution:
    """Per-message Lee weight histogram over all 4^m messages.

    ``encode`` Gray-maps every codeword and counts bits; ``formula`` evaluates
    :func:`lee_weight_formula` for every message instead.
    """
    if method == "encode":
        _check_cap(spec.m)
        weights = message_weights(materialize(spec))
        values, counts = np.unique(weights, return_counts=True)
        return LeeDistribution(dict(zip(values.tolist(), counts.tolist())))
    if method == "formula":
        if spec.is_degenerate:
            raise DegenerateDefiningSet(f"defining set of {spec} is empty")
        _check_cap(spec.m, max(exhaustive_max_m(), 10))
        blocks, side, m = spec.blocks(), spec.side, spec.m
        hist: Counter[int] = Counter()
        for alpha in range(1 << m):
            for beta in range(1 << m):
                hist[_formula(blocks, side, alpha, beta)] += 1
        return LeeDistribution(dict(hist))
    raise ValueError(f"unknown method {method!r}")


def _p2(e: int) -> Fraction:
    return Fraction(2) ** e


def table_rows(spec: DefiningSetSpec) -> list[tuple[Fraction, Fraction]]:
    """Rows (Lee weight, message frequency) of the closed-form table for ``spec``, unmerged."""
    m, M, N = spec.m, len(spec.M), len(spec.N)
    U = (spec.mask_m | spec.mask_n).bit_count()
    p2 = _p2
    if spec.side == "left":
        # p, q: nonzero vectors with Psi(.|M) = 1, resp. 0, written as in the tables.
        sq_p = p2(2 * m - 2 * M) - p2(m - M + 1) + 1
        two_p = p2(m - M + 1) - 2
        sq_q = p2(2 * m) + p2(2 * m - 2 * M) - p2(2 * m - M + 1)
        two_pq = p2(2 * m - M + 1) - p2(2 * m - 2 * M + 1) - p2(m + 1) + p2(m - M + 1)
        two_q = p2(m + 1) - p2(m - M + 1)
        if spec.type == "T1":
            return [
                (p2(M + N), p2(2 * m - 2 * M) * (p2(M) - 1) ** 2),
                (p2(M + N - 1), p2(2 * m - 2 * M + 1) * (p2(M) - 1)),
                (Fraction(0), p2(2 * m - 2 * M)),
            ]
        if spec.type == "T2":
            return [
                (p2(m + N), sq_p),
                (p2(m + N - 1), two_p),
                (p2(m + N) - p2(M + N), sq_q),
                (p2(m + N) - p2(M + N - 1), two_pq),
                (p2(m + N - 1) - p2(M + N - 1), two_q),
                (Fraction(0), Fraction(1)),
            ]
        if spec.type == "T3":
            return [
                (p2(M) * (p2(m) - p2(N)), p2(2 * m) - p2(2 * m - M + 1) + p2(2 * m - 2 * M)),
                (p2(M - 1) * (p2(m) - p2(N)), p2(2 * m - M + 1) - p2(2 * m - 2 * M + 1)),
                (Fraction(0), p2(2 * m - 2 * M)),
            ]
        if spec.type == "T4":
            scale = p2(m) - p2(N)
            return [
                (p2(m) * scale, sq_p),
                (p2(m - 1) * scale, two_p),
                ((p2(m) - p2(M)) * scale, p2(2 * m) - p2(2 * m - M + 1) + p2(2 * m - 2 * M)),
                ((p2(m) - p2(M - 1)) * scale, two_pq),
                ((p2(m - 1) - p2(M - 1)) * scale, two_q),
                (Fraction(0), Fraction(1)),
            ]
        return [
            (p2(2 * m), sq_p),
            (p2(2 * m - 1), two_p),
            (p2(2 * m) - p2(M + N), p2(2 * m) - p2(2 * m - M + 1) + p2(2 * m - 2 * M)),
            (p2(2 * m) - p2(M + N - 1), two_pq),
            (p2(2 * m - 1) - p2(M + N - 1), two_q),
            (Fraction(0), Fraction(1)),
        ]
    if spec.type == "T1":
        return [
            (p2(M + N), p2(m) * (p2(m) - p2(m - N))),
            (p2(M + N - 1), p2(m) * (p2(m - N) - p2(m - U))),
            (Fraction(0), p2(2 * m - U)),
        ]
    if spec.type == "T2":
        return [
            ((p2(m) - p2(M)) * p2(N), p2(m) * (p2(m) - p2(m - N))),
            (p2(m + N - 1), p2(m) * (p2(m - U) - 1)),
            ((p2(m) - p2(M)) * p2(N - 1), p2(m) * (p2(m - N) - p2(m - U))),
            (Fraction(0), p2(m)),
        ]
    if spec.type == "T3":
        return [
            (p2(m + M), p2(m) * (p2(m - U) - 1)),
            (p2(M) * (p2(m) - p2(N - 1)), p2(m) * (p2(m - N) - p2(m - U))),
            (p2(M) * (p2(m) - p2(N)), p2(m) * (p2(m) - p2(m - N))),
            (Fraction(0), p2(m)),
        ]
    if spec.type == "T4":
        return [
            ((p2(m) - p2(M)) * (p2(m) - p2(N - 1)), p2(m) * (p2(m - N) - p2(m - U))),
            (p2(m) * (p2(m) - p2(M)) - p2(m + N - 1), p2(m) * (p2(m - U) - 1)),
            ((p2(m) - p2(M)) * (p2(m) - p2(N)), p2(m) * (p2(m) - p2(m - N))),
            (Fraction(0), p2(m)),
        ]
    return [
        (p2(2 * m), p2(m) * (p2(m - U) - 1)),
        (p2(2 * m) - p2(M + N - 1), p2(m) * (p2(m - N) - p2(m - U))),
        (p2(2 * m) - p2(M + N), p2(m) * (p2(m) - p2(m - N))),
        (Fraction(0), p2(m)),
    ]


def distribution_closed_form(spec: DefiningSetSpec) -> LeeDistribution:
    """Per-message distribution read off the tables, equal weights merged."""
    if spec.is_degenerate:
        raise DegenerateDefiningSet(f"defining set of {spec} is empty")
    merged: Counter[int] = Counter()
    for weight, freq in table_rows(spec):
        if freq == 0:
            continue
        if freq < 0 or freq.denominator != 1 or weight.denominator != 1:
            raise ArithmeticError(f"table row ({weight}, {freq}) of {spec} is not a valid count")
        merged[int(weight)] += int(freq)
    return LeeDistribution(dict(merged))


def generator_rank(ods: OrderedDefiningSet) -> int:
    from .gf2 import rank

    return rank(rows_to_ints(gray_generator_bits(ods)))


def rows_to_ints(bits: np.ndarray) -> list[int]:
    packed = pack_rows(bits)
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def kernel_size(spec: DefiningSetSpec) -> int:
    """Number of messages sent to the zero word."""
    ods = materialize(spec)
    return 4**spec.m >> generator_rank(ods)


def code_size(spec: DefiningSetSpec) -> int:
    return 4**spec.m // kernel_size(spec)


def claimed_code_size(spec: DefiningSetSpec) -> int:
    """Code size asserted for each family: 2^{2|M|}, 2^{2m}, 2^{|M u N|} or 2^m."""
    if spec.side == "left":
        if spec.type in ("T1", "T3"):
            return 2 ** (2 * len(spec.M))
        return 2 ** (2 * spec.m)
    if spec.type == "T1":
        return 2 ** (spec.mask_m | spec.mask_n).bit_count()
    return 2**spec.m


def lee_enumerator(dist: LeeDistribution, length: int) -> list[tuple[int, int, int]]:
    """Terms ``(x_exp, y_exp, coeff)`` of the Lee enumerator, decreasing X exponent."""
    if dist.basis != "codeword":
        raise ValueError("the enumerator needs a per-codeword distribution")
    return sorted(((2 * length - w, w, f) for w, f in dist.entries.items()), reverse=True)


def format_enumerator(terms: Iterable[tuple[int, int, int]]) -> str:
    parts = []
    for ex, ey, coeff in terms:
        mono = "".join(
            var if e == 1 else f"{var}^{e}" for var, e in (("X", ex), ("Y", ey)) if e
        )
        if not mono:
            parts.append(str(coeff))
        else:
            parts.append(mono if coeff == 1 else f"{coeff}{mono}")
    return " + ".join(parts)
