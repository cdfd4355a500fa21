"""Gray images as binary linear codes: parameters, orthogonality, minimality, Griesmer verdicts."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .construction import (
    DefiningSetSpec,
    LeeDistribution,
    OrderedDefiningSet,
    TooLarge,
    gray_generator_bits,
    materialize,
    rows_to_ints,
)
from .gf2 import row_reduce

MAX_GRAY_M = 10
MAX_K_DISTANCE = 24
MAX_K_MINIMAL = 16

DATABASE_OPTIMALITY = "not verifiable offline"


class InvalidParameters(ValueError):
    """Parameters violate the Griesmer bound, so some upstream computation is wrong."""


@dataclass
class BinaryCode:
    """Binary linear code of length ``n`` spanned by an independent ``basis`` of int bitsets."""

    n: int
    basis: list[int]
    _weights: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @classmethod
    def from_generators(cls, n: int, rows) -> "BinaryCode":
        return cls(n, row_reduce(rows))

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.k

    def packed_basis(self) -> np.ndarray:
        nwords = max(1, (self.n + 63) // 64)
        out = np.zeros((self.k, nwords), dtype=np.uint64)
        for r, row in enumerate(self.basis):
            out[r] = np.frombuffer(row.to_bytes(nwords * 8, "little"), dtype="<u8")
        return out

    def weights(self) -> np.ndarray:
        """Weight of every codeword, indexed by the mask of basis rows it combines."""
        if self.k > MAX_K_DISTANCE:
            raise TooLarge(f"k={self.k} exceeds the enumeration cap {MAX_K_DISTANCE}")
        if self._weights is None:
            self._weights = kernels.span_weights(self.packed_basis())
        return self._weights

    def codewords(self) -> list[int]:
        """All codewords as ints, for small codes."""
        words = [0]
        for row in self.basis:
            words += [w ^ row for w in words]
        return words


def gray_image(ods: OrderedDefiningSet | DefiningSetSpec) -> BinaryCode:
    """The Gray image of the code defined by ``ods``, spanned by the 2m generator images."""
    if isinstance(ods, DefiningSetSpec):
        if ods.m > MAX_GRAY_M:
            raise TooLarge(f"m={ods.m} exceeds the Gray image cap {MAX_GRAY_M}")
        ods = materialize(ods)
    bits = gray_generator_bits(ods)
    return BinaryCode.from_generators(bits.shape[1], rows_to_ints(bits))


def hamming_distribution(code: BinaryCode) -> dict[int, int]:
    values, counts = np.unique(code.weights(), return_counts=True)
    return dict(zip(values.tolist(), counts.tolist()))


def min_distance(code: BinaryCode) -> Optional[int]:
    """Minimum nonzero weight; None for the zero code."""
    if code.k == 0:
        return None
    return int(code.weights()[1:].min())


def is_self_orthogonal(code: BinaryCode) -> bool:
    basis = code.basis
    for i, r in enumerate(basis):
        for s in basis[i:]:
            if (r & s).bit_count() & 1:
                return False
    return True


def all_weights_div4(code: BinaryCode) -> bool:
    return bool(np.all(code.weights() % 4 == 0))


def is_minimal_exhaustive(code: BinaryCode) -> bool:
    """True iff no nonzero codeword's support strictly contains another's."""
    if code.k > MAX_K_MINIMAL:
        raise TooLarge(f"k={code.k} exceeds the minimality cap {MAX_K_MINIMAL}")
    if code.k <= 1:
        return True
    weights = code.weights()
    # a nested pair u < v forces wt(v) = wt(u) + wt(u+v) >= 2d
    d = int(weights[1:].min())
    return kernels.nested_pair(weights, 2 * d) is None


def ashikhmin_barg(wt_min: int, wt_max: int) -> bool:
    """Sufficient condition for minimality over F2: wt_min / wt_max > 1/2."""
    if wt_max <= 0:
        raise ValueError("wt_max must be positive")
    return 2 * wt_min > wt_max


def griesmer_sum(k: int, d: int) -> int:
    return sum(-(-d // (1 << i)) for i in range(k))


def griesmer_check(n: int, k: int, d: int) -> tuple[int, bool]:
    """Griesmer sum for ``[n, k, d]`` and whether it meets ``n`` with equality."""
    if k < 1 or d < 1:
        raise InvalidParameters(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    total = griesmer_sum(k, d)
    if total > n:
        raise InvalidParameters(f"[{n}, {k}, {d}] violates the Griesmer bound (sum {total})")
    return total, total == n


def griesmer_excludes_next(n: int, k: int, d: int) -> bool:
    """True when no binary ``[n, k, d+1]`` code can exist by the Griesmer bound."""
    return griesmer_sum(k, d + 1) > n


@dataclass
class CodeReport:
    n: int
    k: int
    d: Optional[int]
    hamming_distribution: dict[int, int]
    num_nonzero_weights: int
    wt_min: Optional[int]
    wt_max: Optional[int]
    self_orthogonal: bool
    all_weights_div4: bool
    minimal_exhaustive: Optional[bool]
    ashikhmin_barg: bool
    griesmer_sum: Optional[int]
    griesmer_equality: bool
    griesmer_excludes_d_plus_1: bool
    equidistant: bool
    distance_undefined: bool = False

    @property
    def params(self) -> tuple[int, int, Optional[int]]:
        return self.n, self.k, self.d

    def to_dict(self) -> dict:
        out = asdict(self)
        out["hamming_distribution"] = {str(w): f for w, f in self.hamming_distribution.items()}
        out["database_optimality"] = DATABASE_OPTIMALITY
        return out


def analyze_code(code: BinaryCode) -> CodeReport:
    dist = hamming_distribution(code)
    nonzero = sorted(w for w in dist if w)
    if code.k == 0:
        # zero code: distance undefined, flags vacuous
        return CodeReport(
            n=code.n, k=0, d=None, hamming_distribution=dist, num_nonzero_weights=0,
            wt_min=None, wt_max=None, self_orthogonal=True, all_weights_div4=True,
            minimal_exhaustive=True, ashikhmin_barg=True, griesmer_sum=None,
            griesmer_equality=False, griesmer_excludes_d_plus_1=False, equidistant=False,
            distance_undefined=True,
        )
    wt_min, wt_max = nonzero[0], nonzero[-1]
    total, equality = griesmer_check(code.n, code.k, wt_min)
    minimal = is_minimal_exhaustive(code) if code.k <= MAX_K_MINIMAL else None
    report = CodeReport(
        n=code.n,
        k=code.k,
        d=wt_min,
        hamming_distribution=dist,
        num_nonzero_weights=len(nonzero),
        wt_min=wt_min,
        wt_max=wt_max,
        self_orthogonal=is_self_orthogonal(code),
        all_weights_div4=all_weights_div4(code),
        minimal_exhaustive=minimal,
        ashikhmin_barg=ashikhmin_barg(wt_min, wt_max),
        griesmer_sum=total,
        griesmer_equality=equality,
        griesmer_excludes_d_plus_1=griesmer_excludes_next(code.n, code.k, wt_min),
        equidistant=False,
    )
    report.equidistant = equidistant_check(report)
    return report


def equidistant_check(report: CodeReport) -> bool:
    """One nonzero weight, with the replication arithmetic of a repeated simplex code.

    An equidistant binary ``[n, k]`` code of weight w has ``w = r * 2^(k-1)``
    for an integer r and needs at least ``r * (2^k - 1)`` coordinates.
    """
    if report.num_nonzero_weights != 1 or report.k == 0:
        return False
    half = 1 << (report.k - 1)
    if report.wt_min % half:
        return False
    r = report.wt_min // half
    return report.n >= r * ((1 << report.k) - 1)


def expected_gray_params(spec: DefiningSetSpec) -> tuple[int, int, Fraction]:
    """Predicted ``[n, k, d]`` of the Gray image for each family and side.

    ``d`` is a Fraction because the formulas produce half-integers at the
    corners where the corresponding weight does not occur.
    """
    m, M, N = spec.m, len(spec.M), len(spec.N)
    U = (spec.mask_m | spec.mask_n).bit_count()
    p2 = lambda e: Fraction(2) ** e
    if spec.side == "left":
        n, k, d = {
            "T1": (p2(M + N + 1), 2 * M, p2(M + N - 1)),
            "T2": ((p2(m) - p2(M)) * p2(N + 1), 2 * m, (p2(m) - p2(M)) * p2(N - 1)),
            "T3": (p2(M + 1) * (p2(m) - p2(N)), 2 * M, p2(M - 1) * (p2(m) - p2(N))),
            "T4": ((p2(m + 1) - p2(M + 1)) * (p2(m) - p2(N)), 2 * m, (p2(m - 1) - p2(M - 1)) * (p2(m) - p2(N))),
            "T5": (p2(2 * m + 1) - p2(M + N + 1), 2 * m, p2(2 * m - 1) - p2(M + N - 1)),
        }[spec.type]
    else:
        n, k, d = {
            "T1": (p2(M + N + 1), U, p2(M + N - 1)),
            "T2": ((p2(m) - p2(M)) * p2(N + 1), m, (p2(m) - p2(M)) * p2(N - 1)),
            "T3": (p2(M + 1) * (p2(m) - p2(N)), m, p2(M) * (p2(m) - p2(N))),
            "T4": (2 * (p2(m) - p2(M)) * (p2(m) - p2(N)), m, (p2(m) - p2(M)) * (p2(m) - p2(N))),
            "T5": (2 * (p2(2 * m) - p2(M + N)), m, p2(2 * m) - p2(M + N)),
        }[spec.type]
    return int(n), k, d


def expected_num_weights(spec: DefiningSetSpec) -> Optional[int]:
    if spec.side != "right":
        return None
    return 2 if spec.type == "T1" else 3


def theta3(spec: DefiningSetSpec) -> int:
    return 2 ** (len(spec.M) + 1) - 1


def theta4(spec: DefiningSetSpec) -> Fraction:
    m, M, N = spec.m, len(spec.M), len(spec.N)
    return Fraction(2) ** (M + N + 1 - m) * (2 ** (m - N) - 1)


@dataclass
class Claim:
    name: str
    applies: bool
    holds: Optional[bool]

    @property
    def ok(self) -> bool:
        return not self.applies or bool(self.holds)


@dataclass
class Verdict:
    spec: DefiningSetSpec
    predicted: tuple[int, int, Fraction]
    measured: tuple[int, int, Optional[int]]
    claims: list[Claim]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.ok]

    def to_dict(self) -> dict:
        return {
            "predicted": [self.predicted[0], self.predicted[1], str(self.predicted[2])],
            "measured": list(self.measured),
            "claims": {c.name: {"applies": c.applies, "holds": c.holds} for c in self.claims},
            "database_optimality": DATABASE_OPTIMALITY,
        }


def minimality_condition(spec: DefiningSetSpec) -> bool:
    """Whether a sufficient condition for minimality is asserted for this right-side family."""
    m, M, N = spec.m, len(spec.M), len(spec.N)
    if spec.side != "right":
        return False
    return {"T1": False, "T2": False, "T3": N <= m - 2, "T4": True, "T5": M + N <= 2 * m - 2}[spec.type]


def theta3_fires(spec: DefiningSetSpec) -> bool:
    M, N = len(spec.M), len(spec.N)
    return (
        spec.side == "right" and spec.type == "T3"
        and M + N <= spec.m - 1 and 1 <= theta3(spec) < M + N + 1
    )


def theta4_fires(spec: DefiningSetSpec) -> bool:
    m, M, N = spec.m, len(spec.M), len(spec.N)
    return (
        spec.side == "right" and spec.type == "T3"
        and m <= M + N <= 2 * m - 1 and 0 < theta4(spec) < m
    )


def params_claim_applies(spec: DefiningSetSpec, table_dist: LeeDistribution) -> bool:
    """Whether the predicted minimum distance is one of the weights that actually occurs.

    At boundary choices of M and N the row carrying the predicted distance has
    frequency zero in the weight table; the bracket then states a weight no
    codeword has, and only ``n`` and ``k`` are checked.
    """
    d = expected_gray_params(spec)[2]
    return d.denominator == 1 and int(d) in table_dist.nonzero_weights()


def verdicts(spec: DefiningSetSpec, report: CodeReport, table_dist: LeeDistribution) -> Verdict:
    """Check every claim made about the Gray image of ``spec`` against ``report``."""
    predicted = expected_gray_params(spec)
    n, k, d = predicted
    table_weights = table_dist.nonzero_weights()
    claims = [
        Claim("length", True, report.n == n),
        Claim("dimension", True, report.k == k),
        Claim("min_distance", params_claim_applies(spec, table_dist), report.d == d),
        Claim("min_distance_table", True, report.d == (min(table_weights) if table_weights else None)),
    ]
    M, N = len(spec.M), len(spec.N)
    claims.append(Claim("self_orthogonal", M + N >= 3, report.self_orthogonal))
    if spec.side == "right":
        expected_weights = expected_num_weights(spec)
        occurring = len(table_weights)
        claims.append(
            Claim("num_weights", occurring == expected_weights, report.num_nonzero_weights == expected_weights)
        )
        claims.append(Claim("num_weights_table", True, report.num_nonzero_weights == occurring))
        claims.append(Claim("minimal", minimality_condition(spec), report.minimal_exhaustive))
        for name, fires in (("theta3_optimal", theta3_fires(spec)), ("theta4_optimal", theta4_fires(spec))):
            holds = None
            if fires and report.d is not None:
                total = griesmer_sum(report.k, report.d)
                holds = total <= report.n and griesmer_excludes_next(report.n, report.k, report.d)
            claims.append(Claim(name, fires, holds))
    return Verdict(spec, predicted, report.params, claims)


def right_verdicts(spec: DefiningSetSpec, report: CodeReport, table_dist: LeeDistribution) -> Verdict:
    """Right-side claims: parameter brackets, minimality conditions, theta optimality."""
    if spec.side != "right":
        raise ValueError("right_verdicts applies to right codes only")
    return verdicts(spec, report, table_dist)
