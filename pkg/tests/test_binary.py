import random
from fractions import Fraction
from itertools import product

import pytest

from ringcode.binary import (
    DATABASE_OPTIMALITY,
    BinaryCode,
    InvalidParameters,
    analyze_code,
    all_weights_div4,
    ashikhmin_barg,
    equidistant_check,
    expected_gray_params,
    gray_image,
    griesmer_check,
    griesmer_excludes_next,
    hamming_distribution,
    is_minimal_exhaustive,
    is_self_orthogonal,
    min_distance,
    minimality_condition,
    right_verdicts,
    theta3_fires,
    theta4_fires,
)
from ringcode.construction import (
    TYPES,
    DefiningSetSpec,
    TooLarge,
    code_size,
    distribution_bruteforce,
    distribution_closed_form,
    kernel_size,
    materialize,
)
from ringcode.gf2 import in_span, rank, row_reduce

from . import oracles, worked

SIMPLEX_7 = BinaryCode.from_generators(7, [0b1010101, 0b1100110, 0b1111000])


def specs(m_values, sides=("left", "right")):
    for m in m_values:
        for typ, side in product(TYPES, sides):
            for mm, nn in product(range(1 << m), repeat=2):
                spec = DefiningSetSpec.from_masks(m, typ, mm, nn, side)
                if not spec.is_degenerate:
                    yield spec


def test_row_reduce_against_span():
    rng = random.Random(3)
    for _ in range(200):
        rows = [rng.getrandbits(10) for _ in range(rng.randint(0, 6))]
        basis = row_reduce(rows)
        assert oracles.binary_span(basis) == oracles.binary_span(rows)
        assert len(oracles.binary_span(rows)) == 2 ** rank(rows)
        assert all(in_span(r, basis) for r in rows)


def test_zero_code():
    code = BinaryCode.from_generators(8, [0, 0])
    assert code.k == 0
    assert min_distance(code) is None
    assert is_self_orthogonal(code)
    report = analyze_code(code)
    assert report.distance_undefined and report.d is None
    assert report.minimal_exhaustive and report.all_weights_div4 and not report.equidistant
    assert report.to_dict()["database_optimality"] == DATABASE_OPTIMALITY


def test_gray_image_dimensions():
    assert (gray_image(worked.LEFT[0][0]).n, gray_image(worked.LEFT[0][0]).k) == (128, 6)
    assert (gray_image(worked.RIGHT[0][0]).n, gray_image(worked.RIGHT[0][0]).k) == (128, 4)


def test_min_distance_examples():
    assert min_distance(gray_image(worked.LEFT[1][0])) == 12
    assert min_distance(gray_image(worked.RIGHT[0][0])) == 32
    assert min_distance(SIMPLEX_7) == 4


def test_self_orthogonality_examples():
    assert is_self_orthogonal(gray_image(worked.LEFT[3][0]))
    assert not is_self_orthogonal(BinaryCode.from_generators(3, [0b111]))
    assert is_self_orthogonal(BinaryCode.from_generators(4, [0b0011, 0b1100]))
    # even weights but two rows meeting in one place
    assert not is_self_orthogonal(BinaryCode.from_generators(4, [0b0011, 0b0110]))


def test_div4_examples():
    assert all_weights_div4(gray_image(worked.LEFT[0][0]))
    assert not all_weights_div4(BinaryCode.from_generators(4, [0b0011]))
    code = gray_image(worked.RIGHT[3][0])
    assert set(hamming_distribution(code)) == {0, 168, 192, 196}
    assert all_weights_div4(code)


def test_minimality_examples():
    assert is_minimal_exhaustive(BinaryCode.from_generators(5, [0b10110]))
    assert is_minimal_exhaustive(gray_image(worked.RIGHT[2][0]))
    assert is_minimal_exhaustive(SIMPLEX_7)
    # r and r + extra: supports nest
    nested = BinaryCode.from_generators(6, [0b000111, 0b011111])
    assert not is_minimal_exhaustive(nested)
    words = [w for w in nested.codewords() if w]
    assert any(u != v and u & v == u for u in words for v in words)


def brute_minimal(code):
    words = [w for w in code.codewords() if w]
    return not any(u != v and u & v == u for u in words for v in words)


def test_minimality_matches_scan_random():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(3, 12)
        code = BinaryCode.from_generators(n, [rng.getrandbits(n) for _ in range(rng.randint(1, 5))])
        assert is_minimal_exhaustive(code) == brute_minimal(code)


def test_ashikhmin_barg_examples():
    assert ashikhmin_barg(168, 196)
    assert ashikhmin_barg(1536, 2048)
    assert not ashikhmin_barg(1, 2)
    with pytest.raises(ValueError):
        ashikhmin_barg(0, 0)


def test_griesmer_examples():
    assert griesmer_check(48, 5, 24) == (47, False)
    assert griesmer_check(3072, 9, 1536) == (3066, False)
    assert griesmer_check(7, 3, 4) == (7, True)
    assert griesmer_excludes_next(3072, 9, 1536)
    assert griesmer_excludes_next(7, 3, 4)
    with pytest.raises(InvalidParameters):
        griesmer_check(6, 3, 4)
    with pytest.raises(InvalidParameters):
        griesmer_check(6, 0, 4)


def test_expected_params_examples():
    assert expected_gray_params(worked.LEFT[0][0]) == (128, 6, 32)
    assert expected_gray_params(worked.LEFT[4][0]) == (496, 8, 124)
    assert expected_gray_params(worked.RIGHT[0][0]) == (128, 4, 32)
    assert expected_gray_params(worked.RIGHT[2][0]) == (48, 5, 24)
    assert expected_gray_params(worked.BIG[0]) == (3072, 9, 1536)
    assert expected_gray_params(worked.RIGHT[3][0]) == (336, 4, 168)
    assert isinstance(expected_gray_params(DefiningSetSpec(3, "T1", (), (), "left"))[2], Fraction)


def test_right_conditions_on_examples():
    small, big, t4 = worked.RIGHT[2][0], worked.BIG[0], worked.RIGHT[3][0]
    assert minimality_condition(small) and minimality_condition(t4)
    assert theta4_fires(big) and not theta3_fires(big)
    assert not theta4_fires(small)
    report = analyze_code(gray_image(small))
    verdict = right_verdicts(small, report, distribution_closed_form(small))
    assert verdict.ok and verdict.measured == (48, 5, 24)
    with pytest.raises(ValueError):
        right_verdicts(worked.LEFT[0][0], report, distribution_closed_form(small))


def test_equidistant():
    report = analyze_code(SIMPLEX_7)
    assert report.num_nonzero_weights == 1
    assert equidistant_check(report)
    assert not analyze_code(gray_image(worked.LEFT[0][0])).equidistant


def test_equidistant_right_t1_found_by_sweep():
    hits = []
    for spec in specs(range(1, 4), sides=("right",)):
        if spec.type != "T1":
            continue
        report = analyze_code(gray_image(spec))
        if report.num_nonzero_weights == 1:
            hits.append((spec, report))
    assert hits
    for spec, report in hits:
        assert report.equidistant
        words = [w for w in BinaryCode(report.n, gray_image(spec).basis).codewords() if w]
        assert len({w.bit_count() for w in words}) == 1


def test_weight_transport_and_dimension_m_le_3():
    for spec in specs(range(1, 4)):
        code = gray_image(spec)
        assert code.size == code_size(spec)
        lee = distribution_bruteforce(spec).per_codeword(kernel_size(spec))
        assert hamming_distribution(code) == lee.entries


def oracle_gray_word(word):
    """Block layout: first coordinates of every symbol, then second coordinates."""
    first = [oracles.GRAY[e][0] for e in word]
    second = [oracles.GRAY[e][1] for e in word]
    return sum(bit << i for i, bit in enumerate(first + second))


def test_gray_image_spans_mapped_codewords_m_le_3():
    for spec in specs(range(1, 4)):
        ods = materialize(spec)
        D = [tuple(str(e) for e in d) for d in ods.elements]
        mapped = {oracle_gray_word(oracles.codeword(D, v, spec.side)) for v in oracles.all_vectors(spec.m)}
        assert set(gray_image(spec).codewords()) == mapped


def test_implication_chains_m_le_3():
    for spec in specs(range(1, 4)):
        report = analyze_code(gray_image(spec))
        if report.all_weights_div4:
            assert report.self_orthogonal
        if report.k and report.ashikhmin_barg:
            assert report.minimal_exhaustive
        if report.d:
            assert report.griesmer_sum <= report.n


def test_caps():
    with pytest.raises(TooLarge):
        gray_image(DefiningSetSpec(11, "T1", (1,), (1,)))
    big = BinaryCode(40, [1 << i for i in range(25)])
    with pytest.raises(TooLarge):
        big.weights()
    with pytest.raises(TooLarge):
        is_minimal_exhaustive(BinaryCode(40, [1 << i for i in range(17)]))
