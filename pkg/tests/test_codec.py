from itertools import combinations

import pytest

from lrc5.codec import (
    BD_MAX_LENGTH,
    ERASED,
    HybridResult,
    encode,
    erasure_decode,
    erasure_positions,
    error_correct_bd,
    hybrid_decode,
    local_repair,
)
from lrc5.errors import (
    AmbiguousErasuresError,
    LengthMismatchError,
    LocalRepairImpossibleError,
    NotErasedError,
    TooManyErasuresError,
    UndecodableError,
)
from lrc5.rng import SplitMix64

from .oracles import mat_vec_mod

# first dependent 4-column subset of the (7,5) parity check, 0-based
BAD_SUPPORT_7_5 = [0, 1, 33, 35]


def random_codeword(code, rng):
    msg = [rng.randbelow(code.field.q) for _ in range(code.k)]
    return encode(code.field, code.generator_matrix, msg)


def syndrome(field, h_rows, word):
    return [field.dot(row, word) for row in h_rows]


def test_erased_is_none():
    assert ERASED is None
    assert erasure_positions([1, None, 0, None]) == [1, 3]


def test_encode_matches_plain_matrix_product(code75):
    rng = SplitMix64(2)
    g = code75.generator_matrix
    gt = [list(col) for col in zip(*g)]
    for _ in range(10):
        msg = [rng.randbelow(7) for _ in range(27)]
        assert encode(code75.field, g, msg) == mat_vec_mod(gt, msg, 7)


def test_encode_zero_and_length_checks(code75):
    assert encode(code75.field, code75.generator_matrix, [0] * 27) == [0] * 36
    with pytest.raises(LengthMismatchError):
        encode(code75.field, code75.generator_matrix, [0] * 26)


def test_encode_on_extension_field(code86):
    rng = SplitMix64(4)
    f = code86.field
    g = code86.generator_matrix
    msg = [rng.randbelow(8) for _ in range(39)]
    word = encode(f, g, msg)
    assert syndrome(f, code86.parity_check_matrix, word) == [0] * 10


def test_codewords_satisfy_parity(code53, code75):
    rng = SplitMix64(8)
    for code in (code53, code75):
        for _ in range(10):
            w = random_codeword(code, rng)
            assert syndrome(code.field, code.parity_check_matrix, w) == [0] * (
                code.n - code.k
            )


@pytest.mark.parametrize("codename", ["code53", "code75", "code114"])
def test_local_repair_every_position(codename, request):
    code = request.getfixturevalue(codename)
    rng = SplitMix64(13)
    for _ in range(5):
        w = random_codeword(code, rng)
        for pos in range(code.n):
            received = list(w)
            received[pos] = None
            assert local_repair(code, received, pos) == w[pos]


def test_local_repair_reads_only_the_cell(code75):
    """Symbols outside the repaired cell may be garbage or missing."""
    rng = SplitMix64(21)
    w = random_codeword(code75, rng)
    pos = 14
    cell = code75.domain.cell_of(pos)
    received: list = [None] * 36
    for p in cell:
        received[p] = w[p]
    received[pos] = None
    assert local_repair(code75, received, pos) == w[pos]
    assert len(cell) - 1 == code75.r


def test_local_repair_rejects_non_erased_and_bad_positions(code75):
    rng = SplitMix64(34)
    w = random_codeword(code75, rng)
    with pytest.raises(NotErasedError):
        local_repair(code75, list(w), 3)
    with pytest.raises(ValueError):
        local_repair(code75, list(w), 36)
    with pytest.raises(ValueError):
        local_repair(code75, list(w), -1)


def test_local_repair_impossible_with_two_holes_in_a_cell(code75):
    rng = SplitMix64(55)
    w = random_codeword(code75, rng)
    received = list(w)
    received[0] = None
    received[3] = None  # same recovery cell as 0
    with pytest.raises(LocalRepairImpossibleError):
        local_repair(code75, received, 0)


def test_erasure_decode_small_patterns_exactly(code75):
    f, h = code75.field, code75.parity_check_matrix
    rng = SplitMix64(77)
    for t in (1, 2, 3):
        for _ in range(60):
            w = random_codeword(code75, rng)
            holes = rng.sample_sorted(36, t)
            received: list = list(w)
            for p in holes:
                received[p] = None
            assert erasure_decode(f, h, received) == w


def test_erasure_decode_no_erasures_is_identity(code75):
    rng = SplitMix64(6)
    w = random_codeword(code75, rng)
    assert erasure_decode(code75.field, code75.parity_check_matrix, list(w)) == w


def test_erasure_decode_ambiguous_on_dependent_support(code75):
    rng = SplitMix64(15)
    w = random_codeword(code75, rng)
    received: list = list(w)
    for p in BAD_SUPPORT_7_5:
        received[p] = None
    with pytest.raises(AmbiguousErasuresError):
        erasure_decode(code75.field, code75.parity_check_matrix, received)


def test_erasure_decode_generic_four_pattern_succeeds(code75):
    rng = SplitMix64(16)
    w = random_codeword(code75, rng)
    received: list = list(w)
    for p in (0, 7, 19, 30):
        received[p] = None
    assert erasure_decode(code75.field, code75.parity_check_matrix, received) == w


def test_erasure_decode_too_many_erasures(code75):
    received: list = [0] * 36
    for p in range(10):  # n - k = 9
        received[p] = None
    with pytest.raises(TooManyErasuresError):
        erasure_decode(code75.field, code75.parity_check_matrix, received)


def test_erasure_decode_undecodable_on_corrupt_survivors(code75):
    # One erasure plus one corrupted kept symbol cannot be consistent:
    # that would put two codewords at Hamming distance <= 2 < d.
    rng = SplitMix64(29)
    w = random_codeword(code75, rng)
    received: list = list(w)
    received[0] = None
    received[5] = code75.field.add(received[5], 1)
    with pytest.raises(UndecodableError):
        erasure_decode(code75.field, code75.parity_check_matrix, received)


def test_erasure_decode_length_check(code75):
    with pytest.raises(LengthMismatchError):
        erasure_decode(code75.field, code75.parity_check_matrix, [0] * 35)


def test_bd_zero_syndrome_returns_word(code75):
    rng = SplitMix64(41)
    w = random_codeword(code75, rng)
    assert error_correct_bd(code75.field, code75.parity_check_matrix, w) == w


def test_bd_corrects_any_single_error(code75):
    # radius-1 balls are disjoint because the minimum distance is 4 > 2
    f, h = code75.field, code75.parity_check_matrix
    rng = SplitMix64(52)
    for _ in range(100):
        w = random_codeword(code75, rng)
        pos = rng.randbelow(36)
        err = 1 + rng.randbelow(6)
        received = list(w)
        received[pos] = f.add(received[pos], err)
        assert error_correct_bd(f, h, received, t_max=1) == w
        assert error_correct_bd(f, h, received, t_max=2) == w


def test_bd_two_error_census_frozen(code75):
    """With minimum distance 4, two errors sit on the decoding boundary:
    the search still always lands on a zero-syndrome word, but 36 of 1000
    seeded trials return a codeword other than the transmitted one."""
    f, h = code75.field, code75.parity_check_matrix
    rng = SplitMix64(77)
    ok = wrong = undecodable = 0
    for _ in range(1000):
        msg = [rng.randbelow(7) for _ in range(27)]
        w = encode(f, code75.generator_matrix, msg)
        p1 = rng.randbelow(36)
        p2 = rng.randbelow(36)
        while p2 == p1:
            p2 = rng.randbelow(36)
        e1 = 1 + rng.randbelow(6)
        e2 = 1 + rng.randbelow(6)
        received = list(w)
        received[p1] = f.add(received[p1], e1)
        received[p2] = f.add(received[p2], e2)
        try:
            decoded = error_correct_bd(f, h, received, t_max=2)
        except UndecodableError:
            undecodable += 1
            continue
        assert syndrome(f, h, decoded) == [0] * 9
        if decoded == w:
            ok += 1
        else:
            wrong += 1
    assert (ok, wrong, undecodable) == (964, 36, 0)


def test_bd_input_validation(code75):
    f, h = code75.field, code75.parity_check_matrix
    with pytest.raises(ValueError):
        error_correct_bd(f, h, [None] + [0] * 35)
    with pytest.raises(LengthMismatchError):
        error_correct_bd(f, h, [0] * 35)
    with pytest.raises(ValueError):
        error_correct_bd(f, h, [0] * 36, t_max=3)
    word = [0] * 36
    word[0] = 1
    with pytest.raises(UndecodableError):
        error_correct_bd(f, h, word, t_max=0)


def test_bd_rejects_oversized_codes(f7):
    n = BD_MAX_LENGTH + 1
    with pytest.raises(Exception) as exc:
        error_correct_bd(f7, [[0] * n], [0] * n)
    assert "limited" in str(exc.value)


def test_hybrid_frozen_mixed_case(code75):
    w = encode(code75.field, code75.generator_matrix, [i % 7 for i in range(1, 28)])
    received: list = list(w)
    for p in (0, 1, 8):
        received[p] = None
    res = hybrid_decode(code75, received)
    assert isinstance(res, HybridResult)
    assert res.codeword == w
    assert res.locally_repaired == [8]
    assert res.globally_repaired == [0, 1]
    assert res.symbols_read == 39


def test_hybrid_all_local_when_holes_are_spread(code75):
    rng = SplitMix64(61)
    w = random_codeword(code75, rng)
    received: list = list(w)
    for p in (2, 9, 20):  # three different cells
        received[p] = None
    res = hybrid_decode(code75, received)
    assert res.codeword == w
    assert sorted(res.locally_repaired) == [2, 9, 20]
    assert res.globally_repaired == []
    assert res.symbols_read == 15


def test_hybrid_recovers_every_pattern_up_to_three_erasures(code75):
    """Structural sweep: any 1, 2, or 3 erasures always decode, because
    every 3-column subset of the parity check is independent."""
    rng = SplitMix64(70)
    w = random_codeword(code75, rng)
    for t in (1, 2, 3):
        for holes in combinations(range(36), t):
            received: list = list(w)
            for p in holes:
                received[p] = None
            assert hybrid_decode(code75, received).codeword == w


def test_hybrid_ambiguous_on_bad_four_pattern(code75):
    rng = SplitMix64(80)
    w = random_codeword(code75, rng)
    received: list = list(w)
    for p in BAD_SUPPORT_7_5:
        received[p] = None
    with pytest.raises(AmbiguousErasuresError):
        hybrid_decode(code75, received)
