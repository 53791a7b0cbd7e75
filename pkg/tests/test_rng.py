import pytest

from lrc5.rng import RNG_NAME, SplitMix64

MASK = (1 << 64) - 1


def reference_stream(seed, count):
    """The published splitmix64 recurrence, restated independently."""
    s = seed & MASK
    out = []
    for _ in range(count):
        s = (s + 0x9E3779B97F4A7C15) & MASK
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        out.append((z ^ (z >> 31)) & MASK)
    return out


@pytest.mark.parametrize("seed", [0, 1, 77, 1234567, 2**64 - 1])
def test_stream_matches_published_recurrence(seed):
    rng = SplitMix64(seed)
    assert [rng.next_u64() for _ in range(8)] == reference_stream(seed, 8)


def test_rng_name_tag():
    assert RNG_NAME == "splitmix64"


def test_seed_wraps_to_64_bits():
    assert SplitMix64(2**64 + 5).next_u64() == SplitMix64(5).next_u64()


def test_randbelow_range_and_determinism():
    a = SplitMix64(42)
    b = SplitMix64(42)
    draws = [a.randbelow(7) for _ in range(500)]
    assert draws == [b.randbelow(7) for _ in range(500)]
    assert set(draws) == set(range(7))


def test_randbelow_rejects_nonpositive():
    with pytest.raises(ValueError):
        SplitMix64(0).randbelow(0)


def test_sample_sorted_properties():
    rng = SplitMix64(9)
    for _ in range(50):
        s = rng.sample_sorted(36, 4)
        assert s == sorted(set(s))
        assert len(s) == 4
        assert all(0 <= x < 36 for x in s)
    assert SplitMix64(3).sample_sorted(10, 0) == []
    assert SplitMix64(3).sample_sorted(5, 5) == [0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        SplitMix64(3).sample_sorted(4, 5)
