import pytest

from dvsubset.rng import SplitMix64, derive_seed


def test_reference_stream():
    # first outputs for seed 0, frozen; the finalizer constants are standard
    # so these values are checkable against any other implementation
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_seed_masking_and_determinism():
    assert SplitMix64(2**64 + 5).next_u64() == SplitMix64(5).next_u64()
    a = SplitMix64(123)
    b = SplitMix64(123)
    assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]


def test_below_range_and_spread():
    rng = SplitMix64(1)
    draws = [rng.below(10) for _ in range(1000)]
    assert set(draws) == set(range(10))
    with pytest.raises(ValueError):
        rng.below(0)


def test_below_is_roughly_uniform():
    rng = SplitMix64(7)
    counts = [0] * 8
    for _ in range(8000):
        counts[rng.below(8)] += 1
    assert min(counts) > 800  # each residue near 1000

def test_sample_properties():
    rng = SplitMix64(4)
    for _ in range(50):
        s = rng.sample(30, 12)
        assert s == sorted(s)
        assert len(set(s)) == 12
        assert all(0 <= x < 30 for x in s)
    assert SplitMix64(9).sample(5, 5) == [0, 1, 2, 3, 4]
    assert SplitMix64(9).sample(5, 0) == []
    with pytest.raises(ValueError):
        SplitMix64(0).sample(3, 4)


def test_derive_seed_decorrelates():
    seeds = {derive_seed(0, i) for i in range(100)}
    assert len(seeds) == 100
    assert derive_seed(42, 7) == derive_seed(42, 7)
    assert derive_seed(42, 7) != derive_seed(43, 7)
