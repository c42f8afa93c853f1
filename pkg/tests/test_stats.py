from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import vertex_moments
from equichroma.coloring import Coloring, ColoringError
from equichroma.stats import (
    ChromaticStats,
    ColorDistribution,
    decimal_str,
    distribution_of,
    mean,
    pmf,
    stats_from_counts,
    stats_of,
    variance,
)

F = Fraction


def test_distribution_examples():
    d = distribution_of(Coloring(5, [1, 2, 3, 4, 1, 2, 3, 4, 5]))
    assert d.sizes == (2, 2, 2, 2, 1) and d.N == 9
    d = distribution_of(Coloring(3, [1, 2, 3]))
    assert d.sizes == (1, 1, 1) and d.N == 3
    d = distribution_of(Coloring(4, [3, 4] * 4 + [1] + [1, 2] * 4))
    assert d.sizes == (5, 4, 4, 4) and d.N == 17


def test_distribution_sorts_non_increasing():
    assert ColorDistribution([1, 2, 2]).sizes == (2, 2, 1)
    with pytest.raises(ColoringError):
        ColorDistribution([2, 0])
    with pytest.raises(ColoringError):
        ColorDistribution([])


def test_pmf_examples():
    assert pmf(ColorDistribution([2, 2, 1])) == [F(2, 5), F(2, 5), F(1, 5)]
    assert pmf(ColorDistribution([1])) == [1]
    assert pmf(ColorDistribution([2, 2, 2, 2, 1])) == [F(2, 9)] * 4 + [F(1, 9)]


def test_mean_examples():
    assert mean(ColorDistribution([2, 2, 2, 2, 1])) == F(25, 9)
    assert mean(ColorDistribution([1, 1, 1])) == 2
    assert mean(ColorDistribution([2, 2, 2, 2, 1, 1])) == F(31, 10)


def test_variance_examples():
    assert variance(ColorDistribution([2, 2, 2, 2, 1])) == F(140, 81)
    assert variance(ColorDistribution([1])) == 0
    # frozen from the per-vertex oracle (conftest.vertex_moments)
    assert variance(ColorDistribution([2, 2, 2, 2, 1, 1])) == F(249, 100)


def test_stats_from_counts_examples():
    s = stats_from_counts(9, 5)
    assert (s.mean, s.variance) == (F(25, 9), F(140, 81))
    s = stats_from_counts(3, 3)
    assert (s.mean, s.variance) == (2, F(2, 3))
    s = stats_from_counts(10, 6)
    assert (s.mean, s.variance) == (F(31, 10), F(249, 100))


def test_stats_from_counts_rejects_k_above_n():
    with pytest.raises(ColoringError):
        stats_from_counts(3, 4)


def test_stats_json_shape():
    doc = stats_from_counts(9, 5).to_dict()
    assert doc == {
        "mean": {"num": 25, "den": 9},
        "variance": {"num": 140, "den": 81},
        "mean_decimal": "2.77778",
        "variance_decimal": "1.7284",
    }


def test_decimal_rendering():
    assert decimal_str(F(2, 3)) == "0.666667"
    assert decimal_str(F(2)) == "2"


def test_stats_of_accepts_coloring_or_distribution():
    c = Coloring(3, [1, 2, 3, 1])
    assert stats_of(c).same_values(stats_of(distribution_of(c)))
    assert isinstance(stats_of(c), ChromaticStats)


size_lists = st.lists(st.integers(1, 30), min_size=1, max_size=12)


@given(size_lists)
def test_pmf_sums_to_one(sizes):
    assert sum(pmf(ColorDistribution(sizes))) == 1


@given(size_lists)
def test_moments_match_vertex_oracle(sizes):
    d = ColorDistribution(sizes)
    m, v = vertex_moments(sizes)
    assert mean(d) == m
    assert variance(d) == v
    assert variance(d) >= 0


@given(size_lists, st.randoms(use_true_random=False))
def test_permutation_safety(sizes, rnd):
    shuffled = list(sizes)
    rnd.shuffle(shuffled)
    assert ColorDistribution(shuffled) == ColorDistribution(sizes)
    assert stats_of(ColorDistribution(shuffled)) == stats_of(ColorDistribution(sizes))


@given(st.integers(1, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_stats_from_counts_matches_oracle(nk):
    n, k = nk
    q, r = divmod(n, k)
    m, v = vertex_moments([q + 1] * r + [q] * (k - r))
    s = stats_from_counts(n, k)
    assert (s.mean, s.variance) == (m, v)
