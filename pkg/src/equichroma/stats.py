"""Exact color-index statistics of a coloring.

Colors are re-indexed by class size: the largest class is color 1, the
next largest color 2, and so on. A vertex drawn uniformly at random then
has color ``i`` with probability ``size_i / N``; the mean and variance
below are those of that color index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coloring import Coloring, ColoringError, forced_sizes

__all__ = [
    "ColorDistribution",
    "ChromaticStats",
    "distribution_of",
    "pmf",
    "mean",
    "variance",
    "stats_of",
    "stats_from_counts",
    "decimal_str",
    "rational_str",
    "rational_json",
]


@dataclass(frozen=True)
class ColorDistribution:
    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]) -> None:
        sizes = tuple(sorted((int(s) for s in sizes), reverse=True))
        if not sizes or sizes[-1] < 1:
            raise ColoringError("a color distribution needs at least one positive class size")
        object.__setattr__(self, "sizes", sizes)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def equitable(self) -> bool:
        return self.sizes[0] - self.sizes[-1] <= 1


@dataclass(frozen=True)
class ChromaticStats:
    mean: Fraction
    variance: Fraction
    source: str = "computed"

    def same_values(self, other: ChromaticStats) -> bool:
        return self.mean == other.mean and self.variance == other.variance

    def to_dict(self) -> dict:
        return {
            "mean": rational_json(self.mean),
            "variance": rational_json(self.variance),
            "mean_decimal": decimal_str(self.mean),
            "variance_decimal": decimal_str(self.variance),
        }


def distribution_of(c: Coloring) -> ColorDistribution:
    return ColorDistribution(c.class_sizes())


def pmf(d: ColorDistribution) -> list[Fraction]:
    return [Fraction(s, d.N) for s in d.sizes]


def mean(d: ColorDistribution) -> Fraction:
    return Fraction(sum(i * s for i, s in enumerate(d.sizes, 1)), d.N)


def variance(d: ColorDistribution) -> Fraction:
    second = Fraction(sum(i * i * s for i, s in enumerate(d.sizes, 1)), d.N)
    return second - mean(d) ** 2


def stats_of(d: ColorDistribution | Coloring) -> ChromaticStats:
    if isinstance(d, Coloring):
        d = distribution_of(d)
    return ChromaticStats(mean(d), variance(d))


def stats_from_counts(n_vertices: int, k: int) -> ChromaticStats:
    """Statistics shared by every equitable k-coloring of an N-vertex graph."""
    return stats_of(ColorDistribution(forced_sizes(n_vertices, k)))


# -- rendering -----------------------------------------------------------------

def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def rational_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def decimal_str(x: Fraction, digits: int = 6) -> str:
    return format(float(x), f".{digits}g")
