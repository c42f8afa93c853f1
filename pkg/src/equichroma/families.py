"""Wheel-related graph families and their constructive equitable colorings.

Every generated graph uses the same vertex layout::

    rim   v1..vn  -> indices 0 .. n-1
    hub           -> index n           (absent for plain cycles)
    outer u1..un  -> indices n+1 .. 2n (second cycle / pendants / petals)

Outer vertex ``u_i`` of a sunflower is adjacent to ``v_i`` and ``v_{i+1}``
(indices mod n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .coloring import Coloring
from .graph import Graph

__all__ = [
    "Family",
    "FamilyId",
    "ConstructionError",
    "generate",
    "constructive_coloring",
    "paper_color_count",
    "expected_counts",
]


class Family(str, enum.Enum):
    CYCLE = "cycle"
    WHEEL = "wheel"
    DOUBLE_WHEEL = "double_wheel"
    HELM = "helm"
    CLOSED_HELM = "closed_helm"
    FLOWER = "flower"
    SUNFLOWER = "sunflower"
    CLOSED_SUNFLOWER = "closed_sunflower"
    BLOSSOM = "blossom"

    def __str__(self) -> str:
        return self.value


class ConstructionError(RuntimeError):
    """A coloring pattern could not be realized for this family and n."""

    def __init__(self, family: Family, n: int, reason: str) -> None:
        super().__init__(f"{family.value} n={n}: {reason}")
        self.family = family
        self.n = n
        self.reason = reason


@dataclass(frozen=True)
class FamilyId:
    kind: Family
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Family(self.kind))
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 3:
            raise ValueError(f"family parameter n must be an integer >= 3, got {self.n!r}")

    def __str__(self) -> str:
        return f"{self.kind.value}({self.n})"


def _as_id(fid: FamilyId | tuple) -> FamilyId:
    return fid if isinstance(fid, FamilyId) else FamilyId(*fid)


def expected_counts(kind: Family | str, n: int) -> tuple[int, int]:
    """(vertex count, edge count) of the family graph."""
    kind = Family(kind)
    table = {
        Family.CYCLE: (n, n),
        Family.WHEEL: (n + 1, 2 * n),
        Family.DOUBLE_WHEEL: (2 * n + 1, 4 * n),
        Family.HELM: (2 * n + 1, 3 * n),
        Family.CLOSED_HELM: (2 * n + 1, 4 * n),
        Family.FLOWER: (2 * n + 1, 4 * n),
        Family.SUNFLOWER: (2 * n + 1, 4 * n),
        Family.CLOSED_SUNFLOWER: (2 * n + 1, 5 * n),
        Family.BLOSSOM: (2 * n + 1, 6 * n),
    }
    return table[kind]


def generate(fid: FamilyId | tuple) -> Graph:
    fid = _as_id(fid)
    kind, n = fid.kind, fid.n
    hub = n

    def rim(i):
        return i % n

    def outer(i):
        return n + 1 + i % n

    edges = [(rim(i), rim(i + 1)) for i in range(n)]
    labels = [f"v{i + 1}" for i in range(n)]
    if kind is Family.CYCLE:
        return Graph(n, edges, labels)

    labels += ["hub"] + [f"u{i + 1}" for i in range(n)]
    edges += [(rim(i), hub) for i in range(n)]
    if kind is Family.WHEEL:
        return Graph(n + 1, edges, labels[: n + 1])

    if kind is Family.DOUBLE_WHEEL:
        edges += [(outer(i), outer(i + 1)) for i in range(n)]
        edges += [(outer(i), hub) for i in range(n)]
    elif kind in (Family.HELM, Family.CLOSED_HELM, Family.FLOWER):
        edges += [(rim(i), outer(i)) for i in range(n)]
        if kind is Family.CLOSED_HELM:
            edges += [(outer(i), outer(i + 1)) for i in range(n)]
        elif kind is Family.FLOWER:
            edges += [(outer(i), hub) for i in range(n)]
    else:
        # sunflower-based: u_i closes a triangle over the rim edge v_i v_{i+1}
        edges += [(outer(i), rim(i)) for i in range(n)]
        edges += [(outer(i), rim(i + 1)) for i in range(n)]
        if kind in (Family.CLOSED_SUNFLOWER, Family.BLOSSOM):
            edges += [(outer(i), outer(i + 1)) for i in range(n)]
        if kind is Family.BLOSSOM:
            edges += [(outer(i), hub) for i in range(n)]
    return Graph(2 * n + 1, edges, labels)


def paper_color_count(kind: Family | str, n: int) -> int:
    """Number of colors used by the published equitable coloring of the family."""
    kind = Family(kind)
    if kind is Family.CYCLE:
        return 2 if n % 2 == 0 else 3
    if kind is Family.WHEEL:
        return n // 2 + 1 if n % 2 == 0 else (n - 1) // 2 + 2
    if kind in (Family.DOUBLE_WHEEL, Family.FLOWER, Family.BLOSSOM):
        return n + 1
    return 4


# -- constructive patterns ---------------------------------------------------
# Each returns a 1-based color list in the vertex layout above.

def _cycle_colors(n: int) -> list[int]:
    if n % 2 == 0:
        return [1 + i % 2 for i in range(n)]
    colors = [1 + i % 3 for i in range(n)]
    tail = n % 3
    if tail == 1:
        colors[-1] = 2
    elif tail == 2:
        colors[-2:] = [1, 2]
    return colors


def _wheel_colors(n: int) -> list[int]:
    if n % 2 == 0:
        half = n // 2
        return [1 + i % half for i in range(n)] + [half + 1]
    m = (n - 1) // 2
    if m < 2:
        raise ConstructionError(Family.WHEEL, n, "rim is a triangle; no 2-element rim classes exist")
    return [1 + i % m for i in range(n - 1)] + [m + 1, m + 2]


def _helm_colors(n: int) -> list[int]:
    # hub and alternate pendants share c1; rim alternates c3/c4
    rim = [3 + i % 2 for i in range(n)]
    out = [1 + i % 2 for i in range(n)]
    if n % 2:
        rim[-1], out[-1] = 2, 3
    return rim + [1] + out


def _sunflower_colors(n: int) -> list[int]:
    rim = [2 + i % 2 for i in range(n)]
    if n % 2 == 0:
        out = [1 if i % 2 == 0 else 4 for i in range(n)]
    else:
        rim[-1] = 4
        out = [4 if i % 2 == 0 else 1 for i in range(n - 2)] + [2, 1]
    return rim + [1] + out


def _paired_colors(n: int) -> list[int]:
    # rim v_i gets c_i; outer u_{i+1} shares it; hub alone in c_{n+1}
    return list(range(1, n + 1)) + [n + 1] + [1 + (i - 1) % n for i in range(n)]


_PATTERNS = {
    Family.CYCLE: _cycle_colors,
    Family.WHEEL: _wheel_colors,
    Family.DOUBLE_WHEEL: _paired_colors,
    Family.HELM: _helm_colors,
    Family.CLOSED_HELM: _helm_colors,
    Family.FLOWER: _paired_colors,
    Family.SUNFLOWER: _sunflower_colors,
    Family.CLOSED_SUNFLOWER: _sunflower_colors,
    Family.BLOSSOM: _paired_colors,
}


def constructive_coloring(fid: FamilyId | tuple) -> Coloring:
    """Equitable coloring following the published figure patterns.

    The result is checked for properness and equitability before it is
    returned; a pattern that does not hold for this ``n`` raises
    :class:`ConstructionError` instead of producing a bad coloring.
    """
    from .coloring import is_equitable, is_proper

    fid = _as_id(fid)
    colors = _PATTERNS[fid.kind](fid.n)
    k = paper_color_count(fid.kind, fid.n)
    try:
        c = Coloring(k, colors)
    except ValueError as exc:
        raise ConstructionError(fid.kind, fid.n, str(exc)) from None
    g = generate(fid)
    if not is_proper(g, c):
        raise ConstructionError(fid.kind, fid.n, "pattern is not a proper coloring")
    if not is_equitable(c):
        raise ConstructionError(fid.kind, fid.n, "pattern is not equitable")
    return c
