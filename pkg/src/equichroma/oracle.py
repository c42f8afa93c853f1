"""Exhaustive equitable chromatic number for small graphs.

Independent of the branch-and-bound search in :mod:`equichroma.coloring`:
assignments are enumerated as restricted growth strings over the natural
vertex order (vertex i may only open color max-so-far + 1), and a branch is
abandoned only once it already contains a monochromatic edge.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["BRUTE_FORCE_MAX_VERTICES", "BudgetError", "brute_force_chi_e"]

BRUTE_FORCE_MAX_VERTICES = 13


class BudgetError(ValueError):
    """Instance too large for exhaustive enumeration."""


def _admits_equitable(earlier: list[int], n: int, k: int) -> bool:
    # members[c]: bitmask of vertices currently colored c
    members = [0] * k
    counts = [0] * k

    def extend(v: int, used: int) -> bool:
        if v == n:
            return used == k and max(counts) - min(counts) <= 1
        bit = 1 << v
        for c in range(min(used + 1, k)):
            if members[c] & earlier[v]:
                continue
            members[c] |= bit
            counts[c] += 1
            if extend(v + 1, max(used, c + 1)):
                return True
            members[c] ^= bit
            counts[c] -= 1
        return False

    return extend(0, 0)


def brute_force_chi_e(g: Graph, max_vertices: int = BRUTE_FORCE_MAX_VERTICES) -> int:
    n = g.n_vertices
    if n < 1:
        raise BudgetError("graph has no vertices")
    if n > max_vertices:
        raise BudgetError(f"{n} vertices exceeds the brute-force budget of {max_vertices}")
    # earlier[v]: bitmask of neighbours of v with smaller index
    earlier = [0] * n
    for a, b in g.edges:
        earlier[max(a, b)] |= 1 << min(a, b)
    for k in range(1, n + 1):
        if _admits_equitable(earlier, n, k):
            return k
    raise AssertionError("the all-singleton coloring is always equitable")
