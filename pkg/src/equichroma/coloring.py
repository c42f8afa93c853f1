"""Coloring validation and exact minimum equitable coloring search."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, degree

__all__ = [
    "Coloring",
    "ColoringError",
    "SolverTimeout",
    "DEFAULT_TIMEOUT_S",
    "default_timeout",
    "is_proper",
    "is_equitable",
    "forced_sizes",
    "find_equitable_coloring",
    "equitable_chromatic_number",
    "minimum_equitable_coloring",
    "greedy_clique",
    "coloring_to_json",
    "coloring_from_json",
]

DEFAULT_TIMEOUT_S = 10.0


class ColoringError(ValueError):
    """Invalid coloring or coloring request."""


class SolverTimeout(RuntimeError):
    """The exact search exceeded its time budget; the answer is unknown."""


def default_timeout() -> float:
    """Per-(graph, k) search budget in seconds; ``EQUICHROMA_TIMEOUT_MS`` overrides."""
    raw = os.environ.get("EQUICHROMA_TIMEOUT_MS")
    if raw is None:
        return DEFAULT_TIMEOUT_S
    try:
        ms = int(raw)
    except ValueError:
        raise ColoringError(f"EQUICHROMA_TIMEOUT_MS must be an integer, got {raw!r}") from None
    if ms <= 0:
        raise ColoringError("EQUICHROMA_TIMEOUT_MS must be positive")
    return ms / 1000.0


@dataclass(frozen=True)
class Coloring:
    """A k-coloring with 1-based colors; every color in 1..k is used."""

    k: int
    assignment: tuple[int, ...]

    def __init__(self, k: int, assignment: Sequence[int]) -> None:
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise ColoringError(f"color count must be a positive integer, got {k!r}")
        assignment = tuple(int(c) for c in assignment)
        bad = [c for c in assignment if not 1 <= c <= k]
        if bad:
            raise ColoringError(f"colors must lie in [1, {k}], got {bad[0]}")
        missing = set(range(1, k + 1)) - set(assignment)
        if missing:
            raise ColoringError(f"color class {min(missing)} is empty")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "assignment", assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def class_sizes(self) -> list[int]:
        """Sizes indexed by color (position 0 is color 1)."""
        sizes = [0] * self.k
        for c in self.assignment:
            sizes[c - 1] += 1
        return sizes

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out


def is_proper(g: Graph, c: Coloring) -> bool:
    if len(c) != g.n_vertices:
        raise ColoringError(f"coloring has {len(c)} entries for a graph on {g.n_vertices} vertices")
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def is_equitable(c: Coloring) -> bool:
    sizes = c.class_sizes()
    return max(sizes) - min(sizes) <= 1


def forced_sizes(n_vertices: int, k: int) -> list[int]:
    """The only class-size multiset an equitable k-coloring can have, non-increasing."""
    if not 1 <= k <= n_vertices:
        raise ColoringError(f"need 1 <= k <= {n_vertices}, got k={k}")
    q, r = divmod(n_vertices, k)
    return [q + 1] * r + [q] * (k - r)


# -- exact search ------------------------------------------------------------

class _Search:
    """Backtracking with capacity pruning for one (graph, k) feasibility test."""

    def __init__(self, g: Graph, k: int, deadline: float | None) -> None:
        n = g.n_vertices
        self.n = n
        self.k = k
        self.q, self.r = divmod(n, k)
        self.adj = [sorted(g.neighbors(v)) for v in range(n)]
        self.order = sorted(range(n), key=lambda v: (-degree(g, v), v))
        self.color = [0] * n
        self.size = [0] * (k + 1)
        # conflicts[v][c]: number of neighbours of v already colored c
        self.conflicts = [[0] * (k + 1) for _ in range(n)]
        # free[c]: uncolored vertices with no neighbour in class c
        self.free = [n] * (k + 1)
        self.big = 0
        self.deadline = deadline
        self.nodes = 0

    def _assign(self, v: int, c: int) -> None:
        self.color[v] = c
        self.size[c] += 1
        if self.size[c] == self.q + 1:
            self.big += 1
        conflicts = self.conflicts
        for c2 in range(1, self.k + 1):
            if conflicts[v][c2] == 0:
                self.free[c2] -= 1
        for u in self.adj[v]:
            if self.color[u] == 0:
                row = conflicts[u]
                if row[c] == 0:
                    self.free[c] -= 1
                row[c] += 1

    def _unassign(self, v: int, c: int) -> None:
        conflicts = self.conflicts
        for u in self.adj[v]:
            if self.color[u] == 0:
                row = conflicts[u]
                row[c] -= 1
                if row[c] == 0:
                    self.free[c] += 1
        for c2 in range(1, self.k + 1):
            if conflicts[v][c2] == 0:
                self.free[c2] += 1
        if self.size[c] == self.q + 1:
            self.big -= 1
        self.size[c] -= 1
        self.color[v] = 0

    def _viable(self, depth: int) -> bool:
        q = self.q
        size, free = self.size, self.free
        for c in range(1, self.k + 1):
            if size[c] + free[c] < q:
                return False
        full_ok = self.big < self.r
        for v in self.order[depth:]:
            row = self.conflicts[v]
            for c in range(1, self.k + 1):
                if row[c] == 0 and (size[c] < q or (size[c] == q and full_ok)):
                    break
            else:
                return False
        return True

    def run(self) -> list[int] | None:
        return self._dfs(0, 0)

    def _dfs(self, depth: int, used: int) -> list[int] | None:
        if depth == self.n:
            return list(self.color) if used == self.k else None
        self.nodes += 1
        if self.deadline is not None and self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout("equitable coloring search exceeded its time budget")
        v = self.order[depth]
        row = self.conflicts[v]
        q = self.q
        # colours beyond used+1 are interchangeable with used+1; emptier classes first
        candidates = []
        for c in range(1, min(used + 1, self.k) + 1):
            s = self.size[c]
            if row[c] or s > q or (s == q and self.big >= self.r):
                continue
            candidates.append((s, c))
        candidates.sort()
        for _, c in candidates:
            self._assign(v, c)
            if self._viable(depth + 1):
                found = self._dfs(depth + 1, max(used, c))
                if found is not None:
                    return found
            self._unassign(v, c)
        return None


def find_equitable_coloring(g: Graph, k: int, timeout: float | None = None) -> Coloring | None:
    """An equitable k-coloring of ``g`` with no empty class, or None if none exists.

    Raises :class:`SolverTimeout` when the search runs past ``timeout``
    seconds (default from :func:`default_timeout`; pass ``float('inf')`` to
    disable).
    """
    n = g.n_vertices
    if n < 1:
        raise ColoringError("graph has no vertices")
    if not isinstance(k, int) or k < 1:
        raise ColoringError(f"k must be a positive integer, got {k!r}")
    if k > n:
        raise ColoringError(f"k={k} exceeds the vertex count {n}; some class would be empty")
    if timeout is None:
        timeout = default_timeout()
    deadline = None if timeout == float("inf") else time.monotonic() + timeout
    found = _Search(g, k, deadline).run()
    return None if found is None else Coloring(k, found)


def greedy_clique(g: Graph) -> list[int]:
    """A clique grown greedily from the highest-degree vertex."""
    order = sorted(range(g.n_vertices), key=lambda v: (-degree(g, v), v))
    clique: list[int] = []
    for v in order:
        if all(g.adjacent(v, u) for u in clique):
            clique.append(v)
    return clique


def minimum_equitable_coloring(g: Graph, timeout: float | None = None) -> Coloring:
    """Equitable coloring with the fewest colors, scanning k upward."""
    if g.n_vertices < 1:
        raise ColoringError("graph has no vertices")
    start = max(1, len(greedy_clique(g)))
    for k in range(start, g.n_vertices + 1):
        c = find_equitable_coloring(g, k, timeout)
        if c is not None:
            return c
    raise AssertionError("the all-singleton coloring is always equitable")


def equitable_chromatic_number(g: Graph, timeout: float | None = None) -> int:
    return minimum_equitable_coloring(g, timeout).k


# -- JSON ----------------------------------------------------------------------

def coloring_to_json(c: Coloring, family: str | None = None, n: int | None = None) -> str:
    doc = {"family": family, "n": n, "k": c.k, "assignment": list(c.assignment)}
    return json.dumps(doc)


def coloring_from_json(text: str) -> tuple[Coloring, str | None, int | None]:
    """Parse a coloring document; returns ``(coloring, family, n)``."""
    try:
        doc = json.loads(text)
        k = doc["k"]
        assignment = doc["assignment"]
        family = doc.get("family")
        n = doc.get("n")
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise ColoringError(f"malformed coloring JSON: {exc}") from None
    if not isinstance(assignment, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in assignment
    ):
        raise ColoringError("malformed coloring JSON: 'assignment' must be a list of integers")
    return Coloring(k, assignment), family, n
