"""Simple undirected graphs with deterministic serialization.

Vertices are 0-based indices. Edges are kept as a sorted tuple of
``(a, b)`` pairs with ``a < b`` so that two graphs with the same edge set
always serialize identically. Labels are display metadata only.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "degree",
    "max_degree",
    "is_connected",
    "is_complete",
    "export",
    "parse",
    "to_json",
    "from_json",
    "to_dimacs",
    "from_dimacs",
    "to_dot",
]


class GraphError(ValueError):
    """Invalid graph input (bad vertex index, malformed file, ...)."""


@dataclass(frozen=True, eq=False)
class Graph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(
        self,
        n_vertices: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        if not isinstance(n_vertices, int) or isinstance(n_vertices, bool) or n_vertices < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n_vertices!r}")
        norm = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge must have two endpoints, got {e!r}")
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if not (0 <= a < n_vertices and 0 <= b < n_vertices):
                raise GraphError(f"edge {e!r} out of range for {n_vertices} vertices")
            norm.add((min(a, b), max(a, b)))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n_vertices:
                raise GraphError(f"expected {n_vertices} labels, got {len(labels)}")
        adj: list[set[int]] = [set() for _ in range(n_vertices)]
        for a, b in norm:
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    # labels never take part in equality
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.neighbors(a)

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else f"x{v}"

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n_vertices:
            raise GraphError(f"vertex {v!r} out of range [0, {self.n_vertices})")


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    if g.n_vertices < 1:
        raise GraphError("max_degree of an empty graph is undefined")
    return max(len(s) for s in g._adj)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n_vertices < 1:
        raise GraphError("connectivity of an empty graph is undefined")
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g._adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n_vertices


def is_complete(g: Graph) -> bool:
    n = g.n_vertices
    return g.n_edges == n * (n - 1) // 2


# -- serialization -----------------------------------------------------------

def to_json(g: Graph) -> str:
    doc = {
        "n": g.n_vertices,
        "edges": [list(e) for e in g.edges],
        "labels": list(g.labels) if g.labels is not None else None,
    }
    return json.dumps(doc)


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        n = doc["n"]
        edges = doc["edges"]
        labels = doc.get("labels")
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphError("malformed graph JSON: 'n' must be int and 'edges' a list")
    return Graph(n, edges, labels)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n_vertices} {g.n_edges}"]
    lines += [f"e {a + 1} {b + 1}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ValueError
                n, declared = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise ValueError
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise ValueError
        except ValueError:
            raise GraphError(f"malformed DIMACS line {lineno}: {raw!r}") from None
    if n is None:
        raise GraphError("DIMACS input has no 'p edge' header")
    g = Graph(n, edges)
    if g.n_edges != declared:
        raise GraphError(f"DIMACS header declares {declared} edges, found {g.n_edges}")
    return g


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_EXPORTERS = {"dimacs": to_dimacs, "dimacs-col": to_dimacs, "json": to_json, "dot": to_dot}
_PARSERS = {"dimacs": from_dimacs, "dimacs-col": from_dimacs, "json": from_json}


def export(g: Graph, fmt: str = "json") -> str:
    try:
        return _EXPORTERS[fmt](g)
    except KeyError:
        raise GraphError(f"unknown graph format {fmt!r}") from None


def parse(text: str, fmt: str = "json") -> Graph:
    try:
        parser = _PARSERS[fmt]
    except KeyError:
        raise GraphError(f"cannot parse graph format {fmt!r}") from None
    return parser(text)
