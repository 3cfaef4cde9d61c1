"""Finite simple undirected graphs over dense 0-indexed vertices.

A :class:`Graph` is immutable: adjacency lists are sorted tuples and the
constructor rejects loops, asymmetric adjacency and duplicate neighbours.
Permutations are plain integer sequences where ``p[i]`` is the image of
vertex ``i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "Graph",
    "GraphFormatError",
    "apply_permutation",
    "check_permutation",
    "degree_sequence",
    "graph_from_edge_list",
    "graph_to_edge_list",
    "identity_permutation",
    "inverse_permutation",
    "neighbors",
]


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency lists, got {len(self.adj)}")
        for v, nbrs in enumerate(self.adj):
            for i, u in enumerate(nbrs):
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if i and nbrs[i - 1] >= u:
                    raise ValueError(f"adjacency of vertex {v} not strictly ascending")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self._adjsets[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from ``(u, v)`` pairs; repeats and reversed pairs collapse."""
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in sets))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())


def neighbors(g: Graph, v: int) -> list[int]:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return list(g.adj[v])


def degree_sequence(g: Graph) -> list[int]:
    return sorted((len(a) for a in g.adj), reverse=True)


def identity_permutation(n: int) -> list[int]:
    return list(range(n))


def check_permutation(p: Sequence[int], n: int) -> None:
    if len(p) != n:
        raise ValueError(f"permutation has length {len(p)}, expected {n}")
    if sorted(p) != list(range(n)):
        raise ValueError("not a bijection on {0, ..., n-1}")


def inverse_permutation(p: Sequence[int]) -> list[int]:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return inv


def apply_permutation(g: Graph, p: Sequence[int]) -> Graph:
    """Image graph with edge ``(p[u], p[v])`` for every edge ``(u, v)`` of ``g``."""
    check_permutation(p, g.n)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v, nbrs in enumerate(g.adj):
        adj[p[v]] = sorted(p[u] for u in nbrs)
    return Graph(g.n, tuple(tuple(a) for a in adj))


def graph_from_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header + ``m`` edge lines format.

    Blank lines and ``#`` comments are skipped; CRLF endings are accepted.
    Repeated or reversed edge lines are merged into one undirected edge.
    """
    header = None
    expected = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(lineno, f"malformed header {line!r}")
            header = a
            expected = b
            continue
        if len(edges) == expected:
            raise GraphFormatError(lineno, f"more than the {expected} declared edge lines")
        if not (0 <= a < header and 0 <= b < header):
            raise GraphFormatError(lineno, f"vertex index out of range for n={header}: {line!r}")
        if a == b:
            raise GraphFormatError(lineno, f"self-loop {line!r}")
        edges.append((a, b))
    if header is None:
        raise GraphFormatError(None, "missing 'n m' header")
    if len(edges) != expected:
        raise GraphFormatError(None, f"header declares {expected} edges, found {len(edges)}")
    return Graph.from_edges(header, edges)


def graph_to_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
