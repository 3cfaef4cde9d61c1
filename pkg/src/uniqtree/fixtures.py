"""Hand-built graphs used by the tests, the CLI and the conjecture probe.

Letters A-H map to vertices 0-7 in the two eight-vertex example graphs.
``cube_graph`` is the planar 3-cube; ``moebius_graph`` is the same ladder
closed with a half twist (the Wagner graph), so it is 3-regular on the
same vertex count but non-planar.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from .graph import Graph

__all__ = [
    "LETTERS",
    "cube_graph",
    "label",
    "moebius_graph",
    "neighborhood_signature",
    "parse_vertex",
    "rook_graph",
    "shrikhande_graph",
    "local_structure_differs",
]

LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _lettered(adjacency: dict[str, str]) -> Graph:
    edges = [(LETTERS.index(a), LETTERS.index(b)) for a, nbrs in adjacency.items() for b in nbrs]
    return Graph.from_edges(len(adjacency), edges)


def cube_graph() -> Graph:
    # A, B, C, G adjacencies are read off the worked example; D, E, F, H
    # are the only completion that keeps every degree at 3.
    return _lettered({
        "A": "BCG", "B": "ADH", "C": "ADE", "D": "BCF",
        "E": "CFG", "F": "DEH", "G": "AEH", "H": "BFG",
    })


def moebius_graph() -> Graph:
    return _lettered({
        "A": "BCH", "B": "ADG", "C": "ADE", "D": "BCF",
        "E": "CFG", "F": "DEH", "G": "BEH", "H": "AFG",
    })


def label(v: int) -> str:
    return LETTERS[v] if v < len(LETTERS) else str(v)


def parse_vertex(text: str) -> int:
    """Accept either a decimal index or a single letter (A = 0)."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    if len(text) == 1 and text.upper() in LETTERS:
        return LETTERS.index(text.upper())
    raise ValueError(f"not a vertex label: {text!r}")


def rook_graph(k: int = 4) -> Graph:
    """k x k rook's graph: cells (i, j), adjacent when sharing a row or column."""
    cells = [(i, j) for i in range(k) for j in range(k)]
    edges = [
        (a, b)
        for a, b in combinations(range(len(cells)), 2)
        if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]
    ]
    return Graph.from_edges(len(cells), edges)


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    cells = [(i, j) for i in range(4) for j in range(4)]
    steps = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = [
        (a, b)
        for a, b in combinations(range(16), 2)
        if ((cells[b][0] - cells[a][0]) % 4, (cells[b][1] - cells[a][1]) % 4) in steps
    ]
    return Graph.from_edges(16, edges)


def neighborhood_signature(g: Graph, v: int) -> tuple[int, int, tuple[int, ...]]:
    """(edges, triangles, sorted degrees) of the subgraph induced on N(v)."""
    nbrs = g.adj[v]
    inside = set(nbrs)
    deg = sorted(sum(1 for w in g.adj[u] if w in inside) for u in nbrs)
    edges = sum(deg) // 2
    triangles = sum(
        1 for a, b, c in combinations(nbrs, 3) if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )
    return edges, triangles, tuple(deg)


def local_structure_differs(g: Graph, h: Graph) -> bool:
    """True when the multisets of neighbourhood signatures differ.

    The multiset is an isomorphism invariant, so a difference certifies
    that ``g`` and ``h`` are not isomorphic.  Equality proves nothing.
    """
    sig_g = Counter(neighborhood_signature(g, v) for v in range(g.n))
    sig_h = Counter(neighborhood_signature(h, v) for v in range(h.n))
    return sig_g != sig_h
