"""Exact isomorphism decisions for small graphs by backtracking search."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from .compare import Verdict
from .graph import Graph, apply_permutation, check_permutation, degree_sequence

__all__ = [
    "DEFAULT_BUDGET",
    "OracleResult",
    "brute_force_isomorphic",
    "enumerate_all_graphs",
    "verify_witness",
]

DEFAULT_BUDGET = 10**7
MAX_ENUMERATION_N = 6


@dataclass(frozen=True)
class OracleResult:
    verdict: Verdict
    witness: tuple[int, ...] | None = None
    nodes: int = 0

    @property
    def isomorphic(self) -> bool:
        return self.verdict is Verdict.ISOMORPHIC


def verify_witness(g: Graph, h: Graph, p: Sequence[int]) -> bool:
    check_permutation(p, g.n)
    if g.n != h.n:
        raise ValueError(f"graphs differ in size ({g.n} vs {h.n})")
    return apply_permutation(g, p) == h


def _search_order(g: Graph) -> list[int]:
    # Next vertex: most neighbours already placed, then highest degree,
    # then lowest index.
    order: list[int] = []
    placed = [False] * g.n
    links = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not placed[u]),
            key=lambda u: (links[u], len(g.adj[u]), -u),
        )
        placed[v] = True
        order.append(v)
        for w in g.adj[v]:
            links[w] += 1
    return order


def brute_force_isomorphic(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Complete search for a bijection ``f`` with ``f(u)f(v) in E(h) <=> uv in E(g)``.

    Candidates for a vertex must match its degree and its adjacency to every
    vertex already assigned.  ``budget`` caps the number of search nodes;
    running out gives :attr:`Verdict.INCONCLUSIVE` rather than a guess.
    """
    if g.n != h.n or g.num_edges != h.num_edges or degree_sequence(g) != degree_sequence(h):
        return OracleResult(Verdict.NON_ISOMORPHIC)
    n = g.n
    order = _search_order(g)
    position = {v: i for i, v in enumerate(order)}
    # for order[i]: positions of its neighbours placed before it
    back_links = [[position[w] for w in g.adj[v] if position[w] < i] for i, v in enumerate(order)]
    h_masks = [sum(1 << u for u in nbrs) for nbrs in h.adj]
    by_degree: dict[int, list[int]] = {}
    for u in range(n):
        by_degree.setdefault(len(h.adj[u]), []).append(u)

    image = [0] * n  # image[i] = h-vertex assigned to order[i]
    used = [False] * n
    nodes = 0

    def extend(i: int, image_mask: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        required = 0
        for j in back_links[i]:
            required |= 1 << image[j]
        for u in by_degree.get(len(g.adj[v]), ()):
            if used[u] or (h_masks[u] & image_mask) != required:
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted
            image[i] = u
            used[u] = True
            if extend(i + 1, image_mask | (1 << u)):
                return True
            used[u] = False
        return False

    try:
        found = extend(0, 0)
    except _BudgetExhausted:
        return OracleResult(Verdict.INCONCLUSIVE, nodes=nodes)
    if not found:
        return OracleResult(Verdict.NON_ISOMORPHIC, nodes=nodes)
    witness = [0] * n
    for i, v in enumerate(order):
        witness[v] = image[i]
    return OracleResult(Verdict.ISOMORPHIC, tuple(witness), nodes)


class _BudgetExhausted(Exception):
    pass


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by edge bitmask order."""
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"refusing to enumerate 2^{n * (n - 1) // 2} graphs (n={n} > {MAX_ENUMERATION_N})")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))
