"""Random inputs for the effectiveness and timing experiments.

All randomness comes from ``numpy.random.Generator`` over PCG64, seeded with
a 64-bit unsigned integer, so (input, seed) fixes the output bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, apply_permutation

__all__ = [
    "GENERATOR_ID",
    "GenConfig",
    "GenerationError",
    "isomorphic_pair",
    "perturbed_pair",
    "random_graph",
    "sub_seed",
]

GENERATOR_ID = "numpy-pcg64"


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenConfig:
    n: int
    edge_probability: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError(f"edge_probability must lie in [0, 1], got {self.edge_probability}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sub_seed(seed: int, *path: int) -> int:
    """Derive an independent 64-bit seed from ``seed`` and an integer path."""
    state = np.random.SeedSequence([seed, *path]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def random_graph(cfg: GenConfig) -> Graph:
    """G(n, p): one Bernoulli trial per unordered pair, pairs in lexicographic order."""
    rng = _rng(cfg.seed)
    us, vs = np.triu_indices(cfg.n, k=1)
    keep = rng.random(us.size) < cfg.edge_probability
    return Graph.from_edges(cfg.n, zip(us[keep].tolist(), vs[keep].tolist()))


def _permute(g: Graph, rng: np.random.Generator) -> tuple[Graph, list[int]]:
    # Generator.permutation is a Fisher-Yates shuffle of arange(n)
    p = rng.permutation(g.n).tolist()
    return apply_permutation(g, p), p


def isomorphic_pair(g: Graph, seed: int) -> tuple[Graph, list[int]]:
    return _permute(g, _rng(seed))


def perturbed_pair(g: Graph, seed: int) -> Graph:
    """Permute ``g`` as :func:`isomorphic_pair` does, then move one edge.

    One existing edge is removed and one pair that was a non-edge of the
    permuted graph is joined, both uniformly at random.  The removed edge is
    never re-added.
    """
    max_edges = g.n * (g.n - 1) // 2
    if g.num_edges == 0 or g.num_edges == max_edges:
        raise GenerationError(f"graph with {g.num_edges} of {max_edges} edges has no replaceable edge")
    rng = _rng(seed)
    permuted, _ = _permute(g, rng)
    edges = permuted.edges()
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not permuted.has_edge(u, v)]
    # non_edges was taken before the removal, so the removed edge is excluded
    del edges[int(rng.integers(len(edges)))]
    edges.append(non_edges[int(rng.integers(len(non_edges)))])
    return Graph.from_edges(g.n, edges)
