"""Per-vertex uniqueness trees and their comparison profiles.

The tree rooted at ``v`` starts with ``v`` alone on level 0.  On every level,
an entry whose vertex occurs exactly once in that level is *unique* and
contributes one child per graph neighbour (ascending order) to the next
level; every other entry is a leaf.  Growth stops once a level has no
unique entries, or when the height reaches the cap (``n`` by default).

Levels are stored flat: ``vertices[k]`` and ``child_counts[k]`` are parallel
integer tuples.  Because each unique entry's children are written
contiguously and in level order, the parent of every entry can be recovered
from the child counts alone (see :meth:`UniquenessTree.child_spans`).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass
from itertools import accumulate
from typing import NamedTuple

import numpy as np

from .graph import Graph

__all__ = [
    "TreeEntry",
    "TreeProfile",
    "UniquenessTree",
    "build_all_trees",
    "build_uniqueness_tree",
    "format_tree",
    "tree_profile",
]

# levels at least this wide are scanned with numpy instead of list.count
_NUMPY_SCAN_WIDTH = 48
# bounds the boolean comparison block of the numpy scan to about 2 MB
_SCAN_BLOCK_BYTES = 1 << 21


class TreeEntry(NamedTuple):
    vertex: int
    child_count: int


@dataclass(frozen=True)
class UniquenessTree:
    root: int
    vertices: tuple[tuple[int, ...], ...]
    child_counts: tuple[tuple[int, ...], ...]

    @property
    def height(self) -> int:
        return len(self.vertices) - 1

    @property
    def widths(self) -> list[int]:
        return [len(level) for level in self.vertices]

    @property
    def num_entries(self) -> int:
        return sum(len(level) for level in self.vertices)

    @property
    def levels(self) -> list[list[TreeEntry]]:
        return [list(map(TreeEntry, vs, cs)) for vs, cs in zip(self.vertices, self.child_counts)]

    def child_spans(self, k: int) -> list[tuple[int, int]]:
        """``(start, stop)`` of each level-``k`` entry's children on level ``k + 1``."""
        stops = list(accumulate(self.child_counts[k]))
        return [(stop - c, stop) for stop, c in zip(stops, self.child_counts[k])]


@dataclass(frozen=True)
class TreeProfile:
    """Height, level widths and per-level child-count histograms.

    ``child_histograms[k]`` is a sorted tuple of ``(child_count, entries)``
    pairs with non-zero tallies, so profiles are hashable and compare by
    value.
    """

    height: int
    widths: tuple[int, ...]
    child_histograms: tuple[tuple[tuple[int, int], ...], ...]

    def histogram(self, k: int) -> dict[int, int]:
        return dict(self.child_histograms[k])


def _scan_unique(level: list[int]) -> list[bool]:
    # Every entry is compared against every entry of its level, so a level
    # of width w costs w*w comparisons. This is the uniqueness test whose
    # cost the running-time analysis is built on; _count_unique is the
    # linear-time cross-check.
    w = len(level)
    if w < _NUMPY_SCAN_WIDTH:
        return [level.count(v) == 1 for v in level]
    arr = np.array(level, dtype=np.int32)
    occurrences = np.empty(w, dtype=np.int32)
    block = max(1, _SCAN_BLOCK_BYTES // w)
    for start in range(0, w, block):
        eq = np.equal.outer(arr[start:start + block], arr)
        occurrences[start:start + block] = eq.view(np.uint8).sum(axis=1, dtype=np.int32)
    return (occurrences == 1).tolist()


def _count_unique(level: list[int]) -> list[bool]:
    tally = Counter(level)
    return [tally[v] == 1 for v in level]


_METHODS = {"scan": _scan_unique, "count": _count_unique}


def build_uniqueness_tree(
    g: Graph, root: int, height_cap: int | None = None, *, method: str = "scan"
) -> UniquenessTree:
    """Grow the uniqueness tree of ``root``.

    ``method`` selects how uniqueness within a level is decided: ``"scan"``
    compares every entry pairwise with its level, ``"count"`` tallies
    occurrences.  Both yield identical trees.
    """
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range for n={g.n}")
    cap = g.n if height_cap is None else height_cap
    if cap < 1:
        raise ValueError(f"height_cap must be positive, got {cap}")
    try:
        is_unique = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown uniqueness method {method!r}") from None

    adj = g.adj
    level = [root]
    vertices = []
    child_counts = []
    while True:
        if len(vertices) < cap:
            unique = is_unique(level)
        else:
            unique = [False] * len(level)
        vertices.append(tuple(level))
        child_counts.append(tuple(len(adj[v]) if u else 0 for v, u in zip(level, unique)))
        # unique entries are distinct vertices, so at most n parents here
        level = [w for v, u in zip(level, unique) if u for w in adj[v]]
        if not level:
            break
    return UniquenessTree(root, tuple(vertices), tuple(child_counts))


def build_all_trees(g: Graph, height_cap: int | None = None, *, method: str = "scan") -> list[UniquenessTree]:
    return [build_uniqueness_tree(g, v, height_cap, method=method) for v in range(g.n)]


def tree_profile(t: UniquenessTree) -> TreeProfile:
    histograms = tuple(tuple(sorted(Counter(counts).items())) for counts in t.child_counts)
    return TreeProfile(t.height, tuple(t.widths), histograms)


def format_tree(t: UniquenessTree, name: Callable[[int], str] = str) -> str:
    """Dump format: ``height H`` then one line per level of ``vertex:child_count``.

    ``name`` renders vertex indices.  The profile follows as ``#``-prefixed
    lines.
    """
    lines = [f"height {t.height}"]
    for level in t.levels:
        lines.append(" ".join(f"{name(e.vertex)}:{e.child_count}" for e in level))
    prof = tree_profile(t)
    lines.append("# widths " + " ".join(map(str, prof.widths)))
    for k, hist in enumerate(prof.child_histograms):
        tally = " ".join(f"{c}:{m}" for c, m in hist)
        lines.append(f"# level {k} child-count histogram {tally}")
    return "\n".join(lines)
