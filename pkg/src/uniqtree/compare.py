"""Isomorphism verdicts from uniqueness trees.

Every vertex gets a signature, either its :class:`TreeProfile` (``"profile"``
mode) or the canonical parenthesis code of its tree (``"canonical"``
mode).  Vertices of ``g`` are then greedily mapped, in ascending order, onto
the first unmapped vertex of ``h`` carrying an equal signature.  Signature
equality is an equivalence relation, so first-fit finds a complete mapping
exactly when the two signature multisets agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph
from .unitree import TreeProfile, UniquenessTree, build_all_trees, tree_profile

__all__ = [
    "MatchResult",
    "Verdict",
    "canonical_tree_code",
    "graph_signatures",
    "match_graphs",
    "profiles_equal",
]

MODES = ("profile", "canonical")


class Verdict(str, enum.Enum):
    ISOMORPHIC = "isomorphic"
    NON_ISOMORPHIC = "non-isomorphic"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MatchResult:
    verdict: Verdict
    mapping: tuple[int | None, ...]
    mode: str
    size_mismatch: bool = False

    @property
    def isomorphic(self) -> bool:
        return self.verdict is Verdict.ISOMORPHIC


def profiles_equal(a: TreeProfile, b: TreeProfile) -> bool:
    return (
        a.height == b.height
        and a.widths == b.widths
        and a.child_histograms == b.child_histograms
    )


def canonical_tree_code(t: UniquenessTree) -> str:
    """Bottom-up parenthesis code: leaf -> ``01``, node -> ``0`` + sorted child codes + ``1``."""
    below: list[str] = []
    for k in range(t.height, -1, -1):
        counts = t.child_counts[k]
        if k == t.height:
            below = ["01"] * len(counts)
            continue
        codes = []
        for start, stop in t.child_spans(k):
            if start == stop:
                codes.append("01")
            else:
                codes.append("0" + "".join(sorted(below[start:stop])) + "1")
        below = codes
    return below[0]


def graph_signatures(g: Graph, mode: str = "profile", height_cap: int | None = None) -> list:
    """One comparison signature per vertex of ``g``."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    trees = build_all_trees(g, height_cap)
    if mode == "profile":
        return [tree_profile(t) for t in trees]
    return [canonical_tree_code(t) for t in trees]


def match_graphs(g: Graph, h: Graph, mode: str = "profile", height_cap: int | None = None) -> MatchResult:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if g.n != h.n:
        return MatchResult(Verdict.NON_ISOMORPHIC, (None,) * g.n, mode, size_mismatch=True)

    sig_g = graph_signatures(g, mode, height_cap)
    sig_h = graph_signatures(h, mode, height_cap)
    mapping: list[int | None] = [None] * g.n
    taken = [False] * h.n
    for v in range(g.n):
        for u in range(h.n):
            if not taken[u] and sig_g[v] == sig_h[u]:
                mapping[v] = u
                taken[u] = True
                break

    complete = all(m is not None for m in mapping)
    verdict = Verdict.ISOMORPHIC if complete else Verdict.NON_ISOMORPHIC
    return MatchResult(verdict, tuple(mapping), mode)
