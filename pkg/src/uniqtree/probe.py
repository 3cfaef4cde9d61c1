"""Empirical probe of whether equal uniqueness trees force isomorphism.

The probe never fails: it reports what the algorithm says on inputs where
the truth is known by other means.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .compare import MODES, Verdict, graph_signatures, match_graphs
from .fixtures import local_structure_differs, rook_graph, shrikhande_graph
from .gen import isomorphic_pair
from .graph import Graph
from .oracle import brute_force_isomorphic, enumerate_all_graphs

__all__ = ["Counterexample", "ProbeReport", "find_counterexamples", "run_probe"]


@dataclass(frozen=True)
class Counterexample:
    g: Graph
    h: Graph
    mode: str


@dataclass
class ProbeReport:
    pair: tuple[str, str]
    certified_non_isomorphic: bool
    verdicts: dict[str, Verdict]
    self_pair_verdicts: dict[str, Verdict]
    counterexamples: list[Counterexample] = field(default_factory=list)
    searched_up_to: int = 0

    @property
    def false_positive_modes(self) -> list[str]:
        if not self.certified_non_isomorphic:
            return []
        return [m for m, v in self.verdicts.items() if v is Verdict.ISOMORPHIC]

    def format(self) -> str:
        a, b = self.pair
        truth = (
            "non-isomorphic (neighborhood structure differs)"
            if self.certified_non_isomorphic
            else "not certified (neighborhood structure agrees)"
        )
        lines = [f"fixture pair: {a} vs {b}", f"local-structure check: {truth}"]
        for mode, v in self.verdicts.items():
            lines.append(f"algorithm ({mode}): {v}")
        for mode, v in self.self_pair_verdicts.items():
            lines.append(f"self-pair {a} vs relabelled {a} ({mode}): {v}")
        for mode in self.false_positive_modes:
            lines.append(f"FALSE POSITIVE in {mode} mode: equal trees on a non-isomorphic pair")
        if self.searched_up_to:
            lines.append(
                f"exhaustive search n <= {self.searched_up_to}: "
                f"{len(self.counterexamples)} non-isomorphic pairs declared isomorphic"
            )
            for c in self.counterexamples:
                lines.append(f"  [{c.mode}] n={c.g.n} {c.g.edges()} vs {c.h.edges()}")
        return "\n".join(lines)


def find_counterexamples(max_n: int, mode: str = "profile") -> list[Counterexample]:
    """One witness pair per signature class that holds several isomorphism classes.

    Every labelled graph with up to ``max_n`` vertices is grouped by the
    multiset of its vertex signatures (the quantity the greedy matcher
    compares); each group is then split into true isomorphism classes with
    the oracle.
    """
    found = []
    for n in range(1, max_n + 1):
        groups: dict[frozenset, list[Graph]] = {}
        for g in enumerate_all_graphs(n):
            key = frozenset(Counter(graph_signatures(g, mode)).items())
            reps = groups.setdefault(key, [])
            if not any(brute_force_isomorphic(g, r).verdict is Verdict.ISOMORPHIC for r in reps):
                reps.append(g)
        for reps in groups.values():
            for other in reps[1:]:
                found.append(Counterexample(reps[0], other, mode))
    return found


def run_probe(search_max_n: int = 0, seed: int = 0) -> ProbeReport:
    rook = rook_graph(4)
    shrikhande = shrikhande_graph()
    relabelled, _ = isomorphic_pair(rook, seed)
    report = ProbeReport(
        pair=("rook(4,4)", "shrikhande"),
        certified_non_isomorphic=local_structure_differs(rook, shrikhande),
        verdicts={m: match_graphs(rook, shrikhande, mode=m).verdict for m in MODES},
        self_pair_verdicts={m: match_graphs(rook, relabelled, mode=m).verdict for m in MODES},
    )
    if search_max_n:
        report.searched_up_to = search_max_n
        for mode in MODES:
            report.counterexamples.extend(find_counterexamples(search_max_n, mode))
    return report
