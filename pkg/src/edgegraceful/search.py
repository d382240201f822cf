"""Backtracking construction (or exhaustive refutation) of edge-graceful labelings.

The search assigns the labels 1..q to edges depth-first, one edge per level,
never reusing a label.  With pruning on, a vertex's residue is finalized the
moment its last incident edge gets a label; if the residue is already held
by another finalized vertex the branch cannot lead to a valid labeling and is
cut.  Pruning never removes a valid completion, so prune=True and prune=False
enumerate the same solution set.

Everything is deterministic: labels are tried in increasing order and the
edge order is fixed up front, so repeated runs give identical outcomes,
including the node counter and, in mode "first", the same labeling.

``exhaustive_exists`` is a deliberately naive oracle (plain permutation
scan, no pruning, no shared code path) kept for cross-checking the search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph
from .labeling import EdgeLabeling

MODES = ("first", "all", "count")
EDGE_ORDERS = ("as-given", "completion-heuristic")

ORACLE_MAX_EDGES = 10  # q! blowup guard for exhaustive_exists


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for one search run.

    mode: "first" stops at one solution, "all" collects every one, "count"
    tallies without storing labelings.  ``limit`` caps how many solutions the
    run may take in modes "all" and "count" (mode "first" is implicitly 1).
    """

    mode: str = "first"
    limit: int | None = None
    edge_order: str = "completion-heuristic"
    prune: bool = True

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.edge_order not in EDGE_ORDERS:
            raise ValueError(
                f"edge_order must be one of {EDGE_ORDERS}, got {self.edge_order!r}"
            )
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be >= 1 when given, got {self.limit}")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search run.

    ``exhausted`` is true iff the whole assignment space was covered, i.e.
    the run was not cut short by mode "first" or by ``limit``.
    ``solution_count`` equals len(solutions) except in mode "count", where
    no labelings are stored.
    """

    solutions: tuple[EdgeLabeling, ...]
    solution_count: int
    nodes_expanded: int
    exhausted: bool


def completion_order(graph: Graph) -> list[int]:
    """Edge order that finalizes low-degree vertices as early as possible.

    Greedy: repeatedly take the edge whose endpoint is closest to having all
    its incident edges placed (ties to the lowest edge index).  On a fan this
    walks the path outward from one end, completing a vertex every two edges,
    which is where the residue pruning bites.
    """
    remaining = graph.degrees()
    taken = [False] * graph.q
    order: list[int] = []
    for _ in range(graph.q):
        best = -1
        best_key = None
        for i, (u, v) in enumerate(graph.edges):
            if taken[i]:
                continue
            key = min(remaining[u], remaining[v])
            if best_key is None or key < best_key:
                best, best_key = i, key
        u, v = graph.edges[best]
        remaining[u] -= 1
        remaining[v] -= 1
        taken[best] = True
        order.append(best)
    return order


def search(graph: Graph, options: SearchOptions | None = None) -> SearchOutcome:
    """Depth-first search for edge-graceful labelings of ``graph``."""
    opts = options or SearchOptions()
    p, q = graph.p, graph.q

    if q == 0:
        if p > 1:
            raise ValueError(
                "graph has vertices but no edges; no labeling can induce "
                f"{p} distinct residues"
            )
        return SearchOutcome((), 0, 0, True)

    order = list(range(q)) if opts.edge_order == "as-given" else completion_order(graph)
    edges = [graph.edges[i] for i in order]

    # position at which each vertex sees its last incident edge
    last_pos: dict[int, int] = {}
    for pos, (u, v) in enumerate(edges):
        last_pos[u] = pos
        last_pos[v] = pos
    completes_at: list[list[int]] = [[] for _ in range(q)]
    for w, pos in last_pos.items():
        completes_at[pos].append(w)
    isolated = [w for w in range(p) if w not in last_pos]

    prune = opts.prune
    target = 1 if opts.mode == "first" else opts.limit
    collect = opts.mode != "count"

    used = [False] * (q + 1)
    sums = [0] * p
    residue_taken = [False] * p
    level_label = [0] * q
    solutions: list[EdgeLabeling] = []
    count = 0
    nodes = 0
    stopped = False

    if prune:
        # isolated vertices all induce residue 0; two of them collide for good
        if len(isolated) > 1:
            return SearchOutcome((), 0, 0, True)
        if isolated:
            residue_taken[0] = True

    def record() -> None:
        nonlocal count, stopped
        if not prune:
            residues = [s % p for s in sums]
            if len(set(residues)) != p:
                return
        count += 1
        if collect:
            labels = [0] * q
            for pos, i in enumerate(order):
                labels[i] = level_label[pos]
            solutions.append(EdgeLabeling(graph, tuple(labels)))
        if target is not None and count >= target:
            stopped = True

    def place(pos: int) -> None:
        nonlocal nodes
        u, v = edges[pos]
        last = pos + 1 == q
        for lab in range(1, q + 1):
            if used[lab]:
                continue
            used[lab] = True
            sums[u] += lab
            sums[v] += lab
            level_label[pos] = lab
            nodes += 1
            ok = True
            finalized: list[int] = []
            if prune:
                for w in completes_at[pos]:
                    r = sums[w] % p
                    if residue_taken[r]:
                        ok = False
                        break
                    residue_taken[r] = True
                    finalized.append(r)
            if ok:
                if last:
                    record()
                else:
                    place(pos + 1)
            for r in finalized:
                residue_taken[r] = False
            sums[u] -= lab
            sums[v] -= lab
            used[lab] = False
            if stopped:
                return

    place(0)
    return SearchOutcome(
        solutions=tuple(solutions),
        solution_count=count,
        nodes_expanded=nodes,
        exhausted=not stopped,
    )


def exhaustive_exists(graph: Graph) -> bool:
    """Brute-force existence oracle over all q! label permutations.

    No pruning and no shared machinery with ``search``; guarded at
    q <= ORACLE_MAX_EDGES because the scan is factorial.
    """
    q = graph.q
    if q > ORACLE_MAX_EDGES:
        raise ValueError(f"oracle limited to q <= {ORACLE_MAX_EDGES}, got q = {q}")
    p = graph.p
    if p == 0:
        return True
    edges = graph.edges
    seen = [0] * p
    stamp = 0
    for perm in itertools.permutations(range(1, q + 1)):
        sums = [0] * p
        for (u, v), lab in zip(edges, perm):
            sums[u] += lab
            sums[v] += lab
        stamp += 1
        for s in sums:
            r = s % p
            if seen[r] == stamp:
                break
            seen[r] = stamp
        else:
            return True
    return False
