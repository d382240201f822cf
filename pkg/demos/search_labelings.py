#!/usr/bin/env python3
"""Searching for edge-graceful labelings on small graphs.

Shows the three search modes, what pruning buys, and the DOT rendering of a
found labeling (edge labels on edges, induced residues on vertices).
"""

from edgegraceful import SearchOptions, cycle, exhaustive_exists, path, search, verify
from edgegraceful.cli import labeling_to_dot

print("=== existence across small cycles and paths ===")
for name, build, rng in (("cycle", cycle, range(3, 9)), ("path", path, range(2, 10))):
    for n in rng:
        g = build(n)
        out = search(g, SearchOptions(mode="count"))
        oracle = exhaustive_exists(g)
        assert (out.solution_count > 0) == oracle
        print(f"{name}({n}): {out.solution_count} labelings")

print("\n=== what pruning buys (all labelings of cycle(7)) ===")
g = cycle(7)
for prune in (False, True):
    out = search(g, SearchOptions(mode="count", prune=prune))
    print(f"prune={prune!s:<5} -> {out.solution_count} solutions, "
          f"{out.nodes_expanded} nodes expanded")

print("\n=== one labeling of cycle(5), rendered as DOT ===")
out = search(cycle(5), SearchOptions(mode="first"))
labeling = out.solutions[0]
print(f"labels:   {list(labeling.labels)}")
print(f"residues: {list(verify(labeling).induced.residues)}")
print()
print(labeling_to_dot(labeling))
