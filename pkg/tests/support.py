"""Shared test helpers: independent residue oracle, random graphs, corpus."""

from __future__ import annotations

import itertools
import random

from edgegraceful import Graph, cycle, fan, make_graph, path

CORPUS_SEED = 20250810


def residues_oracle(p: int, edges, labels) -> list[int]:
    """Direct per-vertex incident-label sums mod p, independent of the package."""
    sums = [0] * p
    for (u, v), lab in zip(edges, labels):
        sums[u] += lab
        sums[v] += lab
    return [s % p for s in sums]


def count_graceful_oracle(graph: Graph) -> int:
    """Count valid labelings by scanning every permutation (q <= 8 intended)."""
    q = graph.q
    total = 0
    for perm in itertools.permutations(range(1, q + 1)):
        r = residues_oracle(graph.p, graph.edges, perm)
        if len(set(r)) == graph.p:
            total += 1
    return total


def random_simple_graph(rng: random.Random, max_p: int = 7, max_q: int = 8) -> Graph:
    """A random simple graph with 1 <= q <= max_q edges."""
    while True:
        p = rng.randint(2, max_p)
        all_pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
        q = rng.randint(1, min(max_q, len(all_pairs)))
        edges = rng.sample(all_pairs, q)
        rng.shuffle(edges)
        return make_graph(p, edges)


def small_corpus(n_random: int = 50) -> list[Graph]:
    """Fixed corpus with q <= 8: fans n <= 4, cycles 3..8, paths 2..9, randoms."""
    rng = random.Random(CORPUS_SEED)
    graphs = [fan(1, n) for n in range(1, 5)]
    graphs += [cycle(n) for n in range(3, 9)]
    graphs += [path(n) for n in range(2, 10)]
    graphs += [random_simple_graph(rng) for _ in range(n_random)]
    assert all(g.q <= 8 for g in graphs)
    return graphs
