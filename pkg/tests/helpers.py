"""Independent oracles and instance generators shared across test modules.

Everything here deliberately avoids the library's own code paths where it
matters: the forcing closure works on bitmasks, the longest-PMI oracle
enumerates orderings, and the augmentation optimum comes from a
branch-and-bound over edge subsets re-checked with fresh BFS.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from sscaug import DiGraph, complement_edges, dl_matrix, is_pmi, random_digraph


def bitmask_derived_set(n: int, edges, leaders) -> frozenset[int]:
    """Forcing closure with simultaneous rule application on bitmasks."""
    in_mask = [0] * n
    for u, v in edges:
        in_mask[v] |= 1 << u
    black = 0
    for v in leaders:
        black |= 1 << v
    while True:
        forced = 0
        for u in range(n):
            if not (black >> u) & 1:
                continue
            white_in = in_mask[u] & ~black
            if white_in and white_in & (white_in - 1) == 0:  # exactly one bit
                forced |= white_in
        if forced & ~black == 0:
            return frozenset(i for i in range(n) if (black >> i) & 1)
        black |= forced


def random_order_derived_set(g: DiGraph, leaders, rng) -> frozenset[int]:
    """Forcing process firing eligible forces in random order."""
    black = set(leaders)
    while True:
        eligible = []
        for u in black:
            whites = [w for w in g.in_neighbors(u) if w not in black]
            if len(whites) == 1:
                eligible.append(whites[0])
        if not eligible:
            return frozenset(black)
        black.add(eligible[rng.integers(len(eligible))])


def brute_force_longest_pmi(vectors) -> int:
    """Maximum PMI length by enumerating ordered subsets (oracle; <= 6 rows)."""
    mat = np.asarray(vectors, dtype=float)
    k = mat.shape[0]
    assert k <= 6, "oracle is factorial; keep instances tiny"
    rows = [i for i in range(k) if np.isfinite(mat[i]).any()]
    best = 0
    for size in range(1, len(rows) + 1):
        for order in permutations(rows, size):
            if is_pmi(mat[list(order)]) is not None:
                best = max(best, size)
    return best


def _windows_ok(g: DiGraph, leaders, seq) -> bool:
    new_dl = dl_matrix(g, leaders)[list(seq.node_ids)]
    return bool((new_dl > seq.eps_star).all() and (new_dl <= seq.vectors).all())


def brute_force_max_window_augment(g: DiGraph, leaders, seq) -> int:
    """Most edges addable while every sequence window stays satisfied.

    Branch-and-bound over include/exclude decisions on the missing edges.
    Feasibility of a set is monotone (adding edges only shrinks distances),
    so individually-infeasible edges prune permanently and the incumbent
    bound |chosen| + |open candidates| is sound.
    """
    missing = complement_edges(g)
    best = 0

    def feasible(edges) -> bool:
        return _windows_ok(g.add_edges(edges), leaders, seq)

    def dfs(chosen: list, candidates: list) -> None:
        nonlocal best
        candidates = [e for e in candidates if feasible(chosen + [e])]
        if len(chosen) + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, len(chosen))
            return
        head, rest = candidates[0], candidates[1:]
        dfs(chosen + [head], rest)
        dfs(chosen, rest)

    assert feasible([])
    dfs([], missing)
    return best + g.edge_count


def random_instance(rng, n_range=(5, 20), p_choices=(0.1, 0.2, 0.3), m_range=(1, 3)):
    """Seeded (graph, leaders) pair for property sweeps."""
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    p = float(rng.choice(p_choices))
    g = random_digraph(n, p, int(rng.integers(0, 2**31)))
    m = int(rng.integers(m_range[0], min(m_range[1], n) + 1))
    leaders = tuple(sorted(rng.choice(n, size=m, replace=False).tolist()))
    return g, leaders


# Six-node network whose distance-to-leader rows (leaders 0, 1) reproduce the
# published five-vector sequence exactly, plus one unreachable node.
def published_dl_fixture() -> tuple[DiGraph, tuple[int, int]]:
    g = DiGraph.from_edges(6, [(1, 0), (2, 0), (3, 1), (4, 3), (0, 4), (4, 2)])
    return g, (0, 1)
