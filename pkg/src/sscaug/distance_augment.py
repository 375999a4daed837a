"""Edge augmentation that preserves graph distances or a PMI-based bound.

Two families live here.  The pairwise variant adds every edge that keeps
d(a, b) intact, which drives the final distances-from-a into a layered
structure: edge (u, v) present exactly when level(u) >= level(v) - 1.  The
randomized variant processes the missing edges of a graph in seeded random
order and keeps an edge whenever every (sequence node, leader) distance
stays inside its acceptance window, so the given PMI sequence survives in
the augmented graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import INF, DiGraph, Edge, bfs_distances_from, complement_edges, distance_matrix
from .pmi import PmiSequence, dl_matrix, is_pmi
from .zero_forcing import AugmentResult, check_leaders

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    njit = None


class VerificationError(RuntimeError):
    """Internal consistency check failed after augmentation (a bug guard)."""


@dataclass(frozen=True)
class LevelPartition:
    """Distance-from-a layering of a distance-preserving augmentation.

    ``levels[v]`` equals d(a, v) in the augmented graph; level(a) = 0 and
    level(b) = k, the preserved distance.
    """

    levels: tuple[int, ...]
    k: int

    def allows(self, u: int, v: int) -> bool:
        """Level rule for edge membership: level(u) >= level(v) - 1."""
        return self.levels[u] >= self.levels[v] - 1


def dpea(g: DiGraph, a: int, b: int) -> tuple[DiGraph, LevelPartition]:
    """Maximal edge augmentation preserving the distance from ``a`` to ``b``.

    Scans missing pairs in lexicographic order and keeps an edge whenever
    d(a, b) survives its insertion, which the pair test
    ``d(a,u) + 1 + d(v,b) >= k`` decides exactly.  A rejected edge stays
    rejected (distances only shrink), so one pass reaches the fixed point.
    For k >= 2 the result is layered: every node lands on a shortest a-to-b
    path and edge membership matches the level rule.  For k = 1 nothing can
    shorten the distance and the complete digraph comes back.
    """
    if a == b:
        raise ValueError("nodes a and b must differ")
    n = g.n
    out_adj = [list(g.out_neighbors(u)) for u in range(n)]
    in_adj = [list(g.in_neighbors(v)) for v in range(n)]

    def bfs(start: int, adj: list[list[int]]) -> np.ndarray:
        dist = np.full(n, INF)
        dist[start] = 0.0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            dx = dist[x] + 1.0
            for y in adj[x]:
                if dist[y] == INF:
                    dist[y] = dx
                    queue.append(y)
        return dist

    d_from_a = bfs(a, out_adj)
    d_to_b = bfs(b, in_adj)
    k = d_from_a[b]
    if k == INF:
        raise ValueError(f"d({a},{b}) is infinite: no distance to preserve")

    edges = set(g.edges)
    for u, v in complement_edges(g):
        # Inserting (u,v) sets d(a,b) to min(k, d(a,u) + 1 + d(v,b)).
        if d_from_a[u] + 1.0 + d_to_b[v] >= k:
            edges.add((u, v))
            out_adj[u].append(v)
            in_adj[v].append(u)
            # Refresh a BFS tree only when the new edge can shrink it.
            if d_from_a[u] + 1.0 < d_from_a[v]:
                d_from_a = bfs(a, out_adj)
            if d_to_b[v] + 1.0 < d_to_b[u]:
                d_to_b = bfs(b, in_adj)
    result = DiGraph(n, frozenset(edges))
    final = bfs_distances_from(result, a)
    if final[b] != k:
        raise VerificationError("distance from a to b changed during augmentation")
    levels = tuple(int(x) for x in final)
    return result, LevelPartition(levels=levels, k=int(k))


def dpea_common_edges(g: DiGraph, pairs: Sequence[Edge]) -> frozenset[Edge]:
    """Intersection of the pairwise augmentation solutions over ``pairs``.

    Adding the returned set (a superset of the original edges) preserves
    d(a, b) for every listed pair simultaneously.
    """
    if not pairs:
        raise ValueError("at least one node pair required")
    common: frozenset[Edge] | None = None
    for a, b in pairs:
        solution, _ = dpea(g, a, b)
        common = solution.edges if common is None else common & solution.edges
    return common


def _py_augment_kernel(D, seq_nodes, leader_ids, eps, cand_u, cand_v):
    """Reference implementation of the acceptance scan; numba-compiled when
    available.  Mutates D in place and returns per-candidate accept flags."""
    n = D.shape[0]
    n_seq = seq_nodes.shape[0]
    n_lead = leader_ids.shape[0]
    accepted = np.zeros(cand_u.shape[0], dtype=np.bool_)
    for t in range(cand_u.shape[0]):
        u = cand_u[t]
        v = cand_v[t]
        bad = False
        for i in range(n_seq):
            dsu = D[seq_nodes[i], u]
            if not np.isfinite(dsu):
                continue
            for j in range(n_lead):
                if dsu + 1.0 + D[v, leader_ids[j]] <= eps[i, j]:
                    bad = True
                    break
            if bad:
                break
        if bad:
            continue
        accepted[t] = True
        for x in range(n):
            dxu = D[x, u]
            if not np.isfinite(dxu):
                continue
            base = dxu + 1.0
            for y in range(n):
                alt = base + D[v, y]
                if alt < D[x, y]:
                    D[x, y] = alt
    return accepted


_augment_kernel = njit(cache=True)(_py_augment_kernel) if njit else _py_augment_kernel


def _verify_windows(g: DiGraph, leaders, seq: PmiSequence) -> np.ndarray:
    """Fresh-BFS check that each sequence entry sits in its window; returns
    the updated DL rows of the sequence nodes."""
    new_dl = dl_matrix(g, leaders)[list(seq.node_ids)]
    above = (new_dl > seq.eps_star).all()
    below = (new_dl <= seq.vectors).all()
    if not (above and below):
        raise VerificationError("augmented distances left their acceptance windows")
    if is_pmi(new_dl) is None:
        raise VerificationError("updated DL vectors lost the PMI property")
    return new_dl


def augment_distance_randomized(
    g: DiGraph,
    leaders: Sequence[int],
    seq: PmiSequence,
    seed,
) -> AugmentResult:
    """One randomized pass adding edges while the PMI sequence survives.

    Missing edges are processed in a seeded random permutation; an edge is
    kept iff afterwards every (sequence node, leader) distance stays above
    its strict lower bound (it can never exceed its original value, since
    insertions only shrink distances).  Distances are maintained by the
    single-edge insertion update d'(x,y) = min(d(x,y), d(x,u)+1+d(v,y))
    rather than per-edge BFS.  The surviving sequence is re-verified with
    fresh BFS before returning.
    """
    leaders = check_leaders(g, leaders)
    _check_sequence_matches(g, leaders, seq)
    rng = np.random.default_rng(seed)
    missing = complement_edges(g)
    order = rng.permutation(len(missing))

    D = distance_matrix(g)
    cand_u = np.array([missing[i][0] for i in order], dtype=np.int64)
    cand_v = np.array([missing[i][1] for i in order], dtype=np.int64)
    accepted = _augment_kernel(
        D,
        np.asarray(seq.node_ids, dtype=np.int64),
        np.asarray(leaders, dtype=np.int64),
        np.asarray(seq.eps_star, dtype=np.float64),
        cand_u,
        cand_v,
    )

    added = sorted(
        (int(cand_u[t]), int(cand_v[t])) for t in np.nonzero(accepted)[0]
    )
    result = g.add_edges(added)
    _verify_windows(result, leaders, seq)
    return AugmentResult(
        n=g.n,
        leaders=leaders,
        bound_kind="distance",
        bound_value=len(seq),
        edges_after=result.edges,
        added=tuple(added),
        edges_before=g.edge_count,
    )


def _check_sequence_matches(g: DiGraph, leaders, seq: PmiSequence) -> None:
    if len(seq) == 0:
        raise ValueError("PMI sequence is empty")
    if seq.vectors.shape[1] != len(leaders):
        raise ValueError("sequence coordinate count does not match leader count")
    for v in seq.node_ids:
        if not (0 <= v < g.n):
            raise ValueError(f"sequence node {v} out of range for n={g.n}")
    current = dl_matrix(g, leaders)[list(seq.node_ids)]
    same = (current == seq.vectors) | (~np.isfinite(current) & ~np.isfinite(seq.vectors))
    if not same.all():
        raise ValueError("sequence vectors are not this graph's DL vectors")
    if is_pmi(seq.vectors) is None:
        raise ValueError("sequence vectors do not form a PMI sequence")


def augment_distance_best_of(
    g: DiGraph,
    leaders: Sequence[int],
    seq: PmiSequence,
    seed,
    repeats: int,
) -> AugmentResult:
    """Best of ``repeats`` independent randomized runs (most edges wins,
    earlier run on ties).  Runs use spawned child seeds, so results are
    deterministic in (seed, repeats) and nested: raising ``repeats`` never
    loses edges."""
    if repeats < 1:
        raise ValueError("repeat count must be >= 1")
    children = np.random.SeedSequence(seed).spawn(repeats)
    best: AugmentResult | None = None
    for child in children:
        run = augment_distance_randomized(g, leaders, seq, child)
        if best is None or run.edge_count > best.edge_count:
            best = run
    return best
