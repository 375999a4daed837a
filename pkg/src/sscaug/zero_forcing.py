"""Zero-forcing process, the derived-set controllability bound, and the
optimal edge augmentation that preserves it.

The forcing rule: a black node with exactly one white in-neighbor turns that
in-neighbor black.  The fixed point reached from the leader set is the
derived set; its size is a lower bound on the dimension of the strong
structurally controllable subspace for any positive edge weighting.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .graph import DiGraph, Edge


def check_leaders(g: DiGraph, leaders: Sequence[int]) -> tuple[int, ...]:
    """Validate a leader list: non-empty, distinct, in range. Order is kept
    (it indexes distance-vector coordinates and input-matrix columns)."""
    leaders = tuple(int(v) for v in leaders)
    if not leaders:
        raise ValueError("leader set must be non-empty")
    if len(set(leaders)) != len(leaders):
        raise ValueError("leader set contains duplicates")
    for v in leaders:
        if not (0 <= v < g.n):
            raise ValueError(f"leader {v} out of range for n={g.n}")
    return leaders


@dataclass(frozen=True)
class ZfResult:
    """Outcome of running the forcing process to its fixed point.

    ``forcing_order`` lists (forcer, forced) pairs in the order the forces
    fired; at each recorded moment the forced node was the forcer's unique
    white in-neighbor.
    """

    derived_set: frozenset[int]
    forcing_order: tuple[tuple[int, int], ...]


def derived_set(g: DiGraph, leaders: Sequence[int]) -> ZfResult:
    """Run the forcing process from ``leaders`` until no force fires.

    The resulting set is independent of force scheduling; for reproducible
    ``forcing_order`` the implementation always fires the eligible black
    node with the smallest id first.
    """
    leaders = check_leaders(g, leaders)
    black = [False] * g.n
    # white_in[u]: number of currently-white in-neighbors of u
    white_in = [len(g.in_neighbors(u)) for u in range(g.n)]
    order: list[tuple[int, int]] = []
    heap: list[int] = []

    def make_black(v: int) -> None:
        black[v] = True
        for x in g.out_neighbors(v):
            white_in[x] -= 1
            if black[x] and white_in[x] == 1:
                heapq.heappush(heap, x)
        if white_in[v] == 1:
            heapq.heappush(heap, v)

    for v in leaders:
        if not black[v]:
            make_black(v)
    while heap:
        u = heapq.heappop(heap)
        if not black[u] or white_in[u] != 1:
            continue  # stale entry
        v = next(w for w in g.in_neighbors(u) if not black[w])
        order.append((u, v))
        make_black(v)
    return ZfResult(
        derived_set=frozenset(i for i in range(g.n) if black[i]),
        forcing_order=tuple(order),
    )


def zf_bound(g: DiGraph, leaders: Sequence[int]) -> int:
    """Size of the derived set: a lower bound on the controllable-subspace
    dimension for every positive weighting."""
    return len(derived_set(g, leaders).derived_set)


def closed_form_zf_edges(n: int, m: int, delta: int) -> int:
    """Edge count of the densest graph preserving a size-``delta`` derived
    set with ``m`` leaders on ``n`` nodes:

        delta(delta+1)/2 - m(m+1)/2 + (m+n-delta)n - n
    """
    if not (1 <= m <= delta <= n):
        raise ValueError(f"need 1 <= m <= delta <= n, got m={m}, delta={delta}, n={n}")
    return delta * (delta + 1) // 2 - m * (m + 1) // 2 + (m + n - delta) * n - n


@dataclass(frozen=True)
class AugmentResult:
    """An augmented edge set together with the bound it preserves."""

    n: int
    leaders: tuple[int, ...]
    bound_kind: str  # "zf" | "distance"
    bound_value: int
    edges_after: frozenset[Edge]
    added: tuple[Edge, ...]
    edges_before: int

    @property
    def edge_count(self) -> int:
        return len(self.edges_after)

    def graph(self) -> DiGraph:
        return DiGraph(self.n, self.edges_after)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "leaders": list(self.leaders),
            "bound_kind": self.bound_kind,
            "bound_value": int(self.bound_value),
            "edges_before": int(self.edges_before),
            "edges_after": int(self.edge_count),
            "added_edges": [[u, v] for u, v in self.added],
        }


def augment_zf(g: DiGraph, leaders: Sequence[int]) -> AugmentResult:
    """Add the maximum number of edges without changing the derived set.

    Replays the forcing process; whenever node ``u`` forces ``v``, every
    currently-black node gains an edge into ``u``.  Nodes that never forced
    receive in-edges from all other nodes afterwards.  One exception keeps
    the derived set intact: when exactly one node stays white, black
    non-forcers must not receive an in-edge from it (that edge would make
    the white node forcible), so those edges are withheld and the total
    lands m short of :func:`closed_form_zf_edges`.
    """
    leaders = check_leaders(g, leaders)
    zf = derived_set(g, leaders)
    delta = zf.derived_set
    new_edges = set(g.edges)

    black_so_far = set(leaders)
    forcers = set()
    for u, v in zf.forcing_order:
        black_so_far.add(v)
        forcers.add(u)
        for w in black_so_far:
            if w != u:
                new_edges.add((w, u))

    white = [v for v in range(g.n) if v not in delta]
    lone_white = white[0] if len(white) == 1 else None
    for u in range(g.n):
        if u in forcers:
            continue
        for w in range(g.n):
            if w == u:
                continue
            if lone_white is not None and w == lone_white and u in delta:
                continue
            new_edges.add((w, u))

    added = tuple(sorted(frozenset(new_edges) - g.edges))
    return AugmentResult(
        n=g.n,
        leaders=leaders,
        bound_kind="zf",
        bound_value=len(delta),
        edges_after=frozenset(new_edges),
        added=added,
        edges_before=g.edge_count,
    )
