"""Immutable directed graphs with BFS distances, random generation, and I/O.

Edge convention: an edge ``(u, v)`` points from ``u`` to ``v``, and ``u`` is
an *in-neighbor* of ``v``.  Distances follow edge direction: ``d(u, v)`` is
the number of edges on a shortest directed path from ``u`` to ``v``, or
:data:`INF` when no such path exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

#: Sentinel for "no directed path".  A float infinity: it compares greater
#: than every finite distance, ``INF < INF`` is false, and arithmetic such as
#: ``INF + 1`` saturates instead of overflowing.
INF = float("inf")

Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Raised on malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _validate_edges(n: int, edges: Iterable[Edge]) -> frozenset[Edge]:
    out = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u},{u}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        out.add((int(u), int(v)))
    return frozenset(out)


@dataclass(frozen=True)
class DiGraph:
    """Immutable directed graph on nodes ``0 .. n-1``.

    Safe to share across threads; all operations on it are pure.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("node count must be non-negative")
        object.__setattr__(self, "edges", _validate_edges(self.n, self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "DiGraph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
        return tuple(tuple(sorted(a)) for a in adj)

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Nodes ``u`` with an edge ``(u, v)``."""
        return self._in_adj[v]

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        """Nodes ``v`` with an edge ``(u, v)``."""
        return self._out_adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def add_edges(self, new_edges: Iterable[Edge]) -> "DiGraph":
        """New graph with ``new_edges`` unioned in (set semantics)."""
        return DiGraph(self.n, self.edges | frozenset(new_edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean matrix ``A`` with ``A[u, v]`` true iff ``(u, v)`` is an edge."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = True
        return a


def bfs_distances_to(g: DiGraph, target: int) -> np.ndarray:
    """Distance from every node to ``target``, as a length-``n`` float array.

    Computed by one BFS from ``target`` over reversed edges.  Unreachable
    nodes get :data:`INF`; ``d(target, target)`` is 0.
    """
    if not (0 <= target < g.n):
        raise ValueError(f"target {target} out of range for n={g.n}")
    dist = np.full(g.n, INF)
    dist[target] = 0.0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for u in g.in_neighbors(v):
            if dist[u] == INF:
                dist[u] = dv + 1.0
                queue.append(u)
    return dist


def bfs_distances_from(g: DiGraph, source: int) -> np.ndarray:
    """Distance from ``source`` to every node (forward BFS)."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = np.full(g.n, INF)
    dist[source] = 0.0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.out_neighbors(u):
            if dist[v] == INF:
                dist[v] = du + 1.0
                queue.append(v)
    return dist


def distance_matrix(g: DiGraph) -> np.ndarray:
    """All-pairs distances ``D[u, v] = d(u, v)`` via level-synchronous BFS.

    Runs all sources simultaneously with boolean matrix products, which is
    much faster than n Python BFS passes for the dense-ish graphs produced
    by augmentation.
    """
    n = g.n
    D = np.full((n, n), INF)
    if n == 0:
        return D
    np.fill_diagonal(D, 0.0)
    adj = g.adjacency_matrix().astype(np.float32)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    step = 0
    while frontier.any():
        step += 1
        nxt = (frontier.astype(np.float32) @ adj) > 0
        frontier = nxt & ~reached
        D[frontier] = float(step)
        reached |= frontier
    return D


def complement_edges(g: DiGraph) -> list[Edge]:
    """All ordered pairs ``(u, v)``, ``u != v``, missing from the graph.

    Lexicographic order, so callers get a deterministic base ordering before
    any shuffling.
    """
    present = g.edges
    return [
        (u, v)
        for u in range(g.n)
        for v in range(g.n)
        if u != v and (u, v) not in present
    ]


def random_digraph(n: int, p: float, seed) -> DiGraph:
    """Random digraph: each ordered pair ``u != v`` kept with probability p.

    Same ``(n, p, seed)`` always yields the identical graph.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    us, vs = np.nonzero(mask)
    return DiGraph(n, frozenset(zip(us.tolist(), vs.tolist())))


# ---------------------------------------------------------------------------
# Edge-list text format: first non-comment line is n, then one "u v" per
# line.  '#' starts a comment (whole-line or trailing).


def parse_edge_list(text: str) -> DiGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError(lineno, "expected node count on first line")
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphParseError(lineno, f"invalid node count {tokens[0]!r}") from None
            if n < 0:
                raise GraphParseError(lineno, "node count must be non-negative")
            continue
        if len(tokens) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer edge tokens in {line!r}") from None
        if u == v:
            raise GraphParseError(lineno, f"self-loop ({u},{u}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"edge ({u},{v}) out of range for n={n}")
        edges.append((u, v))
    if n is None:
        raise GraphParseError(1, "empty input: missing node count")
    return DiGraph(n, frozenset(edges))


def read_edge_list(path) -> DiGraph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: DiGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: DiGraph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def to_dot(
    g: DiGraph,
    added: Iterable[Edge] = (),
    leaders: Sequence[int] = (),
) -> str:
    """GraphViz DOT text; added edges are drawn red, leaders double-circled."""
    added = set(added)
    leaders = set(leaders)
    lines = ["digraph G {"]
    for v in range(g.n):
        attrs = ' [shape=doublecircle, style=filled, fillcolor=lightgrey]' if v in leaders else ""
        lines.append(f"  {v}{attrs};")
    for u, v in g.sorted_edges():
        attrs = ' [color=red, penwidth=2.0]' if (u, v) in added else ""
        lines.append(f"  {u} -> {v}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
