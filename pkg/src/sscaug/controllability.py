"""Numerical validation of the graph-theoretic bounds against sampled
controllability ranks.

For any positive edge weighting, the rank of the controllability matrix
[B, (-L)B, ..., (-L)^{n-1}B] is at least the zero-forcing and PMI bounds.
Sampling weightings and checking that dominance is a strong desk-scale
consistency test: a single violation means an implementation bug.  The rank
is taken as the dimension of the Krylov span, grown block by block with
incremental orthogonalization; forming the matrix powers explicitly would
over/underflow long before n reaches the configured cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import DiGraph
from .zero_forcing import check_leaders


def weighted_laplacian(g: DiGraph, weights: dict | Sequence[float]) -> np.ndarray:
    """Weighted Laplacian L = Deg - A_w.

    ``weights`` is either a mapping edge -> weight or a sequence aligned
    with ``g.sorted_edges()``.  All weights must be positive.  Row sums of
    the result are zero.
    """
    if not isinstance(weights, dict):
        edges = g.sorted_edges()
        if len(weights) != len(edges):
            raise ValueError("one weight per edge required")
        weights = dict(zip(edges, weights))
    A = np.zeros((g.n, g.n))
    for (u, v), w in weights.items():
        if (u, v) not in g.edges:
            raise ValueError(f"weight given for missing edge ({u},{v})")
        if w <= 0:
            raise ValueError(f"edge weight must be positive, got {w} for ({u},{v})")
        A[u, v] = w
    if len(weights) != g.edge_count:
        raise ValueError("every edge needs a weight")
    return np.diag(A.sum(axis=1)) - A


def input_matrix(n: int, leaders: Sequence[int]) -> np.ndarray:
    """n x m binary selector: column j has a single 1 at row leaders[j]."""
    B = np.zeros((n, len(leaders)))
    for j, l in enumerate(leaders):
        B[l, j] = 1.0
    return B


def controllability_dimension(laplacian: np.ndarray, B: np.ndarray, tol: float = 1e-8) -> int:
    """Dimension of span{B, (-L)B, ..., (-L)^{n-1}B}.

    Grows an orthonormal basis block by block: apply -L to the newest block,
    project the existing span out (twice, for numerical safety), and keep
    directions whose residual exceeds ``tol`` times the block norm.  Stops
    when a block contributes nothing new or the space is full.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    L = np.asarray(laplacian, dtype=float)
    B = np.asarray(B, dtype=float)
    n = L.shape[0]
    if L.shape != (n, n) or B.ndim != 2 or B.shape[0] != n:
        raise ValueError("inconsistent matrix dimensions")
    A = -L

    def fresh_directions(W: np.ndarray, basis: np.ndarray | None) -> np.ndarray:
        ref = np.linalg.norm(W)
        if ref == 0.0:
            return np.zeros((n, 0))
        if basis is not None and basis.size:
            W = W - basis @ (basis.T @ W)
            W = W - basis @ (basis.T @ W)
        U, s, _ = np.linalg.svd(W, full_matrices=False)
        return U[:, s > tol * ref]

    block = fresh_directions(B, None)
    basis = block
    while block.shape[1] and basis.shape[1] < n:
        block = fresh_directions(A @ block, basis)
        basis = np.hstack([basis, block])
    return int(basis.shape[1])


@dataclass(frozen=True)
class RankReport:
    """Sampled controllability ranks versus the two structural bounds.

    ``violations`` holds (sample index, rank) for every draw whose rank fell
    below a bound; it must stay empty for a correct implementation.
    """

    sampled_ranks: tuple[int, ...]
    zf_bound: int
    pmi_bound: int
    tolerance: float
    violations: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "sampled_ranks": list(self.sampled_ranks),
            "zf_bound": self.zf_bound,
            "pmi_bound": self.pmi_bound,
            "tolerance": self.tolerance,
            "violations": [list(v) for v in self.violations],
        }


def sample_and_validate(
    g: DiGraph,
    leaders: Sequence[int],
    zf: int,
    pmi: int,
    samples: int,
    seed,
    tol: float = 1e-8,
    max_nodes: int = 30,
) -> RankReport:
    """Draw ``samples`` weightings (i.i.d. uniform on [0.5, 1.5] per edge,
    bounded away from zero) and check every sampled rank dominates both
    bounds.  Instances above ``max_nodes`` are refused to keep the rank
    computation numerically unambiguous."""
    leaders = check_leaders(g, leaders)
    if samples < 1:
        raise ValueError("need at least one sample")
    if g.n > max_nodes:
        raise ValueError(
            f"n={g.n} exceeds the validation cap of {max_nodes} nodes"
        )
    rng = np.random.default_rng(seed)
    edges = g.sorted_edges()
    B = input_matrix(g.n, leaders)
    bound = max(zf, pmi)
    ranks = []
    violations = []
    for idx in range(samples):
        w = rng.uniform(0.5, 1.5, size=len(edges))
        L = weighted_laplacian(g, dict(zip(edges, w)))
        rank = controllability_dimension(L, B, tol)
        ranks.append(rank)
        if rank < bound:
            violations.append((idx, rank))
    return RankReport(
        sampled_ranks=tuple(ranks),
        zf_bound=int(zf),
        pmi_bound=int(pmi),
        tolerance=tol,
        violations=tuple(violations),
    )
