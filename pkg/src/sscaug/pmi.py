"""Distance-to-leader vectors and pseudo-monotonically increasing sequences.

A sequence of distance-to-leader (DL) vectors is PMI when every vector has a
witness coordinate at which it is strictly smaller than all later vectors.
The longest such sequence lower-bounds the dimension of the strong
structurally controllable subspace.  Alongside verification this module
computes, per sequence entry, the vector of strict lower bounds below which
a distance entry must not fall for the sequence to stay PMI; the distance
augmentation uses those as acceptance windows.

Coordinate indices (witnesses) are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import INF, DiGraph, bfs_distances_to
from .zero_forcing import check_leaders


class TooManyCandidatesError(ValueError):
    """Exact search refused: instance too large, use longest_pmi_greedy."""


def dl_matrix(g: DiGraph, leaders: Sequence[int]) -> np.ndarray:
    """n x m matrix of distances; entry (i, j) is d(node i, leader j).

    Column order follows the leader list.  Unreachable entries are INF;
    a leader's own row has 0 at its coordinate.
    """
    leaders = check_leaders(g, leaders)
    cols = [bfs_distances_to(g, l) for l in leaders]
    return np.column_stack(cols) if cols else np.zeros((g.n, 0))


def _as_matrix(vectors) -> np.ndarray:
    mat = np.asarray(vectors, dtype=float)
    if mat.ndim != 2:
        raise ValueError("DL vectors must all have the same length")
    return mat


def is_pmi(vectors) -> list[int] | None:
    """Witness coordinates if the vector sequence is PMI, else None.

    Per position the smallest satisfying coordinate index is chosen; this
    canonical assignment is what the strict-lower-bound computation is
    relative to.  Vectors with no finite entry disqualify the sequence.
    """
    mat = _as_matrix(vectors)
    k, m = mat.shape
    if k == 0:
        return []
    if not np.isfinite(mat).any(axis=1).all():
        return None
    witnesses = []
    for i in range(k):
        later = mat[i + 1 :]
        ok = (mat[i] < later).all(axis=0) if later.size else np.ones(m, dtype=bool)
        idx = np.nonzero(ok)[0]
        if idx.size == 0:
            return None
        witnesses.append(int(idx[0]))
    return witnesses


def epsilon_star(vectors, witnesses: Sequence[int]) -> np.ndarray:
    """Strict lower bounds: entry (i, j) is the largest earlier witness value
    at coordinate j (or -1 when none).

    Replacing any entry (i, j) by an integer x with
    ``eps[i, j] < x <= vectors[i][j]`` keeps the sequence PMI under the same
    witnesses, which is exactly the slack the randomized augmentation
    exploits.
    """
    mat = _as_matrix(vectors)
    k, m = mat.shape
    witnesses = [int(w) for w in witnesses]
    if len(witnesses) != k:
        raise ValueError("one witness per vector required")
    for i, w in enumerate(witnesses):
        if not (0 <= w < m):
            raise ValueError(f"witness {w} out of range at position {i}")
        if not (mat[i, w] < mat[i + 1 :, w]).all():
            raise ValueError(f"witness {w} at position {i} does not certify PMI")
    eps = np.full((k, m), -1.0)
    for i in range(1, k):
        eps[i] = eps[i - 1]
        w = witnesses[i - 1]
        eps[i, w] = max(eps[i - 1, w], mat[i - 1, w])
    return eps


@dataclass(frozen=True, eq=False)
class PmiSequence:
    """A verified PMI sequence over a graph's DL vectors.

    ``node_ids`` orders the participating nodes; ``vectors`` holds their DL
    rows, ``witnesses`` the canonical certifying coordinates, and
    ``eps_star`` the per-entry strict lower bounds.
    """

    node_ids: tuple[int, ...]
    vectors: np.ndarray  # (len, m) float, may contain INF
    witnesses: tuple[int, ...]
    eps_star: np.ndarray  # (len, m) float, finite

    def __len__(self) -> int:
        return len(self.node_ids)

    def to_json_dict(self) -> dict:
        def enc(x: float):
            return int(x) if np.isfinite(x) else None

        return {
            "nodes": list(self.node_ids),
            "vectors": [[enc(x) for x in row] for row in self.vectors],
            "witnesses": [int(w) for w in self.witnesses],
            "eps_star": [[int(x) for x in row] for row in self.eps_star],
        }


def make_sequence(node_ids: Sequence[int], vectors) -> PmiSequence:
    """Bundle nodes + vectors into a PmiSequence, verifying the PMI property
    and deriving canonical witnesses and lower bounds."""
    mat = _as_matrix(vectors)
    witnesses = is_pmi(mat)
    if witnesses is None:
        raise ValueError("vectors do not form a PMI sequence")
    return PmiSequence(
        node_ids=tuple(int(i) for i in node_ids),
        vectors=mat,
        witnesses=tuple(witnesses),
        eps_star=epsilon_star(mat, witnesses),
    )


def _candidates(dl: np.ndarray) -> list[int]:
    return [i for i in range(dl.shape[0]) if np.isfinite(dl[i]).any()]


def longest_pmi_exact(dl, limit: int = 15) -> PmiSequence:
    """Maximum-length PMI sequence by depth-first search.

    State is the per-coordinate strict lower bound accumulated from committed
    witnesses; a vector is eligible when it exceeds every bound.  Branches
    over (eligible vector, finite witness coordinate) and prunes when even
    taking all remaining candidates cannot beat the incumbent.  Fixed
    ascending iteration order makes the result deterministic.  Worst case is
    exponential, hence the candidate cap.
    """
    dl = _as_matrix(dl)
    cand = _candidates(dl)
    if len(cand) > limit:
        raise TooManyCandidatesError(
            f"{len(cand)} candidate vectors exceed limit {limit}; "
            "use longest_pmi_greedy for large instances"
        )
    m = dl.shape[1]
    best: list[int] = []

    def dfs(chosen: list[int], bounds: np.ndarray, remaining: list[int]) -> None:
        nonlocal best
        eligible = [i for i in remaining if (dl[i] > bounds).all()]
        if len(chosen) + len(eligible) <= len(best):
            return
        if not eligible and len(chosen) > len(best):
            best = list(chosen)
            return
        extended = False
        for i in eligible:
            rest = [r for r in remaining if r != i]
            for c in range(m):
                if not np.isfinite(dl[i, c]):
                    continue
                extended = True
                new_bounds = bounds.copy()
                new_bounds[c] = dl[i, c]
                chosen.append(i)
                dfs(chosen, new_bounds, rest)
                chosen.pop()
        if not extended and len(chosen) > len(best):
            best = list(chosen)

    dfs([], np.full(m, -1.0), cand)
    return make_sequence(best, dl[best])


def longest_pmi_greedy(dl) -> PmiSequence:
    """Greedy front-to-back heuristic for the longest PMI sequence.

    Among eligible vectors, repeatedly commits the (vector, coordinate) pair
    with the smallest finite value, ties broken by smaller coordinate then
    smaller node id.  Output always verifies as PMI; its length never
    exceeds the exact optimum.
    """
    dl = _as_matrix(dl)
    n, m = dl.shape
    alive = np.isfinite(dl).any(axis=1)
    bounds = np.full(m, -1.0)
    chosen: list[int] = []
    while True:
        eligible = alive & (dl > bounds).all(axis=1)
        if not eligible.any():
            break
        masked = np.where(eligible[:, None], dl, INF)
        val = masked.min()
        if val == INF:
            break  # eligible rows always hold a finite entry; safety only
        rows, cols = np.nonzero(masked == val)
        pick = min(zip(cols.tolist(), rows.tolist()))  # (coord, node)
        c, i = pick
        bounds[c] = dl[i, c]
        alive[i] = False
        chosen.append(i)
    seq = make_sequence(chosen, dl[chosen])
    return seq
