#!/usr/bin/env python3
"""PMI sequences and the per-entry slack that edge additions may consume.

Every entry of a PMI sequence carries a strict lower bound: the largest
earlier witness value at that coordinate.  Distances may shrink down to
(but not onto) that bound without destroying the sequence, which is exactly
the freedom the randomized distance augmentation exploits.
"""

import numpy as np

from sscaug import epsilon_star, is_pmi

# Five distance-to-leader vectors over two leaders.
vectors = np.array([
    [0, 3],
    [1, 0],
    [1, 4],
    [2, 1],
    [2, 2],
], dtype=float)

witnesses = is_pmi(vectors)
print("PMI witnesses (0-based coordinates):", witnesses)

eps = epsilon_star(vectors, witnesses)
print("entry windows (strict lower bound, current value]:")
for i, (row, erow) in enumerate(zip(vectors, eps)):
    windows = ", ".join(
        f"coord {j}: ({int(e)}, {int(v)}]" for j, (v, e) in enumerate(zip(row, erow))
    )
    print(f"  position {i}: {windows}")

# Shrink two entries inside their windows; the sequence survives.
relaxed = vectors.copy()
relaxed[0, 1] = 1.0  # window (-1, 3]
relaxed[2, 1] = 1.0  # window (0, 4]
print("relaxed vectors:", relaxed.tolist())
print("still PMI:", is_pmi(relaxed) is not None)

# Dropping an entry onto its bound breaks the property.
broken = vectors.copy()
broken[3, 1] = eps[3, 1]  # equals an earlier witness value
print("entry forced onto its bound -> PMI?", is_pmi(broken) is not None)
