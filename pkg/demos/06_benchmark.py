#!/usr/bin/env python3
"""Benchmark harness: bounds and augmentation totals across leader counts.

The full-size configuration (100 nodes, edge probability 0.075, 30 trials,
leader counts 1..20) reproduces the qualitative picture from the random
network experiments: the distance-based bound dominates for few leaders,
and preserving the looser zero-forcing bound admits more edges.  This demo
runs a scaled-down configuration so it finishes in seconds; pass --full for
the real thing.
"""

import sys

from sscaug import BenchConfig, format_csv, run_bench

if "--full" in sys.argv:
    cfg = BenchConfig(seed=1)
else:
    cfg = BenchConfig(n=30, p=0.12, trials=5, leader_counts=(1, 2, 4, 6, 8), seed=1)

print(f"running bench: n={cfg.n} p={cfg.p} trials={cfg.trials} "
      f"leader_counts={cfg.leader_counts}")
rows = run_bench(cfg)
print(format_csv(cfg, rows))

print("reading the columns:")
for row in rows:
    added_zf = row.mean_edges_zf_aug - row.mean_edges_original
    added_dist = row.mean_edges_dist_aug - row.mean_edges_original
    print(
        f"  {row.leader_count:2d} leaders: bounds zf={row.mean_zf_bound:6.2f} "
        f"pmi={row.mean_pmi_bound:6.2f} | edges added: "
        f"zf-preserving {added_zf:7.1f}, distance-preserving {added_dist:7.1f}"
    )
