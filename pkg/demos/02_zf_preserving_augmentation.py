#!/usr/bin/env python3
"""Maximum edge augmentation that keeps the zero-forcing bound intact.

Adding edges usually grows or shrinks the derived set.  The augmentation
here adds as many edges as possible while the forcing process still colors
exactly the same nodes, and the final edge count follows a closed form in
(n, leader count, derived-set size) alone, independent of the topology.
"""

from sscaug import (
    DiGraph,
    augment_zf,
    closed_form_zf_edges,
    complement_edges,
    derived_set,
    random_digraph,
    to_dot,
)

g = random_digraph(8, 0.15, seed=5)
leaders = (0, 3)

before = derived_set(g, leaders)
print(f"original: {g.edge_count} edges, derived set {sorted(before.derived_set)}")

res = augment_zf(g, leaders)
after = derived_set(res.graph(), leaders)
print(f"augmented: {res.edge_count} edges (+{len(res.added)})")
print("derived set unchanged:", before.derived_set == after.derived_set)

expected = closed_form_zf_edges(g.n, len(leaders), res.bound_value)
print(f"closed form ({g.n}, {len(leaders)}, {res.bound_value}) = {expected}")
assert res.edge_count == expected

# Maximality: adding any still-missing edge changes the derived-set size.
for e in complement_edges(res.graph()):
    changed = derived_set(res.graph().add_edges([e]), leaders).derived_set
    assert len(changed) != res.bound_value
print("every remaining missing edge would change the bound: verified")

# Topology independence: a totally different graph with matching
# (n, m, derived size) augments to the same total.
other = DiGraph.from_edges(8, [(1, 0), (2, 3)])
res_other = augment_zf(other, leaders)
if res_other.bound_value == res.bound_value:
    assert res_other.edge_count == res.edge_count
    print("same (n, m, derived size) on another topology -> same total:",
          res_other.edge_count)

# One corner deviates from the closed form: when the derived set misses
# exactly one node, giving the never-forcing black nodes their full
# in-edges would let that lone white node be forced, so those m edges are
# withheld and the total lands m short.
print()
print("=== lone-white-node corner ===")
corner = DiGraph.from_edges(4, [(1, 0), (2, 1)])
res_c = augment_zf(corner, (0,))
print(f"derived set {sorted(derived_set(corner, (0,)).derived_set)} misses only node 3")
formula = closed_form_zf_edges(4, 1, res_c.bound_value)
print(f"edges: {res_c.edge_count} = closed form {formula} - 1 leader")
assert res_c.edge_count == formula - 1
assert derived_set(res_c.graph(), (0,)).derived_set == {0, 1, 2}

# DOT rendering with the added edges highlighted
print()
print(to_dot(res.graph(), added=res.added, leaders=leaders)[:240], "...")
