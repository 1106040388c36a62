#!/usr/bin/env python3
"""Waterfilling on a (6,3) systematic MDS system, step by step.

Requests go to their own node until it saturates; the overflow is decoded
from triples of the least-loaded remaining nodes, raising a common water
level.  The run below also shows the capacity-footprint test that decides
feasibility for rate <= 1/2 layouts, and an infeasible demand with its
unserved residual.
"""

from fractions import Fraction

from servicecap import (InfeasibleDemand, SystemConfig, make_mds_systematic,
                        mds_outer_bound, validate_allocation, waterfill,
                        waterfill_max_coded)

config = SystemConfig.build(make_mds_systematic(6, 3), Fraction(1))
demand = (Fraction(3, 2), Fraction(6, 5), Fraction(3, 10))

print("demand:", demand)
print("coded capacity left after systematic service:",
      waterfill_max_coded(config, demand))
print("footprint bound satisfied:",
      mds_outer_bound(demand, 6, 3, 1))

alloc = waterfill(config, demand)
loads, ok = validate_allocation(config, alloc, demand)
print("allocation valid:", ok)
for i, (shares, sets) in enumerate(zip(alloc.shares, config.recovery.sets_by_file)):
    used = [(rset, s) for rset, s in zip(sets, shares) if s != 0]
    print("  file %d:" % (i + 1),
          ", ".join("%s -> %s" % (tuple(v + 1 for v in rset), s) for rset, s in used))
print("node loads:", loads)

print("\nan overloaded demand:")
try:
    waterfill(config, (3, 3, 3))
except InfeasibleDemand as exc:
    print("  not servable; unserved residual", exc.residual)
