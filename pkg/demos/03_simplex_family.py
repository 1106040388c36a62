#!/usr/bin/env python3
"""Simplex-coded systems: one number decides everything.

A k-file simplex layout spreads 2^k - 1 nodes so that each file has its
own node plus 2^(k-1) - 1 disjoint repair pairs.  The servable demands
are exactly those with rate sum at most 2^(k-1) * mu, so popularity skew
is free: the region is a plain simplex.  The repair graph's odd-weight
vertex cover is what pins the sum bound.
"""

from fractions import Fraction

from servicecap import (SystemConfig, make_simplex, max_weighted_sum,
                        membership, simplex_allocation, simplex_graph_stats,
                        validate_allocation)

for k in (2, 3, 4):
    config = SystemConfig.build(make_simplex(k), Fraction(1))
    cap = max_weighted_sum(config, (1,) * k)
    nv, ne, cover = simplex_graph_stats(k)
    print("k=%d: %d nodes, rate-sum capacity %s" % (k, config.n, cap))
    print("  repair graph: %d vertices, %d edges+loops, cover size %d"
          % (nv, ne, len(cover)))
    skew = tuple([cap] + [Fraction(0)] * (k - 1))
    even = tuple(Fraction(cap, k) for _ in range(k))
    for demand in (skew, even):
        ok, _ = membership(config, demand)
        alloc = simplex_allocation(config, demand)
        _, valid = validate_allocation(config, alloc, demand)
        print("  demand %s: servable=%s, uniform split valid=%s"
              % (tuple(map(str, demand)), ok, valid))
