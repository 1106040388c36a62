#!/usr/bin/env python3
"""Three ways to store two files on four unit-capacity nodes.

Replication keeps two copies of each file, the coded layout adds two
parity nodes behind a two-file systematic prefix, and the hybrid layout
spends its redundancy unevenly (two replicas of the popular file, one
coded node).  The exact boundary chains show the trade: coding trades a
smaller square for reach along the diagonal, the hybrid pushes the
popular file's axis out to 3*mu.
"""

from fractions import Fraction

from servicecap import (HybridSpec, SystemConfig, make_hybrid,
                        make_mds_systematic, make_replication,
                        max_rate, membership, trace_boundary_2d)
from servicecap.cli import write_svg

MU = Fraction(1)

systems = [
    ("replication 2+2", make_replication(4, [2, 2])),
    ("mds (4,2)", make_mds_systematic(4, 2)),
    ("hybrid A=2 B=1 C=1", make_hybrid(HybridSpec(2, 1, 1))),
]

chains = []
for name, code in systems:
    config = SystemConfig.build(code, MU)
    chain = trace_boundary_2d(config)
    chains.append((name, chain))
    print(name)
    print("  nodes:", ", ".join(code.labels))
    print("  boundary:", " -> ".join("(%s, %s)" % v for v in chain.vertices))
    print("  max rate_b while rate_a = 3/2:",
          max_rate(config, {0: Fraction(3, 2)}, 1))

# a skewed demand the square cannot hold but both coded layouts can
skewed = (Fraction(5, 2), Fraction(0))
print("\ndemand (5/2, 0):")
for name, code in systems:
    config = SystemConfig.build(code, MU)
    print("  %-20s %s" % (name, "servable" if membership(config, skewed)[0]
                          else "not servable"))

write_svg("four_node_layouts.svg", chains, MU)
print("\nwrote four_node_layouts.svg")
