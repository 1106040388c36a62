#!/usr/bin/env python3
"""Audit of the hybrid closed-form boundary against the LP ground truth.

The piecewise formula for A replicas + B replicas + C coded nodes is
built by folding nodes into the all-coded region one at a time.  That
calculus anchors on the sloped chain (0, C*mu/2)-(C*mu/2, 0) even at
C = 1, where the true pair region is only the point (0,0) -- so for
single-coded-node systems the formula overshoots what the LP can
actually serve.  This sweep quantifies the gap exactly on every small
system, cross-checking the LP boundary with the independent
Fourier-Motzkin projection first.
"""

from fractions import Fraction

from servicecap import (CodeConstructionError, HybridSpec, SystemConfig,
                        compare_boundaries, hybrid_boundary, make_hybrid,
                        project_fm, render_report, trace_boundary_2d)

worst = []
for a in range(4):
    for b in range(4):
        for c in range(5):
            spec = HybridSpec(a, b, c)
            try:
                code = make_hybrid(spec)
            except CodeConstructionError:
                continue
            config = SystemConfig.build(code, Fraction(1))
            if config.recovery.total_sets > 40:
                continue
            lp_chain = trace_boundary_2d(config)
            assert lp_chain == project_fm(config), "oracles disagree!?"
            report = compare_boundaries(hybrid_boundary(spec, 1), lp_chain)
            if report.max_abs_gap != 0:
                worst.append((report.max_abs_gap, (a, b, c), report))

print("systems where the printed formula exceeds the LP region:")
for gap, (a, b, c), _ in sorted(worst, reverse=True):
    print("  A=%d B=%d C=%d: max gap %s" % (a, b, c, gap))

gap, (a, b, c), report = sorted(worst, reverse=True)[0]
print("\nfull report for the worst case:")
report = compare_boundaries(hybrid_boundary(HybridSpec(a, b, c), 1),
                            trace_boundary_2d(SystemConfig.build(
                                make_hybrid(HybridSpec(a, b, c)), Fraction(1))),
                            instance="hybrid A=%d B=%d C=%d mu=1" % (a, b, c))
print(render_report(report), end="")
