"""Cross-validation: closed forms vs the LP oracle vs brute-force search.

Reports carry exact rationals only, so a zero gap is a literal equality
claim, and identical seeds render to byte-identical text.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .boundary import PiecewiseBoundary
from .closed_form import mds_outer_bound
from .recovery import InstanceTooLarge
from .region import SystemConfig, as_rates, membership
from .waterfill import is_systematic_mds

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GapRow:
    x: Fraction
    lhs: Fraction
    rhs: Fraction
    gap: Fraction  # lhs - rhs


@dataclass(frozen=True)
class RegionReport:
    instance: str
    lhs_name: str = "closed form"
    rhs_name: str = "lp"
    rows: tuple = ()
    max_abs_gap: Fraction = _ZERO
    disagreements: tuple = ()  # x-intervals spanned by nonzero sampled gaps
    entries: tuple = ()        # free-form lines (sweeps)


def compare_boundaries(lhs: PiecewiseBoundary, rhs: PiecewiseBoundary,
                       instance: str = "", lhs_name: str = "closed form",
                       rhs_name: str = "lp") -> RegionReport:
    """Exact gaps between two chains at all vertices plus segment midpoints.

    Both chains are piecewise linear and every breakpoint of either is
    sampled, so a zero gap at all samples is equality of the chains; a
    chain is treated as 0 beyond its right end.
    """
    xs = sorted(set(lhs.abscissae()) | set(rhs.abscissae()))
    mids = [(x0 + x1) / 2 for x0, x1 in zip(xs, xs[1:])]
    sample = sorted(set(xs) | set(mids))
    rows = []
    for x in sample:
        a, b = lhs.value_at(x), rhs.value_at(x)
        rows.append(GapRow(x=x, lhs=a, rhs=b, gap=a - b))
    max_abs = max((abs(r.gap) for r in rows), default=_ZERO)
    spans = []
    run = None
    for r in rows:
        if r.gap != 0:
            run = (run[0], r.x) if run else (r.x, r.x)
        elif run:
            spans.append(run)
            run = None
    if run:
        spans.append(run)
    return RegionReport(instance=instance, lhs_name=lhs_name, rhs_name=rhs_name,
                        rows=tuple(rows), max_abs_gap=max_abs,
                        disagreements=tuple(spans))


def render_report(report: RegionReport) -> str:
    """Deterministic plain-text serialization with exact rationals."""
    out = ["instance: %s" % report.instance]
    if report.rows:
        out.append("columns: x,%s,%s,gap" % (report.lhs_name, report.rhs_name))
        for r in report.rows:
            out.append("%s,%s,%s,%s" % (r.x, r.lhs, r.rhs, r.gap))
    for line in report.entries:
        out.append(line)
    out.append("max_abs_gap: %s" % report.max_abs_gap)
    for lo, hi in report.disagreements:
        out.append("disagreement: [%s, %s]" % (lo, hi))
    return "\n".join(out) + "\n"


def brute_force_membership(config: SystemConfig, rates, denominator: int) -> bool:
    """Exhaustive search for an allocation on the grid of share multiples
    of mu/denominator.

    One-sided: True proves LP membership; False only means no grid
    allocation exists.  Guarded on total set count and denominator.
    """
    rates = as_rates(config, rates)
    if config.recovery.total_sets > 12:
        raise InstanceTooLarge("brute force limited to 12 recovering sets total")
    if not 1 <= denominator <= 8:
        raise InstanceTooLarge("brute force limited to denominators 1..8")
    unit = config.mu / denominator
    targets = []
    for r in rates:
        m = r / unit
        if m.denominator != 1:
            return False  # rate not on the grid: no grid allocation can sum to it
        targets.append(int(m))
    cap = denominator
    loads = [0] * config.n
    sets_by_file = config.recovery.sets_by_file

    def place(nodes, amount) -> bool:
        for v in nodes:
            loads[v] += amount
        if amount > 0 and any(loads[v] > cap for v in nodes):
            for v in nodes:
                loads[v] -= amount
            return False
        return True

    def unplace(nodes, amount):
        for v in nodes:
            loads[v] -= amount

    def fill_sets(i, j, remaining) -> bool:
        sets = sets_by_file[i]
        if j == len(sets) - 1:
            if not place(sets[j], remaining):
                return False
            if fill_file(i + 1):
                return True
            unplace(sets[j], remaining)
            return False
        for part in range(remaining + 1):
            if not place(sets[j], part):
                break  # larger parts only overload further
            if fill_sets(i, j + 1, remaining - part):
                return True
            unplace(sets[j], part)
        return False

    def fill_file(i) -> bool:
        if i == config.k:
            return True
        return fill_sets(i, 0, targets[i])

    return fill_file(0)


def sweep_outer_bound(configs, samples: int, seed: int) -> RegionReport:
    """Random plus grid demands on systematic MDS systems: LP membership
    must imply the footprint bound; any violation is recorded (none are
    permitted).  Also counts bound-satisfying demands the LP rejects,
    which witness the bound being loose for n - k < k."""
    rng = random.Random(seed)
    entries = ["seed: %d" % seed]
    worst = _ZERO
    for config in configs:
        if not is_systematic_mds(config):
            raise ValueError("sweep applies to systematic MDS layouts only")
        n, k, mu = config.n, config.k, config.mu
        den = 4
        demands = []
        grid_axis = [mu * Fraction(g, 2) for g in range(0, 7)]
        if k == 2:
            demands += [(x, y) for x in grid_axis for y in grid_axis]
        elif k == 3:
            demands += [(x, y, z) for x in grid_axis for y in grid_axis for z in grid_axis]
        for _ in range(samples):
            demands.append(tuple(mu * Fraction(rng.randint(0, 3 * den), den)
                                 for _ in range(k)))
        violations = 0
        inside = 0
        bound_only = 0
        for rates in demands:
            member = membership(config, rates)[0]
            bound = mds_outer_bound(rates, n, k, mu)
            if member:
                inside += 1
                if not bound:
                    violations += 1
                    entries.append("VIOLATION mds(%d,%d) demand=%s member without bound"
                                   % (n, k, ",".join(str(r) for r in rates)))
            elif bound:
                bound_only += 1
        entries.append("mds(%d,%d): demands=%d inside=%d bound_without_membership=%d "
                       "violations=%d" % (n, k, len(demands), inside, bound_only,
                                          violations))
        if violations:
            worst = max(worst, Fraction(violations))
    return RegionReport(instance="footprint-bound sweep", rows=(),
                        max_abs_gap=worst, entries=tuple(entries))
