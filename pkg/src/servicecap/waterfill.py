"""Request-splitting for systematic MDS layouts, plus the allocation validator.

The scheduler saturates each file's systematic node first, then routes
the leftover (coded) traffic to the k least-loaded nodes, raising the
water level tier by tier.  The infinitesimal description of that rule
has an exact closed-form realization: each level step spreads a computed
volume uniformly over all k-subsets of the current bottom tier (plus, if
the tier is smaller than k, rotating completions from the next tier), so
every share and load stays rational.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .region import Allocation, SystemConfig, as_rates

_ZERO = Fraction(0)


class InfeasibleDemand(ValueError):
    """Demand not servable by the scheduler; carries the unserved residual."""

    def __init__(self, residual: Fraction):
        self.residual = residual
        super().__init__("demand not servable; unserved residual %s" % residual)


def is_systematic_mds(config: SystemConfig) -> bool:
    """True iff recovering sets are exactly {own node} plus all k-subsets of the rest."""
    k, n = config.k, config.n
    for i, sets in enumerate(config.recovery.sets_by_file):
        others = [j for j in range(n) if j != i]
        expected = ((i,),) + tuple(combinations(others, k)) if k <= len(others) else ((i,),)
        if sets != expected:
            return False
    return True


def validate_allocation(config: SystemConfig, alloc: Allocation, rates):
    """Exact node loads plus whether all three constraint families hold.

    Families: shares non-negative, per-file shares sum to the file's
    rate, and every node load at most mu.
    """
    rates = as_rates(config, rates)
    sets_by_file = config.recovery.sets_by_file
    if len(alloc.shares) != config.k or any(
            len(sh) != len(sets) for sh, sets in zip(alloc.shares, sets_by_file)):
        raise ValueError("allocation shape does not match the recovering-set index")
    loads = [_ZERO] * config.n
    ok = True
    for i, (sh, sets) in enumerate(zip(alloc.shares, sets_by_file)):
        total = _ZERO
        for share, rset in zip(sh, sets):
            share = Fraction(share)
            if share < 0:
                ok = False
            total += share
            for node in rset:
                loads[node] += share
        if total != rates[i]:
            ok = False
    if any(load > config.mu for load in loads):
        ok = False
    return tuple(loads), ok


def waterfill_max_coded(config: SystemConfig, rates) -> Fraction:
    """Largest coded request volume the non-systematic capacity can absorb:
    mu*n/k minus the average saturated systematic load."""
    rates = as_rates(config, rates)
    if not is_systematic_mds(config):
        raise ValueError("waterfilling applies to systematic MDS layouts only")
    mu, k, n = config.mu, config.k, config.n
    return Fraction(n, k) * mu - sum(min(r, mu) for r in rates) / k


def waterfill(config: SystemConfig, rates) -> Allocation:
    """Exact waterfilling allocation; raises InfeasibleDemand when it cannot fit.

    Residual files (rate above mu) are processed in descending residual
    order, ties by file index.  Infeasibility means the unsaturated pool
    fell below k nodes while residual traffic remained.
    """
    rates = as_rates(config, rates)
    if not is_systematic_mds(config):
        raise ValueError("waterfilling applies to systematic MDS layouts only")
    mu, k, n = config.mu, config.k, config.n
    sets_by_file = config.recovery.sets_by_file
    index_of = [{rset: j for j, rset in enumerate(sets)} for sets in sets_by_file]
    shares = [[_ZERO] * len(sets) for sets in sets_by_file]
    loads = [_ZERO] * n
    for i, r in enumerate(rates):
        first = min(r, mu)
        shares[i][0] = first
        loads[i] = first
    residuals = sorted(((r - mu, i) for i, r in enumerate(rates) if r > mu),
                       key=lambda item: (-item[0], item[1]))

    for idx, (volume, f) in enumerate(residuals):
        x = volume
        while x > 0:
            unsat = [v for v in range(n) if loads[v] < mu]
            if len(unsat) < k:
                leftover = x + sum(v for v, _ in residuals[idx + 1:])
                raise InfeasibleDemand(leftover)
            levels = sorted({loads[v] for v in unsat})
            tiers = [[v for v in unsat if loads[v] == lev] for lev in levels]
            full, partial, slots = [], None, k
            top_tier_pos = 0
            for pos, tier in enumerate(tiers):
                if slots == 0:
                    break
                if len(tier) <= slots:
                    full.append(tier)
                    slots -= len(tier)
                else:
                    partial = (tier, slots)
                    slots = 0
                top_tier_pos = pos
            top_level = levels[top_tier_pos]
            top_rate = (Fraction(partial[1], len(partial[0]))
                        if partial is not None else Fraction(1))
            next_level = (levels[top_tier_pos + 1]
                          if top_tier_pos + 1 < len(levels) else mu)
            step = min(x, (next_level - top_level) / top_rate)
            if partial is not None and full:
                gap = top_level - levels[top_tier_pos - 1]
                step = min(step, gap / (1 - top_rate))
            full_nodes = [v for tier in full for v in tier]
            if partial is not None:
                tier, want = partial
                groups = list(combinations(tier, want))
            else:
                groups = [()]
            piece = step / len(groups)
            for extra in groups:
                rset = tuple(sorted(full_nodes + list(extra)))
                shares[f][index_of[f][rset]] += piece
            for v in full_nodes:
                loads[v] += step
            if partial is not None:
                for v in partial[0]:
                    loads[v] += step * top_rate
            x -= step
    return Allocation(shares=tuple(tuple(row) for row in shares))
