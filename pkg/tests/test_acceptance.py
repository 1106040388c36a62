"""End-to-end acceptance checks, one test per numbered criterion.

Everything asserts exact rational equality; there are no tolerances
anywhere.  Each test prints a PASS line on success (run with -s to see
them) naming the criterion it covers.
"""

import random
from fractions import Fraction as F
from itertools import permutations

import pytest

from servicecap import (CodeConstructionError, HybridSpec, SystemConfig,
                        brute_force_membership, compare_boundaries,
                        hybrid_boundary, hybrid_boundary_by_addition,
                        make_hybrid, make_mds_systematic, make_replication,
                        make_simplex, max_weighted_sum, mds_outer_bound,
                        membership, project_fm, simplex_allocation,
                        simplex_graph_stats, simplex_membership,
                        trace_boundary_2d, validate_allocation, waterfill,
                        InfeasibleDemand)

ONE = F(1)


def verts(*pts):
    return tuple((F(x), F(y)) for x, y in pts)


def compositions(total, parts):
    """All tuples of `parts` non-negative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sorted_compositions(total, parts):
    return sorted({tuple(sorted(c, reverse=True)) for c in compositions(total, parts)})


def test_criterion_01_mds_42_boundary(mds42):
    chain = trace_boundary_2d(mds42)
    assert chain.vertices == verts((0, F(5, 2)), (1, 2), (2, 1), (F(5, 2), 0))
    # the three case lines of the worked four-node system:
    # 5/2 - x/2 on [0,1], 3 - x on [1,2], 5 - 2x on [2,5/2]
    for x in (0, F(1, 2), 1):
        assert chain.value_at(x) == F(5, 2) - x / 2
    for x in (1, F(3, 2), 2):
        assert chain.value_at(x) == 3 - x
    for x in (2, F(9, 4), F(5, 2)):
        assert chain.value_at(x) == 5 - 2 * x
    print("ACCEPTANCE 01 PASS: (4,2) MDS boundary is exactly "
          "(0,5/2),(1,2),(2,1),(5/2,0)")


def test_criterion_02_replication_boundary(rep42):
    assert trace_boundary_2d(rep42).vertices == verts((0, 2), (2, 2), (2, 0))
    print("ACCEPTANCE 02 PASS: (4,2) replication boundary is exactly "
          "(0,2),(2,2),(2,0)")


def test_criterion_03_hybrid_favoring_a(hyb211):
    lp_chain = trace_boundary_2d(hyb211)
    fm_chain = project_fm(hyb211)
    assert lp_chain == fm_chain
    assert lp_chain.vertices == verts((0, 2), (1, 2), (3, 0))
    report = compare_boundaries(hybrid_boundary(HybridSpec(2, 1, 1), 1), lp_chain)
    gaps = {row.x: row.gap for row in report.rows}
    assert gaps[F(3, 2)] == F(1, 4)  # formula 7/4 vs lp 3/2
    assert report.max_abs_gap == F(1, 2)  # widest on [2, 5/2]
    assert gaps[F(2)] == F(1, 2) and gaps[F(5, 2)] == F(1, 2)
    print("ACCEPTANCE 03 PASS: hybrid (2,1,1) LP boundary (0,2),(1,2),(3,0) "
          "confirmed by both oracles; formula gap 1/4 at 3/2, max gap 1/2")


def _simplex_symmetry_ok(config):
    """Recovering sets must be invariant under file permutations (with the
    induced node relabeling), which lets grids quotient by sorting."""
    k = config.k
    index = {i: set(map(tuple, config.recovery.sets_by_file[i])) for i in range(k)}
    for perm in permutations(range(k)):
        def node_map(node):
            mask = node + 1
            out = 0
            for bit in range(k):
                if mask >> bit & 1:
                    out |= 1 << perm[bit]
            return out - 1
        for i in range(k):
            mapped = {tuple(sorted(node_map(v) for v in rset)) for rset in index[i]}
            if mapped != index[perm[i]]:
                return False
    return True


def test_criterion_04_simplex_regions(simplex2, simplex3, simplex4):
    quarter = F(1, 4)
    for config, k in ((simplex2, 2), (simplex3, 3), (simplex4, 4)):
        cap = 2 ** (k - 1) * ONE
        assert max_weighted_sum(config, (1,) * k) == cap

        if k == 2:
            demands = [(a * quarter, b * quarter)
                       for a in range(11) for b in range(11)]
        elif k == 3:
            demands = [tuple(F(c, 4) for c in comp)
                       for total in (15, 16, 17)
                       for comp in compositions(total, 3)]
        else:
            # quotient by the (verified) file-permutation symmetry; the
            # support value above already pins the outside half-space
            assert _simplex_symmetry_ok(config)
            demands = [tuple(F(c, 4) for c in comp)
                       for comp in sorted_compositions(32, 4)]
        for rates in demands:
            assert membership(config, rates)[0] == simplex_membership(rates, k, ONE)

        rng = random.Random(100 + k)
        for _ in range(100):
            raw = [F(rng.randint(0, 8), 8) for _ in range(k)]
            total = sum(raw)
            rates = tuple(r * cap / total if total > cap else r for r in raw)
            alloc = simplex_allocation(config, rates)
            assert validate_allocation(config, alloc, rates)[1]
    print("ACCEPTANCE 04 PASS: simplex k=2,3,4 all-ones support equals "
          "2^(k-1)*mu; grid membership matches the sum rule; 100 random "
          "allocations validate per k")


def test_criterion_05_simplex_graph_cover():
    for k in range(2, 7):
        nv, ne, cover = simplex_graph_stats(k)
        assert nv == 2 ** k - 1
        assert 2 * ne == nv * k + k
        assert len(cover) == 2 ** (k - 1)
        # cover really covers: every edge (distance-1 pair) and loop
        for u in range(1, 2 ** k):
            for b in range(k):
                v = u ^ (1 << b)
                if v and (u in cover or v in cover) is False:
                    raise AssertionError("uncovered edge")
        assert all(v in cover for v in range(1, 2 ** k) if v & (v - 1) == 0)
    print("ACCEPTANCE 05 PASS: simplex graphs for k<=6 have |V|=2^k-1, "
          "|E|=(|V|k+k)/2, and odd-weight covers of size 2^(k-1)")


def test_criterion_06_containment(mds42, mds63, mds62, mds53):
    rng = random.Random(2024)
    violations = 0
    for config in (mds42, mds63, mds62, mds53):
        for _ in range(200):
            rates = tuple(F(rng.randint(0, 12), 4) for _ in range(config.k))
            if membership(config, rates)[0]:
                if not mds_outer_bound(rates, config.n, config.k, config.mu):
                    violations += 1
    assert violations == 0
    print("ACCEPTANCE 06 PASS: 800 seeded demands on (4,2),(6,3),(6,2),(5,3): "
          "every LP-feasible demand satisfies the footprint bound")


def test_criterion_07_tightness_and_looseness(mds63, mds62, mds53):
    for config in (mds63, mds62):
        grid = sorted({tuple(F(a, 2) for a in point)
                       for point in _box_points(config.k, 6)})
        for rates in grid:
            member = membership(config, rates)[0]
            bound = mds_outer_bound(rates, config.n, config.k, config.mu)
            assert member == bound
            if member:
                alloc = waterfill(config, rates)
                assert validate_allocation(config, alloc, rates)[1]
            else:
                with pytest.raises(InfeasibleDemand):
                    waterfill(config, rates)
    witnesses = 0
    for rates in sorted({tuple(F(a, 2) for a in point) for point in _box_points(3, 6)}):
        bound = mds_outer_bound(rates, 5, 3, ONE)
        if bound and not membership(mds53, rates)[0]:
            witnesses += 1
    assert witnesses > 0
    print("ACCEPTANCE 07 PASS: on (6,3),(6,2) the bound equals LP membership "
          "on the half-step grid and waterfilling serves every feasible "
          "point; on (5,3) the bound admits %d LP-infeasible grid points"
          % witnesses)


def _box_points(k, steps):
    if k == 2:
        return [(a, b) for a in range(steps + 1) for b in range(steps + 1)]
    return [(a, b, c) for a in range(steps + 1) for b in range(steps + 1)
            for c in range(steps + 1)]


def test_criterion_08_oracle_equivalence():
    corpus = [("replication 2+2", make_replication(4, [2, 2])),
              ("mds (4,2)", make_mds_systematic(4, 2))]
    for a in range(4):
        for b in range(4):
            for c in range(5):
                try:
                    code = make_hybrid(HybridSpec(a, b, c))
                except CodeConstructionError:
                    continue
                corpus.append(("hybrid (%d,%d,%d)" % (a, b, c), code))
    checked = 0
    for name, code in corpus:
        config = SystemConfig.build(code, ONE)
        if config.recovery.total_sets > 40:
            continue
        assert trace_boundary_2d(config) == project_fm(config), name
        checked += 1
    assert checked >= 70
    print("ACCEPTANCE 08 PASS: support tracing and Fourier-Motzkin agree "
          "vertex-for-vertex on %d two-file systems" % checked)


def test_criterion_09_addition_calculus_consistency():
    for a in range(5):
        for b in range(5):
            for c in range(7):
                spec = HybridSpec(a, b, c)
                composed = hybrid_boundary_by_addition(spec, ONE)
                direct = hybrid_boundary(spec, ONE)
                assert composed == direct, (a, b, c)
    print("ACCEPTANCE 09 PASS: folding nodes in one at a time reproduces the "
          "direct piecewise formula for all A,B<=4, C<=6")


def test_criterion_10_brute_force_soundness(rep42, mds42, hyb211, simplex2):
    rng = random.Random(777)
    configs = [rep42, mds42, hyb211, simplex2]
    agreements = 0
    for trial in range(500):
        config = configs[trial % 4]
        den = rng.choice([1, 2, 4])
        rates = tuple(F(rng.randint(0, 2 * den), den) for _ in range(config.k))
        if brute_force_membership(config, rates, den):
            assert membership(config, rates)[0]
            agreements += 1
    assert agreements >= 100
    print("ACCEPTANCE 10 PASS: 500 seeded grid searches; every brute-force "
          "witness (%d found) is confirmed by LP membership" % agreements)
