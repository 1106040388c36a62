import random
from fractions import Fraction as F

import pytest

from servicecap import (HybridSpec, InstanceTooLarge, PiecewiseBoundary,
                        SystemConfig, brute_force_membership, compare_boundaries,
                        hybrid_boundary, make_hybrid, make_mds_systematic,
                        make_simplex, mds_halfrate_chain, membership,
                        render_report, sweep_outer_bound, trace_boundary_2d)


def chain(*pts):
    return PiecewiseBoundary(tuple((F(x), F(y)) for x, y in pts))


class TestCompareBoundaries:
    def test_identical(self):
        c = chain((0, 2), (1, 1), (2, 0))
        report = compare_boundaries(c, c)
        assert report.max_abs_gap == 0
        assert report.disagreements == ()

    def test_mds_42_formula_vs_lp(self, mds42):
        report = compare_boundaries(mds_halfrate_chain(4, 1), trace_boundary_2d(mds42))
        assert report.max_abs_gap == 0

    def test_hybrid_favoring_a_gap(self, hyb211):
        report = compare_boundaries(hybrid_boundary(HybridSpec(2, 1, 1), 1),
                                    trace_boundary_2d(hyb211))
        assert report.max_abs_gap == F(1, 2)
        at = {row.x: row.gap for row in report.rows}
        assert at[F(3, 2)] == F(1, 4)
        assert at[F(2)] == F(1, 2)
        assert at[F(1)] == 0
        assert len(report.disagreements) == 1
        lo, hi = report.disagreements[0]
        assert 1 < lo <= hi < 3

    def test_gap_signs(self):
        wide = chain((0, 2), (2, 0))
        narrow = chain((0, 1), (1, 0))
        assert compare_boundaries(wide, narrow).rows[1].gap > 0
        assert compare_boundaries(narrow, wide).rows[1].gap < 0

    def test_samples_include_midpoints(self):
        left = chain((0, 2), (2, 0))
        right = chain((0, 2), (1, 1), (2, 0))  # equal after normalization
        report = compare_boundaries(left, right)
        assert report.max_abs_gap == 0
        xs = [row.x for row in report.rows]
        assert F(1, 2) in xs and F(3, 2) in xs


class TestRenderReport:
    def test_deterministic(self, hyb211):
        report = compare_boundaries(hybrid_boundary(HybridSpec(2, 1, 1), 1),
                                    trace_boundary_2d(hyb211),
                                    instance="hybrid a=2 b=1 c=1 mu=1")
        text = render_report(report)
        assert text == render_report(report)
        assert text.startswith("instance: hybrid a=2 b=1 c=1 mu=1\n")
        assert "max_abs_gap: 1/2" in text
        assert "3/2,7/4,3/2,1/4" in text

    def test_exact_rationals_only(self, mds42):
        report = compare_boundaries(mds_halfrate_chain(4, 1), trace_boundary_2d(mds42))
        text = render_report(report)
        assert "." not in text.replace("max_abs_gap:", "")


class TestBruteForce:
    def test_replication_corner(self, rep42):
        assert brute_force_membership(rep42, (2, 2), 1)

    def test_mds_half_shares(self, mds42):
        assert brute_force_membership(mds42, (1, 2), 2)

    def test_outside_stays_false(self, mds42):
        for den in (1, 2, 4, 8):
            assert not brute_force_membership(mds42, (2, 2), den)
        assert not membership(mds42, (2, 2))[0]

    def test_off_grid_rate_is_false(self, rep42):
        assert not brute_force_membership(rep42, (F(1, 3), 0), 2)

    def test_guards(self, simplex3, mds42):
        with pytest.raises(InstanceTooLarge):
            brute_force_membership(simplex3, (1, 1, 1), 2)  # 24 sets total
        with pytest.raises(InstanceTooLarge):
            brute_force_membership(mds42, (1, 1), 9)

    def test_one_sided_soundness_sampled(self, rep42, mds42, hyb211):
        rng = random.Random(17)
        configs = [rep42, mds42, hyb211]
        found = 0
        for trial in range(90):
            config = configs[trial % 3]
            den = rng.choice([1, 2, 4])
            rates = tuple(F(rng.randint(0, 2 * den), den) for _ in range(2))
            if brute_force_membership(config, rates, den):
                found += 1
                assert membership(config, rates)[0]
        assert found > 10


class TestSweep:
    def test_zero_violations(self, mds63):
        report = sweep_outer_bound([mds63], 40, seed=9)
        assert report.max_abs_gap == 0
        assert not any("VIOLATION" in line for line in report.entries)

    def test_reports_loose_bound_for_high_rate_code(self, mds53):
        report = sweep_outer_bound([mds53], 60, seed=9)
        summary = [line for line in report.entries if line.startswith("mds(5,3)")][0]
        bound_only = int(summary.split("bound_without_membership=")[1].split()[0])
        assert bound_only > 0

    def test_byte_identical_reports(self, mds42):
        one = render_report(sweep_outer_bound([mds42], 25, seed=4))
        two = render_report(sweep_outer_bound([mds42], 25, seed=4))
        assert one == two

    def test_requires_mds(self, rep42):
        with pytest.raises(ValueError):
            sweep_outer_bound([rep42], 5, seed=0)
