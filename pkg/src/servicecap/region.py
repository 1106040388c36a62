"""The capacity-region oracle.

Every query reduces to the same exact-rational linear system: split each
file's request rate across its recovering sets so that no node carries
more than mu.  Membership asks for feasibility, max_rate and
max_weighted_sum optimize over the splits, and the two-file boundary is
traced by support-function refinement.  A Fourier-Motzkin projection of
the same system is kept as an algorithmically independent oracle for the
traced boundary.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import fm
from .boundary import PiecewiseBoundary, chain_from_region_vertices
from .codes import CodeSpec
from .exactlp import EQUAL, LESS_EQUAL, INFEASIBLE, OPTIMAL, LpProblem, lp_feasible, lp_solve
from .recovery import RecoverySetIndex, enumerate_recovery_sets

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RegionError(ValueError):
    """A region query outside its domain (infeasible fixed rates, wrong k, size guard)."""


@dataclass(frozen=True)
class SystemConfig:
    """A code, its recovering sets, and the per-node service capacity mu."""

    code: CodeSpec
    recovery: RecoverySetIndex
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.mu <= 0:
            raise ValueError("mu must be positive")

    @classmethod
    def build(cls, code: CodeSpec, mu) -> "SystemConfig":
        return cls(code=code, recovery=enumerate_recovery_sets(code), mu=Fraction(mu))

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def n(self) -> int:
        return self.code.n


@dataclass(frozen=True)
class Allocation:
    """Per file, per recovering set: the share of that file's rate, aligned
    with the order of SystemConfig.recovery."""

    shares: tuple

    def rate(self, file_index: int) -> Fraction:
        return sum(self.shares[file_index], _ZERO)


def as_rates(config: SystemConfig, rates) -> tuple:
    out = tuple(Fraction(r) for r in rates)
    if len(out) != config.k:
        raise ValueError("expected %d rates, got %d" % (config.k, len(out)))
    if any(r < 0 for r in out):
        raise ValueError("rates must be non-negative")
    return out


def _var_layout(config):
    """Flatten share variables file-by-file; return offsets and total count."""
    offsets = []
    total = 0
    for sets in config.recovery.sets_by_file:
        offsets.append(total)
        total += len(sets)
    return offsets, total


def _node_rows(config, offsets, total):
    """One capacity row per node: summed shares routed through it <= mu."""
    rows = []
    for node in range(config.n):
        coeffs = [_ZERO] * total
        for i, sets in enumerate(config.recovery.sets_by_file):
            for j, rset in enumerate(sets):
                if node in rset:
                    coeffs[offsets[i] + j] = _ONE
        rows.append((tuple(coeffs), LESS_EQUAL, config.mu))
    return rows


def _sum_row(config, offsets, total, file_index, rate):
    coeffs = [_ZERO] * total
    for j in range(config.recovery.t(file_index)):
        coeffs[offsets[file_index] + j] = _ONE
    return (tuple(coeffs), EQUAL, Fraction(rate))


def _to_allocation(config, offsets, solution) -> Allocation:
    shares = []
    for i, sets in enumerate(config.recovery.sets_by_file):
        off = offsets[i]
        shares.append(tuple(solution[off + j] for j in range(len(sets))))
    return Allocation(shares=tuple(shares))


def membership(config: SystemConfig, rates):
    """Whether the demand is servable; on success also a witness allocation."""
    rates = as_rates(config, rates)
    offsets, total = _var_layout(config)
    constraints = [_sum_row(config, offsets, total, i, r) for i, r in enumerate(rates)]
    constraints += _node_rows(config, offsets, total)
    ok, witness = lp_feasible(constraints, total)
    if not ok:
        return False, None
    return True, _to_allocation(config, offsets, witness)


def max_rate(config: SystemConfig, fixed, free_file: int) -> Fraction:
    """Exact maximum rate of one file with all other rates pinned.

    fixed maps file index -> rate for every file except free_file.
    Raises RegionError when the pinned rates are already outside the region.
    """
    if not 0 <= free_file < config.k:
        raise IndexError("file index out of range")
    fixed = {int(i): Fraction(r) for i, r in dict(fixed).items()}
    if set(fixed) != set(range(config.k)) - {free_file}:
        raise ValueError("fixed rates must cover every file except the free one")
    if any(r < 0 for r in fixed.values()):
        raise ValueError("rates must be non-negative")
    offsets, total = _var_layout(config)
    constraints = [_sum_row(config, offsets, total, i, r) for i, r in sorted(fixed.items())]
    constraints += _node_rows(config, offsets, total)
    objective = [_ZERO] * total
    for j in range(config.recovery.t(free_file)):
        objective[offsets[free_file] + j] = _ONE
    result = lp_solve(LpProblem(num_vars=total, objective=tuple(objective),
                                constraints=tuple(constraints)))
    if result.status == INFEASIBLE:
        raise RegionError("outside region: the fixed rates are not servable")
    if result.status != OPTIMAL:
        raise AssertionError("node capacities bound every rate; got %s" % result.status)
    return result.value


def _support(config, weights):
    """Support value max(w . rates) over the region, plus an attaining rate point."""
    offsets, total = _var_layout(config)
    objective = [_ZERO] * total
    for i, w in enumerate(weights):
        for j in range(config.recovery.t(i)):
            objective[offsets[i] + j] = Fraction(w)
    constraints = _node_rows(config, offsets, total)
    result = lp_solve(LpProblem(num_vars=total, objective=tuple(objective),
                                constraints=tuple(constraints)))
    if result.status != OPTIMAL:
        raise AssertionError("support problems are always bounded and feasible")
    point = tuple(sum(result.solution[offsets[i] + j]
                      for j in range(config.recovery.t(i)))
                  for i in range(config.k))
    return result.value, point


def max_weighted_sum(config: SystemConfig, weights) -> Fraction:
    """Support function of the region in a non-negative direction."""
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != config.k:
        raise ValueError("expected %d weights" % config.k)
    if any(w < 0 for w in weights) or not any(weights):
        raise ValueError("weights must be non-negative and not all zero")
    value, _ = _support(config, weights)
    return value


def trace_boundary_2d(config: SystemConfig) -> PiecewiseBoundary:
    """Exact boundary chain of a two-file region by support refinement.

    Starting from the two axis intercepts, each chord is pushed outward
    along its normal; when the support value exceeds the chord the
    attained point is inserted and both halves are refined.  Exact
    arithmetic makes "exceeds" a literal comparison, and a projected
    polytope has finitely many vertices, so this terminates.
    """
    if config.k != 2:
        raise RegionError("boundary tracing needs exactly two files")
    rate_b = max_rate(config, {0: _ZERO}, 1)
    rate_a = max_rate(config, {1: _ZERO}, 0)
    start, end = (_ZERO, rate_b), (rate_a, _ZERO)
    if start == end:
        return PiecewiseBoundary(((_ZERO, _ZERO),))

    def refine(p, q, out):
        w = (p[1] - q[1], q[0] - p[0])
        value, point = _support(config, w)
        if value > w[0] * p[0] + w[1] * p[1]:
            refine(p, point, out)
            out.append(point)
            refine(point, q, out)

    inserted = []
    refine(start, end, inserted)
    return PiecewiseBoundary(tuple([start] + inserted + [end])).normalize()


def project_fm(config: SystemConfig, max_shares: int = 40) -> PiecewiseBoundary:
    """Two-file boundary via Fourier-Motzkin elimination of every share variable.

    Independent of the LP path; must agree with trace_boundary_2d
    exactly.  Guarded because elimination cost grows quickly with the
    number of shares.
    """
    if config.k != 2:
        raise RegionError("projection oracle needs exactly two files")
    total_sets = config.recovery.total_sets
    if total_sets > max_shares:
        raise RegionError(
            "instance too large for the projection oracle (%d shares > %d)"
            % (total_sets, max_shares))
    offsets, total = _var_layout(config)
    nvars = 2 + total  # rate_a, rate_b, then shares

    def share_col(i, j):
        return 2 + offsets[i] + j

    rows = []
    for i in range(2):
        coeffs = [_ZERO] * nvars
        coeffs[i] = -_ONE
        for j in range(config.recovery.t(i)):
            coeffs[share_col(i, j)] = _ONE
        rows.append((tuple(coeffs), _ZERO))
        rows.append((tuple(-c for c in coeffs), _ZERO))
    for node in range(config.n):
        coeffs = [_ZERO] * nvars
        for i, sets in enumerate(config.recovery.sets_by_file):
            for j, rset in enumerate(sets):
                if node in rset:
                    coeffs[share_col(i, j)] = _ONE
        rows.append((tuple(coeffs), config.mu))
    for col in range(2, nvars):
        coeffs = [_ZERO] * nvars
        coeffs[col] = -_ONE
        rows.append((tuple(coeffs), _ZERO))

    projected = fm.eliminate_all(rows, keep=2)
    verts = fm.plane_region_vertices(projected)
    return chain_from_region_vertices(verts).normalize()
