"""Exact-rational linear programming.

Two-phase primal simplex over `fractions.Fraction` with Bland's
anti-cycling rule: the entering variable is the lowest-index column with
a positive reduced cost, the leaving variable is the lowest-index basic
variable among the minimum-ratio rows.  Bland's rule guarantees finite
termination, so the pivot cap exists only to turn a solver bug into a
loud error instead of a hang.

Problems are stated as: maximize c . x subject to rows a . x <= b or
a . x == b, with x >= 0 implicit for every variable.
"""

from dataclasses import dataclass
from fractions import Fraction

LESS_EQUAL = "<="
EQUAL = "=="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class IterationLimit(RuntimeError):
    """Pivot cap exceeded; signals a bug, not a hard problem."""


@dataclass(frozen=True)
class LpProblem:
    """maximize objective . x subject to the constraint rows and x >= 0."""

    num_vars: int
    objective: tuple
    constraints: tuple  # of (coefficients, relation, rhs)

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length does not match variable count")
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != self.num_vars:
                raise ValueError("constraint row length does not match variable count")
            if rel not in (LESS_EQUAL, EQUAL):
                raise ValueError("unknown relation %r" % (rel,))


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Fraction = None
    solution: tuple = None


def _pivot(rows, obj, basis, r: int, c: int):
    """Make column c basic in row r.  obj is [reduced costs..., value]."""
    inv = _ONE / rows[r][c]
    rows[r] = [x * inv if x else x for x in rows[r]]
    prow = rows[r]
    last = len(prow) - 1
    nonzero = [j for j, b in enumerate(prow) if b]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            for j in nonzero:
                row[j] -= f * prow[j]
    f = obj[c]
    if f:
        for j in nonzero:
            if j != last:
                obj[j] -= f * prow[j]
        obj[last] += f * prow[last]
    basis[r] = c


def _run_simplex(rows, obj, basis, budget: int):
    """Pivot until no reduced cost is positive.  Returns (status, budget left)."""
    ncols = len(obj) - 1
    while True:
        enter = next((j for j in range(ncols) if obj[j] > 0), None)
        if enter is None:
            return OPTIMAL, budget
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED, budget
        if budget <= 0:
            raise IterationLimit("pivot budget exhausted; anti-cycling rule violated?")
        budget -= 1
        _pivot(rows, obj, basis, best[1], enter)


def _build_tableau(constraints, num_vars: int):
    """Slack/artificial tableau with the phase-1 objective row and starting basis."""
    prepared = []
    n_slack = 0
    for coeffs, rel, rhs in constraints:
        row = [Fraction(x) for x in coeffs]
        rhs = Fraction(rhs)
        slack = None
        if rel == LESS_EQUAL:
            slack = num_vars + n_slack
            n_slack += 1
        sign = 1
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            sign = -1
        prepared.append((row, rhs, slack, sign, rel))

    ncols = num_vars + n_slack
    rows = []
    basis = []
    art_rows = []
    for row, rhs, slack, sign, rel in prepared:
        full = row + [_ZERO] * n_slack
        if slack is not None:
            full[slack] = Fraction(sign)
        if rel == EQUAL or sign < 0:
            art_rows.append(len(rows))
            basis.append(None)
        else:
            basis.append(slack)
        rows.append(full + [rhs])

    n_art = len(art_rows)
    for pos, r in enumerate(art_rows):
        basis[r] = ncols + pos
    for i in range(len(rows)):
        art = [_ZERO] * n_art
        if basis[i] is not None and basis[i] >= ncols:
            art[basis[i] - ncols] = _ONE
        rows[i] = rows[i][:-1] + art + [rows[i][-1]]

    # phase 1 maximizes -(sum of artificials): substituting each artificial
    # row gives reduced costs = column sums over artificial rows (zero on
    # the artificial columns themselves) and value = -(sum of their rhs).
    obj = [_ZERO] * (ncols + n_art + 1)
    for r in art_rows:
        for j in range(ncols):
            obj[j] += rows[r][j]
    obj[-1] = -sum(rows[r][-1] for r in art_rows)
    return rows, obj, basis, ncols, n_art


def _drop_artificials(rows, basis, ncols: int, n_art: int):
    """Pivot leftover artificials out of the basis, dropping redundant rows."""
    dummy = [_ZERO] * (ncols + n_art + 1)
    keep = []
    for i in range(len(rows)):
        if basis[i] >= ncols:
            col = next((j for j in range(ncols) if rows[i][j] != 0), None)
            if col is None:
                continue  # all-zero row over real columns: redundant constraint
            _pivot(rows, dummy, basis, i, col)
        keep.append(i)
    rows[:] = [rows[i][:ncols] + [rows[i][-1]] for i in keep]
    basis[:] = [basis[i] for i in keep]


def _extract(rows, basis, num_vars: int) -> tuple:
    x = [_ZERO] * num_vars
    for i, b in enumerate(basis):
        if b < num_vars:
            x[b] = rows[i][-1]
    return tuple(x)


def lp_solve(problem: LpProblem, max_pivots: int = 200_000) -> LpResult:
    """Exact optimum of the problem, or its infeasible/unbounded status."""
    rows, obj, basis, ncols, n_art = _build_tableau(problem.constraints, problem.num_vars)
    status, budget = _run_simplex(rows, obj, basis, max_pivots)
    if status != OPTIMAL:
        raise IterationLimit("phase 1 cannot be unbounded")
    if obj[-1] != 0:
        return LpResult(status=INFEASIBLE)
    _drop_artificials(rows, basis, ncols, n_art)

    obj = [Fraction(c) for c in problem.objective] + [_ZERO] * (ncols - problem.num_vars + 1)
    for i, b in enumerate(basis):
        f = obj[b]
        if f:
            prow = rows[i]
            for j in range(ncols):
                if prow[j]:
                    obj[j] -= f * prow[j]
            obj[-1] += f * prow[-1]
    status, _ = _run_simplex(rows, obj, basis, budget)
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED)
    x = _extract(rows, basis, problem.num_vars)
    value = sum((c * v for c, v in zip(problem.objective, x)), _ZERO)
    return LpResult(status=OPTIMAL, value=value, solution=x)


def lp_feasible(constraints, num_vars: int, max_pivots: int = 200_000):
    """Phase 1 only: (True, witness) when the system has a solution, else (False, None)."""
    rows, obj, basis, _, _ = _build_tableau(tuple(constraints), num_vars)
    status, _ = _run_simplex(rows, obj, basis, max_pivots)
    if status != OPTIMAL:
        raise IterationLimit("phase 1 cannot be unbounded")
    if obj[-1] != 0:
        return False, None
    return True, _extract(rows, basis, num_vars)
