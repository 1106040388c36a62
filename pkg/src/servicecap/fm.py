"""Fourier-Motzkin projection of rational inequality systems.

Rows are kept as primitive integer vectors (constraint a . x <= b scaled
so all entries are integers with gcd 1), which keeps combination
arithmetic in plain ints.  Redundancy control: exact duplicate rows are
merged keeping the tighter bound, and derived rows are dropped by the
classic ancestor-count rule (a row combined from more than t + 1
original rows after t eliminations is always redundant).

This module deliberately does not use the LP solver: it is the second,
algorithmically independent route to the projected region.
"""

from fractions import Fraction
from math import gcd

from .recovery import InstanceTooLarge

_ROW_CAP = 200_000


def make_row(coeffs, rhs):
    """Canonical primitive integer form of the constraint coeffs . x <= rhs."""
    fr = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    scale = 1
    for f in fr:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _dedupe(rows):
    """Merge rows with identical coefficients, keeping the tightest rhs."""
    best = {}
    for coeffs, rhs, anc in rows:
        if not any(coeffs):
            if rhs < 0:
                raise ValueError("inconsistent system: 0 <= %d" % rhs)
            continue
        cur = best.get(coeffs)
        if cur is None or (rhs, len(anc), tuple(sorted(anc))) < (cur[0], len(cur[1]), tuple(sorted(cur[1]))):
            best[coeffs] = (rhs, anc)
    return [(c, r, a) for c, (r, a) in sorted(best.items())]


def _combine(pos, neg, var):
    cp, rp, ap = pos
    cn, rn, an = neg
    fp, fn = cp[var], -cn[var]
    coeffs = tuple(fn * a + fp * b for a, b in zip(cp, cn))
    rhs = fn * rp + fp * rn
    g = 0
    for v in coeffs:
        g = gcd(g, abs(v))
    g = gcd(g, abs(rhs))
    if g > 1:
        coeffs = tuple(v // g for v in coeffs)
        rhs //= g
    return coeffs, rhs, ap | an


def eliminate_all(inequalities, keep: int):
    """Project onto the first `keep` variables.

    inequalities: iterable of (coeffs, rhs) with coeffs . x <= rhs.
    Returns the projected rows as (coeffs[:keep], rhs) integer tuples.
    """
    rows = []
    for idx, (coeffs, rhs) in enumerate(inequalities):
        c, r = make_row(coeffs, rhs)
        rows.append((c, r, frozenset([idx])))
    nvars = len(rows[0][0]) if rows else keep
    remaining = [v for v in range(keep, nvars)]
    rows = _dedupe(rows)
    eliminated = 0
    while remaining:
        counts = []
        for v in remaining:
            p = sum(1 for c, _, _ in rows if c[v] > 0)
            n = sum(1 for c, _, _ in rows if c[v] < 0)
            counts.append((p * n - p - n, v, p, n))
        _, var, _, _ = min(counts)
        eliminated += 1
        bound = eliminated + 1
        zero, pos, neg = [], [], []
        for row in rows:
            cv = row[0][var]
            if cv == 0:
                zero.append(row)
            elif cv > 0:
                pos.append(row)
            else:
                neg.append(row)
        new_rows = zero
        for p in pos:
            for n in neg:
                row = _combine(p, n, var)
                if len(row[2]) > bound:
                    continue
                new_rows.append(row)
        if len(new_rows) > _ROW_CAP:
            raise InstanceTooLarge("projection exceeded %d rows" % _ROW_CAP)
        rows = _dedupe(new_rows)
        remaining.remove(var)
    out = []
    for coeffs, rhs, _ in rows:
        if any(coeffs[keep:]):
            raise AssertionError("unexpected leftover variable after projection")
        out.append((coeffs[:keep], rhs))
    return out


def plane_region_vertices(rows):
    """All vertices of the bounded 2-D region {a x + b y <= c} in the quadrant."""
    lines = [(a, b, c) for (a, b), c in rows]
    lines.append((-1, 0, 0))
    lines.append((0, -1, 0))
    verts = set()
    m = len(lines)
    for i in range(m):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, m):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(c1 * b2 - c2 * b1, det)
            y = Fraction(a1 * c2 - a2 * c1, det)
            if x < 0 or y < 0:
                continue
            if all(a * x + b * y <= c for a, b, c in lines):
                verts.add((x, y))
    return verts
