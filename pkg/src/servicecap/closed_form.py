"""Closed-form capacity descriptions: MDS bounds, simplex regions, hybrid calculus.

Everything here is formula evaluation, deliberately independent of the
LP oracle.  The verify module owns the comparison between the two; where
a printed formula is suspected wrong, this module still evaluates it
as printed rather than silently repairing it.
"""

from fractions import Fraction

from .boundary import PiecewiseBoundary
from .codes import HybridSpec
from .region import Allocation, SystemConfig, as_rates

_ZERO = Fraction(0)


def _pos(x: Fraction) -> Fraction:
    return x if x > 0 else _ZERO


def mds_outer_bound(rates, n: int, k: int, mu) -> bool:
    """Necessary condition on servable demands of an (n, k) systematic MDS system.

    A request served in coded form occupies k nodes at once, so its
    capacity footprint is k times larger; the total footprint cannot
    exceed n * mu.
    """
    mu = Fraction(mu)
    rates = tuple(Fraction(r) for r in rates)
    used = sum(min(r, mu) + k * _pos(r - mu) for r in rates)
    return used <= n * mu


def mds_halfrate_membership(rates, n: int, k: int, mu) -> bool:
    """Exact membership for rate <= 1/2 MDS systems, where the footprint
    bound is attained by waterfilling."""
    if n - k < k:
        raise ValueError("footprint bound is not known tight for n - k < k; "
                         "use the LP oracle")
    return mds_outer_bound(rates, n, k, mu)


def mds_halfrate_chain(n: int, mu) -> PiecewiseBoundary:
    """Two-file boundary of the tight MDS region (k = 2, n >= 4)."""
    if n < 4:
        raise ValueError("two-file chain needs n >= 4 (rate <= 1/2)")
    mu = Fraction(mu)

    def inv_footprint(c):  # inverse of t -> min(t, mu) + 2 (t - mu)^+
        return c if c <= mu else mu + (c - mu) / 2

    nmu = n * mu
    verts = (
        (_ZERO, inv_footprint(nmu)),
        (mu, inv_footprint(nmu - mu)),
        (inv_footprint(nmu - mu), mu),
        (inv_footprint(nmu), _ZERO),
    )
    return PiecewiseBoundary(verts).normalize()


def simplex_membership(rates, k: int, mu) -> bool:
    """A simplex-coded system serves a demand iff the rate sum is at most
    2^(k-1) * mu."""
    if k < 2:
        raise ValueError("simplex layout needs at least two files")
    mu = Fraction(mu)
    return sum(Fraction(r) for r in rates) <= 2 ** (k - 1) * mu


def simplex_allocation(config: SystemConfig, rates) -> Allocation:
    """Uniform split: each file sends rate / 2^(k-1) to each of its sets of
    size at most two (the systematic singleton and the disjoint pairs).

    Minimal recovering sets of three or more nodes exist for k >= 3 but
    get no traffic here: every node lies in exactly one singleton-or-pair
    set per file, so the node loads are sum_i rate_i / 2^(k-1) <= mu
    whenever the demand is servable at all.
    """
    rates = as_rates(config, rates)
    k = config.k
    groups = 2 ** (k - 1)
    if not simplex_membership(rates, k, config.mu):
        raise ValueError("demand outside the simplex region")
    shares = []
    for i, sets in enumerate(config.recovery.sets_by_file):
        small = [j for j, rset in enumerate(sets) if len(rset) <= 2]
        if len(small) != groups:
            raise ValueError("recovering sets do not look like a simplex layout")
        row = [_ZERO] * len(sets)
        for j in small:
            row[j] = rates[i] / groups
        shares.append(tuple(row))
    return Allocation(shares=tuple(shares))


def simplex_graph_stats(k: int):
    """Vertex count, edge count (loops included), and the odd-weight cover
    of the simplex recovery graph.

    Vertices are the nonzero k-bit masks; a loop marks a systematic
    node, an edge joins masks at Hamming distance one (the pair decodes
    the file their stored sums differ in).  The odd-weight masks touch
    every edge and loop, pairwise share none, and number 2^(k-1).
    """
    if k < 2:
        raise ValueError("simplex layout needs at least two files")
    vertices = list(range(1, 2 ** k))
    loops = [v for v in vertices if v & (v - 1) == 0]
    edges = [(u, u ^ (1 << b)) for u in vertices for b in range(k)
             if (u ^ (1 << b)) > u and (u ^ (1 << b)) != 0]
    num_edges = len(edges) + len(loops)
    cover = frozenset(v for v in vertices if bin(v).count("1") % 2 == 1)
    for u, v in edges:
        if u not in cover and v not in cover:
            raise AssertionError("edge (%d, %d) missed by the odd-weight cover" % (u, v))
    if any(v not in cover for v in loops):
        raise AssertionError("a loop vertex is missing from the odd-weight cover")
    if any(bin(u ^ v).count("1") == 1 for u in cover for v in cover if u < v):
        raise AssertionError("cover vertices share an edge")
    if len(cover) != 2 ** (k - 1):
        raise AssertionError("odd-weight cover has the wrong size")
    return len(vertices), num_edges, cover


def all_coded_boundary(c: int, mu) -> PiecewiseBoundary:
    """Region of a two-file system with only coded nodes.

    Decoding needs two nodes per request, so c >= 2 coded nodes support
    the triangle under rate_a + rate_b = c*mu/2; with c <= 1 nothing can
    be decoded and the region is the single point (0, 0).
    """
    mu = Fraction(mu)
    if c >= 2:
        half = Fraction(c, 2) * mu
        return PiecewiseBoundary(((_ZERO, half), (half, _ZERO)))
    return PiecewiseBoundary(((_ZERO, _ZERO),))


def add_systematic_node(chain: PiecewiseBoundary, state: HybridSpec, which: str,
                        mu) -> tuple:
    """One step of the node-addition calculus for two-file hybrid regions.

    `chain` must be the calculus region for `state` (see
    hybrid_boundary_by_addition).  Adding a replica of file a right-shifts
    the chain by mu, prefixed by a slope -1/2 segment while replicas of a
    are scarcer than coded nodes (the new node also helps serve b through
    coded pairings) and by a flat segment otherwise.  Adding a replica of
    file b lifts the chain by mu, appending a slope -2 tail while
    replicas of b are scarce and turning the right edge into a vertical
    drop otherwise.  Returns (new chain, new state).
    """
    mu = Fraction(mu)
    verts = chain.vertices
    a, b, c = state.a_nodes, state.b_nodes, state.coded_nodes
    rate_a_max = verts[-1][0]
    rate_b_max = verts[0][1]
    has_drop = len(verts) >= 2 and verts[-1][0] == verts[-2][0]
    fpart = verts[:-1] if has_drop else verts
    if which == "a":
        shifted = tuple((x + mu, y) for x, y in verts)
        if a < c:
            first = (_ZERO, Fraction(a + c + 1, 2) * mu + b * mu)
        else:
            first = (_ZERO, rate_b_max)
        new = (first,) + shifted
        new_state = HybridSpec(a + 1, b, c)
    elif which == "b":
        lifted = tuple((x, y + mu) for x, y in fpart)
        if b < c:
            if fpart[-1][1] != 0:
                raise ValueError("chain does not meet the rate-a axis; "
                                 "not a region this calculus produces")
            new = lifted + ((rate_a_max + mu / 2, _ZERO),)
        else:
            new = lifted + ((rate_a_max, _ZERO),)
        new_state = HybridSpec(a, b + 1, c)
    else:
        raise ValueError("which must be 'a' or 'b'")
    return PiecewiseBoundary(new).normalize(), new_state


def hybrid_boundary(spec: HybridSpec, mu) -> PiecewiseBoundary:
    """Direct evaluation of the printed piecewise boundary of a hybrid system.

    Evaluated exactly as printed, even on instances where it is known to
    exceed the LP ground truth; quantifying that gap is the verify
    module's job.
    """
    mu = Fraction(mu)
    a, b, c = spec.a_nodes, spec.b_nodes, spec.coded_nodes
    rate_a_max = min(Fraction(a + c), Fraction(2 * a + b + c, 2)) * mu

    def level(x: Fraction) -> Fraction:
        if a > c and x <= (a - c) * mu:
            return (b + c) * mu
        if x <= a * mu:
            return -x / 2 + Fraction(a + 2 * b + c, 2) * mu
        if x <= (a + Fraction(c, 2)) * mu:
            return -x + (a + b + Fraction(c, 2)) * mu
        return -2 * x + (2 * a + b + c) * mu

    xs = {_ZERO, rate_a_max}
    for cand in ((a - c) * mu, a * mu, (a + Fraction(c, 2)) * mu):
        if _ZERO < cand < rate_a_max:
            xs.add(Fraction(cand))
    verts = [(x, level(x)) for x in sorted(xs)]
    if verts[-1][1] != 0:
        verts.append((rate_a_max, _ZERO))
    return PiecewiseBoundary(tuple(verts)).normalize()


def hybrid_boundary_by_addition(spec: HybridSpec, mu) -> PiecewiseBoundary:
    """The same boundary built by folding nodes in one at a time.

    Seeds with the sloped chain (0, c*mu/2)-(c*mu/2, 0) for any c >= 1,
    then adds all a replicas, then all b replicas.  Note the c == 1 seed:
    the true one-coded-node region is the single point (0, 0) (see
    all_coded_boundary), but the addition calculus is anchored on the
    sloped chain, which is exactly what makes the composed result match
    hybrid_boundary.  Ground truth for concrete systems comes from the
    LP oracle, not from this calculus.
    """
    mu = Fraction(mu)
    c = spec.coded_nodes
    if c >= 1:
        half = Fraction(c, 2) * mu
        chain = PiecewiseBoundary(((_ZERO, half), (half, _ZERO)))
    else:
        chain = PiecewiseBoundary(((_ZERO, _ZERO),))
    state = HybridSpec(0, 0, c)
    for _ in range(spec.a_nodes):
        chain, state = add_systematic_node(chain, state, "a", mu)
    for _ in range(spec.b_nodes):
        chain, state = add_systematic_node(chain, state, "b", mu)
    return chain
