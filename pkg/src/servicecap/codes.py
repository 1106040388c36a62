"""Generator-matrix constructions for the storage code families under study.

A code is a k x n generator matrix over a small prime field: column j is
what node j stores, as a linear combination of the k files.  Constructors
are provided for replication, systematic MDS layouts, binary simplex
codes, and two-file hybrid layouts mixing replicas with pairwise
independent coded nodes.
"""

from dataclasses import dataclass

from . import gf


class CodeConstructionError(ValueError):
    """A requested code cannot store or recover every file."""


@dataclass(frozen=True)
class CodeSpec:
    """A k x n generator matrix over GF(q) plus display labels per node.

    Invariants: q prime, 1 <= k <= n, entries reduced mod q, and every
    unit vector lies in the span of the columns (every file is
    recoverable from the system as a whole).
    """

    q: int
    k: int
    n: int
    generator: tuple  # k rows, each a tuple of n entries in [0, q)
    labels: tuple

    def __post_init__(self):
        if not gf.is_prime(self.q):
            raise CodeConstructionError("field order %r is not prime" % (self.q,))
        if not 1 <= self.k <= self.n:
            raise CodeConstructionError("need 1 <= k <= n, got k=%r n=%r" % (self.k, self.n))
        if len(self.generator) != self.k or any(len(row) != self.n for row in self.generator):
            raise CodeConstructionError("generator shape does not match k x n")
        if any(not (0 <= x < self.q) for row in self.generator for x in row):
            raise CodeConstructionError("generator entries must lie in [0, q)")
        if len(self.labels) != self.n:
            raise CodeConstructionError("need one label per node")
        cols = self.columns()
        for i in range(self.k):
            if not gf.in_span(cols, unit_vector(self.k, i), self.q):
                raise CodeConstructionError("file %d is not recoverable from any node set" % (i + 1))

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.generator)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.n)]


@dataclass(frozen=True)
class HybridSpec:
    """Node counts of a two-file hybrid system: replicas of each file plus coded nodes."""

    a_nodes: int
    b_nodes: int
    coded_nodes: int

    def __post_init__(self):
        if min(self.a_nodes, self.b_nodes, self.coded_nodes) < 0:
            raise CodeConstructionError("node counts must be non-negative")

    @property
    def n(self) -> int:
        return self.a_nodes + self.b_nodes + self.coded_nodes


def unit_vector(k: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(k))


def _auto_labels(columns, k: int) -> tuple:
    labels = []
    parity = 0
    units = {unit_vector(k, i): "f%d" % (i + 1) for i in range(k)}
    for col in columns:
        if col in units:
            labels.append(units[col])
        else:
            parity += 1
            labels.append("p%d" % parity)
    return tuple(labels)


def _from_columns(q: int, k: int, columns) -> CodeSpec:
    generator = tuple(tuple(col[r] for col in columns) for r in range(k))
    return CodeSpec(q=q, k=k, n=len(columns), generator=generator,
                    labels=_auto_labels(columns, k))


def make_replication(n: int, copies) -> CodeSpec:
    """Replicated storage: copies[i] nodes hold file i+1 verbatim."""
    copies = list(copies)
    if any(c < 1 for c in copies):
        raise CodeConstructionError("every file needs at least one copy")
    if sum(copies) != n:
        raise CodeConstructionError("copy counts must sum to the node count")
    k = len(copies)
    columns = []
    for i, c in enumerate(copies):
        columns.extend([unit_vector(k, i)] * c)
    return _from_columns(2, k, columns)


def make_mds_systematic(n: int, k: int) -> CodeSpec:
    """Systematic (n, k) MDS layout: [I | P] with P a Cauchy block over GF(q).

    q is the smallest prime >= n + 1, which makes the Cauchy points
    0..n-1 distinct in the field; every square minor of a Cauchy matrix
    is nonsingular, so [I | P] is MDS.  The construction is still
    verified by an exhaustive rank check over all k-subsets of columns
    (skipped only when the subset count is unreasonably large).
    """
    if not 1 <= k <= n:
        raise CodeConstructionError("need 1 <= k <= n")
    q = gf.next_prime(n + 1)
    columns = [unit_vector(k, i) for i in range(k)]
    for j in range(n - k):
        columns.append(tuple(gf.inv_mod(i - (k + j), q) for i in range(k)))
    code = _from_columns(q, k, columns)
    import math
    if math.comb(n, k) <= 100_000:
        if not gf.all_subsets_full_rank(code.columns(), k, q):
            raise CodeConstructionError("MDS rank check failed for (%d, %d)" % (n, k))
    return code


def make_simplex(k: int) -> CodeSpec:
    """Binary simplex code: the 2^k - 1 columns are all nonzero k-bit vectors.

    Column j (1-based) is the binary expansion of j, low bit = file 1, so
    node 1 is file 1's systematic node.  Besides its systematic node,
    each file can be decoded from 2^(k-1) - 1 pairwise disjoint node
    pairs whose stored sums differ exactly in that file.
    """
    if k < 2:
        raise CodeConstructionError("simplex layout needs at least two files")
    columns = [tuple((j >> r) & 1 for r in range(k)) for j in range(1, 2 ** k)]
    return _from_columns(2, k, columns)


def make_hybrid(spec: HybridSpec) -> CodeSpec:
    """Two-file hybrid: A replicas of file a, B of file b, C coded nodes.

    Coded columns are (1, i) for i = 1..C over a prime field larger than
    C + 1: any two coded nodes are independent, and any coded node
    together with either systematic node is independent.
    """
    a, b, c = spec.a_nodes, spec.b_nodes, spec.coded_nodes
    a_ok = a >= 1 or c >= 2 or (b >= 1 and c >= 1)
    b_ok = b >= 1 or c >= 2 or (a >= 1 and c >= 1)
    if not (a_ok and b_ok):
        raise CodeConstructionError(
            "hybrid (%d, %d, %d) leaves a file unrecoverable" % (a, b, c))
    q = gf.next_prime(c + 2)
    columns = [(1, 0)] * a + [(0, 1)] * b + [(1, i % q) for i in range(1, c + 1)]
    return _from_columns(q, 2, columns)
