"""Exact linear algebra over prime fields GF(p).

Everything here works on plain Python ints reduced mod p, with vectors as
tuples.  Matrices stay tiny (k <= 12 rows), so dense Gaussian elimination
is all that is ever needed.
"""

from itertools import combinations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    p = max(n, 2)
    while not is_prime(p):
        p += 1
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0 in GF(%d)" % p)
    return pow(a, p - 2, p)


def rank(vectors, p: int) -> int:
    """Rank of a collection of equal-length vectors over GF(p)."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] % p != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = inv_mod(rows[r][col], p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p != 0:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def in_span(vectors, target, p: int) -> bool:
    """True iff target lies in the GF(p)-span of the given vectors."""
    vs = list(vectors)
    base = rank(vs, p)
    return rank(vs + [list(target)], p) == base


def all_subsets_full_rank(vectors, size: int, p: int) -> bool:
    """True iff every size-subset of the vectors has rank == size."""
    vs = list(vectors)
    return all(rank(sub, p) == size for sub in combinations(vs, size))
