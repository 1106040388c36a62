"""Enumeration of minimal recovering sets.

A recovering set of file i is a node subset whose stored columns span the
i-th unit vector, minimal under inclusion.  A minimal set never needs
more than k columns (any spanning set contains an independent spanning
subset of size <= k), so the scan runs over subset sizes 1..k and prunes
supersets of sets already found.
"""

from dataclasses import dataclass
from itertools import combinations

from . import gf
from .codes import CodeSpec, unit_vector

MAX_NODES = 24


class InstanceTooLarge(ValueError):
    """Enumeration or search space beyond the configured guard."""


@dataclass(frozen=True)
class RecoverySetIndex:
    """Per file: an ordered tuple of minimal recovering sets (node-index tuples).

    Ordering is by size, then lexicographic, which puts a systematic
    singleton first when one exists.  Node indices are 0-based.
    """

    sets_by_file: tuple

    def t(self, file_index: int) -> int:
        return len(self.sets_by_file[file_index])

    @property
    def total_sets(self) -> int:
        return sum(len(s) for s in self.sets_by_file)


def can_recover(code: CodeSpec, file_index: int, nodes) -> bool:
    """True iff the unit vector of the file lies in the span of the node columns."""
    if not 0 <= file_index < code.k:
        raise IndexError("file index out of range")
    nodes = sorted(set(nodes))
    if nodes and not 0 <= nodes[0] <= nodes[-1] < code.n:
        raise IndexError("node index out of range")
    cols = [code.column(j) for j in nodes]
    return gf.in_span(cols, unit_vector(code.k, file_index), code.q)


def enumerate_recovery_sets(code: CodeSpec, max_nodes: int = MAX_NODES) -> RecoverySetIndex:
    """All minimal recovering sets of every file, in deterministic order."""
    if code.n > max_nodes:
        raise InstanceTooLarge(
            "enumeration over %d nodes exceeds the cap of %d" % (code.n, max_nodes))
    per_file = []
    for i in range(code.k):
        found = []
        found_sets = []
        for size in range(1, code.k + 1):
            for combo in combinations(range(code.n), size):
                cs = set(combo)
                if any(f <= cs for f in found_sets):
                    continue
                if can_recover(code, i, combo):
                    found.append(combo)
                    found_sets.append(cs)
        if not found:
            raise ValueError("file %d has no recovering set" % (i + 1))
        per_file.append(tuple(found))
    return RecoverySetIndex(sets_by_file=tuple(per_file))
