"""Symbolic cube intersections, the inclusion-exclusion defect, and the intersection graph.

Two pattern cubes meet iff each support cut by the other's pattern agrees
(the compatibility condition); the intersection is then the cube on the
union support with the union pattern.  Summing signed cube sizes over the
non-clique index sets measures how far a system is from extremal: the
defect equals |up-complement| - |family| and vanishes exactly when the
system's family is extremal with the full candidate down-set shattered.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    EmptyInput,
    GroundMismatch,
    NotAntichain,
    NotComplete,
    PatternNotInSupport,
    TooLarge,
    VerificationFailed,
)
from .families import SetFamily, is_antichain
from .sperner import Cube, SpernerSystem

# 2^N index sets are enumerated explicitly
MAX_DEFECT_MEMBERS = 20


def indicator(si: int, hi: int, sj: int, hj: int) -> int:
    """1 iff the cubes on (si, hi) and (sj, hj) intersect: si & hj == sj & hi."""
    if hi & ~si:
        raise PatternNotInSupport(f"pattern {hi} not contained in support {si}")
    if hj & ~sj:
        raise PatternNotInSupport(f"pattern {hj} not contained in support {sj}")
    return 1 if si & hj == sj & hi else 0


def intersect_cubes(a: Cube, b: Cube) -> Cube | None:
    """Intersection cube, or None when the cubes are disjoint."""
    if a.n != b.n:
        raise GroundMismatch(f"cubes over [{a.n}] and [{b.n}]")
    if indicator(a.support, a.pattern, b.support, b.pattern):
        return Cube(a.n, a.support | b.support, a.pattern | b.pattern)
    return None


def intersect_many(cubes: list[Cube]) -> Cube | None:
    """Common intersection; nonempty iff every pair is compatible."""
    if not cubes:
        raise EmptyInput("need at least one cube")
    n = cubes[0].n
    for c in cubes[1:]:
        if c.n != n:
            raise GroundMismatch(f"cubes over [{n}] and [{c.n}]")
    support = 0
    pattern = 0
    for i, a in enumerate(cubes):
        for b in cubes[i + 1:]:
            if not indicator(a.support, a.pattern, b.support, b.pattern):
                return None
        support |= a.support
        pattern |= a.pattern
    return Cube(n, support, pattern)


def _compatibility_rows(system: SpernerSystem) -> list[int]:
    members = system.members
    rows = [0] * len(members)
    for i, (si, hi) in enumerate(members):
        for j in range(i + 1, len(members)):
            sj, hj = members[j]
            if si & hj == sj & hi:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def extremality_defect_by_size(system: SpernerSystem) -> tuple[int, ...]:
    """Signed partial sums of the defect, indexed by index-set size 1..N.

    Entry k-1 sums (-1)^k * 2^(n - |union support|) over the k-element index
    sets that are not cliques of the compatibility relation.  Index sets are
    enumerated by peeling the lowest member, so union and clique status come
    incrementally from an already-computed subset.
    """
    members = system.members
    big_n = len(members)
    if big_n > MAX_DEFECT_MEMBERS:
        raise TooLarge(f"{big_n} members exceeds the {MAX_DEFECT_MEMBERS}-member cap")
    partial = [0] * big_n
    if big_n == 0:
        return ()
    adj = _compatibility_rows(system)
    supports = [s for s, _ in members]
    unions = [0] * (1 << big_n)
    clique = bytearray(1 << big_n)
    clique[0] = 1
    n = system.n
    for idx in range(1, 1 << big_n):
        low = idx & -idx
        rest = idx ^ low
        i = low.bit_length() - 1
        unions[idx] = unions[rest] | supports[i]
        ok = clique[rest] and (rest & ~adj[i]) == 0
        clique[idx] = ok
        if not ok:
            k = idx.bit_count()
            term = 1 << (n - unions[idx].bit_count())
            partial[k - 1] += term if k % 2 == 0 else -term
    return tuple(partial)


def extremality_defect(system: SpernerSystem) -> int:
    """|up-complement| - |family|; nonnegative, zero iff the family is extremal
    with shattered sets equal to the up-complement."""
    return sum(extremality_defect_by_size(system))


class GraphClass(Enum):
    HAS_ISOLATED = "isolated-vertex"
    HAS_DEGREE_ONE = "degree-one-vertex"
    COMPLETE = "complete"
    C4 = "four-cycle"
    K4_MINUS = "k4-minus-edge"
    OTHER = "other"


@dataclass(frozen=True)
class IntersectionGraph:
    """Vertices are system members; edges join members whose cubes intersect."""

    size: int
    adjacency: tuple[int, ...]   # row i: bitmask of neighbours of i, no loops

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(self.size):
            row = self.adjacency[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return tuple(out)

    def is_complete(self) -> bool:
        full = (1 << self.size) - 1
        return all(self.adjacency[i] == full ^ (1 << i) for i in range(self.size))


def intersection_graph(system: SpernerSystem) -> IntersectionGraph:
    rows = _compatibility_rows(system)
    return IntersectionGraph(len(system.members), tuple(rows))


def classify_graph(graph: IntersectionGraph) -> GraphClass:
    """Structural classification, checked in fixed priority order.

    Isolated and degree-one vertices are reported before completeness so that
    one- and two-member systems land on the case their elimination argument
    uses.  The two four-vertex shapes are only reported at size four.
    """
    n = graph.size
    degrees = [graph.degree(i) for i in range(n)]
    if any(d == 0 for d in degrees):
        return GraphClass.HAS_ISOLATED
    if any(d == 1 for d in degrees):
        return GraphClass.HAS_DEGREE_ONE
    if graph.is_complete():
        return GraphClass.COMPLETE
    if n == 4:
        # min degree >= 2 and not complete: a 4-cycle (all degrees 2) or
        # complete-minus-one-edge (degrees 2,2,3,3) are the only options
        if all(d == 2 for d in degrees):
            return GraphClass.C4
        if sorted(degrees) == [2, 2, 3, 3]:
            return GraphClass.K4_MINUS
    return GraphClass.OTHER


def recover_anchor(system: SpernerSystem) -> int:
    """Anchor set reproducing every pattern by intersection; complete graph required.

    Returns the union of all patterns and verifies support & anchor == pattern
    for each member before returning.
    """
    graph = intersection_graph(system)
    if not graph.is_complete():
        raise NotComplete("intersection graph is not complete")
    anchor = 0
    for _, h in system.members:
        anchor |= h
    for s, h in system.members:
        if s & anchor != h:
            raise VerificationFailed(
                f"recovered anchor {anchor} does not reproduce pattern {h} on support {s}")
    return anchor


@dataclass(frozen=True)
class AntichainExtremalityReport:
    family_size: int
    bound: int               # size of the antichain's up-complement
    shatters_none: bool      # family shatters no antichain member
    bound_holds: bool        # family_size <= bound (guaranteed when shatters_none)
    extremal: bool           # shatters_none and family_size == bound


def antichain_extremality(fam: SetFamily, antichain: list[int]) -> AntichainExtremalityReport:
    """Check extremality of a family relative to a fixed antichain."""
    if not is_antichain(antichain):
        raise NotAntichain("supports are not an antichain")
    system = SpernerSystem.of(fam.n, [(s, 0) for s in antichain])
    bound = len(system.up_complement())
    shatters_none = not any(fam.is_shattered(s) for s in antichain)
    return AntichainExtremalityReport(
        family_size=len(fam),
        bound=bound,
        shatters_none=shatters_none,
        bound_holds=len(fam) <= bound,
        extremal=shatters_none and len(fam) == bound,
    )


def is_antichain_extremal(fam: SetFamily, antichain: list[int]) -> bool:
    return antichain_extremality(fam, antichain).extremal
