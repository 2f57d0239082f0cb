"""Antichains with pattern assignments, their cubes, and the families they carve out.

A `SpernerSystem` pairs each member S of an antichain with a pattern H <= S.
Each pair forbids the trace pattern H on S; the sets avoiding every forbidden
pattern form the system's family.  The complement of the antichain's up-closure
is the down-set of candidate shattered sets.  For extremal families this
construction is reversible: `decompose` recovers the unique system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AmbiguousMissing,
    FullFamily,
    NotAntichain,
    NotExtremal,
    PatternNotInSupport,
    ShatterlabError,
)
from .families import SetFamily, check_ground, full_mask, submasks


@dataclass(frozen=True)
class Cube:
    """Subcube of 2^[n]: all sets whose intersection with `support` is `pattern`."""

    n: int
    support: int
    pattern: int

    def __post_init__(self):
        check_ground(self.n)
        if self.support & ~full_mask(self.n):
            raise ShatterlabError(f"support {self.support} outside ground set [{self.n}]")
        if self.pattern & ~self.support:
            raise PatternNotInSupport(
                f"pattern {self.pattern} not contained in support {self.support}")

    @classmethod
    def supersets_of(cls, n: int, s: int) -> "Cube":
        """The cube of all supersets of s (pattern equal to support)."""
        return cls(n, s, s)

    def dimension(self) -> int:
        return self.n - self.support.bit_count()

    def size(self) -> int:
        return 1 << self.dimension()

    def contains(self, mask: int) -> bool:
        return mask & self.support == self.pattern

    def member_masks(self) -> tuple[int, ...]:
        """Members in ascending mask order.

        Pattern and free bits are disjoint, so OR is addition and ascending
        submask order of the free part gives ascending members.
        """
        free = full_mask(self.n) & ~self.support
        return tuple(self.pattern | sub for sub in submasks(free))

    def members(self) -> SetFamily:
        return SetFamily(self.n, self.member_masks())


@dataclass(frozen=True)
class SpernerSystem:
    """An antichain with one pattern per member, in canonical (support-ascending) order."""

    n: int
    members: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_ground(self.n)
        top = full_mask(self.n)
        prev = -1
        for s, h in self.members:
            if s & ~top:
                raise ShatterlabError(f"support {s} outside ground set [{self.n}]")
            if h & ~s:
                raise PatternNotInSupport(f"pattern {h} not contained in support {s}")
            if s <= prev:
                raise NotAntichain("members must be strictly ascending by support mask")
            prev = s
        supports = [s for s, _ in self.members]
        for i, a in enumerate(supports):
            for b in supports[i + 1:]:
                if a & b == a or a & b == b:
                    raise NotAntichain(f"supports {a} and {b} are comparable")

    @classmethod
    def of(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SpernerSystem":
        return cls(n, tuple(sorted(pairs)))

    @classmethod
    def from_anchor(cls, n: int, antichain: Iterable[int], anchor: int) -> "SpernerSystem":
        """Assign every member the pattern cut out by a fixed anchor set."""
        return cls.of(n, [(s, s & anchor) for s in antichain])

    def __len__(self) -> int:
        return len(self.members)

    def supports(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.members)

    def patterns(self) -> tuple[int, ...]:
        return tuple(h for _, h in self.members)

    def cubes(self) -> tuple[Cube, ...]:
        return tuple(Cube(self.n, s, h) for s, h in self.members)

    def up_closure(self) -> SetFamily:
        """All sets containing at least one member support (an up-set)."""
        return _union_of_cubes(self.n, [(s, s) for s, _ in self.members])

    def up_complement(self) -> SetFamily:
        """Sets containing no member support; complement of the up-closure (a down-set)."""
        return self.up_closure().complement()

    def family(self) -> SetFamily:
        """Sets whose trace on every support differs from that member's pattern."""
        return _union_of_cubes(self.n, list(self.members)).complement()


def _union_of_cubes(n: int, pairs: list[tuple[int, int]]) -> SetFamily:
    # 2^n bitmap; exact and simple at this scale
    total = 1 << n
    hit = bytearray(total)
    top = total - 1
    for support, pattern in pairs:
        free = top & ~support
        sub = free
        while True:
            hit[pattern | sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & free
    return SetFamily(n, tuple(m for m in range(total) if hit[m]))


def missing_patterns(fam: SetFamily, s: int) -> SetFamily:
    """Subsets of s that occur as no trace of the family."""
    seen = {m & s for m in fam.masks}
    return SetFamily(fam.n, tuple(h for h in submasks(s) if h not in seen))


def decompose(fam: SetFamily) -> SpernerSystem:
    """Recover the unique system whose family is `fam` (extremal input required).

    Supports are the minimal non-shattered sets; each pattern is that
    support's unique missing trace.  Raises AmbiguousMissing if uniqueness
    fails, which cannot happen for extremal families.
    """
    if fam.is_full():
        raise FullFamily("the full power set shatters everything; nothing to decompose")
    shattered = fam.shattered_sets()
    if len(shattered) != len(fam):
        raise NotExtremal(
            f"family shatters {len(shattered)} sets but has {len(fam)} members")
    supports = shattered.complement().minimal_elements()
    pairs = []
    for s in supports:
        missing = missing_patterns(fam, s)
        if len(missing) != 1:
            raise AmbiguousMissing(
                f"minimal non-shattered support {s} has {len(missing)} missing patterns")
        pairs.append((s, missing.masks[0]))
    return SpernerSystem(fam.n, tuple(pairs))
