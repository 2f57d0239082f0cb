"""One-set extension machinery for extremal families.

The extension step:  pick a member whose cube is not covered by the other
cubes, take the smallest uncovered set as witness, replace the member by the
minimal supersets that keep the antichain property, and give each new support
the unique pattern choice that keeps the witness uncovered.  The successor
system's family is the old family plus the witness, and it is extremal again.
Peeling removes a set instead, by running the same step on the complement.

Every certificate is verified by full recomputation before it is returned:
the pattern-extension step is the subtlest part, so nothing is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput, NotAntichain, NotExtremal, TooLarge, VerificationFailed, WitnessNotEligible
from .families import SetFamily, check_ground, full_mask
from .sperner import Cube, SpernerSystem, decompose
from .sampling import SplitMix64, random_family


@dataclass(frozen=True)
class EliminationCertificate:
    """Auditable record of one verified extension step."""

    chosen_member: int            # support of the replaced member
    added_set: int                # the witness joining the family
    successor: SpernerSystem
    augmented_family: SetFamily


def uncovered_witness(system: SpernerSystem) -> tuple[int, int] | None:
    """First member (canonical order) whose cube escapes the union of the others.

    Returns (member index, smallest escaping mask), or None when every cube is
    covered by the rest.  Scanning order makes certificates reproducible.
    """
    members = system.members
    if not members:
        raise EmptyInput("system has no members")
    for i, (si, hi) in enumerate(members):
        others = [members[j] for j in range(len(members)) if j != i]
        for f in Cube(system.n, si, hi).member_masks():
            if all(f & sj != hj for sj, hj in others):
                return i, f
    return None


def successor_members(system: SpernerSystem, index: int) -> tuple[int, ...]:
    """One-element extensions of the chosen support that contain no other member.

    Replacing the chosen member by these keeps an antichain and grows the
    up-complement by exactly the chosen support.
    """
    members = system.members
    s0 = members[index][0]
    rest = [s for j, (s, _) in enumerate(members) if j != index]
    out = []
    free = full_mask(system.n) & ~s0
    while free:
        low = free & -free
        candidate = s0 | low
        if not any(s & candidate == s for s in rest):
            out.append(candidate)
        free ^= low
    return tuple(out)


def extend_patterns(system: SpernerSystem, index: int, witness: int) -> SpernerSystem:
    """Successor system that keeps the witness outside every cube.

    Each new support adds one element v to the chosen support; its pattern is
    the old pattern, plus v exactly when the witness misses v.  That is the
    unique choice of the two candidate patterns excluding the witness, since
    they split the old cube in the v direction.
    """
    members = system.members
    s0, h0 = members[index]
    if witness & s0 != h0:
        raise WitnessNotEligible(f"witness {witness} is not in the chosen cube")
    for j, (sj, hj) in enumerate(members):
        if j != index and witness & sj == hj:
            raise WitnessNotEligible(f"witness {witness} is covered by member {j}")
    pairs = [members[j] for j in range(len(members)) if j != index]
    for candidate in successor_members(system, index):
        v = candidate & ~s0
        new_h = h0 if witness & v else h0 | v
        if witness & candidate == new_h:
            raise VerificationFailed("pattern extension failed to exclude the witness")
        pairs.append((candidate, new_h))
    return SpernerSystem.of(system.n, pairs)


def _checked_input(system: SpernerSystem) -> tuple[SetFamily, SetFamily]:
    fam = system.family()
    down = system.up_complement()
    shattered = fam.shattered_sets()
    if len(shattered) != len(fam) or shattered != down:
        raise NotExtremal("system family is not extremal with the full candidate down-set")
    return fam, down


def augment(system: SpernerSystem) -> EliminationCertificate | None:
    """Run one verified extension step, or return None when no witness exists.

    The input system must produce an extremal family whose shattered sets are
    exactly the up-complement (checked).  The returned certificate has been
    re-verified from scratch: successor down-set, family growth by exactly
    the witness, and extremality of the result.
    """
    fam, down = _checked_input(system)
    found = uncovered_witness(system)
    if found is None:
        return None
    index, witness = found
    s0 = system.members[index][0]
    successor = extend_patterns(system, index, witness)
    new_fam = successor.family()
    new_down = successor.up_complement()
    if new_down != down.with_member(s0):
        raise VerificationFailed("successor down-set is not the old one plus the chosen support")
    if new_fam != fam.with_member(witness):
        raise VerificationFailed("successor family is not the old one plus the witness")
    new_shattered = new_fam.shattered_sets()
    if len(new_shattered) != len(new_fam) or new_shattered != new_down:
        raise VerificationFailed("augmented family is not extremal with the successor down-set")
    return EliminationCertificate(
        chosen_member=s0,
        added_set=witness,
        successor=successor,
        augmented_family=new_fam,
    )


def augment_anchored(n: int, antichain: list[int], anchor: int, index: int) -> EliminationCertificate:
    """Extension step for anchored systems; succeeds for every member choice.

    The successor keeps the anchor assignment (each pattern is support cut by
    the anchor), so no witness search is needed: the family grows by exactly
    one set regardless of which member is replaced.
    """
    from .families import is_antichain
    if not is_antichain(antichain):
        raise NotAntichain("supports are not an antichain")
    if not antichain:
        raise EmptyInput("antichain has no members")
    system = SpernerSystem.from_anchor(n, antichain, anchor)
    if not 0 <= index < len(system.members):
        raise EmptyInput(f"member index {index} out of range")
    fam = system.family()
    s0 = system.members[index][0]
    new_supports = [s for j, (s, _) in enumerate(system.members) if j != index]
    new_supports.extend(successor_members(system, index))
    successor = SpernerSystem.from_anchor(n, new_supports, anchor)
    new_fam = successor.family()
    if len(new_fam) != len(fam) + 1:
        raise VerificationFailed("anchored successor family did not grow by exactly one set")
    added = [m for m in new_fam if m not in fam]
    if len(added) != 1:
        raise VerificationFailed("anchored successor family is not a superset of the old family")
    return EliminationCertificate(
        chosen_member=s0,
        added_set=added[0],
        successor=successor,
        augmented_family=new_fam,
    )


def peel(fam: SetFamily) -> int | None:
    """A member whose removal keeps the family extremal, or None if none is found.

    Runs the extension step on the decomposition of the complement and maps
    the added set back: adding to the complement is removing from the family.
    The removal is re-verified directly before returning.
    """
    if not fam.masks:
        raise EmptyInput("cannot peel the empty family")
    if not fam.is_s_extremal():
        raise NotExtremal("family is not extremal")
    certificate = augment(decompose(fam.complement()))
    if certificate is None:
        return None
    removed = certificate.added_set
    if removed not in fam:
        raise VerificationFailed("dual witness is not a family member")
    if not fam.without_member(removed).is_s_extremal():
        raise VerificationFailed("removal did not preserve extremality")
    return removed


# -- conjecture audits ------------------------------------------------------

@dataclass(frozen=True)
class AuditReport:
    """Tally of one extension-conjecture sweep; every failure field should be zero."""

    n: int
    mode: str                      # "exhaustive" or "random"
    seed: int | None
    families_examined: int
    extremal_families: int
    brute_failures: int            # extremal proper family with no addable set at all
    missing_witness: int           # decomposition had no uncovered witness
    machinery_failures: int        # witness existed but the extension step failed
    disagreements: int             # witness existence vs brute-force addability mismatch
    counterexamples: tuple[tuple[int, ...], ...]   # first few offending families

    @property
    def ok(self) -> bool:
        return (self.brute_failures == 0 and self.missing_witness == 0
                and self.machinery_failures == 0 and self.disagreements == 0)


def _definitional_shattered_count(members: tuple[int, ...], n: int) -> int:
    # straight from the definition, no pruning: independent of the library path
    count = 0
    for s in range(1 << n):
        if len({m & s for m in members}) == 1 << s.bit_count():
            count += 1
    return count


def _definitional_is_extremal(members: tuple[int, ...], n: int) -> bool:
    if not members:
        return True
    return _definitional_shattered_count(members, n) == len(members)


def _brute_addable_exists(members: tuple[int, ...], n: int) -> bool:
    present = set(members)
    for f in range(1 << n):
        if f in present:
            continue
        if _definitional_is_extremal(tuple(sorted(present | {f})), n):
            return True
    return False


def _audit_one(masks: tuple[int, ...], n: int) -> tuple[bool, bool, bool]:
    """(brute addable, witness found, machinery verified) for one extremal family."""
    brute_ok = _brute_addable_exists(masks, n)
    system = decompose(SetFamily(n, masks))
    found = uncovered_witness(system)
    if found is None:
        return brute_ok, False, False
    try:
        certificate = augment(system)
    except VerificationFailed:
        return brute_ok, True, False
    machinery_ok = (certificate is not None
                    and certificate.augmented_family.masks == tuple(sorted(set(masks) | {certificate.added_set})))
    return brute_ok, True, machinery_ok


def audit_conjecture(n: int, samples: int | None = None, seed: int | None = None,
                     keep: int = 5) -> AuditReport:
    """Sweep families and compare brute-force addability with the extension step.

    Exhaustive mode (samples None) enumerates all 2^(2^n) families and needs
    n <= 4.  Random mode draws `samples` families with the documented scheme:
    each subset of [n] is included independently with probability 1/2, bits
    taken from a splitmix64 stream seeded with `seed`.
    """
    check_ground(n)
    if samples is None:
        if n > 4:
            raise TooLarge(f"exhaustive audit needs n <= 4, got {n}")
        mode = "exhaustive"
        total = 1 << (1 << n)
        family_iter = (tuple(m for m in range(1 << n) if bits >> m & 1)
                       for bits in range(total))
        examined = total
    else:
        if seed is None:
            raise EmptyInput("random audit mode requires a seed")
        mode = "random"
        rng = SplitMix64(seed)
        family_iter = (random_family(rng, n) for _ in range(samples))
        examined = samples

    full = tuple(range(1 << n))
    extremal = brute_failures = missing = machinery_failures = disagreements = 0
    bad: list[tuple[int, ...]] = []

    def note(masks):
        if len(bad) < keep:
            bad.append(masks)

    for masks in family_iter:
        if masks == full or not _definitional_is_extremal(masks, n):
            continue
        extremal += 1
        brute_ok, witness_found, machinery_ok = _audit_one(masks, n)
        if not brute_ok:
            brute_failures += 1
            note(masks)
        if not witness_found:
            missing += 1
            note(masks)
        if witness_found and not machinery_ok:
            machinery_failures += 1
            note(masks)
        if witness_found != brute_ok:
            disagreements += 1
            note(masks)

    return AuditReport(
        n=n,
        mode=mode,
        seed=seed,
        families_examined=examined,
        extremal_families=extremal,
        brute_failures=brute_failures,
        missing_witness=missing,
        machinery_failures=machinery_failures,
        disagreements=disagreements,
        counterexamples=tuple(bad),
    )
