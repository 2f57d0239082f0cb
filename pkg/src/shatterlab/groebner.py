"""Exact symbolic layer: cube polynomials, lex orders, division, and the basis test.

Everything runs over exact coefficients.  The default field is the rationals
(stdlib fractions); a tiny prime-field element type is provided for speed
cross-checks.  Monomials are exponent tuples of length n; only the n!
lexicographic orders are implemented, one per variable priority.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InfiniteStaircase, PatternNotInSupport, ShatterlabError, TooLarge, ZeroPolynomial
from .families import SetFamily, submasks
from .sperner import SpernerSystem

Monomial = tuple  # exponent vector of length n


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_from_mask(mask: int, n: int) -> Monomial:
    return tuple(1 if mask >> i & 1 else 0 for i in range(n))


@dataclass(frozen=True)
class LexOrder:
    """Lexicographic term order; priority lists 0-based variables, biggest first."""

    priority: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ShatterlabError("priority must be a permutation of the variables")

    @classmethod
    def standard(cls, n: int) -> "LexOrder":
        return cls(tuple(range(n)))

    def key(self, mono: Monomial):
        return tuple(mono[v] for v in self.priority)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


def all_lex_orders(n: int):
    from itertools import permutations
    for perm in permutations(range(n)):
        yield LexOrder(perm)


class Polynomial:
    """Sparse multivariate polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = c

    @classmethod
    def from_int_terms(cls, n: int, terms: dict) -> "Polynomial":
        return cls(n, {m: Fraction(c) for m, c in terms.items()})

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def mul_term(self, coeff, mono: Monomial) -> "Polynomial":
        if coeff == 0:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.n, out)

    def evaluate_at_mask(self, mask: int):
        """Value at the 0/1 characteristic vector of `mask`.

        On 0/1 points every positive power collapses to the variable itself,
        so a monomial contributes iff its support lies inside the mask.
        """
        total = Fraction(0)
        first = True
        for m, c in self.terms.items():
            if all(mask >> i & 1 for i, e in enumerate(m) if e):
                total = c if first else total + c
                first = False
        return Fraction(0) if first else total

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.n, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"Polynomial({self.n}, {self.terms!r})"


@dataclass(frozen=True)
class Fp:
    """Prime-field element for cross-checking the rational computations."""

    p: int
    v: int

    def _lift(self, other) -> "Fp":
        if isinstance(other, Fp):
            return other
        return Fp(self.p, other % self.p)

    def __add__(self, other):
        o = self._lift(other)
        return Fp(self.p, (self.v + o.v) % self.p)

    __radd__ = __add__

    def __neg__(self):
        return Fp(self.p, -self.v % self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        return Fp(self.p, self.v * o.v % self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return Fp(self.p, self.v * pow(o.v, -1, self.p) % self.p)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __rsub__(self, other):
        return self._lift(other) - self

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))


def to_prime_field(poly: Polynomial, p: int) -> Polynomial:
    return poly.map_coefficients(lambda c: Fp(p, int(c) % p))


# -- generators ---------------------------------------------------------------

def cube_polynomial(n: int, support: int, pattern: int) -> Polynomial:
    """Product of the pattern variables and (x_i - 1) over the rest of the support.

    Expanded form: one squarefree term per subset of the complementary part,
    all coefficients +-1.  Nonzero at a 0/1 point exactly when the point's set
    meets the support in the pattern.
    """
    if pattern & ~support:
        raise PatternNotInSupport(f"pattern {pattern} not contained in support {support}")
    rest = support & ~pattern
    k = rest.bit_count()
    terms = {}
    for t in submasks(rest):
        sign = 1 if (k - t.bit_count()) % 2 == 0 else -1
        terms[mono_from_mask(pattern | t, n)] = Fraction(sign)
    return Polynomial(n, terms)


def field_equations(n: int) -> list[Polynomial]:
    """x_i^2 - x_i for each variable; vanish on every 0/1 point."""
    out = []
    for i in range(n):
        sq = tuple(2 if j == i else 0 for j in range(n))
        lin = tuple(1 if j == i else 0 for j in range(n))
        out.append(Polynomial.from_int_terms(n, {sq: 1, lin: -1}))
    return out


def system_generators(system: SpernerSystem) -> list[Polynomial]:
    """One cube polynomial per member, then the field equations."""
    polys = [cube_polynomial(system.n, s, h) for s, h in system.members]
    polys.extend(field_equations(system.n))
    return polys


# -- division and the basis criterion ----------------------------------------

def leading_monomial(p: Polynomial, order: LexOrder) -> Monomial:
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    if len(order.priority) != p.n:
        # a short priority list ignores variables and breaks well-ordering
        raise ShatterlabError(
            f"order over {len(order.priority)} variables applied to {p.n}-variable polynomial")
    return max(p.terms, key=order.key)


def normal_form(p: Polynomial, basis: list[Polynomial], order: LexOrder) -> Polynomial:
    """Remainder of p under multivariate division by the basis.

    Strategy is fixed for determinism: reduce the order-largest reducible
    term, using the first basis element whose leading monomial divides it.
    The result has no term divisible by any basis leading monomial.
    """
    lead = [(leading_monomial(b, order), b) for b in basis]
    work = dict(p.terms)
    while True:
        target = None
        for mono in sorted(work, key=order.key, reverse=True):
            for lm, b in lead:
                if mono_divides(lm, mono):
                    target = (mono, lm, b)
                    break
            if target:
                break
        if target is None:
            return Polynomial(p.n, work)
        mono, lm, b = target
        factor = work[mono] / b.terms[lm]
        shift = mono_div(mono, lm)
        for m2, c2 in b.terms.items():
            mm = mono_mul(m2, shift)
            s = work.get(mm, 0) - factor * c2
            if s == 0:
                work.pop(mm, None)
            else:
                work[mm] = s


def s_polynomial(f: Polynomial, g: Polynomial, order: LexOrder) -> Polynomial:
    """Cross-multiplied difference cancelling both leading terms."""
    lmf = leading_monomial(f, order)
    lmg = leading_monomial(g, order)
    lcm = mono_lcm(lmf, lmg)
    left = f.mul_term(1 / f.terms[lmf], mono_div(lcm, lmf))
    right = g.mul_term(1 / g.terms[lmg], mono_div(lcm, lmg))
    return left - right


def is_groebner_basis(basis: list[Polynomial], order: LexOrder) -> bool:
    """Buchberger criterion: every pairwise S-polynomial reduces to zero.

    Pairs with coprime leading monomials are skipped (product criterion);
    no other shortcut is used.
    """
    lead = [leading_monomial(b, order) for b in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if all(a == 0 or b == 0 for a, b in zip(lead[i], lead[j])):
                continue
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def standard_monomial_count(basis: list[Polynomial], order: LexOrder) -> int:
    """Number of monomials divisible by no basis leading monomial.

    Finite only when every variable has a pure-power leading monomial
    bounding its exponent; otherwise the staircase is infinite and we refuse.
    """
    lead = [leading_monomial(b, order) for b in basis]
    n = len(lead[0]) if lead else 0
    if any(all(e == 0 for e in lm) for lm in lead):
        return 0
    if n == 0:
        return 1 if not lead else 0
    bounds: list[int | None] = [None] * n
    for lm in lead:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = lm[i] if bounds[i] is None else min(bounds[i], lm[i])
    if any(b is None for b in bounds):
        missing = [i + 1 for i, b in enumerate(bounds) if b is None]
        raise InfiniteStaircase(f"no pure-power leading monomial for variables {missing}")
    count = 0
    for mono in product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, mono) for lm in lead):
            count += 1
    return count


# -- exact linear algebra ------------------------------------------------------

def containment_matrix(row_family: SetFamily, col_family: SetFamily) -> list[list[int]]:
    """0/1 matrix: entry 1 iff the row set is contained in the column set.

    Rows play the role of squarefree monomials evaluated at the 0/1 points of
    the columns.
    """
    return [[1 if t & f == t else 0 for f in col_family.masks] for t in row_family.masks]


def integer_matrix_rank(matrix: list[list[int]]) -> int:
    """Exact rank by fraction-free (division-preserving) elimination."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, rows):
            row_i = m[i]
            row_r = m[rank]
            f = row_i[c]
            if f:
                for j in range(c + 1, cols):
                    row_i[j] = (row_r[c] * row_i[j] - f * row_r[j]) // prev
            else:
                for j in range(c + 1, cols):
                    row_i[j] = (row_r[c] * row_i[j]) // prev
            row_i[c] = 0
        prev = m[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def point_evaluation_rank(fam: SetFamily, monomial_sets: SetFamily) -> int:
    """Rank of the squarefree-monomial evaluation matrix on the family's points."""
    if not monomial_sets.masks or not fam.masks:
        return 0
    return integer_matrix_rank(containment_matrix(monomial_sets, fam))


# -- the equivalence report ----------------------------------------------------

MAX_REPORT_GROUND = 8
MAX_REPORT_MEMBERS = 6


@dataclass(frozen=True)
class GroebnerReport:
    family_size: int
    down_set_size: int
    counting_equal: bool        # family size equals down-set size
    groebner: bool              # generator set passes the basis criterion
    standard_monomials: int
    evaluation_rank: int
    rank_full: bool             # rank equals family size
    equivalence_holds: bool     # counting_equal == groebner; False is a hard failure


def extremality_groebner_report(system: SpernerSystem, order: LexOrder) -> GroebnerReport:
    """Three independent routes to extremality: counting, basis test, point rank."""
    if system.n > MAX_REPORT_GROUND:
        raise TooLarge(f"ground set {system.n} exceeds cap {MAX_REPORT_GROUND}")
    if len(system.members) > MAX_REPORT_MEMBERS:
        raise TooLarge(f"{len(system.members)} members exceeds cap {MAX_REPORT_MEMBERS}")
    fam = system.family()
    down = system.up_complement()
    counting = len(fam) == len(down)
    basis = system_generators(system)
    groebner = is_groebner_basis(basis, order)
    standard = standard_monomial_count(basis, order) if basis else 1 << system.n
    rank = point_evaluation_rank(fam, down)
    return GroebnerReport(
        family_size=len(fam),
        down_set_size=len(down),
        counting_equal=counting,
        groebner=groebner,
        standard_monomials=standard,
        evaluation_rank=rank,
        rank_full=rank == len(fam),
        equivalence_holds=counting == groebner,
    )


# -- printing -----------------------------------------------------------------

def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, order: LexOrder) -> str:
    """Terms sorted descending by the order; integer or fraction coefficients."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[mono]
        mono_str = format_monomial(mono)
        negative = c < 0
        mag = -c if negative else c
        if mono_str == "1":
            body = str(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{mag}*{mono_str}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
