"""Exception types shared across the package."""


class ShatterlabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ShatterlabError):
    """Malformed input file or stream."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GroundMismatch(ShatterlabError):
    """Operands live over different ground sets."""


class PatternNotInSupport(ShatterlabError):
    """A cube pattern contains elements outside its support."""


class NotAntichain(ShatterlabError):
    """A collection that must be an antichain has comparable members."""


class NotExtremal(ShatterlabError):
    """Operation requires a shattering-extremal family."""


class FullFamily(ShatterlabError):
    """The full power set has no decomposition (nothing is left unshattered)."""


class AmbiguousMissing(ShatterlabError):
    """A minimal non-shattered set has more than one missing trace pattern.

    Impossible for extremal inputs; raised instead of picking arbitrarily so
    that inconsistencies surface during testing.
    """


class EmptyInput(ShatterlabError):
    """Operation needs at least one member/element."""


class TooLarge(ShatterlabError):
    """Instance exceeds the exact-enumeration caps."""


class WitnessNotEligible(ShatterlabError):
    """Witness set is not in the chosen cube, or is covered by another cube."""


class NotComplete(ShatterlabError):
    """Anchor recovery requires a complete intersection graph."""


class ZeroPolynomial(ShatterlabError):
    """The zero polynomial has no leading monomial."""


class InfiniteStaircase(ShatterlabError):
    """Standard monomials are not finite (some variable has no pure-power leading monomial)."""


class VerificationFailed(ShatterlabError):
    """A self-checked construction failed its own recomputation."""
