"""Exception hierarchy shared across the package."""


class WpomaxError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(WpomaxError):
    """Rejected input text; carries the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# --- ordinal construction ---

class NonDecreasingExponents(WpomaxError):
    """CNF term list whose exponents do not strictly decrease."""


class ZeroCoefficient(WpomaxError):
    """CNF coefficient below 1."""


class DepthCapExceeded(WpomaxError):
    """Exponent nesting deeper than the configured cap."""


class UnitsNotSorted(WpomaxError):
    """Unit exponent list that is not nonincreasing."""


class NotLessOrEqual(WpomaxError):
    """Left subtraction applied to a > b."""


class NotASuccessor(WpomaxError):
    """Predecessor of a non-successor ordinal."""


class NotALimit(WpomaxError):
    """Fundamental sequence of a non-limit ordinal."""


# --- terms and witnesses ---

class InvalidPoset(WpomaxError):
    """Relation that is not reflexive, antisymmetric and transitive."""


class ElementMismatch(WpomaxError):
    """Element whose shape or coordinate does not fit the term."""


class PositionOutOfRange(WpomaxError):
    """Witness position at or above the witness order type."""


class NotOrderPreserving(WpomaxError):
    """Shuffle embedding check failed; carries the violating pair."""

    def __init__(self, pair, message: str = "embedding is not order preserving"):
        super().__init__(f"{message}: witness pair {pair!r}")
        self.pair = pair


class MissingAccessor(WpomaxError):
    """Shuffle presentation lacks a successor or t value it needs."""


# --- finite oracle ---

class SizeLimit(WpomaxError):
    """Poset larger than the configured brute-force cap."""


class LimitExceeded(WpomaxError):
    """More linear extensions than the requested limit; carries the count found."""

    def __init__(self, count: int):
        super().__init__(f"extension limit exceeded after {count} extensions")
        self.count = count


# --- true stages ---

class NotInjective(WpomaxError):
    """Enumeration table with a repeated value; carries the witness pair."""

    def __init__(self, pair):
        super().__init__(f"table is not injective: stages {pair[0]} and {pair[1]} share a value")
        self.pair = pair


class OutOfRange(WpomaxError):
    """Stage index outside the table horizon."""


class NotDescending(WpomaxError):
    """Sequence that is not strictly descending in the stage order."""


class IndexOutOfRange(WpomaxError):
    """Decoding index at or beyond the length of the descending sequence."""


class DecodeGuardFailed(WpomaxError):
    """Descending sequence too weak for decoding: f(desc[m]) < m."""


class HorizonExhausted(WpomaxError):
    """Finite horizon too small to witness an asymptotic property."""


class NotUpperSide(WpomaxError):
    """Interval query anchored at a stage that is not horizon-true."""
