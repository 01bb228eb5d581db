"""Exception types shared across the package."""


class ScatseqError(Exception):
    """Base class for all package errors."""


class NonPrimeCharacteristic(ScatseqError):
    pass


class ReducibleModulus(ScatseqError):
    pass


class DegreeMismatch(ScatseqError):
    pass


class ArityMismatch(ScatseqError):
    pass


class DimensionMismatch(ScatseqError):
    pass


class WrongAmbient(ScatseqError):
    """Operation only defined for ambient dimension 4."""


class NotMaximumScattered(ScatseqError):
    pass


class TooLargeToExhaust(ScatseqError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, size, budget):
        super().__init__(f"enumeration of size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


class NonCoprimeShift(ScatseqError):
    """Companion-matrix criterion needs gcd(K, n) = 1."""


class DegenerateCode(ScatseqError):
    pass


class MinDistanceOne(ScatseqError):
    pass


class WrongDimension(ScatseqError):
    pass


class NotFullSpan(ScatseqError):
    pass


class InternalInconsistency(ScatseqError):
    """Supposedly equivalent computations disagree; indicates a bug, not bad input."""


class HypothesisOutOfRange(ScatseqError):
    pass


class NoCompatibleEmbedding(ScatseqError):
    pass
