"""Exception hierarchy shared by all subsystems."""


class LiecharError(Exception):
    """Base class for all domain errors raised by this package."""


class NotFiniteType(LiecharError):
    """Cartan data does not classify as a finite-type Dynkin diagram."""


class TwistIncompatible(LiecharError):
    """The twist map does not preserve the root system."""


class GroupTooLarge(LiecharError):
    """Weyl group enumeration would exceed the configured bound."""


class NotDominant(LiecharError):
    """A dominant weight was required."""


class DimensionMismatch(LiecharError):
    """Internal dimension self-check failed (implementation bug)."""


class MissingIrreducible(LiecharError):
    """The character library lacks a required highest weight."""

    def __init__(self, weight):
        super().__init__(f"library has no entry for highest weight {weight}")
        self.weight = weight


class NegativeMultiplicity(LiecharError):
    """Character subtraction went below zero (inconsistent input data)."""


class WrongType(LiecharError):
    """Operation restricted to a specific root-datum type / characteristic."""


class SingularEquation(LiecharError):
    """Torus fixed-point equation is singular (bad input)."""


class BadOrder(LiecharError):
    """Torus element order is not coprime to the characteristic."""


class NotCoprime(LiecharError):
    """Galois exponent shares a factor with a value's conductor."""


class NotStabilized(LiecharError):
    """The supplied Weyl element does not stabilize the torus element."""


class SchemaError(LiecharError):
    """Imported table file violates the documented schema."""


class InconsistentPowerMap(LiecharError):
    """Imported power map contradicts element-order arithmetic."""


class NoIdentification(LiecharError):
    """No class identification is compatible with the constraints."""


class CapExceeded(LiecharError):
    """Identification search hit the result cap."""

    def __init__(self, cap, partial_count):
        super().__init__(f"more than {cap} identifications (stopped at {partial_count})")
        self.cap = cap
        self.partial_count = partial_count


class SingularBrauerMatrix(LiecharError):
    """Brauer character matrix is not invertible on the p'-classes."""


class ParseError(LiecharError):
    """Artifact file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
