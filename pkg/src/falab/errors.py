"""Exception types shared across the library.

Two broad families: user-input problems (bad data, violated preconditions)
and corruption errors, which flag identities that cannot fail on valid
input and therefore indicate a broken object or a bug.
"""

from __future__ import annotations


class FalabError(Exception):
    """Base class for all library errors."""


class ShapeMismatch(FalabError):
    pass


class FieldMismatch(FalabError):
    pass


class InvalidInput(FalabError):
    """Malformed or mathematically inconsistent input data."""


class SchemaError(InvalidInput):
    """A description file violates the expected JSON schema.

    ``location`` is a path-like string into the offending document.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class NotAssociative(InvalidInput):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails at basis triple ({i}, {j}, {k})")


class BadUnit(InvalidInput):
    pass


class SingularForm(InvalidInput):
    """The supplied functional does not induce a nonsingular pairing.

    ``witness`` is an element orthogonal to the whole algebra.
    """

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__("bilinear form is singular")


class NotAHomomorphism(InvalidInput):
    pass


class IntegralSpaceNotLine(InvalidInput):
    """The space of one-sided integrals is not one-dimensional."""


class NotAModule(InvalidInput):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"module law fails on basis pair ({i}, {j})")


class NotSchur(FalabError):
    """Endomorphism algebra of the module is larger than the base field."""


class IndexNotInvertible(FalabError):
    """The module index is zero, so no central idempotent exists."""


class NoWeakForm(FalabError):
    """No integral-form certificate was supplied or it fails verification."""


class HopfAxiomFailure(InvalidInput):
    """One of the Hopf axiom families fails; ``witness`` names basis indices."""

    def __init__(self, family: str, witness):
        self.family = family
        self.witness = witness
        super().__init__(f"Hopf axiom '{family}' fails at {witness}")


class NotComplete(InvalidInput):
    """Supplied irreducibles do not exhaust the algebra."""


class NotSplit(InvalidInput):
    """A supplied module has endomorphism ring larger than the field."""


class NonIntegerMultiplicity(InvalidInput):
    """A fusion multiplicity came out non-integral; input is inconsistent."""


class NotCommutative(FalabError):
    pass


class PreconditionFailed(FalabError):
    """A stated hypothesis of the requested computation does not hold."""


class NonSplittingField(InvalidInput):
    """The base field is missing roots of unity needed to split the group."""


class ClosureBound(InvalidInput):
    """Group closure exceeded the configured element bound."""


class CorruptionError(FalabError):
    """An identity that holds for every valid object failed.

    Raised by internal cross-checks; indicates corrupted data or a bug,
    never a mathematical fact about valid input.
    """
