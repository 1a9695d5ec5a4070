"""Exception types.

Every failure carries a short machine-readable ``code`` (the class name) and
an optional ``witness`` describing where a law broke.
"""


class AlgebraError(Exception):
    """Base class for every structural failure raised by the package."""

    def __init__(self, message="", witness=None):
        super().__init__(message or self.__class__.__name__)
        self.witness = witness

    @property
    def code(self):
        return self.__class__.__name__

    def to_json(self):
        return {"error": self.code, "message": str(self), "witness": self.witness}


# finite groups, actions, homomorphisms
class NotClosed(AlgebraError):
    pass


class NoIdentityAtZero(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class MissingInverse(AlgebraError):
    pass


class InvalidOrder(AlgebraError):
    pass


class OrderBoundExceeded(AlgebraError):
    pass


class NotHomomorphic(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class IdentityNotFixed(AlgebraError):
    pass


class Overflow(AlgebraError):
    pass


# cohomology
class MismatchedModule(AlgebraError):
    pass


class BoundExceeded(AlgebraError):
    pass


class NotNormalized(AlgebraError):
    pass


class NotCocycle(AlgebraError):
    pass


# crossed modules
class EquivarianceFailed(AlgebraError):
    pass


class PeifferFailed(AlgebraError):
    pass


class NotSurjective(AlgebraError):
    pass


class KernelNotCentral(AlgebraError):
    pass


class NotAbelian(AlgebraError):
    pass


class StrictLawFailed(AlgebraError):
    pass


# monoidal groupoids
class CategoryLawFailed(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class FunctorialityFailed(AlgebraError):
    pass


class NaturalityFailed(AlgebraError):
    pass


class PentagonFailed(AlgebraError):
    pass


class TriangleFailed(AlgebraError):
    pass


class NotSkeletal(AlgebraError):
    pass


class UnitsNotIdentity(AlgebraError):
    pass


class EndomorphismsNotAbelian(AlgebraError):
    pass


class NotWeak2Group(AlgebraError):
    pass


class IllTypedChoice(AlgebraError):
    pass


# classification
class EndpointMismatch(AlgebraError):
    pass


class NotModuleMap(AlgebraError):
    pass


class CoherenceFailed(AlgebraError):
    """A monoidal functor or transformation square does not commute."""
