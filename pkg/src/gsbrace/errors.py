"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class. ``witness`` carries the offending tuple when there is one."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedTable(AlgebraError):
    pass


class MalformedMap(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class NotSemilattice(AlgebraError):
    pass


class NotCompletelyRegular(AlgebraError):
    def __init__(self, element):
        super().__init__(f"element {element} has no completely regular inverse", (element,))
        self.element = element


class InternalInconsistency(AlgebraError):
    """A property that is a theorem for valid input failed: a bug or corrupted input."""


class KeyIdentityFailed(AlgebraError):
    pass


class NotCompletelySimple(AlgebraError):
    pass


class NotIdempotentEndomorphism(AlgebraError):
    pass


class NonCommutingPair(AlgebraError):
    pass


class NotMatchedPair(AlgebraError):
    pass


class PhiIdentityViolated(AlgebraError):
    pass


class NotClifford(AlgebraError):
    pass


class SystemMalformed(AlgebraError):
    """Bad semilattice system. ``condition`` is 1 or 2 for structure-map failures."""

    def __init__(self, message="", witness=None, condition=None):
        super().__init__(message, witness)
        self.condition = condition


class EquivarianceFailed(AlgebraError):
    condition = 3


class ComponentNotSolution(AlgebraError):
    def __init__(self, alpha, witness=None):
        super().__init__(f"payload {alpha} is not a solution", witness)
        self.alpha = alpha


class NotHomomorphism(AlgebraError):
    pass


class ConditionFailed(AlgebraError):
    def __init__(self, alpha, witness=None):
        super().__init__(f"payload {alpha} fails the solution condition", witness)
        self.alpha = alpha


class TheoremMismatch(AlgebraError):
    pass
