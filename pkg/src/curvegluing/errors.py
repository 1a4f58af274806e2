"""Exception hierarchy shared by all modules.

Every domain error carries a stable ``code`` naming the violated clause,
so the CLI can report it without string-matching messages.
"""


class DomainError(ValueError):
    """Base class for all input/contract violations raised by this package."""

    code = "DomainError"

    def __init__(self, message=""):
        super().__init__(f"{self.code}: {message}" if message else self.code)


# ---------------------------------------------------------------- semigroup

class EmptyGenerators(DomainError):
    code = "Empty"


class GcdNotOne(DomainError):
    code = "GcdNotOne"


# ------------------------------------------------------------------ polyalg

class ArityMismatch(DomainError):
    code = "ArityMismatch"


class ZeroPolynomial(DomainError):
    code = "ZeroPolynomial"


# -------------------------------------------------------------------- basis

class NonGlobalOrder(DomainError):
    code = "NonGlobalOrder"


class NonLocalOrder(DomainError):
    code = "NonLocalOrder"


# ------------------------------------------------------------------ hilbert

class DimensionMismatch(DomainError):
    code = "DimensionMismatch"


# ------------------------------------------------------------- tangent cone

class InvalidPriority(DomainError):
    code = "InvalidPriority"


# ------------------------------------------------------------------- gluing

class GluingError(DomainError):
    code = "GluingError"


class GcdViolation(GluingError):
    code = "GcdViolation"


class PIsMinimalGenerator(GluingError):
    code = "PIsMinimalGenerator"


class QIsMinimalGenerator(GluingError):
    code = "QIsMinimalGenerator"


class NotInSemigroup(GluingError):
    code = "NotInSemigroup"


class GeneratorCollision(GluingError):
    code = "GeneratorCollision"


class SelfCheckFailed(RuntimeError):
    """An internal cross-validation failed; always a bug, never user error."""


class TheoremViolation(RuntimeError):
    """A verified instance falsified a theorem it should satisfy.

    Either an implementation defect or a publishable observation; the
    reproduction bundle is attached so the instance can be replayed.
    """

    def __init__(self, message, bundle=None):
        super().__init__(message)
        self.bundle = bundle or {}
