"""Exception hierarchy shared by all starglue modules."""


class StarglueError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(StarglueError):
    """Input violates a documented precondition or invariant."""


# -- numerical semigroups ---------------------------------------------------

class NotNumerical(ValidationError):
    """Generators have gcd != 1, so they generate no numerical semigroup."""


class Degenerate(ValidationError):
    """Fewer than two minimal generators survive normalization."""


class InvalidModulus(ValidationError):
    """Apery modulus is not an element of the semigroup."""


# -- gluing -----------------------------------------------------------------

class NotCoprime(ValidationError):
    """gcd(p, q) != 1."""


class PIsGenerator(ValidationError):
    """p coincides with a generator of the left semigroup."""


class QIsGenerator(ValidationError):
    """q coincides with a generator of the right semigroup."""


class PNotInLeft(ValidationError):
    """p has no non-negative representation over the left generators."""


class QNotInRight(ValidationError):
    """q has no non-negative representation over the right generators."""


class Overlap(ValidationError):
    """The scaled generator lists {q*m_i} and {p*n_j} intersect."""


class NotStar(ValidationError):
    """Data does not satisfy the star-gluing condition."""


# -- polynomial engine ------------------------------------------------------

class AmbientMismatch(ValidationError):
    """Operands live over different variable sets."""


class ZeroPolynomial(ValidationError):
    """Operation requires nonzero polynomial input."""


class PreconditionViolated(ValidationError):
    """Basis does not satisfy the documented precondition (order/reducedness)."""


class TooLarge(StarglueError):
    """Computation exceeds the configured size limit."""


class Timeout(StarglueError):
    """Computation exceeded its wall-clock deadline."""


# -- curve criteria ---------------------------------------------------------

class SpecMismatch(ValidationError):
    """Supplied ideals do not belong to the gluing data."""


class NotCohenMacaulay(StarglueError):
    """Gorenstein test invoked on a curve that is not arithmetically CM."""


class InternalInconsistency(StarglueError):
    """Two criteria that must agree disagreed; indicates a bug, never data."""
