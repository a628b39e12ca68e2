"""Exception hierarchy shared by all modules."""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class CompositeModulus(ToolkitError):
    """The claimed prime characteristic is composite."""


class ReducibleModulus(ToolkitError):
    """The extension modulus factors over the base field."""


class DivisionByZero(ToolkitError):
    """Inversion of zero, or division by the zero polynomial."""


class CtxMismatch(ToolkitError):
    """Operands belong to different field contexts."""


class NotASquare(ToolkitError):
    """Square root requested for a quadratic non-residue."""


class NotDivisible(ToolkitError):
    """Exact polynomial division has a nonzero remainder."""


class ZeroPolynomial(ToolkitError):
    """Operation undefined for the zero polynomial."""


class NotSquarefree(ToolkitError):
    """A squarefree polynomial was required."""


class CZero(ToolkitError):
    """The boomerang scaling constant c must be nonzero."""


class AZero(ToolkitError):
    """The boomerang input difference a must be nonzero."""


class NotAPermutation(ToolkitError):
    """The permutation-based count requires a bijective value table."""


class BudgetExceeded(ToolkitError):
    """An exhaustive scan was refused because the field is too large."""


class NoBound(ToolkitError):
    """No uniformity bound applies (degree shares a factor with q)."""


class DegenerateTriangle(ToolkitError):
    """Three collinear points do not span a triangle."""


class Inapplicable(ToolkitError):
    """The irreducibility certificate's hypotheses are not met."""


class CertificateError(ToolkitError):
    """A certificate check failed although the hypotheses held."""


class NotZeroDimensional(ToolkitError):
    """Term order conversion requires a zero-dimensional ideal."""


class FixtureMismatch(ToolkitError):
    """A recomputed fixture differs from the embedded expected data.

    The ``diffs`` attribute lists one human-readable line per differing
    field.
    """

    def __init__(self, name, diffs):
        self.name = name
        self.diffs = list(diffs)
        super().__init__(f"fixture {name}: " + "; ".join(self.diffs))
