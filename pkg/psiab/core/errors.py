"""Exception types raised by the numerical modules."""


class PsiabError(Exception):
    """Base class for every error raised by psiab."""


class PreconditionError(PsiabError, ValueError):
    """An argument lies outside the documented range."""


class DomainError(PsiabError, ValueError):
    """Evaluation at a branch point or on a branch cut."""


class BracketError(PsiabError, ValueError):
    """The bracket handed to a root finder has no sign change."""


class IntegrationError(PsiabError, ArithmeticError):
    """Adaptive quadrature did not reach its tolerance."""


class InconsistencyError(PsiabError, RuntimeError):
    """A computed quantity contradicts the structure it should have."""


class MonotonicityError(PsiabError, RuntimeError):
    """A containment margin that should decrease with the radius did not."""


class DegenerateDomainError(PsiabError, RuntimeError):
    """A boundary polygon with fewer than three vertices."""
