"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name) so the CLI
can report failures uniformly; messages are for humans.
"""

from __future__ import annotations


class CuspBoundsError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# ---------------------------------------------------------------- diagrams

class MalformedToken(CuspBoundsError):
    """Input text does not match the PD-code or braid grammar."""


class EmptyDiagram(CuspBoundsError):
    """A diagram with zero crossings; none of the bounds apply."""


class EdgeLabelUsedOtherThanTwice(CuspBoundsError):
    """Each edge label must occur in exactly two crossing slots."""


class MultiComponentLink(CuspBoundsError):
    """Strand tracing found more than one closed component."""


class NonPlanarDiagram(CuspBoundsError):
    """Rotation-system face count disagrees with the Euler formula."""


class FewerThanTwoStrands(CuspBoundsError):
    """Braid words need at least two strands."""


class BadGeneratorIndex(CuspBoundsError):
    """Braid generator index outside 1..n-1."""


class ZeroExponent(CuspBoundsError):
    """Braid syllable with exponent zero."""


class ClosureIsLink(CuspBoundsError):
    """Braid closure has more than one component."""


# ------------------------------------------------------------ state machinery

class StateLengthMismatch(CuspBoundsError):
    """A resolution choice must pick one smoothing per crossing."""


class NonIntegerGenus(CuspBoundsError):
    """2 - vA - vB + c came out odd; the diagram data is corrupted."""


class NonAlternatingBigon(CuspBoundsError):
    """A bigon whose strands do not alternate: the diagram is not reduced
    (a type-II move would cancel the two crossings)."""

    def __init__(self, message: str, face=None):
        super().__init__(message)
        self.face = face


# --------------------------------------------------------------- bounds

class NonPositiveBudget(CuspBoundsError):
    """Length budgets must be positive."""


class NotAdequate(CuspBoundsError):
    """Bounds requested for a diagram that is not adequate."""


class MoebiusBand(CuspBoundsError):
    """A checkerboard surface with zero Euler characteristic; the diagram
    belongs to a (2, p) torus knot and the hyperbolic bounds do not apply."""


class DegenerateTorusDiagram(CuspBoundsError):
    """Twist machinery invoked on an all-bigon-cycle diagram."""


class TooFewTwistRegions(CuspBoundsError):
    """Twist-count bound is vacuous for this few twist regions."""


class NotOddOrTooSmall(CuspBoundsError):
    """Pretzel parameters must be odd integers greater than one."""


class NoApplicableBound(CuspBoundsError):
    """No bounding rule applies to the given input."""


# --------------------------------------------------------------- surgery

class DegenerateDenominator(CuspBoundsError):
    """3c + 6g - 6 must be positive for the slope-length bound."""


class SlopeTooSmall(CuspBoundsError):
    """|q| below the threshold required by the volume estimate."""


class NonPositiveVolume(CuspBoundsError):
    """Volumes must be positive."""


# --------------------------------------------------------------- batch

class MissingHeader(CuspBoundsError):
    """Reference CSV lacks the required header row."""


class FileUnreadable(CuspBoundsError):
    """Reference CSV could not be opened or decoded."""
