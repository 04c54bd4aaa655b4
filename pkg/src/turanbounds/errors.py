"""Typed exceptions raised across the package."""


class TuranBoundsError(Exception):
    """Base class for all package errors."""


class DescriptorError(TuranBoundsError, ValueError):
    """Malformed domain descriptor string."""


class ParameterError(TuranBoundsError, ValueError):
    """Domain or operation parameter outside its legal range."""


class DegenerateDomainError(TuranBoundsError, ValueError):
    """Operation requires a domain with nonempty interior."""


class GeometryInconsistencyError(TuranBoundsError, RuntimeError):
    """Boundary data contradicts convexity (e.g. a normal fails to support)."""


class NearRootError(TuranBoundsError, ValueError):
    """Evaluation point too close to a root for the logarithmic-derivative path."""


class RootContainmentError(TuranBoundsError, ValueError):
    """A polynomial root lies outside the domain it is constrained to."""

    def __init__(self, root: complex, descriptor: str, margin: float):
        self.root = root
        self.descriptor = descriptor
        self.margin = margin
        super().__init__(
            f"root {root} lies outside domain '{descriptor}' by {margin:.3e}"
        )


class SearchBudgetError(TuranBoundsError, ValueError):
    """Evaluation or combinatorial budget too small / exceeded."""
