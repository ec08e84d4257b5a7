"""Exception hierarchy for domain and frame failures."""


class FinsleroidError(Exception):
    """Base class for all errors raised by this package."""


class TetradDegenerate(FinsleroidError):
    """The four covectors do not span the tangent space (singular metric)."""


class NotFutureTimelike(FinsleroidError):
    """The timelike projection b of the vector is not strictly positive."""


class OutsideAxialRegion(FinsleroidError):
    """The axial projection w3 is not strictly positive."""


class OutsideEtaDomain(FinsleroidError):
    """Hyperbolic angle below the admissible minimum (negative radicand)."""


class ThetaPole(FinsleroidError):
    """Azimuthal angle at or beyond the pole of the angular profile."""


class OutsideRadialDomain(FinsleroidError):
    """Radial value not reachable by the hyperbolic-angle parametrization.

    Carries the admissible open interval as ``r_min`` / ``r_sup``.
    """

    def __init__(self, r, r_min, r_sup):
        super().__init__(
            f"r={r!r} outside the admissible interval ({r_min!r}, {r_sup!r})"
        )
        self.r = r
        self.r_min = r_min
        self.r_sup = r_sup


class EmptyDomain(FinsleroidError):
    """No hyperbolic angle admissible for the given parameters."""


class OutsideClosedFormDomain(FinsleroidError):
    """Fractional-power base non-positive in the isotropic closed form."""


class PolarAxisSingular(FinsleroidError):
    """Quantity undefined on the polar axis (vanishing transversal part)."""


class StencilOutOfDomain(FinsleroidError):
    """A finite-difference stencil would leave the admissible angle domain."""
