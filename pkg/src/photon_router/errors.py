"""Exception types shared across the package."""


class RouterError(Exception):
    """Base class for all domain errors raised by this package."""


class BandEdge(RouterError):
    """Energy is too close to a band edge (sin k -> 0 makes formulas 0/0)."""


class OutsideBand(RouterError):
    """Incident energy does not propagate in the injection waveguide."""


class ClosedFormUnavailable(RouterError):
    """Closed-form amplitudes require equal waveguide parameters and couplings."""


class SingularSystem(RouterError):
    """The dense scattering system produced a pivot below threshold."""


class NoPlateau(RouterError):
    """No flat 1/4 plateau exists for the requested tolerance/window."""
