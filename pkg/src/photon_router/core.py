"""Dispersion relations, the energy-dependent atomic potential and its poles.

Everything here is a pure function of its arguments.  Energies are in units
of the nearest-neighbor hopping.
"""

import cmath
import math
from dataclasses import dataclass

from .config import RouterConfig
from .errors import BandEdge, ClosedFormUnavailable


class _PoleTag:
    """Sentinel returned where the atomic potential diverges."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "POLE"


POLE = _PoleTag()

PROPAGATING = "propagating"
EVANESCENT = "evanescent"


@dataclass(frozen=True)
class WaveVector:
    """Complex wavenumber in radians per lattice site.

    Propagating solutions have Im(k) = 0 and 0 < Re(k) < pi; evanescent ones
    have Im(k) > 0 so that e^{ikj} decays into the scattering region.
    """

    k: complex
    branch_tag: str

    @property
    def kappa(self) -> float:
        """Decay rate per site (zero on the propagating branch)."""
        return self.k.imag


def dispersion_energy(k, omega, xi):
    """Band energy omega - 2 xi cos k of a uniform resonator chain."""
    return omega - 2.0 * xi * math.cos(k)


def wavevector_from_energy(E, omega, xi, eps_edge=1e-9) -> WaveVector:
    """Invert the cosine band, choosing the decaying branch off the band.

    Raises BandEdge when cos k is within ``eps_edge`` of +-1, where sin k -> 0
    makes every downstream scattering formula 0/0.
    """
    c = (omega - E) / (2.0 * xi)
    if abs(abs(c) - 1.0) < eps_edge:
        raise BandEdge(f"E={E} is within {eps_edge} of a band edge of omega={omega}")
    if abs(c) < 1.0:
        return WaveVector(complex(math.acos(c)), PROPAGATING)
    k = cmath.acos(complex(c))
    if k.imag < 0.0:
        k = k.conjugate()
    return WaveVector(k, EVANESCENT)


def potential_v(E, cfg: RouterConfig):
    """Effective atomic potential V(E), or POLE where it diverges.

    For zero drive the algebraically reduced form 1/(E - omega_e) is used,
    which removes the spurious 0/0 at E = omega_s.
    """
    w_s = cfg.omega_s_effective
    eps = cfg.eps_pole * max(1.0, E * E)
    if cfg.rabi == 0.0:
        den = E - cfg.omega_e
        if abs(den) < eps:
            return POLE
        return 1.0 / den
    den = (E - w_s) * (E - cfg.omega_e) - cfg.rabi**2
    if abs(den) < eps:
        return POLE
    return (E - w_s) / den


def poles(cfg: RouterConfig):
    """Pole energies (E_plus, E_minus) of the atomic potential, E_plus >= E_minus."""
    w_s = cfg.omega_s_effective
    d = math.hypot(cfg.omega_e - w_s, 2.0 * cfg.rabi)
    mid = 0.5 * (cfg.omega_e + w_s)
    return (mid + 0.5 * d, mid - 0.5 * d)


def effective_site_energy(E, cfg: RouterConfig):
    """Site energy omega_0 + 2 g^2 V(E) of the symmetric channel.

    Only defined in the equal-parameter regime; propagates the POLE tag.
    """
    if not cfg.is_symmetric:
        raise ClosedFormUnavailable(
            "effective site energy requires omega_a=omega_b, xi_a=xi_b, g_a=g_b"
        )
    if cfg.g_a == 0.0:
        return cfg.omega_a  # uncoupled atoms leave the chain untouched
    v = potential_v(E, cfg)
    if v is POLE:
        return POLE
    return cfg.omega_a + 2.0 * cfg.g_a**2 * v
