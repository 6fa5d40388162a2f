"""Closed-form scattering amplitudes in the symmetric/antisymmetric channels.

For equal waveguide parameters the two physical waveguides decouple into a
free antisymmetric channel (r=0, t=1) and a symmetric channel that scatters
off an N-site segment with the energy-dependent site energy from
:func:`photon_router.core.effective_site_energy`.  A single complex-wavenumber
code path covers both the propagating and the evanescent regime of that
segment; the amplitudes are evaluated in a form with e^{iNk+} factored out so
deep evanescence (large N * Im k+) cannot overflow.
"""

import cmath
import math
from dataclasses import dataclass

from .config import RouterConfig
from .core import (
    EVANESCENT,
    POLE,
    PROPAGATING,
    effective_site_energy,
    wavevector_from_energy,
)
from .errors import ClosedFormUnavailable, OutsideBand


@dataclass(frozen=True)
class ChannelAmplitudes:
    """Reflection/transmission in the virtual S (+) and A (-) channels."""

    r_plus: complex
    t_plus: complex
    r_minus: complex = 0.0 + 0.0j
    t_minus: complex = 1.0 + 0.0j


@dataclass(frozen=True)
class ScatteringAmplitudes:
    r_a: complex
    t_a: complex
    t_b_back: complex
    t_b_fwd: complex


@dataclass(frozen=True)
class ScatteringProbabilities:
    R_a: float
    T_a: float
    T_b_back: float
    T_b_fwd: float

    @property
    def total(self) -> float:
        return self.R_a + self.T_a + self.T_b_back + self.T_b_fwd

    def as_tuple(self):
        return (self.R_a, self.T_a, self.T_b_back, self.T_b_fwd)


def _require_symmetric(cfg: RouterConfig):
    if not cfg.is_symmetric:
        raise ClosedFormUnavailable(
            "closed form requires omega_a=omega_b, xi_a=xi_b, g_a=g_b; "
            "use the oracle solver for asymmetric parameters"
        )


def _lead_wavenumber(E, cfg: RouterConfig) -> float:
    kv = wavevector_from_energy(E, cfg.omega_a, cfg.xi_a, cfg.eps_edge)
    if kv.branch_tag != PROPAGATING:
        raise OutsideBand(f"E={E} does not propagate in the leads")
    return kv.k.real


def s_channel_branch(E, cfg: RouterConfig) -> str:
    """Propagating/evanescent character of the symmetric channel at energy E."""
    _require_symmetric(cfg)
    eps_plus = effective_site_energy(E, cfg)
    if eps_plus is POLE:
        return EVANESCENT
    return wavevector_from_energy(E, eps_plus, cfg.xi_a, cfg.eps_edge).branch_tag


def sa_amplitudes(E, cfg: RouterConfig) -> ChannelAmplitudes:
    """r+ and t+ for an N-site segment of site energy eps+(E) in a free chain.

    At a pole of eps+ the analytic limit t+ = 0, r+ = -e^{2ik} is returned.
    """
    _require_symmetric(cfg)
    k = _lead_wavenumber(E, cfg)
    n = cfg.n_atoms

    eps_plus = effective_site_energy(E, cfg)
    if eps_plus is POLE:
        return ChannelAmplitudes(r_plus=-cmath.exp(2j * k), t_plus=0.0 + 0.0j)

    kp = wavevector_from_energy(E, eps_plus, cfg.xi_a, cfg.eps_edge).k
    cos_k, sin_k = math.cos(k), math.sin(k)
    cos_kp, sin_kp = cmath.cos(kp), cmath.sin(kp)

    s = sin_k * sin_kp
    c = cos_k * cos_kp - 1.0
    lam = cmath.exp(1j * n * kp)  # |lam| <= 1 by the Im(k+) >= 0 branch choice
    lam2 = lam * lam
    den = (s + c) * lam2 + (s - c)
    t_plus = 2.0 * cmath.exp(-1j * k * n) * s * lam / den
    r_plus = -cmath.exp(1j * k) * (cos_k - cos_kp) * (lam2 - 1.0) / den
    return ChannelAmplitudes(r_plus=r_plus, t_plus=t_plus)


def physical_amplitudes(ch: ChannelAmplitudes) -> ScatteringAmplitudes:
    """Recombine virtual-channel amplitudes into the physical a/b channels."""
    half_r = 0.5 * ch.r_plus
    return ScatteringAmplitudes(
        r_a=half_r,
        t_a=0.5 * (ch.t_plus + ch.t_minus),
        t_b_back=half_r,
        t_b_fwd=0.5 * (ch.t_plus - ch.t_minus),
    )


def probabilities(amp: ScatteringAmplitudes) -> ScatteringProbabilities:
    return ScatteringProbabilities(
        R_a=abs(amp.r_a) ** 2,
        T_a=abs(amp.t_a) ** 2,
        T_b_back=abs(amp.t_b_back) ** 2,
        T_b_fwd=abs(amp.t_b_fwd) ** 2,
    )


def scatter(E, cfg: RouterConfig) -> ScatteringProbabilities:
    """Closed-form reflection/transmission/transfer probabilities at energy E."""
    return probabilities(physical_amplitudes(sa_amplitudes(E, cfg)))
