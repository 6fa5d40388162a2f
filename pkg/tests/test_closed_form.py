import cmath
import math

import numpy as np
import pytest

from photon_router import (
    ChannelAmplitudes,
    ClosedFormUnavailable,
    OutsideBand,
    RouterConfig,
    ScatteringAmplitudes,
    oracle_solve,
    physical_amplitudes,
    probabilities,
    sa_amplitudes,
    scatter,
    wavevector_from_energy,
)

# oracle-confirmed amplitude for E=0.6, N=2, g=0.5, no drive, all omegas zero
T_PLUS_E06_N2 = 0.6460670857075722 - 0.7565164318350915j


def in_band_grid(n=101, lo=-1.95, hi=1.95):
    return np.linspace(lo, hi, n)


class TestSaAmplitudes:
    def test_decoupled_is_free(self):
        cfg = RouterConfig(g_a=0.0, g_b=0.0)
        ch = sa_amplitudes(0.37, cfg)
        assert ch.r_plus == pytest.approx(0.0, abs=1e-14)
        assert ch.t_plus == pytest.approx(1.0, abs=1e-14)

    def test_pole_limit(self):
        cfg = RouterConfig(n_atoms=3)
        ch = sa_amplitudes(0.0, cfg)  # degenerate pole at the band center
        assert ch.t_plus == 0.0
        assert abs(ch.r_plus) == pytest.approx(1.0)
        k = wavevector_from_energy(0.0, 0.0, 1.0).k.real
        assert ch.r_plus == pytest.approx(-cmath.exp(2j * k))

    def test_frozen_value_matches_oracle(self):
        cfg = RouterConfig(n_atoms=2)
        ch = sa_amplitudes(0.6, cfg)
        assert ch.t_plus == pytest.approx(T_PLUS_E06_N2, abs=1e-10)
        sol = oracle_solve(0.6, cfg)
        assert sol.amps.t_a + sol.amps.t_b_fwd == pytest.approx(ch.t_plus, abs=1e-12)

    def test_unitarity_when_propagating(self):
        cfg = RouterConfig(n_atoms=7, g_a=0.8, g_b=0.8, rabi=0.4)
        for E in in_band_grid():
            ch = sa_amplitudes(float(E), cfg)
            from photon_router import POLE, effective_site_energy

            eps = effective_site_energy(float(E), cfg)
            if eps is POLE:
                continue
            if abs((eps - E) / 2.0) < 1.0:
                assert abs(ch.r_plus) ** 2 + abs(ch.t_plus) ** 2 == pytest.approx(
                    1.0, abs=1e-10
                )

    def test_transparency_at_omega_s(self):
        cfg = RouterConfig(rabi=0.6, omega_s=0.45, n_atoms=9)
        p = scatter(0.45, cfg)
        assert p.T_a == pytest.approx(1.0, abs=1e-15)
        for leak in (p.R_a, p.T_b_back, p.T_b_fwd):
            assert leak < 1e-30

    def test_requires_symmetry(self):
        with pytest.raises(ClosedFormUnavailable):
            sa_amplitudes(0.5, RouterConfig(omega_b=0.3))

    def test_outside_band(self):
        with pytest.raises(OutsideBand):
            sa_amplitudes(2.5, RouterConfig())

    def test_deep_evanescence_does_not_overflow(self):
        cfg = RouterConfig(n_atoms=100)
        ch = sa_amplitudes(1e-4, cfg)
        assert ch.t_plus == pytest.approx(0.0, abs=1e-200)
        assert abs(ch.r_plus) == pytest.approx(1.0, abs=1e-12)


class TestRecombination:
    def test_free_propagation(self):
        amp = physical_amplitudes(ChannelAmplitudes(r_plus=0.0, t_plus=1.0))
        assert amp.t_a == 1.0
        assert amp.r_a == amp.t_b_back == amp.t_b_fwd == 0.0

    def test_perfect_forward_transfer(self):
        amp = physical_amplitudes(ChannelAmplitudes(r_plus=0.0, t_plus=-1.0))
        assert amp.t_b_fwd == -1.0
        assert amp.t_a == 0.0 and amp.r_a == 0.0

    def test_four_way_split_at_pole(self):
        amp = physical_amplitudes(ChannelAmplitudes(r_plus=-1.0, t_plus=0.0))
        p = probabilities(amp)
        assert p.as_tuple() == pytest.approx((0.25, 0.25, 0.25, 0.25))

    def test_probability_examples(self):
        assert probabilities(
            ScatteringAmplitudes(0.0, 1.0, 0.0, 0.0)
        ).as_tuple() == (0.0, 1.0, 0.0, 0.0)
        half = 0.5 * cmath.exp(0.3j)
        assert probabilities(
            ScatteringAmplitudes(half, half, half, half)
        ).as_tuple() == pytest.approx((0.25,) * 4)
        assert probabilities(
            ScatteringAmplitudes(0.0, 0.0, 0.0, -1.0)
        ).as_tuple() == (0.0, 0.0, 0.0, 1.0)


class TestScatter:
    def test_quarter_split_at_band_center(self):
        p = scatter(0.0, RouterConfig(n_atoms=5))
        assert p.as_tuple() == pytest.approx((0.25,) * 4, abs=1e-14)

    def test_free_when_uncoupled(self):
        p = scatter(0.5, RouterConfig(g_a=0.0, g_b=0.0, n_atoms=8))
        assert p.as_tuple() == pytest.approx((0.0, 1.0, 0.0, 0.0), abs=1e-14)

    def test_driven_case_matches_oracle(self):
        cfg = RouterConfig(n_atoms=12, rabi=0.2)
        p = scatter(0.3, cfg)
        q = oracle_solve(0.3, cfg).probs
        assert p.as_tuple() == pytest.approx(q.as_tuple(), abs=1e-10)


class TestInvariants:
    @pytest.mark.parametrize("rabi", [0.0, 0.85])
    def test_flow_conservation(self, rabi):
        cfg = RouterConfig(n_atoms=12, rabi=rabi, omega_s=-0.2)
        for E in in_band_grid():
            p = scatter(float(E), cfg)
            assert p.total == pytest.approx(1.0, abs=1e-12)

    def test_backward_transfer_equals_reflection(self):
        cfg = RouterConfig(n_atoms=6, rabi=0.3)
        for E in in_band_grid(41):
            p = scatter(float(E), cfg)
            assert p.R_a == p.T_b_back  # identical recombination, exact

    def test_transmission_transfer_identities(self):
        cfg = RouterConfig(n_atoms=9, g_a=0.7, g_b=0.7, rabi=0.15)
        for E in in_band_grid(41):
            ch = sa_amplitudes(float(E), cfg)
            p = probabilities(physical_amplitudes(ch))
            assert p.T_a - p.T_b_fwd == pytest.approx(ch.t_plus.real, abs=1e-13)
            assert p.T_a + p.T_b_fwd == pytest.approx(
                (abs(ch.t_plus) ** 2 + 1.0) / 2.0, abs=1e-13
            )

    def test_mirror_symmetry(self):
        cfg = RouterConfig(n_atoms=5, rabi=0.2)
        for E in in_band_grid(81, -1.9, 1.9):
            p = scatter(float(E), cfg)
            q = scatter(float(-E), cfg)
            assert p.as_tuple() == pytest.approx(q.as_tuple(), abs=1e-12)

    def test_exponential_suppression_near_pole(self):
        cfg = RouterConfig()
        E = 0.05
        mags = []
        for n in range(4, 21):
            ch = sa_amplitudes(E, RouterConfig(n_atoms=n))
            mags.append(abs(ch.t_plus))
        assert all(b < a for a, b in zip(mags, mags[1:]))
        from photon_router import effective_site_energy

        kappa = wavevector_from_energy(E, effective_site_energy(E, cfg), 1.0).kappa
        slopes = np.diff(np.log(mags))
        assert np.allclose(slopes, -kappa, rtol=1e-6)
