"""Closed-form vs oracle equivalence suite over random equal-parameter configs."""

from dataclasses import dataclass

import numpy as np

from .closed_form import scatter
from .config import RouterConfig
from .core import poles
from .oracle import oracle_solve

_EXCLUSION = 1e-6


@dataclass(frozen=True)
class ValidationResult:
    n_samples: int
    max_prob_dev: float
    max_flow_dev_closed: float
    max_flow_dev_oracle: float
    worst_config: RouterConfig
    worst_energy: float

    def passed(self, tol=1e-9) -> bool:
        return (
            self.max_prob_dev < tol
            and self.max_flow_dev_closed < 1e-12
            and self.max_flow_dev_oracle < 1e-10
        )


def draw_config(rng) -> RouterConfig:
    return RouterConfig(
        g_a=(g := float(rng.uniform(0.1, 2.0))),
        g_b=g,
        rabi=float(rng.uniform(0.0, 1.5)),
        omega_e=float(rng.uniform(-1.0, 1.0)),
        omega_s=float(rng.uniform(-1.0, 1.0)),
        n_atoms=int(rng.integers(1, 21)),
    )


def draw_energy(rng, cfg) -> float:
    """In-band energy away from band edges and potential poles."""
    lo = cfg.omega_a - 2.0 * cfg.xi_a
    hi = cfg.omega_a + 2.0 * cfg.xi_a
    bad = poles(cfg)
    while True:
        e = float(rng.uniform(lo, hi))
        if e - lo < _EXCLUSION or hi - e < _EXCLUSION:
            continue
        if any(abs(e - p) < _EXCLUSION for p in bad):
            continue
        return e


def run_equivalence_suite(n_samples=1000, seed=20260824) -> ValidationResult:
    rng = np.random.default_rng(seed)
    max_dev = 0.0
    max_flow_c = 0.0
    max_flow_o = 0.0
    worst_cfg = None
    worst_e = 0.0
    for _ in range(n_samples):
        cfg = draw_config(rng)
        e = draw_energy(rng, cfg)
        p_closed = scatter(e, cfg)
        p_oracle = oracle_solve(e, cfg).probs
        dev = max(
            abs(a - b)
            for a, b in zip(p_closed.as_tuple(), p_oracle.as_tuple())
        )
        if dev > max_dev:
            max_dev, worst_cfg, worst_e = dev, cfg, e
        max_flow_c = max(max_flow_c, abs(p_closed.total - 1.0))
        max_flow_o = max(max_flow_o, abs(p_oracle.total - 1.0))
    return ValidationResult(
        n_samples=n_samples,
        max_prob_dev=max_dev,
        max_flow_dev_closed=max_flow_c,
        max_flow_dev_oracle=max_flow_o,
        worst_config=worst_cfg,
        worst_energy=worst_e,
    )
