"""Sweeps and derived diagnostics built on the scattering engines.

Every cell of every sweep is a fresh evaluation at that parameter point;
nothing is interpolated.  Sweeps can be evaluated with a thread pool, with
results always gathered in index order so output is deterministic.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .closed_form import ScatteringProbabilities, s_channel_branch, scatter
from .config import RouterConfig
from .core import EVANESCENT, POLE, poles, potential_v
from .errors import NoPlateau, RouterError
from .oracle import oracle_solve

OBSERVABLES = ("T_bfwd", "T_a", "R_a", "T_bback")

_OBS_GETTER = {
    "T_bfwd": lambda p: p.T_b_fwd,
    "T_a": lambda p: p.T_a,
    "R_a": lambda p: p.R_a,
    "T_bback": lambda p: p.T_b_back,
}


@dataclass(frozen=True)
class SpectrumRow:
    E: float
    probs: ScatteringProbabilities
    channel_character: str


@dataclass(frozen=True)
class MapGrid:
    """Dense 2D sweep; ``values[i, j]`` belongs to e_axis[i], param_axis[j]."""

    e_axis: np.ndarray
    param_axis: np.ndarray
    values: np.ndarray
    observable: str


@dataclass(frozen=True)
class FlatBandReport:
    """Maximal interval around one pole where all channels stay near 1/4.

    ``center`` is the pole energy the plateau is anchored to; ``max_dev`` is
    the largest sampled deviation from 1/4 inside [lo, hi].
    """

    center: float
    lo: float
    hi: float
    tol: float
    max_dev: float

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class SwitchReport:
    E_star: float
    omega_off: float
    omega_on: float
    T_a_off: float
    T_bfwd_off: float
    T_a_on: float
    T_bfwd_on: float
    contrast: float
    orientation: str
    target_reached: bool


def scatter_any(E, cfg: RouterConfig, engine="closed") -> ScatteringProbabilities:
    """Dispatch one scattering evaluation to the requested engine.

    ``engine='closed'`` falls back to the oracle for asymmetric parameters.
    Pole energies are always served by the analytic limit, never skipped.
    """
    if engine == "closed" and cfg.is_symmetric:
        return scatter(E, cfg)
    if potential_v(E, cfg) is POLE:
        if cfg.is_symmetric:
            return scatter(E, cfg)
        # asymmetric pole limit: both chains are broken, total reflection
        return ScatteringProbabilities(R_a=1.0, T_a=0.0, T_b_back=0.0, T_b_fwd=0.0)
    if engine == "oracle" or not cfg.is_symmetric:
        return oracle_solve(E, cfg).probs
    return scatter(E, cfg)


def _map_ordered(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def spectrum(cfg, e_lo, e_hi, n_points, engine="closed", threads=None):
    """Uniform-grid probability spectrum over [e_lo, e_hi]."""
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    grid = np.linspace(e_lo, e_hi, n_points)

    def row(E):
        E = float(E)
        try:
            probs = scatter_any(E, cfg, engine)
            if cfg.is_symmetric:
                tag = s_channel_branch(E, cfg) if potential_v(E, cfg) is not POLE else EVANESCENT
            else:
                tag = "n/a"
        except RouterError as exc:
            raise type(exc)(f"{exc} (sweep aborted at E={E})") from exc
        return SpectrumRow(E=E, probs=probs, channel_character=tag)

    return _map_ordered(row, grid, threads)


def map2d(cfg, e_grid, param, param_grid, observable="T_bfwd", engine="closed", threads=None):
    """Dense 2D map of one probability over (E, rabi) or (E, n_atoms)."""
    if param not in ("rabi", "n_atoms"):
        raise ValueError("param must be 'rabi' or 'n_atoms'")
    if observable not in OBSERVABLES:
        raise ValueError(f"observable must be one of {OBSERVABLES}")
    e_axis = np.asarray(e_grid, dtype=float)
    if np.any(np.diff(e_axis) <= 0):
        raise ValueError("energy grid must be strictly increasing")
    if param == "n_atoms":
        p_axis = np.asarray(param_grid)
        if not np.all(p_axis == np.round(p_axis)):
            raise ValueError("n_atoms grid must be integer")
        p_axis = p_axis.astype(int)
    else:
        p_axis = np.asarray(param_grid, dtype=float)
    if len(p_axis) > 1 and np.any(np.diff(p_axis) <= 0):
        raise ValueError("parameter grid must be strictly increasing")
    get = _OBS_GETTER[observable]

    def column(p):
        c = replace(cfg, **{param: int(p) if param == "n_atoms" else float(p)})
        return [get(scatter_any(float(E), c, engine)) for E in e_axis]

    cols = _map_ordered(column, p_axis, threads)
    values = np.array(cols).T  # rows over E, columns over the parameter
    return MapGrid(e_axis=e_axis, param_axis=p_axis, values=values, observable=observable)


def _deviation(E, cfg, engine):
    p = scatter_any(E, cfg, engine)
    return max(abs(x - 0.25) for x in p.as_tuple())


def _bisect_edge(cfg, engine, tol, e_ok, e_bad, resolution=1e-6):
    """Refine the plateau edge between a passing and a failing energy."""
    while abs(e_bad - e_ok) > resolution:
        mid = 0.5 * (e_ok + e_bad)
        try:
            ok = _deviation(mid, cfg, engine) <= tol
        except RouterError:
            ok = False
        if ok:
            e_ok = mid
        else:
            e_bad = mid
    return e_ok


def flat_band_width(cfg, tol=0.05, window=None, engine="closed", n_seed=2001):
    """Measure the 1/4 plateau around each pole inside the search window.

    Raises NoPlateau when no pole lies in the window or the plateau cannot
    be established even at the pole itself.
    """
    if not 0.0 < tol < 0.25:
        raise ValueError("tol must lie in (0, 0.25)")
    band_lo = cfg.omega_a - 2.0 * cfg.xi_a
    band_hi = cfg.omega_a + 2.0 * cfg.xi_a
    margin = 1e-6
    if window is None:
        window = (band_lo + margin, band_hi - margin)
    lo_w = max(window[0], band_lo + margin)
    hi_w = min(window[1], band_hi - margin)

    e_plus, e_minus = poles(cfg)
    targets = [p for p in dict.fromkeys((e_minus, e_plus)) if lo_w < p < hi_w]
    if not targets:
        raise NoPlateau(f"no pole of the atomic potential inside window {window}")

    reports = []
    for pole in targets:
        try:
            if _deviation(pole, cfg, engine) > tol:
                raise NoPlateau(f"probabilities deviate from 1/4 at the pole E={pole}")
        except RouterError as exc:
            raise NoPlateau(str(exc)) from exc

        step = (hi_w - lo_w) / (n_seed - 1)

        def grid_expand(direction):
            e_ok = pole
            while True:
                e_next = e_ok + direction * step
                if not lo_w <= e_next <= hi_w:
                    return e_ok, None
                try:
                    ok = _deviation(e_next, cfg, engine) <= tol
                except RouterError:
                    ok = False
                if not ok:
                    return e_ok, e_next
                e_ok = e_next

        hi_ok, hi_bad = grid_expand(+1.0)
        lo_ok, lo_bad = grid_expand(-1.0)
        hi = hi_ok if hi_bad is None else _bisect_edge(cfg, engine, tol, hi_ok, hi_bad)
        lo = lo_ok if lo_bad is None else _bisect_edge(cfg, engine, tol, lo_ok, lo_bad)

        sample = np.linspace(lo, hi, 201)
        max_dev = 0.0
        for E in sample:
            try:
                max_dev = max(max_dev, _deviation(float(E), cfg, engine))
            except RouterError:
                pass
        reports.append(FlatBandReport(center=pole, lo=lo, hi=hi, tol=tol, max_dev=max_dev))
    return reports


def _switch_probs(E, cfg, rabi, engine):
    return scatter_any(E, replace(cfg, rabi=float(rabi)), engine)


def find_switch(
    cfg,
    e_window,
    omega_on_window,
    contrast_target=0.9,
    omega_off=0.0,
    orientation="forward",
    engine="closed",
    n_coarse=101,
):
    """Search (E, omega_on) maximizing the routing contrast.

    ``forward``: transmit with the drive off, transfer with it on;
    ``reverse``: the opposite.  Deterministic coarse grid plus
    coordinate-descent refinement with step halving down to 1e-4.
    """
    if orientation not in ("forward", "reverse"):
        raise ValueError("orientation must be 'forward' or 'reverse'")
    band_lo = cfg.omega_a - 2.0 * cfg.xi_a + 1e-6
    band_hi = cfg.omega_a + 2.0 * cfg.xi_a - 1e-6
    e_lo, e_hi = max(e_window[0], band_lo), min(e_window[1], band_hi)
    w_lo, w_hi = max(omega_on_window[0], 0.0), omega_on_window[1]

    def contrast_at(E, w_on):
        try:
            off = _switch_probs(E, cfg, omega_off, engine)
            on = _switch_probs(E, cfg, w_on, engine)
        except RouterError:
            return -1.0, None, None
        if orientation == "forward":
            c = min(off.T_a, on.T_b_fwd)
        else:
            c = min(off.T_b_fwd, on.T_a)
        return c, off, on

    best = (-1.0, None, None, None, None)
    for E in np.linspace(e_lo, e_hi, n_coarse):
        for w in np.linspace(w_lo, w_hi, n_coarse):
            c, off, on = contrast_at(float(E), float(w))
            if c > best[0]:
                best = (c, float(E), float(w), off, on)

    c_best, e_best, w_best, off, on = best
    step_e = (e_hi - e_lo) / (n_coarse - 1)
    step_w = max((w_hi - w_lo) / (n_coarse - 1), 1e-4)
    while max(step_e, step_w) > 1e-4:
        improved = True
        while improved:
            improved = False
            for de, dw in ((step_e, 0), (-step_e, 0), (0, step_w), (0, -step_w)):
                e_try = min(max(e_best + de, e_lo), e_hi)
                w_try = min(max(w_best + dw, w_lo), w_hi)
                c, o_off, o_on = contrast_at(e_try, w_try)
                if c > c_best:
                    c_best, e_best, w_best, off, on = c, e_try, w_try, o_off, o_on
                    improved = True
        step_e *= 0.5
        step_w *= 0.5

    return SwitchReport(
        E_star=e_best,
        omega_off=omega_off,
        omega_on=w_best,
        T_a_off=off.T_a,
        T_bfwd_off=off.T_b_fwd,
        T_a_on=on.T_a,
        T_bfwd_on=on.T_b_fwd,
        contrast=c_best,
        orientation=orientation,
        target_reached=c_best >= contrast_target,
    )
