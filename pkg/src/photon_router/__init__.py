"""Single-photon transport through two coupled-resonator waveguides bridged
by externally driven three-level atoms.

Two independent engines compute reflection, transmission, and inter-waveguide
transfer: a closed form valid for equal waveguide parameters, and a dense
linear-system solver valid for arbitrary parameters.  The analysis layer adds
spectra, 2D maps, flat-band width measurement, and routing-contrast search.
"""

from .analysis import (
    FlatBandReport,
    MapGrid,
    SpectrumRow,
    SwitchReport,
    find_switch,
    flat_band_width,
    map2d,
    scatter_any,
    spectrum,
)
from .closed_form import (
    ChannelAmplitudes,
    ScatteringAmplitudes,
    ScatteringProbabilities,
    physical_amplitudes,
    probabilities,
    sa_amplitudes,
    scatter,
)
from .config import RouterConfig
from .core import (
    EVANESCENT,
    POLE,
    PROPAGATING,
    WaveVector,
    dispersion_energy,
    effective_site_energy,
    poles,
    potential_v,
    wavevector_from_energy,
)
from .errors import (
    BandEdge,
    ClosedFormUnavailable,
    NoPlateau,
    OutsideBand,
    RouterError,
    SingularSystem,
)
from .oracle import OracleSolution, oracle_sa_check, oracle_solve
from .validation import run_equivalence_suite

__all__ = [
    "BandEdge",
    "ChannelAmplitudes",
    "ClosedFormUnavailable",
    "EVANESCENT",
    "FlatBandReport",
    "MapGrid",
    "NoPlateau",
    "OracleSolution",
    "OutsideBand",
    "POLE",
    "PROPAGATING",
    "RouterConfig",
    "RouterError",
    "ScatteringAmplitudes",
    "ScatteringProbabilities",
    "SingularSystem",
    "SpectrumRow",
    "SwitchReport",
    "WaveVector",
    "dispersion_energy",
    "effective_site_energy",
    "find_switch",
    "flat_band_width",
    "map2d",
    "oracle_sa_check",
    "oracle_solve",
    "physical_amplitudes",
    "poles",
    "potential_v",
    "probabilities",
    "run_equivalence_suite",
    "sa_amplitudes",
    "scatter",
    "scatter_any",
    "spectrum",
    "wavevector_from_energy",
]
