"""Four-way splitting at the atomic resonance.

A photon sent down waveguide a meets the atom chain at its resonance and
splits evenly into all four outgoing channels: reflected, transmitted,
and backward/forward into waveguide b.  Away from resonance the chain
turns transparent again.
"""

import numpy as np

from photon_router import RouterConfig, scatter

cfg = RouterConfig(n_atoms=5)

print(f"{'E':>6} {'R_a':>8} {'T_a':>8} {'T_b<-':>8} {'T_b->':>8}")
for E in np.linspace(-1.5, 1.5, 13):
    p = scatter(float(E), cfg)
    print(f"{E:6.2f} {p.R_a:8.4f} {p.T_a:8.4f} {p.T_b_back:8.4f} {p.T_b_fwd:8.4f}")

p0 = scatter(0.0, cfg)
print("\nAt E = 0 every channel gets exactly", p0.R_a)
