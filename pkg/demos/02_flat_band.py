"""Width of the equal-splitting plateau.

With strong coupling the 1/4-1/4-1/4-1/4 splitting is not a single point
but a broad plateau around the resonance.  Its width saturates once the
chain is about five atoms long, and a classical drive splits it into two
plateaus centered at the dressed-state energies.
"""

from photon_router import RouterConfig, flat_band_width, poles

print("plateau width vs chain length (g = 1.5, tol = 0.05)")
for n in (1, 2, 3, 5, 6, 7, 10):
    (rep,) = flat_band_width(RouterConfig(g_a=1.5, g_b=1.5, n_atoms=n), tol=0.05)
    print(f"  N = {n:2d}: width = {rep.width:.4f}  [{rep.lo:+.3f}, {rep.hi:+.3f}]")

print("\ndrive on: the plateau splits (rabi = 0.2, g = 0.5)")
cfg = RouterConfig(rabi=0.2, n_atoms=5)
print("  pole energies:", poles(cfg))
for rep in flat_band_width(cfg, tol=0.05):
    print(f"  plateau at {rep.center:+.3f}: width = {rep.width:.4f}")
