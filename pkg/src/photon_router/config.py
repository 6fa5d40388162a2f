"""Physical parameter container for the two-waveguide router."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RouterConfig:
    """All physical parameters, in units of the hopping xi.

    ``omega_s`` is the third-level energy already in the rotating frame.
    ``nu`` (the drive frequency) is kept for bookkeeping only; set
    ``include_nu=True`` to have all formulas use ``omega_s + nu`` instead.
    """

    omega_a: float = 0.0
    omega_b: float = 0.0
    xi_a: float = 1.0
    xi_b: float = 1.0
    g_a: float = 0.5
    g_b: float = 0.5
    omega_e: float = 0.0
    omega_s: float = 0.0
    nu: float = 0.0
    rabi: float = 0.0
    n_atoms: int = 5
    include_nu: bool = False
    eps_pole: float = 1e-12
    eps_edge: float = 1e-9

    def __post_init__(self):
        if self.xi_a <= 0 or self.xi_b <= 0:
            raise ValueError("hoppings must satisfy xi_a > 0 and xi_b > 0")
        if not isinstance(self.n_atoms, int) or self.n_atoms < 1:
            raise ValueError("n_atoms must be an integer >= 1")
        if self.rabi < 0:
            raise ValueError("rabi must be >= 0")
        if self.g_a < 0 or self.g_b < 0:
            raise ValueError("couplings must satisfy g_a >= 0 and g_b >= 0")
        if self.eps_pole <= 0 or self.eps_edge <= 0:
            raise ValueError("eps_pole and eps_edge must be positive")

    @property
    def omega_s_effective(self) -> float:
        return self.omega_s + self.nu if self.include_nu else self.omega_s

    @property
    def is_symmetric(self) -> bool:
        """True in the maximum-overlap regime where the closed form applies."""
        return (
            self.omega_a == self.omega_b
            and self.xi_a == self.xi_b
            and self.g_a == self.g_b
        )

    def swapped(self) -> "RouterConfig":
        """Config with the a and b waveguide roles exchanged."""
        return replace(
            self,
            omega_a=self.omega_b,
            omega_b=self.omega_a,
            xi_a=self.xi_b,
            xi_b=self.xi_a,
            g_a=self.g_b,
            g_b=self.g_a,
        )
