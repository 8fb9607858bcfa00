"""Split-step Active Flux schemes for the 1D1V Vlasov-Poisson system."""

from .config import SimConfig, from_mapping, parse_config
from .errors import AfvpError, CFLError, ConfigError
from .grids import (
    Domain,
    HomogeneousGrid,
    InhomogeneousGrid,
    InitialCondition,
    init_homogeneous,
    init_inhomogeneous,
)
from .operators import make_scheme
from .poisson import FieldProfile, solve_field, solve_poisson_spectral
from .runner import RunResult, convergence, run, simulate
from .splitting import SimState, step

__all__ = [
    "AfvpError",
    "CFLError",
    "ConfigError",
    "Domain",
    "FieldProfile",
    "HomogeneousGrid",
    "InhomogeneousGrid",
    "InitialCondition",
    "RunResult",
    "SimConfig",
    "SimState",
    "convergence",
    "from_mapping",
    "init_homogeneous",
    "init_inhomogeneous",
    "make_scheme",
    "parse_config",
    "run",
    "simulate",
    "solve_field",
    "solve_poisson_spectral",
    "step",
]

__version__ = "0.1.0"
