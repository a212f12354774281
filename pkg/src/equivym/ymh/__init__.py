"""Yang-Mills-Higgs numerics on S^2: the abelian reduction, an SU(2) lattice
discretisation, and a string-method saddle search between sectors."""
from .abelian import (
    AbelianProfile,
    DescentConfig,
    SolveReport,
    abelian_energy,
    abelian_minimize,
    discrete_minimizer,
)
from .lattice import (
    BranchError,
    Geometry,
    LatticeField,
    Tangent,
    directional_check,
    embed_abelian,
    lattice_energy,
    lattice_gradient,
    regular_gauge,
    retract,
)
from .saddle import LatticeDescentConfig, SaddleReport, StringConfig, lattice_minimize, saddle_search, sector_minimizer

__all__ = [
    "AbelianProfile", "DescentConfig", "SolveReport", "abelian_energy", "abelian_minimize",
    "discrete_minimizer", "BranchError", "Geometry", "LatticeField", "Tangent", "directional_check",
    "embed_abelian", "lattice_energy", "lattice_gradient", "regular_gauge", "retract",
    "LatticeDescentConfig", "SaddleReport", "StringConfig", "lattice_minimize", "saddle_search",
    "sector_minimizer",
]
