"""Young wall realization of the level-1 highest weight crystals of
U_q(D4(3)) and U_q(G2(1)), with the perfect crystals, energy functions and
path model it is built on."""
from ._kernel import BACKEND
from .cartan import AffineType, Weight, fundamental_weight, parse_weight
from .crystal import CrystalGraph, Report
from .energy import energy_table, solve_energy
from .paths import generate_paths
from .perfect import perfect_crystal, verify_perfect
from .walls import YoungWall, generate_crystal, ground_wall, wall_model

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AffineType", "Weight", "fundamental_weight", "parse_weight",
    "CrystalGraph", "Report", "energy_table", "solve_energy", "generate_paths",
    "perfect_crystal", "verify_perfect", "YoungWall", "generate_crystal",
    "ground_wall", "wall_model",
]
