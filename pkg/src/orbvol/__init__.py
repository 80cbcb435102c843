"""Lower bounds for hyperbolic n-orbifold volumes, from the Lie algebra up.

The pipeline: build o(n,1) and its canonical metric (lie_core), bound the
sectional curvature of the group (curvature), take the Zassenhaus-ball
radius for SO_o(n,1) (wang), and divide a Gunther ball volume by Vol[SO(n)]
in log space (volume).  known_bounds supplies published comparison values
and the cli module exposes everything as subcommands.
"""

from .lie_core import AlgebraVector, BasisIndex, Metric, StructureTable
from .volume import BallSpec, BoundReport, orbifold_bound
from .wang import RGResult, WangConstants

__all__ = [
    "AlgebraVector",
    "BallSpec",
    "BasisIndex",
    "BoundReport",
    "Metric",
    "RGResult",
    "StructureTable",
    "WangConstants",
    "orbifold_bound",
]

__version__ = "0.1.0"
