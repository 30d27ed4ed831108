"""q-numerical radius of rank-one operators on C^n.

* :mod:`qradius.core` -- inner products, Gram weights, random unit vectors and unitaries
* :mod:`qradius.rankone` -- closed-form radius, lambda_q, witnesses, embeddings, series bounds
* :mod:`qradius.oracle` -- brute-force estimation for arbitrary dense matrices
* :mod:`qradius.verify` -- seedable property suites
* :mod:`qradius.cli` -- command-line interface
"""
from .core import GramWeight, inner, norm, project_off, random_unit, random_unit_orthogonal, random_unitary, substream
from .errors import DegenerateInputError, DimensionError, ParameterError, QRadiusError
from .oracle import OracleConfig, RangePoint, direct_sample, estimate_radius, reduced_objective, sample_range_cloud
from .rankone import (
    PowerSeries,
    RankOnePair,
    analytic_bound,
    analytic_image,
    as_matrix,
    buzano_bound,
    embed_diagonal,
    embed_offdiagonal,
    evaluate_radius,
    lambda_factor,
    profile,
    q_star,
    witness_vectors,
)
from .verify import SuiteReport, run_suite

__version__ = "0.1.0"
