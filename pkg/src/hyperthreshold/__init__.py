"""Laplacian spectra of threshold hypergraphs, exactly and numerically."""

from .closedform import (
    Complement,
    Leaf,
    Union,
    coexpr_spectrum,
    complement_spectrum,
    dominate_spectrum,
    incremental_spectrum,
    k_threshold_spectrum,
    parse_coexpr,
    phi,
    threshold_spectrum,
    union_spectrum,
)
from .construct import build_hypergraph, degree_sequence, parse_code, serialize_code
from .core import Hypergraph, Rational, Spectrum, SquareMatrix, ThresholdCode
from .ferrers import ferrers_from_degrees, ferrers_spectrum, recover_code
from .integrality import certify, predicted_ratio, verify_integral
from .laplacian import laplacian_matrix
from .oracle import compare_spectra, symmetric_eigenvalues

__version__ = "0.1.0"
