"""Uniform hypergraphs, their corona products, exact spectra and cospectral constructions."""

__version__ = "0.1.0"

from .corona import (
    MODEL_PAPER,
    MODEL_SEC3,
    CoronaConfig,
    CoronaConstants,
    CoronaError,
    corona_adjacency_blocks,
    corona_combinatorial,
    corona_constants,
    corona_seidel_blocks,
    corona_two,
)
from .cospectral import (
    ConditionReport,
    CospectralCertificate,
    SwitchingPlan,
    apply_switching,
    check_switching_conditions,
    corona_cospectral_pair,
    seidel_cospectral_corona,
)
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    VertexPartition,
    complete_hypergraph,
    degree_profile,
    induced_subhypergraph,
    join,
    star_operation,
)
from .io import ParseError, parse_hg, read_hypergraph, write_hypergraph
from .isomorphism import refute_isomorphism
from .iterate import corona_hypergraph, corona_hypergraph_size, iterated_spectrum
from .linalg import adjacency_matrix, char_poly, coronal, seidel_matrix
from .poly import IntPolynomial, RationalFunction
from .spectrum import Spectrum, numeric_spectrum
from .theorems import (
    ClosedFormSpectrum,
    charpoly_cor32,
    charpoly_generalized_adjacency,
    charpoly_generalized_seidel,
    charpoly_seidel_p1,
    charpoly_via_coronal,
    seidel_spectrum_corona_two,
    spectrum_corona_complete,
    spectrum_corona_two,
)
from .verify import verify

__all__ = [
    "ClosedFormSpectrum",
    "ConditionReport",
    "CoronaConfig",
    "CoronaConstants",
    "CoronaError",
    "CospectralCertificate",
    "Hypergraph",
    "HypergraphError",
    "IntPolynomial",
    "MODEL_PAPER",
    "MODEL_SEC3",
    "ParseError",
    "RationalFunction",
    "Spectrum",
    "SwitchingPlan",
    "VertexPartition",
    "adjacency_matrix",
    "apply_switching",
    "char_poly",
    "charpoly_cor32",
    "charpoly_generalized_adjacency",
    "charpoly_generalized_seidel",
    "charpoly_seidel_p1",
    "charpoly_via_coronal",
    "check_switching_conditions",
    "complete_hypergraph",
    "corona_adjacency_blocks",
    "corona_combinatorial",
    "corona_constants",
    "corona_cospectral_pair",
    "corona_hypergraph",
    "corona_hypergraph_size",
    "corona_seidel_blocks",
    "corona_two",
    "coronal",
    "degree_profile",
    "induced_subhypergraph",
    "iterated_spectrum",
    "join",
    "numeric_spectrum",
    "parse_hg",
    "read_hypergraph",
    "refute_isomorphism",
    "seidel_cospectral_corona",
    "seidel_matrix",
    "seidel_spectrum_corona_two",
    "spectrum_corona_complete",
    "spectrum_corona_two",
    "star_operation",
    "verify",
    "write_hypergraph",
]
