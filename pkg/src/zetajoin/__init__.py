"""Exact Ihara zeta functions, spectra and spanning-tree counts of graphs,
with verified closed forms for joins of semi-regular bipartite graphs."""

from .errors import (
    BiconditionalViolation,
    ConstantTermNotOneError,
    DegreeOneWarning,
    DisconnectedError,
    DuplicateEdgeError,
    ExactDivisionFailure,
    IdentityViolation,
    IntegralityViolation,
    LoopEdgeError,
    NoConvergenceError,
    NotBipartiteError,
    NotRegularError,
    NotSemiRegularError,
    NotSymmetricError,
    OracleMismatchError,
    OutOfRangeError,
    ZetaJoinError,
)
from .graphs import (
    Graph,
    SemiRegularBipartite,
    build_graph,
    detect_semiregular,
    gen_complete_bipartite,
    gen_crown,
    gen_even_cycle,
    gen_subdivision,
    graph_from_dict,
    graph_from_json,
    join,
)
from .joinform import (
    ClosedFormZeta,
    CorpusConfig,
    CorpusPair,
    CospectralReport,
    CycleJoinReport,
    FactorSpectrum,
    JoinParams,
    JoinSpectrum,
    JoinVerification,
    corpus,
    corpus_factors,
    cospectral_iff_zeta,
    factor_spectrum,
    join_params,
    no_symmetric_roots_check,
    quartic_f,
    spectrum_closed_form,
    tau_closed_form,
    tau_complete_multipartite,
    tau_cycle_join,
    verify_join,
    zeta_closed_form,
)
from .matrices import (
    IntMatrix,
    PolyMatrix,
    adjugate,
    bareiss_det,
    charpoly,
    poly_of_matrix,
    polymat_det,
)
from .numeric import PolynomialRoots, jacobi_eigenvalues, real_roots
from .polynomials import (
    IntPoly,
    RatPoly,
    interpolate_at_integers,
    interpolation_points,
    poly_gcd,
    series_log,
    squarefree_decomposition,
)
from .zeta import (
    HashimotoMatrix,
    ZetaReport,
    bass_poly,
    edge_zeta_reciprocal,
    hashimoto,
    nb_walk_series,
    northshield_check,
    spanning_trees,
    zeta_log_series,
    zeta_reciprocal,
    zeta_report,
)

__version__ = "0.1.0"
