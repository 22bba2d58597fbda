"""Exact computations on torus-fixed points of the Hilbert scheme of points in the plane.

Monomial ideals and gradings, significant arrows and universal families over
cells, dominance posets and the spine graph, symbolic Macaulay matrices and
their maximal minors, and per-degree matroids of specialized ideals.
"""

from __future__ import annotations

from .arrows import (
    Arrow,
    Path,
    UniversalFamily,
    all_paths_from,
    direct_path,
    negative_arrows,
    paths_from,
    positive_arrows,
    universal_generators,
    universal_generators_pathsum,
)
from .macaulay import (
    MacaulayMatrix,
    MinorGuardError,
    bar_quotient,
    direct_path_certificate,
    macaulay_matrix,
    verify_minors_nonzero,
)
from .matroid import Matroid
from .polyring import CPolynomial, PrimeField, RationalField, determinant, maximal_minors
from .poset import (
    DominancePoset,
    SpineGraph,
    coprime_gradings,
    dominance_leq,
    lex_extremes,
    poset_hasse,
    spine_graph,
)
from .specialize import (
    edge_probe,
    initial_ideal,
    matroid_of_degree,
    specialize_ideal,
    specialized_hilbert_function,
    tropical_fingerprint,
)
from .staircase import (
    STANDARD,
    Grading,
    HilbertFunction,
    Monomial,
    MonomialIdeal,
    enumerate_ideals,
    graded_hilbert_function,
    ideals_with_hf,
    make_ideal,
)

__version__ = "0.1.0"
