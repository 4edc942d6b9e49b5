"""Finite-scale coherent spaces, bounded duals, and Ramsey witness
extraction, with a law-checking service and CLI on top."""

from .bounded import (
    check_clique_dual_law,
    check_incoherence_closure_laws,
    closure_m,
    dual_m,
    fin_k,
    min_anticlique_cover_bounds,
)
from .category import (
    Relation,
    bang_multiset_counts,
    bang_web_set,
    compose,
    hom_space,
    identity,
    is_coh_morphism,
    is_finbounded_morphism,
    iso_witness_in_set,
    non_fullness_witness,
    transpose,
)
from .ramsey import (
    EdgeColoring,
    RamseyWitness,
    dichotomy_extract,
    find_mono,
    ramsey_exact,
    ramsey_upper,
    tensor_anticlique_extract,
)
from .reports import LawReport
from .spaces import (
    CoherentSpace,
    SetFamily,
    alpha,
    cliques,
    complete,
    discrete,
    disjoint_kn,
    dual,
    is_clique,
    mk_space,
    omega,
    path,
    plus,
    tensor,
)
from .words import (
    EventuallyPeriodicWord,
    canonicalize,
    common_prefix_len,
    down_set,
    intersection_size,
    separation_witness,
)

__version__ = "0.1.0"
