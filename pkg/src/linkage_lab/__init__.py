"""Exact computational workbench for linkage of graded modules.

Modules are finitely presented graded modules over standard graded
quotients k[x_1..x_n]/I, held as explicit presentations with twist
bookkeeping.  The package computes transposes, syzygies, the linkage
operator, Ext/Tor, and homological invariants (depth, dimension,
G-dimension relative to a semidualizing module, Serre-type depth
conditions, Auslander-class membership), and mechanically checks a
battery of linkage theorems on concrete instances, reporting exact or
bounded evidence for every claim.
"""

from .config import Budgets, default_bound
from .corpus import classical_rings, corpus_pool, generate_corpus, maximal_ideal
from .dsl import DslError, parse, pretty_print
from .errors import BudgetError, HomogeneityError, InapplicableError
from .fields import GF, QQ, field_from_name
from .homops import (
    dual,
    ext,
    hom_module,
    is_nth_cosyzygy_witness,
    lambda_module,
    syzygy,
    tensor,
    tor,
    transpose,
    transpose_wrt,
    universal_pushforward,
)
from .invariants import (
    INFINITY,
    canonical_module,
    depth,
    gc_dim,
    grade_module,
    in_auslander_class,
    is_cm,
    is_mcm,
    is_semidualizing,
    krull_dim,
    local_cohomology_degrees,
    probe_primes,
    reduced_grade,
    ring_depth,
    ring_dim,
    ring_is_cm,
    ring_is_gorenstein,
    serre_tilde,
)
from .isomorphism import is_isomorphic
from .linkage import (
    is_horizontally_linked,
    is_self_linked,
    link,
    linked_by_ideal,
    stable_part,
)
from .modules import (
    ModulePresentation,
    cyclic_module,
    direct_sum,
    free_module,
    from_matrix,
    minimalize,
    twist_module,
    zero_module,
)
from .resolutions import betti, minimal_free_resolution
from .rings import GradedRing, make_ring
from .runner import RunConfig, execute, report_json, report_text
from .theorems import (
    HarnessConfig,
    TheoremId,
    TheoremReport,
    check,
    default_instances,
    run_suite,
    special_instances,
)

__version__ = "0.1.0"

__all__ = [
    "Budgets", "default_bound",
    "classical_rings", "corpus_pool", "generate_corpus", "maximal_ideal",
    "DslError", "parse", "pretty_print",
    "BudgetError", "HomogeneityError", "InapplicableError",
    "GF", "QQ", "field_from_name",
    "dual", "ext", "hom_module", "is_nth_cosyzygy_witness", "lambda_module",
    "syzygy", "tensor", "tor", "transpose", "transpose_wrt",
    "universal_pushforward",
    "INFINITY", "canonical_module", "depth", "gc_dim", "grade_module",
    "in_auslander_class", "is_cm", "is_mcm", "is_semidualizing", "krull_dim",
    "local_cohomology_degrees", "probe_primes", "reduced_grade",
    "ring_depth", "ring_dim", "ring_is_cm", "ring_is_gorenstein",
    "serre_tilde",
    "is_isomorphic",
    "is_horizontally_linked", "is_self_linked", "link", "linked_by_ideal",
    "stable_part",
    "ModulePresentation", "cyclic_module", "direct_sum", "free_module",
    "from_matrix", "minimalize", "twist_module", "zero_module",
    "betti", "minimal_free_resolution",
    "GradedRing", "make_ring",
    "RunConfig", "execute", "report_json", "report_text",
    "HarnessConfig", "TheoremId", "TheoremReport", "check",
    "default_instances", "run_suite", "special_instances",
    "__version__",
]
