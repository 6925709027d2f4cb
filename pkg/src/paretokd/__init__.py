"""paretokd: maxima of point sets under dominance, and what falls out of them.

The core finds the maxima (Pareto front) of a finite point multiset with a
two-pass streaming method over k-d trees carrying per-subtree bounding
vectors, plus sieve and prune accelerators, an online variant maintaining
every prefix's maxima, and quadratic baselines for cross-checking.  On top
sit maximal-layer partitions, longest common subsequences of two or more
strings via dominance layers of match points, closed-form expected counts
for random inputs, and a seeded benchmark harness with CSV and figure
output.  Every algorithm reports comparison counts through a shared
CostCounter.
"""

from .points import (
    CostCounter,
    DominanceOutcome,
    Point,
    compare,
    dominates,
    naive_maxima,
    points_from_rows,
)
from .kdtree import KdNode, KdTree
from .algorithms import (
    MaximaConfig,
    SieveState,
    list_maxima,
    online_maxima,
    prune,
    records,
    two_phase_maxima,
)
from .layers import LayerPartition, deb_layers, peel_layers
from .mlcs import (
    ENGINES,
    LcsResult,
    MatchPoint,
    SuccessorTable,
    hakata_imai_minima,
    mlcs,
)
from .analytics import (
    EXPECTATION_MODELS,
    expected_hypercube_maxima,
    expected_records,
    expected_simplex_maxima,
    expected_value,
    harmonic,
)
from .bench import (
    ALGORITHM_IDS,
    CSV_FIELDS,
    DISTRIBUTION_KINDS,
    BenchRecord,
    Distribution,
    ExperimentSpec,
    generate,
    run_algorithm,
    run_experiment,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_IDS",
    "BenchRecord",
    "CSV_FIELDS",
    "CostCounter",
    "DISTRIBUTION_KINDS",
    "Distribution",
    "DominanceOutcome",
    "ENGINES",
    "EXPECTATION_MODELS",
    "ExperimentSpec",
    "KdNode",
    "KdTree",
    "LayerPartition",
    "LcsResult",
    "MatchPoint",
    "MaximaConfig",
    "Point",
    "SieveState",
    "SuccessorTable",
    "compare",
    "deb_layers",
    "dominates",
    "expected_hypercube_maxima",
    "expected_records",
    "expected_simplex_maxima",
    "expected_value",
    "generate",
    "hakata_imai_minima",
    "harmonic",
    "list_maxima",
    "mlcs",
    "naive_maxima",
    "online_maxima",
    "peel_layers",
    "points_from_rows",
    "prune",
    "records",
    "run_algorithm",
    "run_experiment",
    "two_phase_maxima",
    "write_csv",
    "__version__",
]
