"""Extremal and rainbow numbers for matchings in complete bipartite graphs."""

from rainbow_lab.bipartite import (
    BipartiteGraph,
    DeficiencyWitness,
    Matching,
    deficiency_witness,
    max_matching,
    verify_defect_formula,
)
from rainbow_lab.coloring import (
    ColoredCompleteBipartite,
    RainbowCertificate,
    Regime,
    RbRegime,
    bounds,
    build_extremal_coloring,
    find_rainbow,
    normalize_orientation,
    rb_value,
    recognize_sg1,
    recognize_sg2,
)
from rainbow_lab.errors import (
    FormatError,
    MatchingDoesNotFitError,
    OracleLimitError,
    OrientationError,
    RainbowLabError,
)
from rainbow_lab.extremal import build_extremal_graph, certify_uniqueness, ext_value, find_kK2
from rainbow_lab.oracle import (
    OracleResult,
    PartitionEnumerator,
    brute_force_f,
    count_rainbow_free_partitions,
    sweep_verify,
)

__version__ = "0.1.0"
