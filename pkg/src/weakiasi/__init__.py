"""Integer additive set-indexers: weak labelings and sparing numbers of graphs."""

from .construct import (
    ConstructionScheme,
    NotBipartiteError,
    weak_bipartite,
    weak_complete,
    weak_from_independent_set,
    weak_odd_cycle,
    weakly_k_uniform_bipartite,
)
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    NotBipartite,
    add_edge,
    bipartition_of,
    contract_edge,
    generate,
    independent_sets,
    parse_edge_list,
    topological_reduce,
)
from .labeling import LabelingReport, SetLabeling, classify, induced_edge_label, restrict, verify_symmetric_difference_set_indexer
from .sparing import (
    SearchLimitExceeded,
    SparingResult,
    mono_indexed_count_parity_check,
    sparing_branch_and_bound,
    sparing_closed_form,
    sparing_exhaustive,
    sparing_number,
)
from .sumset import IntSet, cardinality_bounds, sumset, symmetric_difference

__version__ = "0.1.0"
