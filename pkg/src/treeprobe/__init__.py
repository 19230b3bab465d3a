"""treeprobe: reconstruct hidden directed rooted trees from path queries."""

from .baseline import (
    QueryMatrix,
    brute_force_reconstruct,
    check_separator,
    enumerate_trees,
)
from .bench import (
    CSV_HEADER,
    BenchConfig,
    BenchRecord,
    bench_run,
    derive_seed,
    plot_svg,
    records_to_csv,
    run_single,
)
from .errors import (
    CycleError,
    DegreeBoundError,
    EnumerationCapError,
    InconsistentOracleError,
    InfeasibleDegreeError,
    InvalidTreeError,
    MultipleRootsError,
    NotAnEdgeError,
    SelfQueryError,
    TreeFormatError,
)
from .generators import parallel_chain, random_tree, shaped_tree, uniform_weights
from .oracles import (
    AdditiveOracle,
    CachingOracle,
    CountingOracle,
    ExactOracle,
    MajorityOracle,
    NoisyOracle,
    majority_vote_count,
)
from .reconstruct import (
    ReconstructionStats,
    SeparatorEdge,
    assign_bag_index,
    find_bag,
    find_even_separator,
    find_lca,
    find_root_path,
    reconstruct_noisy,
    reconstruct_skeleton_path,
    reconstruct_tree,
    reconstruct_weighted,
    sort_by_ancestry,
    split_tree,
)
from .treeio import format_tree, load_tree, parse_tree, save_tree
from .trees import (
    ROOT,
    DirectedRootedTree,
    SkeletonPath,
    WeightedDirectedRootedTree,
    bag_indices,
    from_edges,
    is_ancestor,
    max_node_degree,
    root_chain,
    skeleton_path,
    subtree_size,
    tree_equals,
    validate_tree,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "ROOT",
    "AdditiveOracle",
    "BenchConfig",
    "BenchRecord",
    "CachingOracle",
    "CountingOracle",
    "CycleError",
    "DegreeBoundError",
    "DirectedRootedTree",
    "EnumerationCapError",
    "ExactOracle",
    "InconsistentOracleError",
    "InfeasibleDegreeError",
    "InvalidTreeError",
    "MajorityOracle",
    "MultipleRootsError",
    "NoisyOracle",
    "NotAnEdgeError",
    "QueryMatrix",
    "ReconstructionStats",
    "SelfQueryError",
    "SeparatorEdge",
    "SkeletonPath",
    "TreeFormatError",
    "WeightedDirectedRootedTree",
    "assign_bag_index",
    "bag_indices",
    "bench_run",
    "brute_force_reconstruct",
    "check_separator",
    "derive_seed",
    "enumerate_trees",
    "find_bag",
    "find_even_separator",
    "find_lca",
    "find_root_path",
    "format_tree",
    "from_edges",
    "is_ancestor",
    "load_tree",
    "majority_vote_count",
    "max_node_degree",
    "parallel_chain",
    "parse_tree",
    "plot_svg",
    "random_tree",
    "reconstruct_noisy",
    "reconstruct_skeleton_path",
    "reconstruct_tree",
    "reconstruct_weighted",
    "records_to_csv",
    "root_chain",
    "run_single",
    "save_tree",
    "shaped_tree",
    "skeleton_path",
    "sort_by_ancestry",
    "split_tree",
    "subtree_size",
    "tree_equals",
    "uniform_weights",
    "validate_tree",
]
