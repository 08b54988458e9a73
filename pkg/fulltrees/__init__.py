"""Main package entry point."""

from ._altpowerlist import (
    APL_ZERO,
    AlternatingPowerList,
    apl_flatten,
    apl_map,
    apl_of_list,
    apl_twice_plus_one,
    balance_typed,
    loop_typed,
    pass_typed,
)
from ._balance import BALANCERS, balance
from ._bench import (
    fit_loglog_slope,
    format_csv,
    measure_cons_amortized,
    measure_scaling,
)
from ._binarylist import (
    BL_ZERO,
    BinaryList,
    apl_of_binary_list,
    apl_of_list_structural,
    balance_structural,
    bl_cons,
    bl_digits,
    bl_flatten,
    bl_of_list,
    bl_tpo,
    bl_tpt,
    bl_twice,
    bl_value,
    pl_of_binary_list,
)
from ._conf import ALGORITHM_PARAMS, DEFAULT_ALGORITHM
from ._counters import counting
from ._exceptions import (
    BadLength,
    EmptyAPL,
    FullTreesError,
    HeightMismatch,
    InvariantViolation,
    MalformedAlternation,
    MalformedInput,
    Overflow,
    SizeLimit,
)
from ._funcs import validate_index
from ._naive import balance_naive, complete, loop_naive, pad, pass_naive
from ._oracle import (
    bfs_is_full,
    cross_check,
    cross_check_many,
    enumerate_full_trees,
    enumerate_shapes,
)
from ._powerlist import (
    ZERO,
    PowerList,
    pair_up,
    pl_flatten,
    pl_from_list,
    pl_map,
    pl_of_list,
    twice_plus_one,
)
from ._render import parse_input, parse_tree, render_tree
from ._tree import (
    LEAF,
    FullTreeWitness,
    Leaf,
    Node,
    full_height,
    height,
    infix_traversal,
    is_full,
    node_count,
)
from ._types import (
    EMPTY,
    CheckFailure,
    CheckReport,
    Elt,
    Even,
    Odd,
    OpCount,
    ScalingRow,
    TreeItem,
)

__all__ = [
    "ALGORITHM_PARAMS",
    "AlternatingPowerList",
    "APL_ZERO",
    "apl_flatten",
    "apl_map",
    "apl_of_binary_list",
    "apl_of_list",
    "apl_of_list_structural",
    "apl_twice_plus_one",
    "BadLength",
    "balance",
    "balance_naive",
    "balance_structural",
    "balance_typed",
    "BALANCERS",
    "bfs_is_full",
    "BinaryList",
    "BL_ZERO",
    "bl_cons",
    "bl_digits",
    "bl_flatten",
    "bl_of_list",
    "bl_tpo",
    "bl_tpt",
    "bl_twice",
    "bl_value",
    "CheckFailure",
    "CheckReport",
    "complete",
    "counting",
    "cross_check",
    "cross_check_many",
    "DEFAULT_ALGORITHM",
    "Elt",
    "EMPTY",
    "EmptyAPL",
    "enumerate_full_trees",
    "enumerate_shapes",
    "Even",
    "fit_loglog_slope",
    "format_csv",
    "full_height",
    "FullTreesError",
    "FullTreeWitness",
    "height",
    "HeightMismatch",
    "infix_traversal",
    "InvariantViolation",
    "is_full",
    "LEAF",
    "Leaf",
    "loop_naive",
    "loop_typed",
    "MalformedAlternation",
    "MalformedInput",
    "measure_cons_amortized",
    "measure_scaling",
    "Node",
    "node_count",
    "Odd",
    "OpCount",
    "Overflow",
    "pad",
    "pair_up",
    "parse_input",
    "parse_tree",
    "pass_naive",
    "pass_typed",
    "pl_flatten",
    "pl_from_list",
    "pl_map",
    "pl_of_binary_list",
    "pl_of_list",
    "PowerList",
    "render_tree",
    "ScalingRow",
    "SizeLimit",
    "TreeItem",
    "twice_plus_one",
    "validate_index",
    "ZERO",
]


__version__ = "2026.10.0"
