from .annotation import BLUE, RED, RootedAnnotation, annotate, check_coloring, default_root
from .generator import random_bounded_tree, random_subdivision_tree
from .hypertree import (
    GraphTree,
    Hypertree,
    HypertreeReport,
    check_hypertree,
    counterexample_tree,
    is_subdivision_tree,
    max_degree,
    subdivide,
    validate_hypertree,
)
from .tree_format import (
    format_graph_tree,
    format_hypertree,
    read_graph_tree,
    read_hypertree,
    write_graph_tree,
    write_hypertree,
)
