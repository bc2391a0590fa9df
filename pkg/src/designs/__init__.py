from .steiner import (
    SteinerTripleSystem,
    TripleSystem,
    ValidationReport,
    build_bose,
    build_skolem,
    build_sts,
    degree_census,
    smallest_admissible_order,
    third_vertex,
    validate,
)
from .sts_format import format_sts, read_sts, write_sts
