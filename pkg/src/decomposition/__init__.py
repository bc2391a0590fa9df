from .sawing import (
    Decomposition,
    DecompositionReport,
    Star,
    check_decomposition,
    decomposition_summary,
    reassembly_plan,
    saw,
)
