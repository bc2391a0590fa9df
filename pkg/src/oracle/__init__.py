from .brute import (
    BUDGET_EXCEEDED,
    FOUND,
    NONE,
    OracleResult,
    SearchBudget,
    brute_embed,
    exhaustive_isomorphic,
    naive_embedding_count,
)
from .enumerate import enumerate_hypertrees
