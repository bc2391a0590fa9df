import itertools

from src.hypertrees.hypertree import Hypertree, validate_hypertree
from src.utils.errors import SizeLimitExceeded

MAX_ENUMERATION_ORDER = 7


def enumerate_hypertrees(n: int):
    # All labelled hypertrees on 0..n-1 (n odd), by testing every set of
    # (n-1)/2 triples.
    if n > MAX_ENUMERATION_ORDER:
        raise SizeLimitExceeded(f"enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {n}")
    if n < 1 or n % 2 == 0:
        return []
    if n == 1:
        return [Hypertree((), n=1)]
    s = (n - 1) // 2
    triples = list(itertools.combinations(range(n), 3))
    out = []
    for edges in itertools.combinations(triples, s):
        if validate_hypertree(edges, n).ok:
            out.append(Hypertree(edges, n=n))
    return out
