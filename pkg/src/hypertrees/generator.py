import networkx as nx
import numpy as np

from src.hypertrees.hypertree import GraphTree, Hypertree, subdivide
from src.utils.errors import HypertreeError

# ================= CONFIG =================
MIN_ORDER = 2
MIN_DEGREE = 2


def random_bounded_tree(order: int, d: int, seed=None) -> GraphTree:
    """
    Random tree on 0..order-1 with every degree <= d.

    A label's degree is its number of Prufer occurrences plus one, so the
    sequence is drawn label by label from the labels that still have spare
    capacity (d - 1 occurrences each) and decoded with networkx.
    """
    if order < MIN_ORDER:
        raise HypertreeError(f"order must be >= {MIN_ORDER}, got {order}")
    if order == 2:
        if d < 1:
            raise HypertreeError(f"d must be >= 1, got {d}")
        return GraphTree(order=2, edges=[(0, 1)])
    if d < MIN_DEGREE:
        raise HypertreeError(f"d must be >= {MIN_DEGREE} for order > 2, got {d}")

    rng = np.random.default_rng(seed)
    capacity = [d - 1] * order
    available = list(range(order))
    sequence = []
    for _ in range(order - 2):
        pos = int(rng.integers(len(available)))
        label = available[pos]
        sequence.append(label)
        capacity[label] -= 1
        if capacity[label] == 0:
            # swap-remove keeps the draw O(1)
            available[pos] = available[-1]
            available.pop()

    tree = nx.from_prufer_sequence(sequence)
    edges = sorted(tuple(sorted(e)) for e in tree.edges())
    return GraphTree(order=order, edges=edges)


def random_subdivision_tree(n: int, d: int, seed=None) -> Hypertree:
    # n must be odd: a subdivided tree on `order` vertices has 2*order - 1
    if n < 3 or n % 2 == 0:
        raise HypertreeError(f"Subdivision trees have odd order >= 3, got n={n}")
    return subdivide(random_bounded_tree((n + 1) // 2, d, seed))
