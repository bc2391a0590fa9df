from pathlib import Path

from src.hypertrees.hypertree import GraphTree, Hypertree, validate_hypertree
from src.utils.errors import ParseError
from src.utils.json_loader import read_lines

# "HT v1": line 1 = n, then one hyperedge per line (three integers).
# "GT v1": line 1 = order, then one edge per line (two integers).


def _read_header(rows, path, what):
    if not rows:
        raise ParseError(f"empty file, expected {what} on line 1", path=path, line=1)
    line_no, head = rows[0]
    try:
        value = int(head)
    except ValueError:
        raise ParseError(f"expected {what}, got {head!r}", path=path, line=line_no) from None
    if value < 1:
        raise ParseError(f"{what} must be positive, got {value}", path=path, line=line_no)
    return value


def _read_tuples(rows, path, width, bound):
    out = []
    for line_no, text in rows:
        parts = text.split()
        if len(parts) != width:
            raise ParseError(f"expected {width} integers, got {text!r}", path=path, line=line_no)
        try:
            item = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer label in {text!r}", path=path, line=line_no) from None
        if len(set(item)) != width:
            raise ParseError(f"repeated vertex in {item}", path=path, line=line_no)
        if not all(0 <= v < bound for v in item):
            raise ParseError(f"label outside 0..{bound - 1} in {item}", path=path, line=line_no)
        out.append(item)
    return out


def format_hypertree(t: Hypertree) -> str:
    lines = [str(t.n)]
    lines.extend(" ".join(str(v) for v in e) for e in t.edges)
    return "\n".join(lines) + "\n"


def write_hypertree(t: Hypertree, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_hypertree(t), encoding="utf-8")
    return path


def read_hypertree(path) -> Hypertree:
    rows = read_lines(path)
    n = _read_header(rows, path, "the order n")
    edges = _read_tuples(rows[1:], path, 3, n)
    report = validate_hypertree(edges, n)
    if not report.ok:
        raise ParseError(f"not a hypertree ({report.violation}): {report.message}", path=path)
    return Hypertree(edges, n=n)


def format_graph_tree(t: GraphTree) -> str:
    lines = [str(t.order)]
    lines.extend(f"{a} {b}" for a, b in t.edges)
    return "\n".join(lines) + "\n"


def write_graph_tree(t: GraphTree, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph_tree(t), encoding="utf-8")
    return path


def read_graph_tree(path) -> GraphTree:
    rows = read_lines(path)
    order = _read_header(rows, path, "the order")
    tree = GraphTree(order=order, edges=_read_tuples(rows[1:], path, 2, order))
    if not tree.is_valid():
        raise ParseError(f"edges do not form a tree on {order} vertices", path=path)
    return tree
