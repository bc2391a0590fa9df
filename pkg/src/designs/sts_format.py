from pathlib import Path

from src.designs.steiner import SteinerTripleSystem, TripleSystem, validate
from src.utils.errors import DesignError, ParseError
from src.utils.json_loader import read_lines

# "STS v1": first line m, then one triple per line (three integers).


def format_sts(system: TripleSystem) -> str:
    lines = [str(system.m)]
    lines.extend(f"{a} {b} {c}" for a, b, c in system.triples)
    return "\n".join(lines) + "\n"


def write_sts(system: TripleSystem, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_sts(system), encoding="utf-8")
    return path


def read_sts(path, allow_partial=False):
    # Parse an STS v1 file. Returns a SteinerTripleSystem, or with
    # allow_partial a TripleSystem that may leave pairs uncovered.
    rows = read_lines(path)
    if not rows:
        raise ParseError("empty file, expected the order m on line 1", path=path, line=1)

    line_no, head = rows[0]
    try:
        m = int(head)
    except ValueError:
        raise ParseError(f"expected the order m, got {head!r}", path=path, line=line_no) from None
    if m < 1:
        raise ParseError(f"order must be positive, got {m}", path=path, line=line_no)

    triples = []
    for line_no, text in rows[1:]:
        parts = text.split()
        if len(parts) != 3:
            raise ParseError(f"expected three integers, got {text!r}", path=path, line=line_no)
        try:
            triple = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer label in {text!r}", path=path, line=line_no) from None
        if len(set(triple)) != 3:
            raise ParseError(f"repeated vertex in {triple}", path=path, line=line_no)
        if not all(0 <= v < m for v in triple):
            raise ParseError(f"label outside 0..{m - 1} in {triple}", path=path, line=line_no)
        triples.append(triple)

    if allow_partial:
        try:
            return TripleSystem(m, triples)
        except DesignError as exc:
            raise ParseError(str(exc), path=path) from None

    report = validate(triples, m)
    if not report.ok:
        raise ParseError(f"not a Steiner triple system: {report.message}", path=path)
    return SteinerTripleSystem(m, triples)
