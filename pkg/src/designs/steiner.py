from dataclasses import dataclass, field

import numpy as np

from src.utils.errors import DesignError


def pair_slot(m: int, x: int, y: int) -> int:
    # Position of the unordered pair {x, y} in the flat upper-triangular table.
    if x > y:
        x, y = y, x
    return x * (2 * m - x - 1) // 2 + (y - x - 1)


def _pair_slots(m, a, b):
    # Vectorised pair_slot for arrays with a < b elementwise.
    return a * (2 * m - a - 1) // 2 + (b - a - 1)


def _as_triple_array(triples, m):
    rows = [tuple(t) for t in triples]
    for idx, t in enumerate(rows):
        if len(t) != 3:
            raise DesignError(f"Triple #{idx} has {len(t)} entries, expected 3: {t}")
        if len(set(t)) != 3:
            raise DesignError(f"Triple #{idx} repeats a vertex: {t}")
        for v in t:
            if not (0 <= int(v) < m):
                raise DesignError(f"Triple #{idx} has label {v} outside 0..{m - 1}")
    arr = np.array(rows, dtype=np.int64).reshape(-1, 3)
    arr.sort(axis=1)
    return arr


class TripleSystem:
    """
    A (partial) triple system: triples on the label space 0..m-1 in which
    every pair lies in at most one triple. Steiner triple systems, the induced
    system S~ and packing fixtures are all instances.
    """

    def __init__(self, m, triples, vertices=None):
        if m < 0:
            raise DesignError(f"Negative order: {m}")
        self.m = int(m)
        arr = _as_triple_array(triples, self.m)
        self._arr = arr
        self._arr.flags.writeable = False

        if vertices is None:
            mask = np.ones(self.m, dtype=bool)
        else:
            mask = np.zeros(self.m, dtype=bool)
            mask[np.asarray(sorted(vertices), dtype=np.int64)] = True
            outside = ~mask[arr].all(axis=1) if len(arr) else np.zeros(0, dtype=bool)
            if outside.any():
                bad = tuple(int(v) for v in arr[np.argmax(outside)])
                raise DesignError(f"Triple {bad} leaves the vertex set")
        self._mask = mask
        self._mask.flags.writeable = False

        size = self.m * (self.m - 1) // 2
        third = np.full(size, -1, dtype=np.int32)
        block = np.full(size, -1, dtype=np.int32)
        if len(arr):
            a, b, c = arr[:, 0], arr[:, 1], arr[:, 2]
            idx = np.arange(len(arr), dtype=np.int32)
            slots = np.concatenate([_pair_slots(self.m, a, b), _pair_slots(self.m, a, c), _pair_slots(self.m, b, c)])
            thirds = np.concatenate([c, b, a])
            owners = np.concatenate([idx, idx, idx])
            counts = np.bincount(slots, minlength=size)
            if (counts > 1).any():
                slot = int(np.argmax(counts > 1))
                x, y = _slot_pair(self.m, slot)
                raise DesignError(f"Pair {{{x}, {y}}} lies in more than one triple")
            third[slots] = thirds
            block[slots] = owners
        self._third = third
        self._block = block
        self._third.flags.writeable = False
        self._block.flags.writeable = False

        incidence = [[] for _ in range(self.m)]
        for t_idx, (x, y, z) in enumerate(arr.tolist()):
            incidence[x].append(t_idx)
            incidence[y].append(t_idx)
            incidence[z].append(t_idx)
        self._incidence = tuple(tuple(lst) for lst in incidence)

    # --------------------------------------------------------------
    @property
    def triples(self):
        return [tuple(row) for row in self._arr.tolist()]

    @property
    def triple_array(self):
        return self._arr

    @property
    def vertex_mask(self):
        return self._mask

    def vertices(self):
        return [int(v) for v in np.flatnonzero(self._mask)]

    def num_vertices(self) -> int:
        return int(self._mask.sum())

    def num_triples(self) -> int:
        return len(self._arr)

    def has_vertex(self, v) -> bool:
        return 0 <= v < self.m and bool(self._mask[v])

    def triple(self, index):
        return tuple(int(v) for v in self._arr[index])

    def incident(self, v):
        # Triple indices through v, ascending.
        return self._incidence[v]

    def degree(self, v) -> int:
        return len(self._incidence[v])

    def degrees(self):
        return np.array([len(lst) for lst in self._incidence], dtype=np.int64)

    def _check_pair(self, x, y):
        if x == y:
            raise DesignError(f"Pair needs two distinct vertices, got ({x}, {x})")
        if not (0 <= x < self.m and 0 <= y < self.m):
            raise DesignError(f"Vertex out of range 0..{self.m - 1}: ({x}, {y})")

    def third_vertex(self, x, y):
        # None when the pair is uncovered (possible only in partial systems).
        self._check_pair(x, y)
        z = int(self._third[pair_slot(self.m, x, y)])
        return None if z < 0 else z

    def block_of(self, x, y):
        self._check_pair(x, y)
        b = int(self._block[pair_slot(self.m, x, y)])
        return None if b < 0 else b

    def has_triple(self, x, y, z) -> bool:
        if len({x, y, z}) != 3:
            return False
        if not all(0 <= v < self.m for v in (x, y, z)):
            return False
        return self.third_vertex(x, y) == z

    def induced(self, keep):
        # Sub-system on the vertices in `keep` (labels unchanged), holding
        # exactly the triples that lie entirely inside `keep`.
        keep_mask = np.zeros(self.m, dtype=bool)
        if isinstance(keep, np.ndarray) and keep.dtype == bool:
            keep_mask[:] = keep
        else:
            keep_mask[np.asarray(sorted(keep), dtype=np.int64)] = True
        keep_mask &= self._mask
        if len(self._arr):
            inside = keep_mask[self._arr].all(axis=1)
            rows = self._arr[inside]
        else:
            rows = self._arr
        return TripleSystem(self.m, rows.tolist(), vertices=np.flatnonzero(keep_mask).tolist())

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, vertices={self.num_vertices()}, triples={self.num_triples()})"


class SteinerTripleSystem(TripleSystem):
    # Immutable after construction; build through from_triples / constructors.

    def __init__(self, m, triples):
        super().__init__(m, triples)
        report = validate(self.triples, self.m)
        if not report.ok:
            raise DesignError(f"Not a Steiner triple system: {report.message}")

    @classmethod
    def from_triples(cls, m, triples):
        return cls(m, triples)

    def third_vertex(self, x, y) -> int:
        self._check_pair(x, y)
        return int(self._third[pair_slot(self.m, x, y)])


def _slot_pair(m, slot):
    rows, cols = np.triu_indices(m, k=1)
    return int(rows[slot]), int(cols[slot])


# ===============================
# VALIDATION
# ===============================
@dataclass
class ValidationReport:
    ok: bool
    m: int
    triple_count: int
    expected_triples: int
    uncovered_count: int = 0
    doubly_covered_count: int = 0
    first_uncovered: tuple = None
    first_doubly_covered: tuple = None
    irregular_vertices: list = field(default_factory=list)
    message: str = "ok"

    def to_dict(self):
        return {
            "ok": self.ok,
            "m": self.m,
            "triple_count": self.triple_count,
            "expected_triples": self.expected_triples,
            "uncovered_count": self.uncovered_count,
            "doubly_covered_count": self.doubly_covered_count,
            "first_uncovered": list(self.first_uncovered) if self.first_uncovered else None,
            "first_doubly_covered": list(self.first_doubly_covered) if self.first_doubly_covered else None,
            "irregular_vertices": list(self.irregular_vertices),
            "message": self.message,
        }


def validate(triples, m) -> ValidationReport:
    # Check a candidate triple list against the Steiner triple system
    # invariants. Malformed triples raise DesignError; any other failure is
    # reported, starting with the first doubly-covered and uncovered pair.
    m = int(m)
    arr = _as_triple_array(triples, m)
    expected = m * (m - 1) // 6
    report = ValidationReport(ok=True, m=m, triple_count=len(arr), expected_triples=expected)

    size = m * (m - 1) // 2
    if len(arr):
        a, b, c = arr[:, 0], arr[:, 1], arr[:, 2]
        slots = np.concatenate([_pair_slots(m, a, b), _pair_slots(m, a, c), _pair_slots(m, b, c)])
        counts = np.bincount(slots, minlength=size)
    else:
        counts = np.zeros(size, dtype=np.int64)

    problems = []
    if m % 6 not in (1, 3):
        problems.append(f"m={m} is not 1 or 3 mod 6, no Steiner triple system exists")

    doubly = np.flatnonzero(counts > 1)
    if len(doubly):
        report.doubly_covered_count = int(len(doubly))
        report.first_doubly_covered = _slot_pair(m, int(doubly[0]))
        problems.append(
            f"{len(doubly)} doubly-covered pair(s), first {set(report.first_doubly_covered)}"
        )

    uncovered = np.flatnonzero(counts == 0)
    if len(uncovered):
        report.uncovered_count = int(len(uncovered))
        report.first_uncovered = _slot_pair(m, int(uncovered[0]))
        problems.append(f"{len(uncovered)} uncovered pair(s), first {set(report.first_uncovered)}")

    if len(arr) != expected:
        problems.append(f"{len(arr)} triples, expected m(m-1)/6 = {expected}")

    if m > 1:
        degrees = np.bincount(arr.ravel(), minlength=m) if len(arr) else np.zeros(m, dtype=np.int64)
        if m % 2:
            irregular = np.flatnonzero(degrees != (m - 1) // 2)
        else:
            # (m-1)/2 is not an integer, so no vertex can be regular
            irregular = np.arange(m)
        report.irregular_vertices = [int(v) for v in irregular[:10]]
        if len(irregular):
            problems.append(f"{len(irregular)} vertex/vertices without degree (m-1)/2")

    if problems:
        report.ok = False
        report.message = "; ".join(problems)
    return report


# ===============================
# CONSTRUCTORS
# ===============================
def build_bose(m: int) -> SteinerTripleSystem:
    # Bose construction on Z_n x {0,1,2}, n = m/3 odd, with the idempotent
    # commutative quasigroup x o y = (x + y)(n + 1)/2 mod n.
    # Point (x, i) gets label x + n*i.
    if m < 3 or m % 6 != 3:
        raise DesignError(f"Bose construction needs m = 3 mod 6, got m={m}")
    n = m // 3
    half = (n + 1) // 2

    def label(x, i):
        return x + n * (i % 3)

    triples = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            z = ((x + y) * half) % n
            for i in range(3):
                triples.append((label(x, i), label(y, i), label(z, i + 1)))
    return SteinerTripleSystem(m, triples)


def build_skolem(m: int) -> SteinerTripleSystem:
    # Skolem construction on {inf} + Q x {0,1,2}, |Q| = 2n, n = (m-1)/6, with the
    # half-idempotent commutative quasigroup obtained by relabelling the
    # addition table of Z_2n. Point (x, i) gets label x + 2n*i, inf gets m-1.
    if m < 7 or m % 6 != 1:
        raise DesignError(f"Skolem construction needs m = 1 mod 6 and m >= 7, got m={m}")
    n = (m - 1) // 6
    q = 2 * n
    inf = m - 1

    def op(x, y):
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + n

    def label(x, i):
        return x + q * (i % 3)

    triples = [(label(x, 0), label(x, 1), label(x, 2)) for x in range(n)]
    for x in range(n):
        for i in range(3):
            triples.append((inf, label(x + n, i), label(x, i + 1)))
    for x in range(q):
        for y in range(x + 1, q):
            z = op(x, y)
            for i in range(3):
                triples.append((label(x, i), label(y, i), label(z, i + 1)))
    return SteinerTripleSystem(m, triples)


def build_sts(m: int) -> SteinerTripleSystem:
    if m % 6 == 3:
        return build_bose(m)
    if m % 6 == 1 and m >= 7:
        return build_skolem(m)
    raise DesignError(f"m ≡ 1 or 3 mod 6 required (m >= 3, m != 1), got m={m}")


def smallest_admissible_order(lower) -> int:
    # least m >= lower with m = 1 or 3 mod 6 (and m >= 3)
    m = max(3, int(np.ceil(lower)))
    while m % 6 not in (1, 3) or m == 1:
        m += 1
    return m


def degree_census(system: TripleSystem):
    return system.degrees()


def third_vertex(sts: TripleSystem, x, y):
    return sts.third_vertex(x, y)
