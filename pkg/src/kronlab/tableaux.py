"""Corner-move walks on partitions, their enumeration, and the bijection
onto pairs (partial standard tableau, decreasing-cycle permutation).

A walk of length k on partitions of n steps from each shape to the next
either by moving one corner to a different position, or by staying put
while distinguishing a corner other than the first corner.  The number
of such walks from the one-row shape equals a Kronecker-power
multiplicity, so exhaustive and transfer-matrix counts here cross-check
the operator and character routes.

When the first row stays long enough (n >= k + second part of the final
shape) the walks biject with shorter walks started at the empty shape,
and from there with pairs (T, pi) via RSK insertion and deletion.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cache

from .partitions import (
    Cell,
    Partition,
    canonical_sort,
    check_partition,
    corners,
    partitions_of,
    remove_corner,
    add_corner_positions,
    weight,
)


class EnumerationLimitError(RuntimeError):
    """Raised when a listing would exceed the configured cap."""


class BijectionError(ValueError):
    """Invariant-violating input to the walk/pair correspondence."""


# ---------------------------------------------------------------------------
# walk objects


def _step_kind(p: Partition, q: Partition) -> str:
    """Classify a reduced-walk step: add, remove, move or stay."""
    if p == q:
        return "stay"
    dp, dq = weight(p), weight(q)
    rows = max(len(p), len(q))
    pp = p + (0,) * (rows - len(p))
    qq = q + (0,) * (rows - len(q))
    deltas = [qq[i] - pp[i] for i in range(rows)]
    gained = sum(1 for d in deltas if d == 1)
    lost = sum(1 for d in deltas if d == -1)
    if gained + lost != sum(1 for d in deltas if d != 0):
        raise ValueError(f"shapes {p} -> {q} differ by more than single cells")
    if dq == dp + 1 and gained == 1 and lost == 0:
        return "add"
    if dq == dp - 1 and gained == 0 and lost == 1:
        return "remove"
    if dq == dp and gained == 1 and lost == 1:
        return "move"
    raise ValueError(f"illegal step {p} -> {q}")


def _added_cell(p: Partition, q: Partition) -> Cell:
    """The unique cell of q that is not in p."""
    for i in range(len(q)):
        if i >= len(p) or q[i] > p[i]:
            return (i + 1, q[i])
    raise ValueError(f"{q} does not extend {p}")


@dataclass(frozen=True)
class KroneckerTableau:
    """Walk of equal-weight shapes; marks sit on the stay steps."""

    shapes: tuple[Partition, ...]
    marks: tuple[Cell | None, ...]

    def __post_init__(self):
        if len(self.marks) != len(self.shapes) - 1:
            raise ValueError("need exactly one mark slot per step")
        w = weight(self.shapes[0])
        for idx in range(1, len(self.shapes)):
            p, q, mark = self.shapes[idx - 1], self.shapes[idx], self.marks[idx - 1]
            if weight(q) != w:
                raise ValueError("all shapes must have equal weight")
            if q == p:
                cs = corners(q)
                if mark is None or mark not in cs.corners or mark == cs.first_corner:
                    raise ValueError(
                        f"stay at step {idx} needs a distinguished non-first corner"
                    )
            else:
                if _step_kind(p, q) != "move":
                    raise ValueError(f"step {idx} is not a corner move")
                if mark is not None:
                    raise ValueError(f"move at step {idx} cannot carry a mark")

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def initial(self) -> Partition:
        return self.shapes[0]

    @property
    def final(self) -> Partition:
        return self.shapes[-1]


@dataclass(frozen=True)
class ReducedWalk:
    """Walk from the empty shape whose steps add, remove or move a corner,
    or stay with one distinguished corner."""

    shapes: tuple[Partition, ...]
    marks: tuple[Cell | None, ...]

    def __post_init__(self):
        if len(self.marks) != len(self.shapes) - 1:
            raise ValueError("need exactly one mark slot per step")
        if self.shapes[0] != ():
            raise ValueError("reduced walks start at the empty shape")
        for idx in range(1, len(self.shapes)):
            p, q, mark = self.shapes[idx - 1], self.shapes[idx], self.marks[idx - 1]
            kind = _step_kind(p, q)
            if kind == "stay":
                if mark is None or mark not in corners(q).corners:
                    raise ValueError(f"stay at step {idx} needs a corner mark")
            elif mark is not None:
                raise ValueError(f"{kind} at step {idx} cannot carry a mark")

    @property
    def length(self) -> int:
        return len(self.shapes) - 1


# ---------------------------------------------------------------------------
# successor structure and counting


def successors(p: Partition) -> list[tuple[Partition, Cell | None]]:
    """Legal next steps from p: corner moves first (canonical order of the
    results), then one stay per corner other than the first corner."""
    p = check_partition(p)
    if not p:
        return []
    cs = corners(p)
    moves = set()
    for c in cs.corners:
        trimmed = remove_corner(p, c)
        for q in add_corner_positions(trimmed):
            if q != p:
                moves.add(q)
    out: list[tuple[Partition, Cell | None]] = [
        (q, None) for q in canonical_sort(moves)
    ]
    out.extend((p, c) for c in cs.corners if c != cs.first_corner)
    return out


@cache
def _transition_map(n: int) -> dict[Partition, tuple[tuple[Partition, int], ...]]:
    table = {}
    for p in partitions_of(n):
        mults: dict[Partition, int] = {}
        for q, _mark in successors(p):
            mults[q] = mults.get(q, 0) + 1
        table[p] = tuple(sorted(mults.items(), reverse=True))
    return table


def count_kronecker_tableaux(mu: Partition, lam: Partition, k: int) -> int:
    """Number of length-k walks from mu to lam, by k transfer-matrix steps."""
    mu, lam = check_partition(mu), check_partition(lam)
    if weight(mu) != weight(lam):
        raise ValueError("equal weights required")
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = _transition_map(weight(mu))
    vec = {mu: 1}
    for _ in range(k):
        nxt: dict[Partition, int] = {}
        for p, c in vec.items():
            for q, m in table[p]:
                nxt[q] = nxt.get(q, 0) + c * m
        vec = nxt
        if not vec:
            break
    return vec.get(lam, 0)


def list_kronecker_tableaux(
    mu: Partition, lam: Partition, k: int, limit: int | None = None
) -> list[KroneckerTableau]:
    """Exhaustive listing in deterministic DFS order.

    Raises EnumerationLimitError as soon as more than ``limit`` walks
    would be produced."""
    mu, lam = check_partition(mu), check_partition(lam)
    if weight(mu) != weight(lam):
        raise ValueError("equal weights required")
    if k < 0:
        raise ValueError("k must be nonnegative")
    found: list[KroneckerTableau] = []
    shapes: list[Partition] = [mu]
    marks: list[Cell | None] = []

    def dfs(depth: int) -> None:
        if depth == k:
            if shapes[-1] == lam:
                if limit is not None and len(found) >= limit:
                    raise EnumerationLimitError(
                        f"more than {limit} walks from {mu} to {lam}"
                    )
                found.append(KroneckerTableau(tuple(shapes), tuple(marks)))
            return
        for q, mark in successors(shapes[-1]):
            shapes.append(q)
            marks.append(mark)
            dfs(depth + 1)
            shapes.pop()
            marks.pop()

    dfs(0)
    return found


# ---------------------------------------------------------------------------
# first-row stripping


def bijection_regime_ok(n: int, k: int, lam: Partition) -> bool:
    """Whether the pair correspondence is guaranteed for final shape lam."""
    second = lam[1] if len(lam) > 1 else 0
    return n >= k + second


def strip_first_row(
    K: KroneckerTableau, n: int, k: int, require_regime: bool = True
) -> ReducedWalk:
    """Drop the first row of every shape of a walk started at (n).

    Outside the guaranteed regime the mechanical stripping may still
    succeed (pass require_regime=False to attempt it), but it is only a
    bijection when n >= k + second part of the final shape."""
    if K.shapes[0] != (n,):
        raise ValueError("walk must start at the one-row shape (n)")
    if K.length != k:
        raise ValueError(f"walk has length {K.length}, expected {k}")
    if require_regime and not bijection_regime_ok(n, k, K.final):
        raise BijectionError(
            f"n={n} < k + second part of {K.final}; pass require_regime=False "
            "to strip anyway"
        )
    shapes = tuple(s[1:] for s in K.shapes)
    marks: list[Cell | None] = []
    for mark in K.marks:
        if mark is None:
            marks.append(None)
        else:
            row, col = mark
            if row < 2:
                raise BijectionError(f"mark {mark} sits on the first row")
            marks.append((row - 1, col))
    return ReducedWalk(shapes, tuple(marks))


def unstrip(w: ReducedWalk, n: int) -> KroneckerTableau:
    """Prepend a first row of length n - |shape| to every shape of w."""
    shapes = []
    for s in w.shapes:
        first = n - weight(s)
        if first < (s[0] if s else 0):
            raise ValueError(f"n={n} too small to extend {s} by a first row")
        shapes.append((first,) + s)
    marks = tuple(
        None if m is None else (m[0] + 1, m[1]) for m in w.marks
    )
    return KroneckerTableau(tuple(shapes), marks)


# ---------------------------------------------------------------------------
# partial standard tableaux and RSK


@dataclass(frozen=True)
class PartialStandardTableau:
    """Distinct integer labels increasing along rows and up columns;
    rows[0] is the bottom (longest) row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for i, row in enumerate(self.rows):
            if not row:
                raise ValueError("empty row")
            if i and len(row) > len(self.rows[i - 1]):
                raise ValueError("row lengths must weakly decrease upward")
            for j, x in enumerate(row):
                if not isinstance(x, int) or x < 1 or x in seen:
                    raise ValueError(f"bad label {x!r}")
                seen.add(x)
                if j and row[j - 1] >= x:
                    raise ValueError("rows must increase left to right")
                if i and j < len(self.rows[i - 1]) and self.rows[i - 1][j] >= x:
                    raise ValueError("columns must increase bottom to top")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)

    def find(self, label: int) -> Cell:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x == label:
                    return (i + 1, j + 1)
        raise KeyError(label)

    @staticmethod
    def empty() -> "PartialStandardTableau":
        return PartialStandardTableau(())


def rsk_insert(T: PartialStandardTableau, x: int) -> PartialStandardTableau:
    """Row-bump x into the bottom row; adds exactly one corner."""
    if x in T.labels:
        raise ValueError(f"label {x} already present")
    rows = [list(r) for r in T.rows]
    val, r = x, 0
    while True:
        if r == len(rows):
            rows.append([val])
            break
        j = bisect_right(rows[r], val)
        if j == len(rows[r]):
            rows[r].append(val)
            break
        rows[r][j], val = val, rows[r][j]
        r += 1
    return PartialStandardTableau(tuple(tuple(r) for r in rows))


def rsk_delete(
    T: PartialStandardTableau, c: Cell
) -> tuple[PartialStandardTableau, int]:
    """Remove the corner c, bumping downward; returns the new tableau and
    the label ejected from the bottom row.  Exact inverse of rsk_insert."""
    shape = T.shape
    if c not in corners(shape).corners:
        raise ValueError(f"{c} is not a corner of shape {shape}")
    rows = [list(r) for r in T.rows]
    val = rows[c[0] - 1].pop()
    if not rows[c[0] - 1]:
        rows.pop()
    for r in range(c[0] - 2, -1, -1):
        j = bisect_left(rows[r], val) - 1
        rows[r][j], val = val, rows[r][j]
    return PartialStandardTableau(tuple(tuple(r) for r in rows)), val


def _place_label(
    T: PartialStandardTableau, cell: Cell, label: int
) -> PartialStandardTableau:
    """Write ``label`` into the fresh corner ``cell``; the label must be
    larger than all of its neighbours (it always is a new maximum here)."""
    rows = [list(r) for r in T.rows]
    row, col = cell
    if row == len(rows) + 1 and col == 1:
        rows.append([label])
    elif 1 <= row <= len(rows) and col == len(rows[row - 1]) + 1:
        rows[row - 1].append(label)
    else:
        raise ValueError(f"{cell} is not an addable position")
    return PartialStandardTableau(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# decreasing-cycle permutations


@dataclass(frozen=True)
class DecCyclePermutation:
    """Permutation whose nontrivial cycles, written greatest element
    first, strictly decrease; stored as cycles sorted by greatest element."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        prev_max = 0
        for cyc in self.cycles:
            if not cyc:
                raise ValueError("empty cycle")
            if cyc[0] <= prev_max:
                raise ValueError("cycles must be sorted by greatest element")
            prev_max = cyc[0]
            for a, b in zip(cyc, cyc[1:]):
                if b >= a:
                    raise ValueError(f"cycle {cyc} is not decreasing")
            if seen & set(cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for cyc in self.cycles for x in cyc)

    @property
    def fixed_points(self) -> frozenset[int]:
        return frozenset(c[0] for c in self.cycles if len(c) == 1)

    @property
    def cycle_maxima(self) -> frozenset[int]:
        return frozenset(c[0] for c in self.cycles)

    def to_mapping(self, k: int) -> list[int]:
        """Image array indexed 1..k (index 0 unused)."""
        if self.support != frozenset(range(1, k + 1)):
            raise ValueError(f"not a permutation of 1..{k}")
        out = list(range(k + 1))
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:]):
                out[a] = b
            out[cyc[-1]] = cyc[0]
        return out

    @classmethod
    def from_mapping(cls, mapping: list[int]) -> "DecCyclePermutation":
        """Build from an image array (index 0 ignored); rejects mappings
        with a non-decreasing cycle."""
        k = len(mapping) - 1
        seen = set()
        cycles = []
        for start in range(1, k + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = mapping[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = mapping[x]
            top = cyc.index(max(cyc))
            cycles.append(tuple(cyc[top:] + cyc[:top]))
        return cls(tuple(sorted(cycles)))

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


# ---------------------------------------------------------------------------
# the walk <-> pair correspondence


def to_pair(
    K: KroneckerTableau, n: int, k: int, require_regime: bool = True
) -> tuple[PartialStandardTableau, DecCyclePermutation]:
    """Encode a walk started at (n) as a pair (T, pi).

    Walk the stripped shapes; a growth step writes its index into the new
    corner, every shrink or corner re-seating RSK-deletes the departing
    corner and records the transposition (step, ejected label)."""
    walk = strip_first_row(K, n, k, require_regime)
    T = PartialStandardTableau.empty()
    pi = list(range(k + 1))
    inv = list(range(k + 1))

    def transpose(i: int, j: int) -> None:
        if i <= j:
            raise AssertionError(f"transposition ({i},{j}) must have i > j")
        xi, xj = inv[i], inv[j]
        pi[xi], pi[xj] = j, i
        inv[i], inv[j] = xj, xi

    for i in range(1, k + 1):
        prev, cur = walk.shapes[i - 1], walk.shapes[i]
        mark = walk.marks[i - 1]
        kind = _step_kind(prev, cur)
        if kind == "add":
            T = _place_label(T, _added_cell(prev, cur), i)
        elif kind == "remove":
            T, j = rsk_delete(T, _added_cell(cur, prev))
            transpose(i, j)
        elif kind == "move":
            T, j = rsk_delete(T, _added_cell(cur, prev))
            T = _place_label(T, _added_cell(prev, cur), i)
            transpose(i, j)
        else:  # stay with distinguished corner
            T, j = rsk_delete(T, mark)
            T = _place_label(T, mark, i)
            transpose(i, j)
    return T, DecCyclePermutation.from_mapping(pi)


def from_pair(
    T: PartialStandardTableau,
    pi: DecCyclePermutation,
    n: int,
    k: int,
    require_regime: bool = True,
) -> KroneckerTableau:
    """Rebuild the walk from a pair (T, pi); exact inverse of to_pair.

    Processing steps downward, a step whose index labels a corner of the
    current tableau is undone by deleting that corner, and when the
    permutation pairs the index with an earlier ejected label the label
    is RSK-inserted back (re-creating the corner it once left); an index
    absent from the tableau was a pure shrink, undone by insertion alone.
    """
    support = frozenset(range(1, k + 1))
    if pi.support != support:
        raise BijectionError(f"pi must be a permutation of 1..{k}")
    if not T.labels <= support:
        raise BijectionError("tableau labels must lie in 1..k")
    if not pi.fixed_points <= T.labels:
        raise BijectionError("every fixed point must label a cell")
    if not T.labels <= pi.cycle_maxima:
        raise BijectionError("every label must be the greatest of its cycle")

    mapping = pi.to_mapping(k)
    inv = [0] * (k + 1)
    for x in range(1, k + 1):
        inv[mapping[x]] = x

    def untranspose(i: int, j: int) -> None:
        xi, xj = inv[i], inv[j]
        mapping[xi], mapping[xj] = j, i
        inv[i], inv[j] = xj, xi

    shapes: list[Partition] = [T.shape]
    marks: list[Cell | None] = []
    cur = T
    for i in range(k, 0, -1):
        if i in cur.labels:
            cell = cur.find(i)
            if cell not in corners(cur.shape).corners:
                raise BijectionError(f"label {i} does not sit on a corner")
            rows = [list(r) for r in cur.rows]
            rows[cell[0] - 1].pop()
            if not rows[cell[0] - 1]:
                rows.pop()
            trimmed = PartialStandardTableau(tuple(tuple(r) for r in rows))
            j = mapping[i]
            if j < i:
                untranspose(i, j)
                nxt = rsk_insert(trimmed, j)
                if nxt.shape == cur.shape:
                    marks.append(cell)  # corner deleted and re-created: a stay
                else:
                    marks.append(None)
            elif j == i:
                nxt = trimmed
                marks.append(None)
            else:
                raise BijectionError(f"pi({i}) = {j} > {i} is inconsistent")
        else:
            j = mapping[i]
            if j >= i:
                raise BijectionError(
                    f"index {i} neither labels a cell nor maps below itself"
                )
            untranspose(i, j)
            nxt = rsk_insert(cur, j)
            marks.append(None)
        shapes.append(nxt.shape)
        cur = nxt
    if cur.labels or any(mapping[x] != x for x in range(1, k + 1)):
        raise BijectionError("leftover labels or transpositions; invalid pair")
    walk = ReducedWalk(tuple(reversed(shapes)), tuple(reversed(marks)))
    K = unstrip(walk, n)
    if require_regime and not bijection_regime_ok(n, k, K.final):
        raise BijectionError(f"n={n} < k + second part of {K.final}")
    return K


# ---------------------------------------------------------------------------
# textual walk format (one walk per line)


def format_walk(K: KroneckerTableau) -> str:
    """Bracketed shapes separated by spaces; stays carry ``*row:col``."""
    bits = ["[" + ",".join(map(str, K.shapes[0])) + "]"]
    for shape, mark in zip(K.shapes[1:], K.marks):
        s = "[" + ",".join(map(str, shape)) + "]"
        if mark is not None:
            s += f"*{mark[0]}:{mark[1]}"
        bits.append(s)
    return " ".join(bits)


def parse_walk(line: str) -> KroneckerTableau:
    from .partitions import parse_partition

    shapes: list[Partition] = []
    marks: list[Cell | None] = []
    tokens = line.split()
    if not tokens:
        raise ValueError("empty walk line")
    for idx, tok in enumerate(tokens):
        if "*" in tok:
            body, _, suffix = tok.partition("*")
            try:
                row, col = (int(x) for x in suffix.split(":"))
            except ValueError:
                raise ValueError(f"bad mark suffix in {tok!r}") from None
            mark = (row, col)
        else:
            body, mark = tok, None
        shape = parse_partition(body)
        if idx == 0:
            if mark is not None:
                raise ValueError("initial shape cannot carry a mark")
            shapes.append(shape)
        else:
            shapes.append(shape)
            marks.append(mark)
    return KroneckerTableau(tuple(shapes), tuple(marks))
