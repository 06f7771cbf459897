"""Integer partitions and Ferrers-diagram geometry.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Diagrams use the French
convention: row 1 is the bottom (longest) row, rows and columns are
1-based, and a cell is written (row, col).
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]


class CornerSet(NamedTuple):
    corners: tuple[Cell, ...]
    first_corner: Cell | None


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing sequence of positive ints."""
    parts = tuple(parts)
    if any(not isinstance(p, int) or p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> Partition:
    p = tuple(parts)
    if not is_partition(p):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def weight(p: Partition) -> int:
    return sum(p)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def canonical_sort(ps) -> list[Partition]:
    """Sort partitions into the canonical (reverse lexicographic) order."""
    return sorted(ps, reverse=True)


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment: every row of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def corners(p: Partition) -> CornerSet:
    """Removable cells of the diagram, listed top row first.

    A corner sits at the right end of its row with no cell above it.  The
    first corner is the one on the last (topmost) row of maximal length.
    """
    if not p:
        return CornerSet((), None)
    m = len(p)
    cells = []
    for i in range(m):  # row i+1 has length p[i]
        if i + 1 == m or p[i + 1] < p[i]:
            cells.append((i + 1, p[i]))
    cells.reverse()  # top row first
    longest = sum(1 for part in p if part == p[0])
    return CornerSet(tuple(cells), (longest, p[0]))


def remove_corner(p: Partition, c: Cell) -> Partition:
    """Remove the corner cell ``c`` from ``p``; rejects non-corner cells."""
    cs = corners(p)
    if c not in cs.corners:
        raise ValueError(f"{c} is not a corner of {p}")
    row = c[0] - 1
    out = list(p)
    out[row] -= 1
    if out and out[-1] == 0:
        out.pop()
    return tuple(out)


def add_corner_positions(p: Partition) -> list[Partition]:
    """All partitions obtained by adding one cell (necessarily a corner).

    Listed bottom row first, which is the canonical order of the results.
    """
    out = []
    m = len(p)
    for i in range(m):
        if i == 0 or p[i] < p[i - 1]:
            q = list(p)
            q[i] += 1
            out.append(tuple(q))
    out.append(p + (1,))
    return out


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod over distinct parts i of i^m_i * m_i!."""
    z = 1
    mult = 1
    for j, part in enumerate(mu):
        mult = mult + 1 if j > 0 and mu[j - 1] == part else 1
        z *= part * mult
    return z


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type mu: n!/z_mu, exact."""
    return factorial(weight(mu)) // centralizer_order(mu)


def hooks(p: Partition) -> list[int]:
    conj = conjugate(p)
    return [
        (p[i] - j) + (conj[j - 1] - i - 1) + 1
        for i in range(len(p))
        for j in range(1, p[i] + 1)
    ]


@cache
def standard_tableaux_count(p: Partition) -> int:
    """Number of standard fillings of shape p, by the hook length product."""
    n = weight(p)
    count = factorial(n)
    for h in hooks(p):
        count //= h
    return count


def parse_partition(text: str) -> Partition:
    """Parse the CLI syntax ``[4,4,2,1]``; ``[]`` is the empty partition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [4,2,1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(f"partition must contain integers, got {text!r}") from None
    return check_partition(parts)


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"
