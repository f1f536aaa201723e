"""Exact integer matrices, Smith normal form, and finitely generated
abelian groups.

Everything runs on arbitrary-precision Python ints; there is no floating
point anywhere.  The SNF is a plain gcd-driven elimination: pick the
nonzero entry of least absolute value as pivot, clear its row and column
by division steps, make sure the pivot divides the remaining block, then
recurse into the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]  # row-major

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def transpose(self) -> "IntMatrix":
        t = tuple(tuple(self.entries[i][j] for i in range(self.rows))
                  for j in range(self.cols))
        return IntMatrix(self.cols, self.rows, t)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        prod = tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j]
                      for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows))
        return IntMatrix(self.rows, other.cols, prod)

    def is_identity(self) -> bool:
        return (self.rows == self.cols and
                all(self.entries[i][j] == (1 if i == j else 0)
                    for i in range(self.rows) for j in range(self.cols)))


def matrix(entries: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    """Build an IntMatrix from nested sequences.

    ``cols`` disambiguates the width of a matrix with zero rows.
    """
    rows = len(entries)
    if rows == 0:
        return IntMatrix(0, 0 if cols is None else cols, ())
    return IntMatrix(rows, len(entries[0]), tuple(tuple(r) for r in entries))


def identity_matrix(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n))
                                 for i in range(n)))


def from_columns(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    """Matrix whose j-th column is columns[j]; ``rows`` fixes the height
    even when there are no columns."""
    for c in columns:
        if len(c) != rows:
            raise ValueError("column height mismatch")
    ent = tuple(tuple(c[i] for c in columns) for i in range(rows))
    return IntMatrix(rows, len(columns), ent)


def smith_normal_form(m: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors d1 | d2 | ... (positive, including 1s) and rank."""
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while True:
        # find a nonzero pivot of least absolute value in the block [t:, t:]
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or
                                     abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t by division, smallest remainder becomes new pivot
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(t, rows):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the chain d1 | d2 ...
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                a[t][j] += a[offender][j]
        factors.append(abs(a[t][t]))
        t += 1
        if t >= rows or t >= cols:
            break
    return tuple(factors), len(factors)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus cyclic torsion Z/d1 + ... with d1 | d2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion factor {d} must be >= 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"torsion chain broken: {d} does not divide {e}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Z^rows / column-span(m) as an abelian group."""
    factors, rank = smith_normal_form(m)
    return AbelianGroup(m.rows - rank, tuple(d for d in factors if d > 1))


def free_abelian(rank: int) -> AbelianGroup:
    return AbelianGroup(rank)
