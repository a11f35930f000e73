"""Sparse exact row reduction over a cyclotomic field.

Vectors are dicts mapping integer column ids to nonzero CycNum values.
Column ids are compared as plain integers; callers choose an id scheme
whose ascending order realizes the elimination order they want.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable

from .cyclotomic import CycNum


class RowReducer:
    """Incrementally maintained reduced row echelon basis.

    One stored row per pivot column; every row has coefficient 1 at its
    pivot, no entries at other pivots, and no entries left of its pivot,
    so the state is always the unique RREF of the span inserted so far.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, dict[int, CycNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: dict[int, CycNum]) -> dict[int, CycNum]:
        """Residue of vec after eliminating all pivot columns."""
        rows = self.rows
        out: dict[int, CycNum] = {}
        work = dict(vec)
        heap = list(work)
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            val = work.pop(col, None)
            if val is None or val.is_zero():
                continue
            row = rows.get(col)
            if row is None:
                out[col] = val
                continue
            for col2, coeff in row.items():
                if col2 == col:
                    continue
                cur = work.get(col2)
                if cur is None:
                    work[col2] = -val * coeff
                    heapq.heappush(heap, col2)
                else:
                    work[col2] = cur - val * coeff
        return out

    def add(self, vec: dict[int, CycNum]) -> int | None:
        """Insert a vector; returns its pivot column, or None if dependent."""
        residue = self.reduce(vec)
        if not residue:
            return None
        pivot = min(residue)
        lead_inv = residue[pivot].inv()
        row = {col: val * lead_inv for col, val in residue.items()}
        # Keep the basis fully reduced: clear the new pivot everywhere.
        for other in self.rows.values():
            coeff = other.get(pivot)
            if coeff is not None:
                for col, val in row.items():
                    if col == pivot:
                        del other[pivot]
                        continue
                    cur = other.get(col)
                    new = -coeff * val if cur is None else cur - coeff * val
                    if new.is_zero():
                        other.pop(col, None)
                    else:
                        other[col] = new
        self.rows[pivot] = row
        return pivot

    def extend(self, vectors: Iterable[dict[int, CycNum]]) -> None:
        for vec in vectors:
            self.add(vec)

    def contains(self, vec: dict[int, CycNum]) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: dict[int, CycNum]) -> dict[int, CycNum] | None:
        """Express vec over the stored rows: vec = sum coeff[p] * row[p].

        Returns None when vec is outside the span.  Valid because each
        stored row is the only one with support at its pivot column.
        """
        if self.reduce(vec):
            return None
        return {p: vec[p] for p in self.rows if p in vec and vec[p]}


def rank(vectors: Iterable[dict[int, CycNum]]) -> int:
    red = RowReducer()
    red.extend(vectors)
    return red.rank


def nullspace(rows: Iterable[dict[int, CycNum]], ncols: int,
              one: CycNum) -> list[dict[int, CycNum]]:
    """Kernel basis of the linear map x -> A x, columns indexed 0..ncols-1.

    Each returned vector has coefficient 1 at one free column, ordered by
    ascending free column, which makes the basis canonical.
    """
    red = RowReducer()
    red.extend(rows)
    pivot_set = red.rows.keys()
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: one}
        for pivot, row in red.rows.items():
            coeff = row.get(free)
            if coeff is not None and not coeff.is_zero():
                vec[pivot] = -coeff
        kernel.append(vec)
    return kernel
