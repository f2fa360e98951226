"""Exact rank of integer matrices by fraction-free row reduction."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


def _normalise(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        row = [v // g for v in row]
    return row


class EchelonBasis:
    """Incrementally maintained echelon basis over the rationals.

    Rows are kept as primitive integer vectors keyed by pivot column, so all
    arithmetic stays in the integers.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        row = list(vec)
        if len(row) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(row)}")
        for col in range(self.width):
            a = row[col]
            if not a:
                continue
            piv = self.rows.get(col)
            if piv is None:
                continue
            b = piv[col]
            row = [b * x - a * y for x, y in zip(row, piv)]
            row = _normalise(row)
        return row

    def add(self, vec: Sequence[int]) -> bool:
        """Insert vec; returns True iff it was independent of the basis."""
        row = self.reduce(vec)
        for col, v in enumerate(row):
            if v:
                if v < 0:
                    row = [-x for x in row]
                self.rows[col] = _normalise(row)
                return True
        return False


def exact_rank(rows: Iterable[Sequence[int]], width: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    basis = EchelonBasis(width if width is not None else len(rows[0]))
    for r in rows:
        basis.add([int(v) for v in r])
        if basis.rank == basis.width:
            break
    return basis.rank
