"""Two-row standard Young tableaux."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from dpf.core import PreconditionError


@dataclass(frozen=True)
class TwoRowSYT:
    """Rows of a tableau of shape ``(len(row1), len(row2))``.

    Construction only normalises the rows; use :func:`validate_syt` to check them.
    """

    row1: tuple[int, ...]
    row2: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "row1", tuple(int(v) for v in self.row1))
        object.__setattr__(self, "row2", tuple(int(v) for v in self.row2))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row1), len(self.row2)

    def __str__(self) -> str:
        return ",".join(map(str, self.row1)) + "/" + ",".join(map(str, self.row2))

    @classmethod
    def parse(cls, text: str) -> TwoRowSYT:
        """Read ``"1,2/3,4"`` or ``{"row1": [...], "row2": [...]}``."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(json.loads(text))
        top, _, bottom = text.partition("/")
        as_ints = lambda s: tuple(int(t) for t in s.split(",") if t.strip())
        return cls(as_ints(top), as_ints(bottom))

    @classmethod
    def from_json(cls, data: dict) -> TwoRowSYT:
        return cls(tuple(data["row1"]), tuple(data.get("row2", ())))

    def to_json(self) -> dict:
        return {"row1": list(self.row1), "row2": list(self.row2)}


def validate_syt(t: TwoRowSYT) -> bool:
    a, b = t.shape
    if a < b:
        return False
    if sorted(t.row1 + t.row2) != list(range(1, a + b + 1)):
        return False
    for row in (t.row1, t.row2):
        if any(x >= y for x, y in zip(row, row[1:])):
            return False
    return all(t.row1[j] < t.row2[j] for j in range(b))


def enumerate_syt(a: int, b: int) -> Iterator[TwoRowSYT]:
    """Every tableau of shape (a, b), in lexicographic order of the second row."""
    if a < b or b < 0:
        raise PreconditionError(f"shape ({a}, {b}) needs a >= b >= 0")
    total = a + b
    for row2 in combinations(range(1, total + 1), b):
        # the j-th entry of row 2 needs at least j+1 entries of row 1 below it
        if all(v >= 2 * (j + 1) for j, v in enumerate(row2)):
            taken = set(row2)
            row1 = tuple(v for v in range(1, total + 1) if v not in taken)
            yield TwoRowSYT(row1, row2)


def count_syt(a: int, b: int) -> int:
    """Hook length formula for shape (a, b): (a-b+1)/(a+1) * C(a+b, a)."""
    if a < b or b < 0:
        raise PreconditionError(f"shape ({a}, {b}) needs a >= b >= 0")
    q, r = divmod((a - b + 1) * comb(a + b, a), a + 1)
    assert r == 0
    return q
