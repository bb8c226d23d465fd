"""Integer partitions and weak compositions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def from_multiset(cls, values: Sequence[int]) -> Partition:
        """Sort a composition-like sequence, dropping zeros."""
        return cls(tuple(sorted((v for v in values if v), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def mult(self, i: int) -> int:
        """Number of parts equal to ``i``."""
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def partitions_of(m: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order."""
    for parts in _partitions(m, m if largest is None else largest):
        yield Partition(parts)


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative entries."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Each distinct ordering of a multiset exactly once, lexicographically."""
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])
