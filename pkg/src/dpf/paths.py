"""Lattice paths of N and E steps and their dip/runs statistics."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from dpf.core import PreconditionError, PreferenceList
from dpf.partitions import Partition


@dataclass(frozen=True)
class LatticePath:
    """A word over {N, E} running from (0, 0) to (n, m).

    The frame is fixed by the word: ``n`` east steps and ``m`` north steps.
    """

    word: str

    def __post_init__(self) -> None:
        word = self.word.strip().upper()
        object.__setattr__(self, "word", word)
        if set(word) - {"N", "E"}:
            raise PreconditionError(f"path words use only N and E: {self.word!r}")

    @property
    def n(self) -> int:
        return self.word.count("E")

    @property
    def m(self) -> int:
        return self.word.count("N")

    def __str__(self) -> str:
        return self.word

    def points(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for step in self.word:
            if step == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts


@dataclass(frozen=True)
class LabeledLatticePath:
    """A lattice path whose north steps carry car labels, bottom to top."""

    path: LatticePath
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(v) for v in self.labels)
        object.__setattr__(self, "labels", labels)
        m = self.path.m
        if sorted(labels) != list(range(1, m + 1)):
            raise PreconditionError(f"labels must be a permutation of 1..{m}: {labels}")
        j = 0
        for run in _north_runs(self.path.word):
            col = labels[j:j + run]
            if any(a > b for a, b in zip(col, col[1:])):
                raise PreconditionError(f"column labels must increase upward: {col}")
            j += run

    def to_json(self) -> dict:
        return {"word": self.path.word, "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict | str) -> LabeledLatticePath:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(LatticePath(data["word"]), tuple(data["labels"]))


def _north_runs(word: str) -> list[int]:
    return [len(r) for r in word.split("E") if r]


def path_from_prefs(pl: PreferenceList) -> LatticePath:
    """The i-th north step is preceded by exactly ``x_i - 1`` east steps."""
    if not pl.is_nondecreasing():
        raise PreconditionError(f"path needs a nondecreasing list, got {pl}")
    steps = []
    east = 0
    for v in pl.prefs:
        steps.append("E" * (v - 1 - east))
        steps.append("N")
        east = v - 1
    steps.append("E" * (pl.n - east))
    return LatticePath("".join(steps))


def prefs_from_path(w: LatticePath) -> PreferenceList:
    prefs = []
    east = 0
    for step in w.word:
        if step == "E":
            east += 1
        else:
            prefs.append(east + 1)
    return PreferenceList(w.n, tuple(prefs))


def dip(w: LatticePath) -> int:
    """Largest drop below the diagonal ``y = x``, read at the foot of each north step.

    The trailing east run after the last north step is not part of the
    measured region, so ``N E^n`` has dip 0.
    """
    x = y = 0
    best = 0
    for step in w.word:
        if step == "E":
            x += 1
        else:
            best = max(best, x - y)
            y += 1
    return best


def runs(w: LatticePath) -> Partition:
    """Sorted lengths of the maximal blocks of consecutive north steps."""
    return Partition(tuple(sorted(_north_runs(w.word), reverse=True)))


def conjugate(w: LatticePath) -> LatticePath:
    """Reverse the word and swap N with E; frame (n, m) becomes (m, n)."""
    return LatticePath(w.word[::-1].translate(str.maketrans("NE", "EN")))


def all_paths(n: int, m: int) -> Iterator[LatticePath]:
    """Every (n, m)-lattice path, ordered by the positions of the north steps."""
    total = n + m
    for north in combinations(range(total), m):
        word = ["E"] * total
        for i in north:
            word[i] = "N"
        yield LatticePath("".join(word))


def labeled_path_from_prefs(pl: PreferenceList) -> LabeledLatticePath:
    # stable order: cars sharing a preference stack by increasing index
    order = sorted(range(pl.m), key=lambda i: (pl.prefs[i], i))
    return LabeledLatticePath(path_from_prefs(pl.sorted()), tuple(i + 1 for i in order))


def prefs_from_labeled_path(lp: LabeledLatticePath) -> PreferenceList:
    x = prefs_from_path(lp.path)
    y = [0] * x.m
    for value, label in zip(x.prefs, lp.labels):
        y[label - 1] = value
    return PreferenceList(x.n, tuple(y))
