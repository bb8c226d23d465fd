"""Preference lists, the classical parking scheme and the defect statistic.

All indices exposed to callers are 1-based.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class PreconditionError(ValueError):
    """Input lies outside the domain of an operation."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


def multinomial(parts: Iterable[int]) -> int:
    """Exact multinomial coefficient (sum(parts); parts...)."""
    total = 0
    result = 1
    for k in parts:
        if k < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += k
        result *= comb(total, k)
    return result


@dataclass(frozen=True)
class PreferenceList:
    """A preference list in ``[n+1]^m``: car ``i`` prefers spot ``prefs[i]``."""

    n: int
    prefs: tuple[int, ...]

    def __post_init__(self) -> None:
        prefs = tuple(int(p) for p in self.prefs)
        object.__setattr__(self, "prefs", prefs)
        if self.n < 1:
            raise PreconditionError(f"need at least one spot, got n={self.n}")
        if not prefs:
            raise PreconditionError("need at least one car")
        for p in prefs:
            if not 1 <= p <= self.n + 1:
                raise PreconditionError(f"preference {p} outside [1, {self.n + 1}]")

    @property
    def m(self) -> int:
        return len(self.prefs)

    def __len__(self) -> int:
        return len(self.prefs)

    def __str__(self) -> str:
        return ",".join(map(str, self.prefs))

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.prefs, self.prefs[1:]))

    def sorted(self) -> PreferenceList:
        return PreferenceList(self.n, tuple(sorted(self.prefs)))

    def with_spots(self, n: int) -> PreferenceList:
        """Same preferences viewed on a street with ``n`` spots."""
        return PreferenceList(n, self.prefs)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> PreferenceList:
        """Parse ``"3,5,5,6"`` (needs ``n``) or ``{"n": 9, "prefs": [...]}``."""
        text = text.strip()
        if text.startswith("{"):
            data = json.loads(text)
            if n is not None and int(data["n"]) != n:
                raise PreconditionError(f"n={n} conflicts with n={data['n']} in JSON")
            return cls.from_json(data)
        if n is None:
            raise PreconditionError("number of spots n is required")
        try:
            prefs = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise PreconditionError(f"cannot parse preference list {text!r}") from exc
        return cls(n, prefs)

    @classmethod
    def from_json(cls, data: dict) -> PreferenceList:
        return cls(int(data["n"]), tuple(int(p) for p in data["prefs"]))

    def to_json(self) -> dict:
        return {"n": self.n, "prefs": list(self.prefs)}


@dataclass(frozen=True)
class ParkingOutcome:
    positions: tuple[int, ...]
    defect: int


@dataclass(frozen=True)
class DefectProfile:
    predefect_seq: tuple[int, ...]
    defect_seq: tuple[int, ...]
    predefect: int
    defect: int


def simulate(pl: PreferenceList) -> ParkingOutcome:
    """Run the classical parking scheme on an unbounded street.

    Each car takes the first free spot at or after its preference. The defect
    is the number of cars that end up beyond spot ``n``.
    """
    n, m = pl.n, pl.m
    # prefs <= n+1 with m cars: no car can reach past spot n+m
    occupied = bytearray(n + m + 2)
    positions = []
    for p in pl.prefs:
        while occupied[p]:
            p += 1
        occupied[p] = 1
        positions.append(p)
    failed = sum(1 for p in positions if p > n)
    # overflow spots form a block n+1..n+failed, so the count equals the
    # distance of the furthest car past n
    if failed != max(max(positions) - n, 0):
        raise InvariantError(f"overflow spots not contiguous for {pl}")
    return ParkingOutcome(tuple(positions), failed)


def defect_profile(pl: PreferenceList) -> DefectProfile:
    x = sorted(pl.prefs)
    shift = pl.m - pl.n
    gamma = tuple(v - i for i, v in enumerate(x, start=1))
    delta = tuple(g + shift for g in gamma)
    pdft = max(gamma)
    return DefectProfile(gamma, delta, pdft, max(pdft + shift, 0))


def defect(pl: PreferenceList) -> int:
    """Number of cars failing to park, from the sorted preferences alone."""
    x = sorted(pl.prefs)
    return max(max(v - i for i, v in enumerate(x, start=1)) + pl.m - pl.n, 0)


def is_parking_function(pl: PreferenceList) -> bool:
    return defect(pl) == 0


def _require_square_nondecreasing(pl: PreferenceList, what: str) -> None:
    if not pl.is_nondecreasing():
        raise PreconditionError(f"{what} needs a nondecreasing list, got {pl}")
    if pl.m != pl.n:
        raise PreconditionError(f"{what} needs m = n, got m={pl.m}, n={pl.n}")


def decrement_set(pl: PreferenceList) -> frozenset[int]:
    """Indices ``i`` with ``delta_i >= 0`` and no earlier strictly positive entry."""
    _require_square_nondecreasing(pl, "decrement set")
    out = []
    for i, v in enumerate(pl.prefs, start=1):
        d = v - i
        if d >= 0:
            out.append(i)
        if d > 0:
            break
    return frozenset(out)


def fixed_set(pl: PreferenceList) -> frozenset[int]:
    _require_square_nondecreasing(pl, "fixed set")
    if defect(pl) != 0:
        raise PreconditionError(f"fixed set needs a parking function, got {pl}")
    return frozenset(i for i, v in enumerate(pl.prefs, start=1) if v == i)


def orbit_size(pl: PreferenceList) -> int:
    """Number of distinct rearrangements of ``pl``."""
    return multinomial(Counter(pl.prefs).values())


def to_catalan_word(pl: PreferenceList) -> tuple[int, ...]:
    _require_square_nondecreasing(pl, "Catalan word")
    if defect(pl) != 0:
        raise PreconditionError(f"Catalan word needs a parking function, got {pl}")
    return tuple(i - v for i, v in enumerate(pl.prefs, start=1))


def is_catalan_word(word: Sequence[int]) -> bool:
    if not word or word[0] != 0:
        return False
    return all(w >= 0 for w in word) and all(b - a <= 1 for a, b in zip(word, word[1:]))
