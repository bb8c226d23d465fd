"""Bijections from nondecreasing defective parking functions to two-row tableaux.

The chain is

* ``phi`` / ``psi``: strip one unit of defect, or delete one fixed point;
* ``rho``: ``m = n`` lists of defect ``d`` to parking functions of length ``n+d``;
* ``theta``: the ``m > n`` case, by adding ``m - n`` spots then applying ``rho``;
* ``gamma_bij``: the ``m < n`` case, by conjugating then applying ``theta``;
* ``sigma``: restricted parking functions to tableaux via Dyck paths.

``to_tableau`` and ``from_tableau`` compose the whole chain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from dpf.core import (
    InvariantError,
    PreconditionError,
    PreferenceList,
    decrement_set,
    defect,
    fixed_set,
)
from dpf.paths import conjugate, path_from_prefs, prefs_from_path, LatticePath
from dpf.tableaux import TwoRowSYT, validate_syt


@dataclass(frozen=True)
class DecrementPair:
    list: PreferenceList
    index: int

    def __post_init__(self) -> None:
        if self.index not in decrement_set(self.list):
            raise PreconditionError(f"{self.index} is not in the decrement set of {self.list}")

    def to_json(self) -> dict:
        return {"list": list(self.list.prefs), "index": self.index}


@dataclass(frozen=True)
class FixedPair:
    list: PreferenceList
    index: int

    def __post_init__(self) -> None:
        if self.index not in fixed_set(self.list):
            raise PreconditionError(f"{self.index} is not in the fixed set of {self.list}")

    def to_json(self) -> dict:
        return {"list": list(self.list.prefs), "index": self.index}


def pair_from_json(data: dict | str, kind: type = DecrementPair):
    if isinstance(data, str):
        data = json.loads(data)
    prefs = tuple(data["list"])
    return kind(PreferenceList(len(prefs), prefs), int(data["index"]))


def _square(pl: PreferenceList, what: str) -> None:
    if pl.m != pl.n:
        raise PreconditionError(f"{what} needs m = n, got m={pl.m}, n={pl.n}")
    if not pl.is_nondecreasing():
        raise PreconditionError(f"{what} needs a nondecreasing list, got {pl}")


def phi(pl: PreferenceList) -> DecrementPair:
    """Lower every entry from the first strictly positive defect index onward."""
    _square(pl, "phi")
    x = pl.prefs
    i = next((j for j, v in enumerate(x, start=1) if v - j > 0), None)
    if i is None:
        raise PreconditionError(f"phi needs positive defect, got {pl}")
    lowered = x[:i - 1] + tuple(v - 1 for v in x[i - 1:])
    return DecrementPair(PreferenceList(pl.n, lowered), i)


def phi_inv(p: DecrementPair) -> PreferenceList:
    x, i = p.list, p.index
    if x.prefs[-1] > x.n:
        raise PreconditionError(f"last entry of {x} must be at most {x.n} to be raised")
    raised = x.prefs[:i - 1] + tuple(v + 1 for v in x.prefs[i - 1:])
    return PreferenceList(x.n, raised)


def psi(pl: PreferenceList) -> FixedPair:
    """Delete the last fixed point of a nondecreasing parking function."""
    _square(pl, "psi")
    if pl.prefs[-1] >= pl.m:
        raise PreconditionError(f"psi needs last entry below {pl.m}, got {pl}")
    i = max(fixed_set(pl))
    shorter = pl.prefs[:i - 1] + pl.prefs[i:]
    return FixedPair(PreferenceList(pl.m - 1, shorter), i)


def psi_inv(p: FixedPair) -> PreferenceList:
    x, i = p.list.prefs, p.index
    return PreferenceList(len(x) + 1, x[:i - 1] + (i,) + x[i - 1:])


def rho(pl: PreferenceList, k: int | None = None) -> PreferenceList:
    """Send ``DPF↑_{n,n,d}(x_n <= k)`` to ``PF↑_{n+d,n+d}(x_{n+d} <= k-d)``.

    Peels off the defect with ``phi`` while recording the indices, then
    re-inserts fixed points with ``psi_inv`` in the reverse order.
    """
    _square(pl, "rho")
    n = pl.n
    if k is None:
        k = n + 1
    if not 1 <= k <= n + 1:
        raise PreconditionError(f"k must lie in [1, {n + 1}], got {k}")
    if pl.prefs[-1] > k:
        raise PreconditionError(f"last entry of {pl} exceeds k={k}")
    d = defect(pl)
    indices = []
    current = pl
    for _ in range(d):
        pair = phi(current)
        indices.append(pair.index)
        current = pair.list
    for i in reversed(indices):
        current = psi_inv(FixedPair(current, i))
    if current.prefs[-1] > k - d:
        raise InvariantError(f"rho({pl}) = {current} has last entry above {k - d}")
    return current


def rho_inv(pl: PreferenceList, n: int, d: int, k: int | None = None) -> PreferenceList:
    if k is None:
        k = n + 1
    if not 1 <= k <= n + 1:
        raise PreconditionError(f"k must lie in [1, {n + 1}], got {k}")
    if d < 0 or pl.m != n + d:
        raise PreconditionError(f"expected a list of length {n + d}, got {pl}")
    _square(pl, "rho_inv")
    if defect(pl) != 0:
        raise PreconditionError(f"rho_inv needs a parking function, got {pl}")
    if pl.prefs[-1] > k - d:
        raise PreconditionError(f"last entry of {pl} exceeds k-d={k - d}")
    indices = []
    current = pl
    for _ in range(d):
        pair = psi(current)
        indices.append(pair.index)
        current = pair.list
    for i in reversed(indices):
        current = phi_inv(DecrementPair(current, i))
    if defect(current) != d or current.prefs[-1] > k:
        raise InvariantError(f"rho_inv({pl}) = {current} left the domain")
    return current


def theta(pl: PreferenceList) -> PreferenceList:
    """``m > n``: add ``m - n`` spots, then apply ``rho`` with ``k = n + 1``."""
    if pl.m <= pl.n:
        raise PreconditionError(f"theta needs m > n, got m={pl.m}, n={pl.n}")
    if not pl.is_nondecreasing():
        raise PreconditionError(f"theta needs a nondecreasing list, got {pl}")
    return rho(pl.with_spots(pl.m), pl.n + 1)


def theta_inv(pl: PreferenceList, m: int, n: int, d: int) -> PreferenceList:
    if m <= n:
        raise PreconditionError(f"theta_inv needs m > n, got m={m}, n={n}")
    if d < m - n:
        raise PreconditionError(f"defect {d} is below m - n = {m - n}")
    return rho_inv(pl, m, d - (m - n), n + 1).with_spots(n)


def conjugate_prefs(pl: PreferenceList) -> PreferenceList:
    """Conjugate via lattice paths: ``[n+1]^m`` goes to ``[m+1]^n``."""
    return prefs_from_path(conjugate(path_from_prefs(pl)))


def gamma_bij(pl: PreferenceList) -> PreferenceList:
    """``m < n``: conjugate, which swaps cars and spots, then apply ``theta``."""
    if pl.m >= pl.n:
        raise PreconditionError(f"gamma_bij needs m < n, got m={pl.m}, n={pl.n}")
    return theta(conjugate_prefs(pl))


def gamma_bij_inv(pl: PreferenceList, m: int, n: int, d: int) -> PreferenceList:
    if m >= n:
        raise PreconditionError(f"gamma_bij_inv needs m < n, got m={m}, n={n}")
    return conjugate_prefs(theta_inv(pl, n, m, d + (n - m)))


def to_restricted_pf(pl: PreferenceList) -> PreferenceList:
    """Map ``DPF↑_{m,n,d}`` into ``PF↑_{n+d,n+d}(x_{n+d} <= m+1-d)``."""
    if not pl.is_nondecreasing():
        raise PreconditionError(f"needs a nondecreasing list, got {pl}")
    if pl.m == pl.n:
        return rho(pl, pl.n + 1)
    if pl.m > pl.n:
        return theta(pl)
    return gamma_bij(pl)


def from_restricted_pf(pf: PreferenceList, m: int, n: int) -> PreferenceList:
    d = pf.m - n
    if m == n:
        return rho_inv(pf, n, d, n + 1)
    if m > n:
        return theta_inv(pf, m, n, d)
    return gamma_bij_inv(pf, m, n, d)


def sigma(pf: PreferenceList, bound: int) -> TwoRowSYT:
    """Tableau of shape ``(N, bound-1)`` from ``pf`` in ``PF↑_{N,N}(x_N <= bound)``.

    Step ``i`` of the Dyck path goes to row 1 if it is N, else row 2; the
    last ``N - bound + 1`` east steps are forced and dropped.
    """
    big_n = pf.m
    if pf.n != big_n or not pf.is_nondecreasing() or defect(pf) != 0:
        raise PreconditionError(f"sigma needs a nondecreasing parking function, got {pf}")
    if not 1 <= bound <= big_n + 1 or pf.prefs[-1] > bound:
        raise PreconditionError(f"last entry of {pf} exceeds bound {bound}")
    word = path_from_prefs(pf).word
    row1 = tuple(i for i, s in enumerate(word, start=1) if s == "N")
    row2 = tuple(i for i, s in enumerate(word, start=1) if s == "E")
    drop = big_n - bound + 1
    forced = tuple(range(2 * big_n - drop + 1, 2 * big_n + 1))
    if row2[len(row2) - drop:] != forced:
        raise InvariantError(f"tail of row 2 of {row1}/{row2} is not forced")
    return TwoRowSYT(row1, row2[:len(row2) - drop])


def sigma_inv(t: TwoRowSYT) -> PreferenceList:
    if not validate_syt(t):
        raise PreconditionError(f"not a standard Young tableau: {t}")
    a, b = t.shape
    total = 2 * a
    row1 = set(t.row1)
    word = "".join("N" if i in row1 else "E" for i in range(1, total + 1))
    return prefs_from_path(LatticePath(word))


def to_tableau(pl: PreferenceList) -> TwoRowSYT:
    """The composite bijection ``DPF↑_{m,n,d} -> SYT(n+d, m-d)``."""
    d = defect(pl)
    t = sigma(to_restricted_pf(pl), pl.m + 1 - d)
    if t.shape != (pl.n + d, pl.m - d):
        raise InvariantError(f"tableau {t} of {pl} has shape {t.shape}")
    return t


def from_tableau(t: TwoRowSYT, m: int, n: int) -> PreferenceList:
    if not validate_syt(t):
        raise PreconditionError(f"not a standard Young tableau: {t}")
    a, b = t.shape
    d = a - n
    if b != m - d or not max(m - n, 0) <= d <= m:
        raise PreconditionError(f"shape {t.shape} is not (n+d, m-d) for m={m}, n={n}")
    pl = from_restricted_pf(sigma_inv(t), m, n)
    if pl.m != m or pl.n != n or defect(pl) != d:
        raise InvariantError(f"from_tableau({t}) = {pl} left DPF↑_{m},{n},{d}")
    return pl
