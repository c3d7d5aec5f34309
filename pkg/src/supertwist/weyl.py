"""The Weyl group S_m x S_n of gl(m|n) and its translated actions on h*."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError
from .root_systems import Root, RootSystem, Weight, gamma_set

__all__ = [
    "WeylElement",
    "identity",
    "from_word",
    "parse_word",
    "elements",
    "act",
    "act_dot",
    "act_circle",
    "act_star",
    "act_root",
    "inversion_set",
]


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


@dataclass(frozen=True)
class WeylElement:
    """``sigma`` permutes the eps-slots and ``tau`` the delta-slots (0-based images).

    The linear action sends ``eps_i`` to ``eps_{sigma[i]}`` and ``delta_j`` to
    ``delta_{tau[j]}``.  Products compose as functions: ``(a * b)(x) = a(b(x))``.
    """

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        for name, perm in (("sigma", self.sigma), ("tau", self.tau)):
            if sorted(perm) != list(range(len(perm))):
                raise PreconditionError(f"{name} is not a permutation: {perm}")

    @property
    def m(self) -> int:
        return len(self.sigma)

    @property
    def n(self) -> int:
        return len(self.tau)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if (self.m, self.n) != (other.m, other.n):
            raise PreconditionError("Weyl elements of different groups")
        return WeylElement(
            tuple(self.sigma[i] for i in other.sigma),
            tuple(self.tau[j] for j in other.tau),
        )

    def inverse(self) -> "WeylElement":
        sigma = [0] * self.m
        for i, s in enumerate(self.sigma):
            sigma[s] = i
        tau = [0] * self.n
        for j, t in enumerate(self.tau):
            tau[t] = j
        return WeylElement(tuple(sigma), tuple(tau))

    def length(self) -> int:
        return _inversions(self.sigma) + _inversions(self.tau)

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.m)) and self.tau == tuple(range(self.n))

    def slot(self, k: int) -> int:
        """Image of slot ``k`` under the combined permutation."""
        if k < self.m:
            return self.sigma[k]
        return self.m + self.tau[k - self.m]

    def to_json(self) -> dict:
        # images reported 1-based, as permutations of {1..m} and {1..n}
        return {"sigma": [s + 1 for s in self.sigma], "tau": [t + 1 for t in self.tau]}

    @classmethod
    def from_json(cls, data: dict) -> "WeylElement":
        return cls(tuple(s - 1 for s in data["sigma"]), tuple(t - 1 for t in data["tau"]))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(range(rs.m)), tuple(range(rs.n)))


_TOKEN = re.compile(r"^([st])(\d+)$")


def _token_to_index(rs: RootSystem, token) -> int:
    if isinstance(token, int):
        return token
    match = _TOKEN.match(str(token).strip())
    if not match:
        raise PreconditionError(f"bad reflection token {token!r}")
    kind, k = match.group(1), int(match.group(2))
    if kind == "s":
        if not 1 <= k <= rs.m - 1:
            raise PreconditionError(f"no reflection {token} in gl({rs.m}|{rs.n})")
        return k - 1
    if not 1 <= k <= rs.n - 1:
        raise PreconditionError(f"no reflection {token} in gl({rs.m}|{rs.n})")
    return rs.m + k - 1


def _simple_reflection(rs: RootSystem, k: int) -> WeylElement:
    if not 0 <= k < rs.rank:
        raise PreconditionError(f"simple root index {k} out of range")
    if rs.simple[k].is_odd:
        raise PreconditionError(
            f"simple root {rs.simple[k]} is odd and has no reflection in W"
        )
    sigma = list(range(rs.m))
    tau = list(range(rs.n))
    if k < rs.m:
        sigma[k], sigma[k + 1] = sigma[k + 1], sigma[k]
    else:
        j = k - rs.m
        tau[j], tau[j + 1] = tau[j + 1], tau[j]
    return WeylElement(tuple(sigma), tuple(tau))


def from_word(rs: RootSystem, word: Iterable) -> WeylElement:
    """Product ``x_1 x_2 ... x_k`` of simple reflections.

    Letters are 0-based simple-root indices or tokens ``s<i>`` (eps
    transposition ``i, i+1``) / ``t<j>`` (delta transposition ``j, j+1``).
    """
    w = identity(rs)
    for letter in word:
        w = w * _simple_reflection(rs, _token_to_index(rs, letter))
    return w


def parse_word(rs: RootSystem, text: str) -> WeylElement:
    return from_word(rs, text.replace(",", " ").split())


@lru_cache(maxsize=None)
def elements(rs: RootSystem) -> tuple[WeylElement, ...]:
    """All of W, sorted by length then by images."""
    ws = [
        WeylElement(s, t)
        for s in itertools.permutations(range(rs.m))
        for t in itertools.permutations(range(rs.n))
    ]
    ws.sort(key=lambda w: (w.length(), w.sigma, w.tau))
    return tuple(ws)


def _check_dims(w: WeylElement, dim: int):
    if w.m + w.n != dim:
        raise PreconditionError(
            f"dimension mismatch: element of S_{w.m} x S_{w.n} on a weight of length {dim}"
        )


def act(w: WeylElement, lam: Weight) -> Weight:
    _check_dims(w, len(lam))
    out = [None] * len(lam)
    for k, c in enumerate(lam.coords):
        out[w.slot(k)] = c
    return Weight(tuple(out))


def act_dot(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """``w(lam + rho) - rho``."""
    return act(w, lam + rs.rho) - rs.rho


def act_circle(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """``w(lam + rho0) - rho0``."""
    return act(w, lam + rs.rho0) - rs.rho0


def act_star(rs: RootSystem, w: WeylElement, gamma: Weight) -> Weight:
    """``rho1 - w(rho1 - gamma)`` on sums of distinct odd positive roots."""
    if gamma not in gamma_set(rs):
        raise PreconditionError(f"{gamma} is not a sum of distinct odd positive roots")
    return rs.rho1 - act(w, rs.rho1 - gamma)


def act_root(rs: RootSystem, w: WeylElement, alpha: Root) -> Root:
    _check_dims(w, rs.dim)
    return rs.root(w.slot(alpha.plus), w.slot(alpha.minus))


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset[Root]:
    """``N(w)``: even positive roots sent to negative roots."""
    return frozenset(
        a for a in rs.even_positive if not act_root(rs, w, a).is_positive
    )
