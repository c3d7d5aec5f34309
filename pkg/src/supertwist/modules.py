"""Characters of Verma modules, Levi simples and generalized Verma modules.

Also holds the two brute-force oracles that the series engine is checked
against: direct PBW enumeration of ``U(m^-)`` weight spaces, and the
Levi-decomposition subtraction loop.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .charring import (
    FormalCharacter,
    char_exp,
    from_weights,
    p_of,
    p_series,
    partition_series,
    s_of,
)
from .errors import NotOneDimensionalError, PreconditionError
from .root_systems import (
    ParabolicData,
    RootSystem,
    Weight,
    eval_cartan,
    lattice_coords,
    levi_even_simple,
    offending_root,
)
from .weyl import WeylElement, act

__all__ = [
    "LeviDecomposition",
    "verma_char",
    "levi_weyl_group",
    "levi_highest_weight_char",
    "gvm_char",
    "gvm_char_1dim",
    "pbw_coefficient_oracle",
    "levi_decompose",
]


def verma_char(rs: RootSystem, lam: Weight, N: int) -> FormalCharacter:
    """``e^lam p_emptyset``: the even Kostant series times all odd factors."""
    return char_exp(lam) * p_series(rs, (), N)


def _levi_parts(rs: RootSystem, P: ParabolicData) -> list[list[int]]:
    parts = []
    for blk in P.blocks:
        for part in ([s for s in blk if s < rs.m], [s for s in blk if s >= rs.m]):
            if len(part) > 1:
                parts.append(part)
    return parts


def levi_weyl_group(rs: RootSystem, P: ParabolicData) -> list[WeylElement]:
    """Weyl group of ``l0``: permutations inside the eps- and delta-part of each block."""
    parts = _levi_parts(rs, P)
    out = []
    for images in itertools.product(*(itertools.permutations(p) for p in parts)):
        slot = list(range(rs.dim))
        for part, img in zip(parts, images):
            for src, dst in zip(part, img):
                slot[src] = dst
        out.append(WeylElement(tuple(slot[: rs.m]), tuple(s - rs.m for s in slot[rs.m :])))
    return out


def _check_levi_dominant(rs: RootSystem, P: ParabolicData, lam: Weight):
    for alpha in levi_even_simple(rs, P):
        v = eval_cartan(rs, lam, alpha)
        if v.denominator != 1 or v < 0:
            raise PreconditionError(
                f"{lam} is not dominant integral for the Levi: <lam, {alpha}^v> = {v}"
            )


def levi_highest_weight_char(rs: RootSystem, P: ParabolicData, lam: Weight) -> FormalCharacter:
    """Exact character of the simple ``l0``-module of highest weight ``lam``.

    Kostant's multiplicity formula in the even part of the Levi:
    ``mult(mu) = sum_u sign(u) P_l(u(lam + rho_l) - (mu + rho_l))``.
    """
    if len(lam) != rs.dim:
        raise PreconditionError("dimension mismatch")
    _check_levi_dominant(rs, P, lam)
    X0 = P.X0
    if not X0:
        return char_exp(lam)
    rho_l = Weight.zero(rs.dim)
    for r in X0:
        rho_l = rho_l + r.weight
    rho_l = rho_l * Fraction(1, 2)

    group = levi_weyl_group(rs, P)
    numerator = Counter()
    for u in group:
        numerator[act(u, lam + rho_l) - rho_l] += (-1) ** u.length()
    longest = max(group, key=WeylElement.length)
    depth = sum(lattice_coords(lam - act(longest, lam)))

    series = from_weights(numerator) * partition_series(rs, X0, depth)
    chi = FormalCharacter(series.anchor, dict(series.terms), None)
    if any(c < 0 for c in chi.terms.values()):
        raise AssertionError(f"negative multiplicity in the character of {lam}")
    return chi.reanchor(lam) if chi.anchor != lam else chi


def gvm_char(rs: RootSystem, P: ParabolicData, chL: FormalCharacter, N: int) -> FormalCharacter:
    """``ch Ind L = ch L * p_X``."""
    if not chL.is_exact:
        raise PreconditionError("ch L must be exact")
    return chL * p_of(rs, P, N)


def gvm_char_1dim(rs: RootSystem, P: ParabolicData, lam: Weight, N: int) -> FormalCharacter:
    """``e^lam p_X`` for the module induced from the one-dimensional ``k_lam``."""
    bad = offending_root(rs, P, lam)
    if bad is not None:
        raise NotOneDimensionalError(bad, eval_cartan(rs, lam, bad))
    return char_exp(lam) * p_of(rs, P, N)


def _count_multisets(target: tuple[int, ...], vectors: tuple[tuple[int, ...], ...]) -> int:
    @lru_cache(maxsize=None)
    def go(t, i):
        if i == len(vectors):
            return 1 if not any(t) else 0
        v = vectors[i]
        total = 0
        while all(x >= 0 for x in t):
            total += go(t, i + 1)
            t = tuple(a - b for a, b in zip(t, v))
        return total

    return go(tuple(target), 0)


def pbw_coefficient_oracle(rs: RootSystem, P: ParabolicData, nu: Sequence[int]) -> int:
    """Dimension of the ``-nu`` weight space of ``U(m^-)``, by direct enumeration.

    Counts pairs (multiset of even roots outside ``X0``, subset of odd roots
    outside ``X1``) summing to ``nu``.  Odd subsets are enumerated first.
    """
    nu = tuple(int(x) for x in nu)
    if len(nu) != rs.rank or any(x < 0 for x in nu):
        raise PreconditionError(f"bad simple-root coordinates {nu}")
    even = tuple(r.simple_coords() for r in rs.even_positive if r not in P.X)
    odd = [r.simple_coords() for r in rs.odd_positive if r not in P.X]
    total = 0
    for size in range(len(odd) + 1):
        for subset in itertools.combinations(odd, size):
            rest = list(nu)
            for v in subset:
                rest = [a - b for a, b in zip(rest, v)]
            if any(x < 0 for x in rest):
                continue
            total += _count_multisets(tuple(rest), even)
    return total


@dataclass(frozen=True)
class LeviDecomposition:
    """Highest weights of the ``l0``-simple summands of ``Lambda(m1^-) (x) E``,
    in extraction order, repeated by multiplicity."""

    summands: tuple[Weight, ...]

    def multiplicities(self) -> Counter:
        return Counter(self.summands)

    def reconstruct(self, rs: RootSystem, P: ParabolicData) -> FormalCharacter:
        total = from_weights({}, rs.dim)
        for mu, k in self.multiplicities().items():
            total = total + k * levi_highest_weight_char(rs, P, mu)
        return total


def levi_decompose(rs: RootSystem, P: ParabolicData, chE: FormalCharacter) -> LeviDecomposition:
    """Split ``s_X ch E`` into ``l0``-simple characters by peeling off maximal weights.

    The next highest weight is the remaining term of least height, ties
    broken by the lexicographically smallest simple-root vector.
    """
    if not chE.is_exact:
        raise PreconditionError("ch E must be exact")
    remaining = s_of(rs, P.X1) * chE
    summands: list[Weight] = []
    while not remaining.is_zero():
        nu, c = remaining.sorted_terms()[0]
        mu = remaining.weight_of(nu)
        if c < 0:
            raise PreconditionError(
                f"negative coefficient {c} at {mu}: not a sum of l0-simple characters"
            )
        try:
            piece = levi_highest_weight_char(rs, P, mu)
        except PreconditionError as exc:
            raise PreconditionError(f"maximal weight {mu} is not l0-dominant: {exc}") from exc
        remaining = remaining - c * piece
        summands.extend([mu] * c)
    return LeviDecomposition(tuple(summands))
