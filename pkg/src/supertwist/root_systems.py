"""Root data of gl(m|n) with the distinguished Borel subalgebra.

Coordinates follow the (eps|delta) basis: slots ``0..m-1`` are the
eps-coordinates and ``m..m+n-1`` the delta-coordinates.  Every root is
``e_i - e_j`` for two distinct slots; it is positive iff ``i < j`` and odd iff
the two slots straddle the ``m|n`` boundary.  Simple root ``k`` (0-based) is
``e_k - e_{k+1}``, so an element of the root lattice has simple-root
coordinates given by partial sums of its slot vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "Weight",
    "Root",
    "RootSystem",
    "ParabolicData",
    "make_gl",
    "eval_cartan",
    "parabolic_from_simples",
    "levi_from_blocks",
    "standard_parabolics",
    "levi_even_simple",
    "is_one_dimensional_weight",
    "offending_root",
    "one_dimensional_weight",
    "parse_weight",
    "parse_algebra",
    "gamma_set",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class Weight:
    """Exact rational vector in h*."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_frac(c) for c in self.coords))

    @classmethod
    def of(cls, *values) -> "Weight":
        return cls(tuple(values))

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls((Fraction(0),) * dim)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight"):
        if len(other.coords) != len(self.coords):
            raise PreconditionError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "Weight":
        k = _frac(k)
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Weight":
        return cls(tuple(Fraction(str(s)) for s in data))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Weight{self}"


def parse_weight(text: str) -> Weight:
    """Parse ``"1/2,-1,0"`` into a :class:`Weight`."""
    parts = [p.strip() for p in text.split(",")]
    try:
        return Weight(tuple(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"unparseable weight {text!r}") from exc


def parse_algebra(text: str) -> tuple[int, int]:
    """Parse ``gl3|2`` (also ``gl(3|2)`` or ``3|2``) into ``(3, 2)``."""
    t = text.strip().replace(" ", "")
    if t.startswith("gl"):
        t = t[2:]
    t = t.strip("()")
    try:
        m, n = t.split("|")
        return int(m), int(n)
    except ValueError as exc:
        raise PreconditionError(f"unparseable algebra {text!r}") from exc


@dataclass(frozen=True, order=True)
class Root:
    """The root ``e_plus - e_minus`` in a space of ``dim`` slots."""

    plus: int
    minus: int
    dim: int = field(compare=False)
    parity: str = field(compare=False)
    _m: int = field(default=-1, compare=False, repr=False)  # only used for printing

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"

    @property
    def is_positive(self) -> bool:
        return self.plus < self.minus

    @property
    def weight(self) -> Weight:
        v = [0] * self.dim
        v[self.plus] = 1
        v[self.minus] = -1
        return Weight(tuple(v))

    def simple_coords(self) -> tuple[int, ...]:
        lo, hi = sorted((self.plus, self.minus))
        sign = 1 if self.is_positive else -1
        return tuple(sign if lo <= k < hi else 0 for k in range(self.dim - 1))

    def to_json(self) -> dict:
        return {"plus": self.plus, "minus": self.minus, "parity": self.parity}

    def __str__(self):
        return f"{_slot_name(self.plus, self._m)}-{_slot_name(self.minus, self._m)}"


def _slot_name(slot: int, m: int) -> str:
    if m < 0 or slot < m:
        return f"e{slot + 1}"
    return f"d{slot - m + 1}"


@dataclass(frozen=True)
class RootSystem:
    """Root datum of gl(m|n), distinguished Borel.  Build with :func:`make_gl`."""

    m: int
    n: int
    even_positive: tuple[Root, ...]
    odd_positive: tuple[Root, ...]
    simple: tuple[Root, ...]
    even_simple: tuple[Root, ...]
    rho0: Weight
    rho1: Weight
    rho: Weight

    @property
    def dim(self) -> int:
        return self.m + self.n

    @property
    def rank(self) -> int:
        """Number of simple roots, i.e. the length of simple-root coordinate vectors."""
        return self.m + self.n - 1

    @property
    def positive(self) -> tuple[Root, ...]:
        return tuple(sorted(self.even_positive + self.odd_positive))

    def is_odd_slot_pair(self, i: int, j: int) -> bool:
        return (i < self.m) != (j < self.m)

    def root(self, i: int, j: int) -> Root:
        """The root ``e_i - e_j`` (0-based slots, any sign)."""
        if i == j or not (0 <= i < self.dim and 0 <= j < self.dim):
            raise PreconditionError(f"no root with slots ({i}, {j})")
        parity = "odd" if self.is_odd_slot_pair(i, j) else "even"
        return Root(i, j, self.dim, parity, self.m)

    def root_from_weight(self, vec: Weight) -> Root:
        vec = Weight(tuple(vec))
        if len(vec) != self.dim:
            raise PreconditionError("dimension mismatch")
        nz = [(k, c) for k, c in enumerate(vec.coords) if c != 0]
        if len(nz) != 2 or sorted(c for _, c in nz) != [-1, 1]:
            raise PreconditionError(f"{vec} is not a root")
        plus = next(k for k, c in nz if c == 1)
        minus = next(k for k, c in nz if c == -1)
        return self.root(plus, minus)

    def root_from_json(self, data: dict) -> Root:
        r = self.root(int(data["plus"]), int(data["minus"]))
        if "parity" in data and data["parity"] != r.parity:
            raise PreconditionError(f"parity mismatch for {r}")
        return r

    def lattice_coords(self, vec: Weight) -> tuple[int, ...]:
        """Simple-root coordinates of a root-lattice element."""
        return lattice_coords(vec)

    def from_lattice(self, nu: Sequence[int]) -> Weight:
        return from_lattice(nu)

    def simple_index(self, alpha: Root) -> int:
        for k, s in enumerate(self.simple):
            if s == alpha:
                return k
        raise PreconditionError(f"{alpha} is not simple")

    def __str__(self):
        return f"gl({self.m}|{self.n})"


def lattice_coords(vec: Weight) -> tuple[int, ...]:
    """Partial sums ``c_k = v_0 + ... + v_k`` for ``k < dim - 1``.

    Raises :class:`PreconditionError` when ``vec`` is not in the root lattice
    (non-integral entries or nonzero coordinate sum).
    """
    coords = vec.coords
    if any(c.denominator != 1 for c in coords) or sum(coords) != 0:
        raise PreconditionError(f"{vec} is not in the root lattice")
    out = []
    acc = 0
    for c in coords[:-1]:
        acc += int(c)
        out.append(acc)
    return tuple(out)


def from_lattice(nu: Sequence[int]) -> Weight:
    prev = 0
    out = []
    for c in nu:
        out.append(c - prev)
        prev = c
    out.append(-prev)
    return Weight(tuple(out))


def in_root_lattice(vec: Weight) -> bool:
    return all(c.denominator == 1 for c in vec.coords) and sum(vec.coords) == 0


@lru_cache(maxsize=None)
def make_gl(m: int, n: int) -> RootSystem:
    if m < 0 or n < 0:
        raise PreconditionError("m and n must be nonnegative")
    if m + n < 1:
        raise PreconditionError("gl(0|0) has no roots: need m + n >= 1")
    dim = m + n

    def root(i, j):
        parity = "odd" if (i < m) != (j < m) else "even"
        return Root(i, j, dim, parity, m)

    pairs = list(itertools.combinations(range(dim), 2))
    even = tuple(root(i, j) for i, j in pairs if (i < m) == (j < m))
    odd = tuple(root(i, j) for i, j in pairs if (i < m) != (j < m))
    simple = tuple(root(k, k + 1) for k in range(dim - 1))
    even_simple = tuple(r for r in simple if not r.is_odd)

    def half_sum(roots):
        total = Weight.zero(dim)
        for r in roots:
            total = total + r.weight
        return total * Fraction(1, 2)

    rho0 = half_sum(even)
    rho1 = half_sum(odd)
    return RootSystem(m, n, even, odd, simple, even_simple, rho0, rho1, rho0 - rho1)


def eval_cartan(rs: RootSystem, lam: Weight, alpha: Root) -> Fraction:
    """``lam(h_alpha)`` for the coroot ``h_alpha`` of a root of ``rs``.

    For ``e_i - e_j`` within one block this is ``lam_i - lam_j``; for an odd
    root ``eps_i - delta_j`` it is ``lam_i + lam_{m+j}``.
    """
    if alpha.dim != rs.dim:
        raise PreconditionError(f"{alpha} is not a root of {rs}")
    if len(lam) != rs.dim:
        raise PreconditionError("dimension mismatch")
    i, j = alpha.plus, alpha.minus
    if rs.is_odd_slot_pair(i, j):
        return lam[i] + lam[j]
    return lam[i] - lam[j]


@dataclass(frozen=True)
class ParabolicData:
    """Levi data: a partition of the slots into blocks and ``X = Delta+(l)``.

    ``simples`` holds the generating simple-root indices for a standard
    parabolic and is ``None`` for a Levi whose blocks are not contiguous.
    """

    blocks: tuple[tuple[int, ...], ...]
    simples: frozenset[int] | None
    X: frozenset[Root]

    @property
    def X0(self) -> frozenset[Root]:
        return frozenset(r for r in self.X if not r.is_odd)

    @property
    def X1(self) -> frozenset[Root]:
        return frozenset(r for r in self.X if r.is_odd)

    @property
    def is_standard(self) -> bool:
        return self.simples is not None

    def label(self) -> str:
        if self.simples is None:
            return "blocks" + "".join(str(list(b)) for b in self.blocks)
        return "{" + ",".join(str(k + 1) for k in sorted(self.simples)) + "}"


def parabolic_from_simples(rs: RootSystem, S: Iterable[int]) -> ParabolicData:
    """Standard parabolic generated by the simple roots with 0-based indices ``S``."""
    S = frozenset(S)
    bad = [k for k in S if not 0 <= k < rs.rank]
    if bad:
        raise PreconditionError(f"simple root indices out of range: {sorted(bad)}")
    blocks = []
    cur = [0]
    for k in range(rs.rank):
        if k in S:
            cur.append(k + 1)
        else:
            blocks.append(tuple(cur))
            cur = [k + 1]
    blocks.append(tuple(cur))
    X = frozenset(
        r for r in rs.positive if all(k in S for k in range(r.plus, r.minus))
    )
    return ParabolicData(tuple(blocks), S, X)


def levi_from_blocks(rs: RootSystem, blocks: Iterable[Iterable[int]]) -> ParabolicData:
    """Levi ``gl(B_1) + ... + gl(B_k)`` for a set partition of the slots.

    Slots missing from ``blocks`` become singletons.  When every block is an
    interval the result equals the corresponding standard parabolic.
    """
    seen: set[int] = set()
    out = []
    for b in blocks:
        b = tuple(sorted(set(b)))
        if not b:
            continue
        if any(s in seen or not 0 <= s < rs.dim for s in b):
            raise PreconditionError(f"invalid block {b}")
        seen.update(b)
        out.append(b)
    out.extend((s,) for s in range(rs.dim) if s not in seen)
    out.sort()
    if all(b == tuple(range(b[0], b[-1] + 1)) for b in out):
        S = {k for b in out for k in range(b[0], b[-1])}
        return parabolic_from_simples(rs, S)
    where = {s: idx for idx, b in enumerate(out) for s in b}
    X = frozenset(r for r in rs.positive if where[r.plus] == where[r.minus])
    return ParabolicData(tuple(out), None, X)


def levi_even_simple(rs: RootSystem, P: ParabolicData) -> tuple[Root, ...]:
    """Simple roots of the even part ``l0`` of the Levi."""
    out = []
    for blk in P.blocks:
        for part in ([s for s in blk if s < rs.m], [s for s in blk if s >= rs.m]):
            out.extend(rs.root(a, b) for a, b in zip(part, part[1:]))
    return tuple(sorted(out))


def standard_parabolics(rs: RootSystem) -> list[ParabolicData]:
    """All ``2**rank`` standard parabolics, ordered by (size, indices)."""
    subsets = []
    for size in range(rs.rank + 1):
        subsets.extend(itertools.combinations(range(rs.rank), size))
    return [parabolic_from_simples(rs, S) for S in subsets]


def offending_root(rs: RootSystem, P: ParabolicData, lam: Weight) -> Root | None:
    for alpha in sorted(P.X):
        if eval_cartan(rs, lam, alpha) != 0:
            return alpha
    return None


def is_one_dimensional_weight(rs: RootSystem, P: ParabolicData, lam: Weight) -> bool:
    return offending_root(rs, P, lam) is None


def one_dimensional_weight(rs: RootSystem, P: ParabolicData, values: Sequence) -> Weight:
    """Weight of a one-dimensional Levi module, one value per block.

    eps-slots of a block get ``v``; delta-slots get ``-v`` when the block also
    has eps-slots (supertrace), otherwise ``v``.
    """
    if len(values) != len(P.blocks):
        raise PreconditionError(f"need {len(P.blocks)} block values, got {len(values)}")
    coords = [Fraction(0)] * rs.dim
    for blk, v in zip(P.blocks, values):
        v = _frac(v)
        has_eps = any(s < rs.m for s in blk)
        for s in blk:
            coords[s] = v if (s < rs.m or not has_eps) else -v
    return Weight(tuple(coords))


@lru_cache(maxsize=None)
def gamma_set(rs: RootSystem) -> frozenset[Weight]:
    """Sums of distinct odd positive roots (collisions merged)."""
    sums = {Weight.zero(rs.dim)}
    for alpha in rs.odd_positive:
        sums |= {g + alpha.weight for g in sums}
    return frozenset(sums)
