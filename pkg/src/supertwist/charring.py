"""Anchored, height-truncated formal characters with integer coefficients.

A :class:`FormalCharacter` stores ``sum_nu c_nu e^(anchor - nu)`` where each
key ``nu`` is a vector of nonnegative simple-root coordinates.  ``order`` is
either ``None`` (exact, finite support) or an integer ``N`` meaning every
coefficient with ``height(nu) <= N`` is correct and nothing above ``N`` is
stored.

Re-anchoring a truncated series upward by ``delta`` raises its order by
``height(delta)``: the new keys below ``delta`` are known zeros.
"""

from __future__ import annotations

import itertools
import operator
from collections import Counter, defaultdict
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import PreconditionError, WindowError
from .root_systems import (
    ParabolicData,
    Root,
    RootSystem,
    Weight,
    from_lattice,
    gamma_set,
    in_root_lattice,
    lattice_coords,
)
from .weyl import WeylElement, act, act_circle, act_dot

__all__ = [
    "FormalCharacter",
    "height",
    "char_exp",
    "from_weights",
    "mul",
    "add",
    "sub",
    "scale",
    "coefficient",
    "first_discrepancy",
    "join_anchor",
    "linear_combination",
    "r_of",
    "s_of",
    "kostant_p",
    "partition_series",
    "p_series",
    "p_of",
    "gamma_set",
    "K_coeffs",
    "act_on_char",
    "DEFAULT_TRUNC",
]

DEFAULT_TRUNC = 10

Key = tuple[int, ...]


def height(nu: Iterable[int]) -> int:
    return sum(nu)


def _add_keys(a: Key, b: Key) -> Key:
    return tuple(map(operator.add, a, b))


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class FormalCharacter:
    """Immutable sparse series anchored at a weight; see the module docstring."""

    __slots__ = ("anchor", "terms", "order")

    def __init__(self, anchor: Weight, terms: Mapping[Key, int], order: int | None = None):
        rank = len(anchor) - 1
        clean = {}
        for nu, c in terms.items():
            nu = tuple(int(x) for x in nu)
            if len(nu) != rank or any(x < 0 for x in nu):
                raise PreconditionError(f"bad term key {nu} for anchor of length {len(anchor)}")
            if c and (order is None or sum(nu) <= order):
                clean[nu] = int(c)
        if order is not None and order < 0:
            raise PreconditionError("order must be nonnegative")
        self._init(anchor, clean, order)

    def _init(self, anchor, terms, order):
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "terms", MappingProxyType(terms))
        object.__setattr__(self, "order", order)

    @classmethod
    def _raw(cls, anchor: Weight, terms: dict, order):
        obj = cls.__new__(cls)
        obj._init(anchor, {k: c for k, c in terms.items() if c}, order)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FormalCharacter is immutable")

    # --- queries -----------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.order is None

    @property
    def dim(self) -> int:
        return len(self.anchor)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def weight_of(self, nu: Key) -> Weight:
        return self.anchor - from_lattice(nu)

    def weights(self) -> dict[Weight, int]:
        """Map weight -> coefficient.  Only meaningful for exact characters."""
        if not self.is_exact:
            raise PreconditionError("weights() needs an exact character")
        return {self.weight_of(nu): c for nu, c in self.terms.items()}

    # --- re-anchoring ------------------------------------------------------
    def reanchor(self, new_anchor: Weight) -> "FormalCharacter":
        """Same series, anchored at ``new_anchor`` (which must lie above the old anchor)."""
        diff = new_anchor - self.anchor
        if not in_root_lattice(diff):
            raise PreconditionError(f"anchors {self.anchor} and {new_anchor} differ by a non-root-lattice vector")
        delta = lattice_coords(diff)
        if any(d < 0 for d in delta):
            raise PreconditionError(f"{new_anchor} does not lie above {self.anchor}")
        if not any(delta):
            return self
        order = None if self.order is None else self.order + sum(delta)
        terms = {_add_keys(nu, delta): c for nu, c in self.terms.items()}
        return FormalCharacter._raw(new_anchor, terms, order)

    def tight(self) -> "FormalCharacter":
        """Exact character re-anchored at the join of its support."""
        if not self.is_exact:
            raise PreconditionError("tight() needs an exact character")
        if not self.terms:
            return self
        low = tuple(min(col) for col in zip(*self.terms)) if self.dim > 1 else ()
        if not any(low):
            return self
        anchor = self.anchor - from_lattice(low)
        terms = {tuple(a - b for a, b in zip(nu, low)): c for nu, c in self.terms.items()}
        return FormalCharacter._raw(anchor, terms, None)

    def truncate(self, order: int) -> "FormalCharacter":
        order = _min_order(self.order, order)
        return FormalCharacter._raw(
            self.anchor, {k: c for k, c in self.terms.items() if sum(k) <= order}, order
        )

    # --- arithmetic --------------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        if self.is_exact != other.is_exact or self.dim != other.dim:
            return False
        if self.is_exact:
            return self.weights() == other.weights()
        try:
            a, b = _common_anchor(self, other)
        except PreconditionError:
            return False
        return a.order == b.order and dict(a.terms) == dict(b.terms)

    __hash__ = None

    def __repr__(self):
        order = "exact" if self.order is None else self.order
        return f"FormalCharacter(anchor={self.anchor}, order={order}, terms={len(self.terms)})"

    # --- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "anchor": self.anchor.to_json(),
            "order": "exact" if self.order is None else self.order,
            "terms": [{"nu": list(nu), "c": c} for nu, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FormalCharacter":
        order = data["order"]
        order = None if order == "exact" else int(order)
        terms = {tuple(t["nu"]): int(t["c"]) for t in data["terms"]}
        return cls(Weight.from_json(data["anchor"]), terms, order)

    def to_text(self) -> str:
        order = "exact" if self.order is None else str(self.order)
        lines = [f"# anchor={self.anchor} order={order} terms={len(self.terms)}"]
        for nu, c in self.sorted_terms():
            lines.append(f"{c}*e^{self.weight_of(nu)}")
        return "\n".join(lines) + "\n"


def _join(a: Weight, b: Weight) -> Weight:
    diff = a - b
    if not in_root_lattice(diff):
        raise PreconditionError(f"anchors {a} and {b} are not comparable (different root-lattice cosets)")
    d = lattice_coords(diff)
    return b + from_lattice(tuple(max(x, 0) for x in d))


def join_anchor(weights: Iterable[Weight]) -> Weight:
    """Least weight lying above every weight in ``weights`` (same root-lattice coset)."""
    it = iter(weights)
    out = next(it)
    for w in it:
        out = _join(out, w)
    return out


def _common_anchor(a: FormalCharacter, b: FormalCharacter):
    if a.anchor == b.anchor:
        return a, b
    # an exact zero carries no coset information
    if a.is_exact and not a.terms:
        return FormalCharacter._raw(b.anchor, {}, None), b
    if b.is_exact and not b.terms:
        return a, FormalCharacter._raw(a.anchor, {}, None)
    j = _join(a.anchor, b.anchor)
    return a.reanchor(j), b.reanchor(j)


def char_exp(lam: Weight) -> FormalCharacter:
    """``e^lam``."""
    return FormalCharacter._raw(lam, {(0,) * (len(lam) - 1): 1}, None)


def from_weights(coeffs: Mapping[Weight, int], dim: int | None = None) -> FormalCharacter:
    """Exact character from a weight -> coefficient map, anchored at the join of its support."""
    items = [(w, c) for w, c in coeffs.items() if c]
    if not items:
        if dim is None:
            raise PreconditionError("empty character needs an explicit dimension")
        return FormalCharacter._raw(Weight.zero(dim), {}, None)
    anchor = items[0][0]
    for w, _ in items[1:]:
        anchor = _join(anchor, w)
    terms: dict = defaultdict(int)
    for w, c in items:
        terms[lattice_coords(anchor - w)] += c
    return FormalCharacter._raw(anchor, terms, None)


def _convolve(ta: Mapping[Key, int], tb: Mapping[Key, int], order) -> dict:
    out: dict = defaultdict(int)
    if order is None:
        for ka, ca in ta.items():
            for kb, cb in tb.items():
                out[_add_keys(ka, kb)] += ca * cb
        return out
    b_sorted = sorted(((sum(k), k, c) for k, c in tb.items()), key=lambda t: t[0])
    for ka, ca in ta.items():
        limit = order - sum(ka)
        if limit < 0:
            continue
        for hb, kb, cb in b_sorted:
            if hb > limit:
                break
            out[_add_keys(ka, kb)] += ca * cb
    return out


def mul(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    if a.dim != b.dim:
        raise PreconditionError("dimension mismatch")
    order = _min_order(a.order, b.order)
    anchor = a.anchor + b.anchor
    # monomial fast path
    for x, y in ((a, b), (b, a)):
        if x.is_exact and len(x.terms) == 1:
            (kx, cx), = x.terms.items()
            terms = {_add_keys(kx, k): cx * c for k, c in y.terms.items()}
            if order is not None:
                terms = {k: c for k, c in terms.items() if sum(k) <= order}
            return FormalCharacter._raw(anchor, terms, order)
    return FormalCharacter._raw(anchor, _convolve(a.terms, b.terms, order), order)


def add(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Sum, re-anchored at the componentwise join of the two anchors."""
    if a.dim != b.dim:
        raise PreconditionError("dimension mismatch")
    a, b = _common_anchor(a, b)
    order = _min_order(a.order, b.order)
    terms = defaultdict(int, a.terms)
    for k, c in b.terms.items():
        terms[k] += c
    if order is not None:
        terms = {k: c for k, c in terms.items() if sum(k) <= order}
    return FormalCharacter._raw(a.anchor, terms, order)


def scale(chi: FormalCharacter, k: int) -> FormalCharacter:
    return FormalCharacter._raw(chi.anchor, {nu: k * c for nu, c in chi.terms.items()}, chi.order)


def sub(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    return add(a, scale(b, -1))


def linear_combination(pairs: Iterable[tuple[int, FormalCharacter]]) -> FormalCharacter:
    """``sum k_i chi_i`` accumulated at the join of all anchors in one pass."""
    pairs = [(k, chi) for k, chi in pairs if k]
    if not pairs:
        raise PreconditionError("empty linear combination")
    anchor = join_anchor(chi.anchor for _, chi in pairs)
    order = None
    shifted = []
    for k, chi in pairs:
        delta = lattice_coords(anchor - chi.anchor)
        if chi.order is not None:
            order = _min_order(order, chi.order + sum(delta))
        shifted.append((k, chi, delta))
    out: dict = defaultdict(int)
    for k, chi, delta in shifted:
        hd = sum(delta)
        for nu, c in chi.terms.items():
            if order is not None and hd + sum(nu) > order:
                continue
            out[_add_keys(nu, delta)] += k * c
    return FormalCharacter._raw(anchor, out, order)


def coefficient(chi: FormalCharacter, mu: Weight) -> int:
    """Coefficient of ``e^mu``.

    Raises :class:`WindowError` when ``mu`` lies below the truncation window,
    which is different from a genuine zero.
    """
    diff = chi.anchor - mu
    if not in_root_lattice(diff):
        return 0
    nu = lattice_coords(diff)
    if any(x < 0 for x in nu):
        return 0
    if chi.order is not None and sum(nu) > chi.order:
        raise WindowError(
            f"height {sum(nu)} of {mu} below anchor {chi.anchor} exceeds order {chi.order}"
        )
    return chi.terms.get(nu, 0)


def first_discrepancy(a: FormalCharacter, b: FormalCharacter):
    """First ``(weight, lhs, rhs)`` in (height, nu) order where ``a`` and ``b``
    differ within their shared window, or ``None``.  Returns the window too."""
    a, b = _common_anchor(a, b)
    window = _min_order(a.order, b.order)
    keys = set(a.terms) | set(b.terms)
    if window is not None:
        keys = {k for k in keys if sum(k) <= window}
    for k in sorted(keys, key=lambda k: (sum(k), k)):
        ca, cb = a.terms.get(k, 0), b.terms.get(k, 0)
        if ca != cb:
            return (a.weight_of(k), ca, cb), window
    return None, window


# --- partition generating functions ---------------------------------------

def _check_roots(rs: RootSystem, roots, parity: str):
    for r in roots:
        if r.dim != rs.dim or r.parity != parity or not r.is_positive:
            raise PreconditionError(f"{r} is not a positive {parity} root of {rs}")


def _product_one_plus_sign(rs: RootSystem, roots, sign: int) -> FormalCharacter:
    terms = {(0,) * rs.rank: 1}
    for r in sorted(roots):
        beta = r.simple_coords()
        nxt = defaultdict(int, terms)
        for k, c in terms.items():
            nxt[_add_keys(k, beta)] += sign * c
        terms = {k: c for k, c in nxt.items() if c}
    return FormalCharacter._raw(Weight.zero(rs.dim), terms, None)


def r_of(rs: RootSystem, X0: Iterable[Root]) -> FormalCharacter:
    """``prod_{alpha in X0} (1 - e^-alpha)``."""
    X0 = frozenset(X0)
    _check_roots(rs, X0, "even")
    return _product_one_plus_sign(rs, X0, -1)


def s_of(rs: RootSystem, X1: Iterable[Root]) -> FormalCharacter:
    """``prod (1 + e^-alpha)`` over the odd positive roots NOT in ``X1``."""
    X1 = frozenset(X1)
    _check_roots(rs, X1, "odd")
    return _product_one_plus_sign(rs, [r for r in rs.odd_positive if r not in X1], 1)


def _geometric(terms: Mapping[Key, int], beta: Key, order: int) -> dict:
    """Multiply by ``1/(1 - e^-beta)`` up to height ``order``."""
    hb = sum(beta)
    out: dict = defaultdict(int)
    for k, c in terms.items():
        h = sum(k)
        while h <= order:
            out[k] += c
            k = _add_keys(k, beta)
            h += hb
    return out


@lru_cache(maxsize=None)
def _partition_cached(rs: RootSystem, roots: frozenset, N: int) -> FormalCharacter:
    terms: Mapping[Key, int] = {(0,) * rs.rank: 1}
    for r in sorted(roots):
        terms = _geometric(terms, r.simple_coords(), N)
    return FormalCharacter._raw(Weight.zero(rs.dim), dict(terms), N)


def partition_series(rs: RootSystem, roots: Iterable[Root], N: int) -> FormalCharacter:
    """``prod_{alpha in roots} 1/(1 - e^-alpha)`` to height ``N`` (even positive roots)."""
    if N < 0:
        raise PreconditionError("truncation must be nonnegative")
    roots = frozenset(roots)
    _check_roots(rs, roots, "even")
    return _partition_cached(rs, roots, N)


def kostant_p(rs: RootSystem, N: int) -> FormalCharacter:
    """Even-root partition generating function ``p = 1/r`` to height ``N``."""
    return partition_series(rs, rs.even_positive, N)


@lru_cache(maxsize=None)
def _p_series_cached(rs: RootSystem, X: frozenset, N: int) -> FormalCharacter:
    X0 = [r for r in X if not r.is_odd]
    X1 = [r for r in X if r.is_odd]
    return mul(mul(r_of(rs, X0), s_of(rs, X1)), kostant_p(rs, N))


def p_series(rs: RootSystem, X: Iterable[Root], N: int) -> FormalCharacter:
    """``p_X = r_X s_X p`` for an arbitrary set ``X`` of positive roots."""
    return _p_series_cached(rs, frozenset(X), N)


def p_of(rs: RootSystem, P: ParabolicData, N: int) -> FormalCharacter:
    return p_series(rs, P.X, N)


def K_coeffs(rs: RootSystem, Z: Iterable[Root]) -> dict[Weight, int]:
    """Coefficients ``K_Z(gamma)`` of ``prod_{Delta1+ \\ Z}(1 + e^-alpha) = sum K_Z(gamma) e^-gamma``.

    Expanded by enumerating subsets, independently of the series engine.
    """
    Z = frozenset(Z)
    _check_roots(rs, Z, "odd")
    rest = [r for r in rs.odd_positive if r not in Z]
    out: Counter = Counter()
    for size in range(len(rest) + 1):
        for subset in itertools.combinations(rest, size):
            g = Weight.zero(rs.dim)
            for r in subset:
                g = g + r.weight
            out[g] += 1
    return dict(out)


def act_on_char(rs: RootSystem, w: WeylElement, chi: FormalCharacter, mode: str = "linear") -> FormalCharacter:
    """Term-wise image ``e^mu -> e^(w mu)`` (``linear``), ``e^(w o mu)`` (``circle``)
    or ``e^(w . mu)`` (``dot``).

    Anchors at the image of the old anchor unless some image lies above it,
    in which case the result is re-anchored at the join.
    """
    if not chi.is_exact:
        raise PreconditionError("the Weyl action is only term-wise safe on exact characters")
    if mode not in ("linear", "circle", "dot"):
        raise PreconditionError(f"unknown action mode {mode!r}")
    if mode == "linear":
        anchor = act(w, chi.anchor)
    elif mode == "circle":
        anchor = act_circle(rs, w, chi.anchor)
    else:
        anchor = act_dot(rs, w, chi.anchor)
    # all three actions move anchor - nu to image(anchor) - w(nu)
    images = {}
    for nu, c in chi.terms.items():
        images[lattice_coords(act(w, from_lattice(nu)))] = c
    if not images:
        return FormalCharacter._raw(anchor, {}, None)
    low = tuple(min(0, min(col)) for col in zip(*images)) if rs.rank else ()
    if any(low):
        anchor = anchor - from_lattice(low)
        images = {tuple(a - b for a, b in zip(k, low)): c for k, c in images.items()}
    return FormalCharacter._raw(anchor, images, None)
