"""Twisted characters of generalized Verma modules and their verifiers.

Two closed forms are computed for ``T_w Ind L``:

* circle form: ``p_{wX} (w o ch L)``;
* dot form (one-dimensional ``L = k_lam``): ``e^{w . lam} p_{wX}``;

and both are compared with an oracle that never touches ``p_{wX}``: write
``ch Ind L = a p`` with ``a = r_X s_X ch L`` finite, expand ``a`` into even
Verma characters ``e^mu p`` and send each to ``e^{w o mu} p``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .charring import (
    FormalCharacter,
    K_coeffs,
    act_on_char,
    char_exp,
    first_discrepancy,
    from_weights,
    kostant_p,
    linear_combination,
    p_series,
    r_of,
    s_of,
)
from .errors import IncompatibleTwistError, NotOneDimensionalError, PreconditionError
from .modules import levi_highest_weight_char
from .root_systems import (
    ParabolicData,
    Root,
    RootSystem,
    Weight,
    eval_cartan,
    make_gl,
    offending_root,
    one_dimensional_weight,
    parabolic_from_simples,
    standard_parabolics,
)
from .weyl import (
    WeylElement,
    act_circle,
    act_dot,
    act_root,
    act_star,
    elements,
    inversion_set,
)

__all__ = [
    "TwistReport",
    "check_twist_compatible",
    "twist_witness",
    "twisted_roots",
    "twisted_gvm_char",
    "twisted_gvm_char_1dim",
    "oracle_twisted_char",
    "compare",
    "theorem_report",
    "verify_pug",
    "verify_asp",
    "verify_pig",
    "verify_don",
    "one_dim_samples",
    "levi_dominant_samples",
    "compatible_elements",
    "theorem_sweep",
]


@dataclass(frozen=True)
class TwistReport:
    closed_form: FormalCharacter
    oracle: FormalCharacter
    order: int | None
    agree: bool
    first_discrepancy: tuple[Weight, int, int] | None = None

    def to_json(self) -> dict:
        fd = None
        if self.first_discrepancy is not None:
            mu, lhs, rhs = self.first_discrepancy
            fd = {"mu": mu.to_json(), "lhs": lhs, "rhs": rhs}
        return {"agree": self.agree, "order": self.order, "first_discrepancy": fd}


def compare(closed: FormalCharacter, oracle: FormalCharacter) -> TwistReport:
    disc, window = first_discrepancy(closed, oracle)
    return TwistReport(closed, oracle, window, disc is None, disc)


def twist_witness(rs: RootSystem, P: ParabolicData, w: WeylElement) -> Root | None:
    """A root of ``N(w) ∩ X``, or a root of ``X`` sent negative; ``None`` if compatible."""
    bad = sorted(inversion_set(rs, w) & P.X0)
    if bad:
        return bad[0]
    for alpha in sorted(P.X):
        if not act_root(rs, w, alpha).is_positive:
            return alpha
    return None


def check_twist_compatible(rs: RootSystem, P: ParabolicData, w: WeylElement) -> bool:
    return twist_witness(rs, P, w) is None


def twisted_roots(rs: RootSystem, P: ParabolicData, w: WeylElement) -> frozenset[Root]:
    """``wX``; requires compatibility."""
    bad = twist_witness(rs, P, w)
    if bad is not None:
        raise IncompatibleTwistError(bad)
    return frozenset(act_root(rs, w, a) for a in P.X)


def twisted_gvm_char(
    rs: RootSystem, P: ParabolicData, w: WeylElement, chL: FormalCharacter, N: int
) -> FormalCharacter:
    """``p_{wX} (w o ch L)``."""
    wX = twisted_roots(rs, P, w)
    if not chL.is_exact:
        raise PreconditionError("ch L must be exact")
    return p_series(rs, wX, N) * act_on_char(rs, w, chL, "circle")


def twisted_gvm_char_1dim(
    rs: RootSystem, P: ParabolicData, w: WeylElement, lam: Weight, N: int
) -> FormalCharacter:
    """``e^{w . lam} p_{wX}`` for ``L = k_lam``."""
    bad = offending_root(rs, P, lam)
    if bad is not None:
        raise NotOneDimensionalError(bad, eval_cartan(rs, lam, bad))
    wX = twisted_roots(rs, P, w)
    return char_exp(act_dot(rs, w, lam)) * p_series(rs, wX, N)


def oracle_twisted_char(
    rs: RootSystem, P: ParabolicData, w: WeylElement, chL: FormalCharacter, N: int
) -> FormalCharacter:
    """Twist through the even Verma expansion ``ch Ind L = sum_mu b_mu e^mu p``."""
    if not chL.is_exact:
        raise PreconditionError("ch L must be exact")
    a = r_of(rs, P.X0) * s_of(rs, P.X1) * chL
    p = kostant_p(rs, N)
    vermas = [(b, char_exp(act_circle(rs, w, mu)) * p) for mu, b in a.weights().items()]
    if not vermas:
        return FormalCharacter(act_circle(rs, w, chL.anchor), {}, N)
    return linear_combination(vermas)


def theorem_report(
    rs: RootSystem,
    P: ParabolicData,
    w: WeylElement,
    N: int,
    lam: Weight | None = None,
    chL: FormalCharacter | None = None,
) -> TwistReport:
    """Compare every available closed form with the oracle.

    With ``lam`` (one-dimensional ``L``) both the dot form and the circle form
    are checked; with ``chL`` only the circle form.  The returned report
    carries the first failing comparison, else the primary one.
    """
    if (lam is None) == (chL is None):
        raise PreconditionError("pass exactly one of lam / chL")
    reports = []
    if lam is not None:
        chL = char_exp(lam)
        oracle = oracle_twisted_char(rs, P, w, chL, N)
        reports.append(compare(twisted_gvm_char_1dim(rs, P, w, lam, N), oracle))
    else:
        oracle = oracle_twisted_char(rs, P, w, chL, N)
    reports.append(compare(twisted_gvm_char(rs, P, w, chL, N), oracle))
    for r in reports:
        if not r.agree:
            return r
    return reports[0]


# --- finite identities ------------------------------------------------------

def _one_plus(rs: RootSystem, roots: Iterable[Root]) -> FormalCharacter:
    zero = Weight.zero(rs.dim)
    out = char_exp(zero)
    for a in sorted(roots):
        out = out * from_weights({zero: 1, -a.weight: 1})
    return out


def verify_pug(rs: RootSystem, w: WeylElement, Z: Iterable[Root]) -> bool:
    """``sum K_Z(g) e^{-w*g} == sum K_{wZ}(g) e^{-g}``."""
    Z = frozenset(Z)
    wZ = frozenset(act_root(rs, w, a) for a in Z)
    if not all(a.is_positive for a in wZ):
        raise PreconditionError("wZ is not contained in the odd positive roots")
    lhs = {}
    for g, k in K_coeffs(rs, Z).items():
        key = -act_star(rs, w, g)
        lhs[key] = lhs.get(key, 0) + k
    rhs = {-g: k for g, k in K_coeffs(rs, wZ).items()}
    return from_weights(lhs, rs.dim) == from_weights(rhs, rs.dim)


def verify_asp(rs: RootSystem, Z: Iterable[Root]) -> bool:
    """``e^{rho1} prod_Z(1 + e^-a) s_Z == prod_{Delta1+}(e^{a/2} + e^{-a/2})``, and the
    right side is fixed by every ``w``."""
    Z = frozenset(Z)
    lhs = char_exp(rs.rho1) * _one_plus(rs, Z) * s_of(rs, Z)
    half = Fraction(1, 2)
    rhs = char_exp(Weight.zero(rs.dim))
    for a in rs.odd_positive:
        rhs = rhs * from_weights({a.weight * half: 1, a.weight * -half: 1})
    if lhs != rhs:
        return False
    return all(act_on_char(rs, w, rhs, "linear") == rhs for w in elements(rs))


def verify_pig(rs: RootSystem, w: WeylElement, lam: Weight, gamma: Weight) -> bool:
    """``w o (lam - gamma) == w . lam - w * gamma``."""
    return act_circle(rs, w, lam - gamma) == act_dot(rs, w, lam) - act_star(rs, w, gamma)


def verify_don(rs: RootSystem, w: WeylElement, a: FormalCharacter, b: FormalCharacter) -> bool:
    """``w o (ab) == (wa)(w o b)``."""
    lhs = act_on_char(rs, w, a * b, "circle")
    rhs = act_on_char(rs, w, a, "linear") * act_on_char(rs, w, b, "circle")
    return lhs == rhs


# --- sample generation and sweeps -----------------------------------------

_POOL = [Fraction(1, 2), Fraction(-7, 3), Fraction(3), Fraction(5, 4), Fraction(-2),
         Fraction(0), Fraction(2, 5), Fraction(1)]


def one_dim_samples(rs: RootSystem, P: ParabolicData, count: int = 3) -> list[Weight]:
    """Deterministic admissible weights for ``k_lam``; the first is non-integral."""
    out = []
    for k in range(count):
        values = [_POOL[(3 * k + b) % len(_POOL)] for b in range(len(P.blocks))]
        out.append(one_dimensional_weight(rs, P, values))
    return out


def levi_dominant_samples(rs: RootSystem, P: ParabolicData, count: int = 3) -> list[Weight]:
    """Deterministic ``l0``-dominant integral highest weights with ``<lam, a^v> <= 3``."""
    out = []
    for k in range(count):
        coords = [Fraction(0)] * rs.dim
        j = 0
        for blk in P.blocks:
            for part in ([s for s in blk if s < rs.m], [s for s in blk if s >= rs.m]):
                if not part:
                    continue
                shift = _POOL[(k + 2 * j) % len(_POOL)]
                gap = (k + j) % 3
                for i, s in enumerate(part):
                    coords[s] = shift + gap * (len(part) - 1 - i) + (1 if i == 0 and k == 2 else 0)
                j += 1
        out.append(Weight(tuple(coords)))
    return out


def compatible_elements(rs: RootSystem, P: ParabolicData) -> list[WeylElement]:
    return [w for w in elements(rs) if check_twist_compatible(rs, P, w)]


@dataclass(frozen=True)
class SweepCase:
    parabolic: str
    word: dict
    weight: list
    kind: str
    report: dict


def _sweep_parabolic(args) -> list[SweepCase]:
    m, n, simples, N, samples, kinds = args
    rs = make_gl(m, n)
    P = parabolic_from_simples(rs, simples)
    out = []
    for w in compatible_elements(rs, P):
        if "one-dim" in kinds:
            for lam in one_dim_samples(rs, P, samples):
                rep = theorem_report(rs, P, w, N, lam=lam)
                out.append(SweepCase(P.label(), w.to_json(), lam.to_json(), "one-dim", rep.to_json()))
        if "levi" in kinds and not P.X1:
            for lam in levi_dominant_samples(rs, P, samples):
                chL = levi_highest_weight_char(rs, P, lam)
                rep = theorem_report(rs, P, w, N, chL=chL)
                out.append(SweepCase(P.label(), w.to_json(), lam.to_json(), "levi", rep.to_json()))
    return out


def theorem_sweep(
    rs: RootSystem,
    N: int,
    samples: int = 3,
    kinds: tuple[str, ...] = ("one-dim", "levi"),
    jobs: int = 1,
) -> list[SweepCase]:
    """All standard parabolics x compatible ``w`` x sample weights.

    ``levi`` cases use ``l0``-simple characters and run only on parabolics
    with no odd Levi roots.
    """
    tasks = [
        (rs.m, rs.n, tuple(sorted(P.simples)), N, samples, kinds)
        for P in standard_parabolics(rs)
    ]
    if jobs <= 1:
        results = map(_sweep_parabolic, tasks)
        return [c for chunk in results for c in chunk]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [c for chunk in pool.map(_sweep_parabolic, tasks) for c in chunk]

