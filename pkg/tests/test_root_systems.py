import itertools
from fractions import Fraction as F

import pytest

from supertwist.errors import PreconditionError
from supertwist.root_systems import (
    Weight,
    eval_cartan,
    from_lattice,
    is_one_dimensional_weight,
    lattice_coords,
    levi_from_blocks,
    make_gl,
    one_dimensional_weight,
    parabolic_from_simples,
    parse_algebra,
    parse_weight,
    standard_parabolics,
)

SMALL = [(m, n) for m in range(0, 5) for n in range(0, 4) if 1 <= m + n <= 6]


def W(*xs):
    return Weight.of(*xs)


def test_make_gl_2_0():
    rs = make_gl(2, 0)
    assert rs.rho0 == W(F(1, 2), F(-1, 2))
    assert rs.odd_positive == ()


def test_make_gl_1_1():
    rs = make_gl(1, 1)
    assert rs.rho0 == W(0, 0)
    assert rs.rho1 == W(F(1, 2), F(-1, 2))
    assert rs.rho == W(F(-1, 2), F(1, 2))


def test_make_gl_3_2_counts():
    rs = make_gl(3, 2)
    assert len(rs.even_positive) == 4
    assert len(rs.odd_positive) == 6
    assert [str(r) for r in rs.simple] == ["e1-e2", "e2-e3", "e3-d1", "d1-d2"]


def test_make_gl_rejects_empty():
    with pytest.raises(PreconditionError):
        make_gl(0, 0)


@pytest.mark.parametrize("m,n", SMALL)
def test_root_datum_invariants(m, n):
    rs = make_gl(m, n)
    assert len(rs.even_positive) == m * (m - 1) // 2 + n * (n - 1) // 2
    assert len(rs.odd_positive) == m * n
    half0 = sum((r.weight for r in rs.even_positive), Weight.zero(rs.dim)) * F(1, 2)
    half1 = sum((r.weight for r in rs.odd_positive), Weight.zero(rs.dim)) * F(1, 2)
    assert rs.rho0 == half0 and rs.rho1 == half1
    assert rs.rho == rs.rho0 - rs.rho1
    assert (rs.rho0 * 2).is_integral() and (rs.rho1 * 2).is_integral()
    for r in rs.positive:
        coords = r.simple_coords()
        assert all(c >= 0 for c in coords)
        # unique decomposition: the simple roots are linearly independent
        assert from_lattice(coords) == r.weight
        assert lattice_coords(r.weight) == coords
        assert r.is_odd == (r.plus < m <= r.minus)
    for r in rs.odd_positive:
        assert r.plus < m


@pytest.mark.parametrize("m,n", SMALL)
def test_parabolic_closed_and_split(m, n):
    rs = make_gl(m, n)
    weights = {r.weight: r for r in rs.positive}
    for P in standard_parabolics(rs):
        assert P.X0 | P.X1 == P.X and not (P.X0 & P.X1)
        for a, b in itertools.product(P.X, repeat=2):
            s = a.weight + b.weight
            if s in weights:
                assert weights[s] in P.X


def test_eval_cartan_examples():
    a, t = F(7, 3), F(-5, 2)
    rs21 = make_gl(2, 1)
    assert eval_cartan(rs21, W(a, t, -t), rs21.root(1, 2)) == 0
    rs20 = make_gl(2, 0)
    assert eval_cartan(rs20, W(1, 0), rs20.root(0, 1)) == 1
    rs11 = make_gl(1, 1)
    assert eval_cartan(rs11, W(1, 1), rs11.root(0, 1)) == 2


def test_eval_cartan_delta_block():
    rs = make_gl(1, 2)
    assert eval_cartan(rs, W(0, 5, 2), rs.root(1, 2)) == 3


def test_parabolic_from_simples_examples():
    rs32 = make_gl(3, 2)
    assert parabolic_from_simples(rs32, set()).X == frozenset()
    rs21 = make_gl(2, 1)
    P = parabolic_from_simples(rs21, {1})
    assert P.X == {rs21.root(1, 2)} and P.X0 == frozenset()
    rs30 = make_gl(3, 0)
    assert parabolic_from_simples(rs30, {0}).X == {rs30.root(0, 1)}


def test_parabolic_bad_index():
    with pytest.raises(PreconditionError):
        parabolic_from_simples(make_gl(2, 1), {2})


def test_one_dimensional_examples():
    rs21 = make_gl(2, 1)
    P = parabolic_from_simples(rs21, {1})
    assert is_one_dimensional_weight(rs21, P, W(5, 2, -2))
    rs30 = make_gl(3, 0)
    assert not is_one_dimensional_weight(rs30, parabolic_from_simples(rs30, {0}), W(1, 0, 0))
    for m, n in [(2, 1), (3, 2), (1, 1)]:
        rs = make_gl(m, n)
        assert is_one_dimensional_weight(rs, parabolic_from_simples(rs, ()), W(*range(m + n)))


@pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (3, 2)])
def test_one_dimensional_weight_constructor(m, n):
    rs = make_gl(m, n)
    for P in standard_parabolics(rs):
        lam = one_dimensional_weight(rs, P, [F(k, 3) - 1 for k in range(len(P.blocks))])
        assert is_one_dimensional_weight(rs, P, lam)


def test_levi_from_blocks_contiguous_is_standard():
    rs = make_gl(3, 2)
    P = levi_from_blocks(rs, [(0, 1), (3, 4)])
    assert P.is_standard and P == parabolic_from_simples(rs, {0, 3})


def test_levi_from_blocks_non_contiguous():
    rs = make_gl(3, 2)
    P = levi_from_blocks(rs, [(0, 1, 3, 4)])
    assert not P.is_standard
    assert len(P.X0) == 2 and len(P.X1) == 4
    assert rs.root(1, 2) not in P.X


def test_weight_json_round_trip():
    lam = W(F(1, 2), -3, 0)
    assert lam.to_json() == ["1/2", "-3", "0"]
    assert Weight.from_json(lam.to_json()) == lam


def test_parse_helpers():
    assert parse_weight("1/2,-1,0") == W(F(1, 2), -1, 0)
    assert parse_algebra("gl3|2") == (3, 2)
    assert parse_algebra("gl(3|2)") == (3, 2)
    with pytest.raises(PreconditionError):
        parse_weight("1,,x")
    with pytest.raises(PreconditionError):
        parse_algebra("sl3")


def test_root_json_round_trip():
    rs = make_gl(2, 2)
    for r in rs.positive:
        assert rs.root_from_json(r.to_json()) == r
    assert rs.root(0, 2).to_json() == {"plus": 0, "minus": 2, "parity": "odd"}
