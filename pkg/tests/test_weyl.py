from fractions import Fraction as F

import pytest

from supertwist.errors import PreconditionError
from supertwist.root_systems import Weight, gamma_set, make_gl
from supertwist.weyl import (
    WeylElement,
    act,
    act_circle,
    act_dot,
    act_root,
    act_star,
    elements,
    from_word,
    identity,
    inversion_set,
    parse_word,
)

GROUPS = [(m, n) for m in range(0, 4) for n in range(0, 4) if m + n >= 1]


def W(*xs):
    return Weight.of(*xs)


def sample_weights(rs):
    base = [F(1, 2), F(-7, 3), F(3), F(5, 4), F(-2), F(0), F(2, 5)]
    return [
        Weight(tuple(base[(k + i) % len(base)] for i in range(rs.dim)))
        for k in range(3)
    ]


def test_from_word_examples():
    rs32 = make_gl(3, 2)
    assert from_word(rs32, []).is_identity()
    w = from_word(rs32, ["s1"])
    assert w.sigma == (1, 0, 2) and w.tau == (0, 1)
    rs22 = make_gl(2, 2)
    w = from_word(rs22, ["s1", "t1", "s1"])
    assert w.sigma == (0, 1) and w.tau == (1, 0)


def test_from_word_indices_match_tokens():
    rs = make_gl(3, 2)
    assert from_word(rs, [0, 1, 3]) == parse_word(rs, "s1 s2 t1")


def test_from_word_composes_left_to_right():
    rs = make_gl(3, 0)
    s1, s2 = from_word(rs, ["s1"]), from_word(rs, ["s2"])
    assert from_word(rs, ["s1", "s2"]) == s1 * s2
    # product applies s2 first: eps_1 -> eps_1 -> eps_2
    assert (s1 * s2).slot(0) == 1


def test_from_word_rejects_odd_simple():
    rs = make_gl(3, 2)
    with pytest.raises(PreconditionError):
        from_word(rs, [2])
    with pytest.raises(PreconditionError):
        parse_word(rs, "t2")
    with pytest.raises(PreconditionError):
        parse_word(rs, "x1")


def test_act_examples():
    rs20 = make_gl(2, 0)
    s = from_word(rs20, ["s1"])
    a, b = F(3, 7), F(-2)
    assert act(identity(rs20), W(a, b)) == W(a, b)
    assert act(s, W(a, b)) == W(b, a)
    rs21 = make_gl(2, 1)
    assert act(from_word(rs21, ["s1"]), rs21.rho1) == rs21.rho1 == W(F(1, 2), F(1, 2), -1)


def test_act_dimension_mismatch():
    with pytest.raises(PreconditionError):
        act(identity(make_gl(2, 0)), W(1, 2, 3))


def test_dot_and_circle_examples():
    rs20 = make_gl(2, 0)
    s = from_word(rs20, ["s1"])
    assert act_dot(rs20, s, W(0, 0)) == W(-1, 1)
    for w in elements(rs20):
        for lam in sample_weights(rs20):
            assert act_dot(rs20, w, lam) == act_circle(rs20, w, lam)
    rs21 = make_gl(2, 1)
    assert act_circle(rs21, from_word(rs21, ["s1"]), W(0, 0, 0)) == W(-1, 1, 0)


def test_star_examples():
    rs21 = make_gl(2, 1)
    s = from_word(rs21, ["s1"])
    g = rs21.root(0, 2).weight
    assert act_star(rs21, identity(rs21), g) == g
    assert act_star(rs21, s, g) == rs21.root(1, 2).weight
    assert act_star(rs21, s, Weight.zero(3)) == Weight.zero(3)
    with pytest.raises(PreconditionError):
        act_star(rs21, s, W(1, 0, 0))


def test_inversion_set_examples():
    rs = make_gl(3, 0)
    assert inversion_set(rs, identity(rs)) == frozenset()
    assert inversion_set(rs, from_word(rs, ["s1"])) == {rs.root(0, 1)}
    assert inversion_set(rs, parse_word(rs, "s1 s2 s1")) == set(rs.even_positive)


@pytest.mark.parametrize("m,n", GROUPS)
def test_group_action_laws(m, n):
    rs = make_gl(m, n)
    ws = elements(rs)
    assert len(ws) == len(set(ws))
    lams = sample_weights(rs)
    for w1 in ws:
        assert (w1 * w1.inverse()).is_identity()
        for w2 in ws:
            w12 = w1 * w2
            for lam in lams[:2]:
                assert act(w12, lam) == act(w1, act(w2, lam))
                assert act_dot(rs, w12, lam) == act_dot(rs, w1, act_dot(rs, w2, lam))
                assert act_circle(rs, w12, lam) == act_circle(rs, w1, act_circle(rs, w2, lam))


@pytest.mark.parametrize("m,n", [(m, n) for m, n in GROUPS if m * n <= 6])
def test_star_action_is_group_action_on_gamma(m, n):
    rs = make_gl(m, n)
    gamma = gamma_set(rs)
    ws = elements(rs)
    for w in ws:
        assert {act_root(rs, w, a) for a in rs.odd_positive} == set(rs.odd_positive)
        assert {act_star(rs, w, g) for g in gamma} == gamma
    for w1 in ws:
        for w2 in ws:
            for g in gamma:
                assert act_star(rs, w1 * w2, g) == act_star(rs, w1, act_star(rs, w2, g))


@pytest.mark.parametrize("m,n", [(m, n) for m, n in GROUPS if m * n <= 6])
def test_pig_relation(m, n):
    rs = make_gl(m, n)
    for w in elements(rs):
        for lam in sample_weights(rs):
            for g in gamma_set(rs):
                assert act_circle(rs, w, lam - g) == act_dot(rs, w, lam) - act_star(rs, w, g)


@pytest.mark.parametrize("m,n", GROUPS)
def test_inversion_set_length_and_injectivity(m, n):
    rs = make_gl(m, n)
    seen = {}
    for w in elements(rs):
        N = inversion_set(rs, w)
        assert len(N) == w.length()
        assert N not in seen
        seen[N] = w


def test_weyl_json_round_trip():
    rs = make_gl(3, 2)
    w = parse_word(rs, "s1 s2 t1")
    data = w.to_json()
    assert data == {"sigma": [2, 3, 1], "tau": [2, 1]}
    assert WeylElement.from_json(data) == w


def test_weyl_element_validation():
    with pytest.raises(PreconditionError):
        WeylElement((0, 0), ())
