from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles as O
from bcinterp import points, weyl
from bcinterp.points import (InterpParams, enumerate_ball, enumerate_ball_dominant, in_q_powers,
                             node_action_check, node_general, node_partition)

rationals = st.fractions(min_value=F(1, 100), max_value=F(99, 100), max_denominator=100)


def test_node_examples():
    p = InterpParams.general(F(1, 2), (F(1, 4), F(1, 3)))
    assert node_general((0, -1), p) == (F(1, 3), F(8))
    assert node_partition((2, 0), p) == (F(1, 16), F(1, 3))


@pytest.mark.parametrize("n,d", [(1, 4), (2, 3), (3, 2)])
def test_node_matches_oracle(n, d):
    q, tau = F(2, 5), tuple(F(k, 11) for k in range(1, n + 1))
    p = InterpParams.general(q, tau)
    for a in enumerate_ball(n, d):
        assert node_general(a, p) == O.node(a, q, tau)


def test_ball_sizes():
    # |Lambda_{n,d}| = sum_k 2^k C(n,k) C(d,k)
    assert len(enumerate_ball(2, 4)) == 41
    assert len(enumerate_ball(3, 3)) == 63
    assert len(enumerate_ball(2, 6)) == 85
    assert enumerate_ball(1, 1) == [(0,), (-1,), (1,)]
    assert enumerate_ball_dominant(2, 2) == [(0, 0), (1, 0), (1, 1), (2, 0)]
    assert set(enumerate_ball(2, 3)) == set(O.ball(2, 3))


def test_principal_tau():
    p = InterpParams.principal(F(1, 2), F(1, 3), F(1, 5), 3)
    assert p.tau == (F(1, 75), F(1, 15), F(1, 3))
    assert p.is_principal and p.mode == "principal" and p.strictly_ordered()
    assert p.drop_last().tau == (F(1, 75), F(1, 15)) and p.drop_last().s == F(1, 15)
    assert p.shifted().tau == (F(1, 150), F(1, 30), F(1, 6))


def test_validation():
    with pytest.raises(ValueError):
        InterpParams.general(F(3, 2), (F(1, 3),))
    with pytest.raises(ValueError):
        InterpParams.general(F(1, 2), (F(0),))
    with pytest.raises(TypeError):
        InterpParams.general(0.5, (F(1, 3),))


def test_in_q_powers():
    q = F(2, 3)
    assert in_q_powers(q ** 7, q) == 7
    assert in_q_powers(q ** -5, q) == -5
    assert in_q_powers(F(1), q) == 0
    assert in_q_powers(F(4, 9) + F(1, 10 ** 12), q) is None
    assert in_q_powers(F(-4, 9), q) is None


def test_genericity_certificate():
    assert InterpParams.principal(F(1, 2), F(1, 3), F(1, 5), 2).is_generic()
    bad = InterpParams.general(F(1, 4), (F(1, 2), F(1, 3)))
    assert "tau_1^2 in q^Z" in bad.genericity_failures()


@given(rationals, rationals, rationals)
def test_injective_on_small_ball(q, s, t):
    p = InterpParams.principal(q, s, t, 2)
    if p.is_generic() and points.in_q_powers(t, q) is None:
        nodes = [node_general(b, p) for b in enumerate_ball(2, 4)]
        assert len(set(nodes)) == len(nodes)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_node_action(j):
    p = InterpParams.principal(F(1, 3), F(2, 7), F(3, 5), 3)
    for a in enumerate_ball(3, 3):
        assert node_action_check(a, j, p), (a, j)


def test_node_from_dominant():
    p = InterpParams.principal(F(1, 3), F(2, 7), F(3, 5), 3)
    for a in enumerate_ball(3, 3):
        w = weyl.min_coset_rep(a)
        assert node_general(a, p) == weyl.act_multiplicative(w, node_partition(weyl.dominant(a), p))
