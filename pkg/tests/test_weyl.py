import itertools

import pytest
from hypothesis import given, strategies as st

import oracles as O
from bcinterp import weyl

vectors = st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(-4, 4)] * n))


def test_coset_rep_nine_entries():
    w = weyl.min_coset_rep((0, 4, -2, -1, 0, -2, 1, 4, 1))
    assert w.one_line() == (2, 8, 6, 3, 7, 9, 4, 1, 5)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_min_coset_rep_matches_brute_force(n):
    for alpha in O.ball(n, 4):
        _, ws = O.min_length_to(alpha)
        w = weyl.min_coset_rep(alpha)
        assert [(w.signs, w.perm)] == ws, alpha


@pytest.mark.parametrize("n", [1, 2, 3])
def test_length_matches_root_count(n):
    for signs, perm in O.signed_perms(n):
        w = weyl.SignedPermutation(signs, perm)
        assert weyl.length(w) == O.length((signs, perm), n)
        for a in O.ball(n, 2):
            assert weyl.act(w, a) == O.act((signs, perm), a)


def test_group_orders_and_longest():
    for n in (1, 2, 3, 4):
        els = weyl.elements(n)
        assert len(els) == 2 ** n * len(list(itertools.permutations(range(n))))
        assert max(weyl.length(w) for w in els) == n * n == weyl.length(weyl.longest(n))
        assert weyl.act(weyl.longest(n), tuple(range(1, n + 1))) == tuple(-i for i in range(1, n + 1))


def test_simple_reflections():
    assert weyl.act(weyl.simple_reflection(3, 1), (1, 2, 3)) == (2, 1, 3)
    assert weyl.act(weyl.simple_reflection(3, 3), (1, 2, 3)) == (1, 2, -3)
    assert weyl.simple_root(3, 1) == (1, -1, 0)
    assert weyl.simple_root(3, 3) == (0, 0, 1)


def test_positive_roots():
    assert len(weyl.positive_roots(3)) == 9
    assert set(weyl.positive_roots(3)) == set(O.positive_roots(3))
    assert len(weyl.roots(3)) == 18


@given(vectors)
def test_min_coset_rep_maps_dominant(alpha):
    w = weyl.min_coset_rep(alpha)
    assert weyl.act(w, weyl.dominant(alpha)) == alpha


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.sampled_from(weyl.elements(n)), st.sampled_from(weyl.elements(n)),
    st.tuples(*[st.integers(-5, 5)] * n))))
def test_action_is_homomorphism(data):
    u, v, a = data
    assert weyl.act(u * v, a) == weyl.act(u, weyl.act(v, a))
    assert weyl.act(u.inverse(), weyl.act(u, a)) == a


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(weyl.elements(n))))
def test_reduced_word_roundtrip(w):
    word = weyl.reduced_word(w)
    assert len(word) == weyl.length(w) == len(weyl.inversion_set(w))
    assert weyl.from_word(w.n, word) == w


def test_orbit_and_stabilizer():
    lam = (2, 1, 0)
    orb = weyl.orbit(lam)
    reps, stab = weyl.min_reps_and_stabilizer(lam)
    assert len(orb) == 24 and len(stab) == 2 and len(reps) == 24
    assert sorted(weyl.act(u, lam) for u in reps) == sorted(orb)


def test_partition_orders():
    assert weyl.is_partition((3, 1, 0)) and not weyl.is_partition((1, 3))
    assert weyl.contains((3, 2), (2, 2)) and not weyl.contains((3, 0), (2, 1))
    assert weyl.dominates((3, 0), (2, 1)) and not weyl.dominates((2, 1), (3, 0))


def test_arity_error():
    with pytest.raises(weyl.ArityError):
        weyl.act(weyl.identity(2), (1, 2, 3))
