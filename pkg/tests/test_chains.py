from fractions import Fraction

import pytest
from hypothesis import given, settings

from cuntz_cyclic.algebra import LinComb
from cuntz_cyclic.chains import (
    TransitionProfile,
    boundary,
    chain,
    chain_length,
    cyclic_equiv,
    cyclic_norm,
    cyclic_shift,
    degree,
    face_map,
    flipped_face_sign,
    transition_profile,
    units,
)
from cuntz_cyclic.semigroup import CUNTZ_UNIT as ONE, pq, p, q
from oracles import as_dict, in_image_I_minus_t, naive_boundary, naive_norm, naive_shift
from strategies import chains, free_words


def test_face_examples():
    assert face_map(1, chain(p(1), q(1), q(2))) == chain(pq((1,), (1,)), q(2), coeff=-1)
    assert face_map(2, chain(p(1), q(2), p(2))) == chain(p(1), ONE)
    assert face_map(1, chain(q(1), p(2), ONE)) == 0


def test_face_index_range():
    with pytest.raises(ValueError):
        face_map(3, chain(p(1), q(1), q(2)))


def test_boundary_examples():
    assert boundary(chain(p(1), q(1))) == chain(ONE) - chain(pq((1,), (1,)))
    assert boundary(chain(ONE, ONE, ONE)) == chain(ONE, ONE)
    assert boundary(chain(ONE, ONE, ONE, ONE)) == 0


def test_boundary_needs_degree_one():
    with pytest.raises(ValueError):
        boundary(chain(p(1)))


def test_shift_examples():
    assert cyclic_shift(chain(p(1), q(1))) == chain(q(1), p(1), coeff=-1)
    a, b, c = p(1), q(2), pq((3,), (1,))
    assert cyclic_shift(chain(a, b, c)) == chain(c, a, b)


def test_norm_examples():
    assert cyclic_norm(chain(ONE, ONE)) == 0
    assert cyclic_norm(chain(ONE, ONE, ONE)) == chain(ONE, ONE, ONE, coeff=3)


def test_equiv_examples():
    x = chain(p(1), q(2), coeff=2) + chain(q(1), q(1))
    assert cyclic_equiv(x, cyclic_shift(x))
    assert not cyclic_equiv(chain(ONE, ONE, ONE), LinComb())
    assert cyclic_equiv(chain(ONE, ONE), LinComb())
    # and the witness for the last one: (I - t)(1/2 1 (x) 1)
    half = chain(ONE, ONE, coeff=Fraction(1, 2))
    assert half - cyclic_shift(half) == chain(ONE, ONE)


def test_equiv_degree_mismatch():
    with pytest.raises(ValueError):
        cyclic_equiv(chain(ONE, ONE), chain(ONE, ONE, ONE))


def test_transition_examples():
    assert transition_profile((p(1), q(1))) == TransitionProfile(1, 0)
    assert transition_profile((q(1), p(2))) == TransitionProfile(1, 1)
    assert transition_profile((ONE, ONE)) == TransitionProfile(0, 0)


def test_length_examples():
    assert chain_length((p(1), q(1))) == 2
    assert chain_length(units(2, ONE)) == 0
    assert chain_length((pq((1, 2), (3,)), ONE)) == 3


def test_degree():
    assert degree(LinComb()) is None
    assert degree(chain(p(1), q(1))) == 1
    with pytest.raises(ValueError):
        degree(chain(p(1)) + chain(p(1), q(1)))


def test_mutation_switch_restores():
    x = chain(p(1), q(1), q(2))
    before = boundary(x)
    with flipped_face_sign(1):
        assert boundary(x) != before
    assert boundary(x) == before


@settings(max_examples=60)
@given(chains(2))
def test_boundary_matches_oracle(x):
    assert as_dict(boundary(x)) == naive_boundary(as_dict(x))


@settings(max_examples=60)
@given(chains(3, free_words))
def test_boundary_matches_oracle_free(x):
    assert as_dict(boundary(x)) == naive_boundary(as_dict(x))


@given(chains(2))
def test_shift_and_norm_match_oracle(x):
    assert as_dict(cyclic_shift(x)) == naive_shift(as_dict(x))
    assert as_dict(cyclic_norm(x)) == naive_norm(as_dict(x))


@given(chains(3))
def test_dd_zero(x):
    assert boundary(boundary(x)) == 0


@given(chains(1), chains(1))
def test_equiv_matches_linear_solve(x, y):
    assert cyclic_equiv(x, y) == in_image_I_minus_t(as_dict(x - y))


@given(chains(2))
def test_profile_rotation_invariant(x):
    for t in x:
        for j in range(3):
            assert transition_profile(t[j:] + t[:j]) == transition_profile(t)
