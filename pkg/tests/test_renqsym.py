import itertools
from fractions import Fraction

import pytest

from wcqsym.birkhoff import renormalized_M
from wcqsym.combinatorics import enumerate_weak_compositions_up_to
from wcqsym.quasi_shuffle import antipode_recursive
from wcqsym.renqsym import (
    RBElement,
    RenElement,
    composition_projection,
    from_t_polynomial,
    is_composition_supported,
    m0_power_times,
    rb_operator,
    ren_antipode,
    ren_coproduct,
    ren_counit,
    ren_product,
    to_m0_basis,
    to_t_polynomial,
)

from .data import RENORMALIZED
from .utils import golden, lincomb_equal

M = RenElement.M
WORDS = enumerate_weak_compositions_up_to(3)


def test_ren_element_keys():
    with pytest.raises(ValueError):
        RenElement({5: 1})
    with pytest.raises(ValueError):
        M((1, -1))
    assert RenElement.one() == M(())


def test_ren_product():
    assert lincomb_equal(ren_product(M((0,)), M((1,))), {(0, 1): 1, (1, 0): 1, (1,): 1})
    assert lincomb_equal(M((0,)) * M((0,)), {(0, 0): 2, (0,): 1})


@pytest.mark.parametrize(["alpha", "expected"], RENORMALIZED.items())
def test_to_t_polynomial(alpha, expected):
    assert to_t_polynomial(M(alpha)) == golden(expected)


@pytest.mark.parametrize("alpha", WORDS)
def test_to_t_polynomial_matches_renormalization(alpha):
    assert to_t_polynomial(M(alpha)) == renormalized_M(alpha)


@pytest.mark.parametrize("alpha", WORDS)
def test_t_polynomial_round_trip(alpha):
    assert from_t_polynomial(to_t_polynomial(M(alpha))) == M(alpha)


@pytest.mark.parametrize(["a", "b"], itertools.product([(0,), (1, 0), (0, 2)], repeat=2))
def test_to_t_polynomial_is_multiplicative(a, b):
    assert to_t_polynomial(M(a) * M(b)) == to_t_polynomial(M(a)) * to_t_polynomial(M(b))


def test_to_m0_basis():
    assert lincomb_equal(to_m0_basis(M((0,))), {(1, ()): 1})
    # M[0,0] = (M[0]^2 - M[0]) / 2
    expected = {(2, ()): Fraction(1, 2), (1, ()): Fraction(-1, 2)}
    assert lincomb_equal(to_m0_basis(M((0, 0))), expected)
    assert lincomb_equal(to_m0_basis(M((2, 1))), {(0, (2, 1)): 1})


def test_m0_power_times():
    assert m0_power_times(0, (1,)) == M((1,))
    assert lincomb_equal(m0_power_times(1, (1,)), {(0, 1): 1, (1, 0): 1, (1,): 1})
    with pytest.raises(ValueError):
        m0_power_times(-1, ())


def test_ren_coproduct():
    expected = {((), (1, 0)): 1, ((1,), (0,)): 1, ((1, 0), ()): 1}
    assert lincomb_equal(ren_coproduct(M((1, 0))), expected)


def test_ren_counit():
    assert ren_counit(RenElement.one()) == 1
    assert ren_counit(M((0,))) == 0
    assert ren_counit(M(()) + M((1,)).scale(3)) == 1


@pytest.mark.parametrize(
    ["alpha", "expected"],
    [
        ((), {(): 1}),
        ((0,), {(0,): -1}),
        ((1, 0), {(0, 1): 1, (1,): 1}),
        ((2,), {(2,): -1}),
        ((0, 0, 1), {(1, 0, 0): -1, (1, 0): -2, (1,): -1}),
    ],
)
def test_ren_antipode(alpha, expected):
    assert lincomb_equal(ren_antipode(M(alpha)), expected)


@pytest.mark.parametrize("alpha", WORDS)
def test_ren_antipode_matches_recursion(alpha):
    assert dict(ren_antipode(M(alpha)).items()) == dict(antipode_recursive(alpha).items())


@pytest.mark.parametrize("alpha", WORDS)
def test_antipode_identity(alpha):
    acc = RenElement.zero()
    for (left, right), c in ren_coproduct(M(alpha)).items():
        acc = acc + (ren_antipode(M(left)) * M(right)).scale(c)
    assert acc == RenElement.one().scale(ren_counit(M(alpha)))


def test_composition_projection():
    x = M((0,)) * M((1,))
    assert composition_projection(x) == M((1,))
    assert not is_composition_supported(x)
    assert is_composition_supported(M((2, 1)) + M(()))


def test_composition_projection_is_not_multiplicative():
    # π(M0 · M1) = M1 while π(M0) · π(M1) = 0
    product = composition_projection(M((0,)) * M((1,)))
    assert product == M((1,))
    assert composition_projection(M((0,))) * composition_projection(M((1,))) == 0


@pytest.mark.parametrize("alpha", [a for a in WORDS if 0 not in a])
@pytest.mark.parametrize("beta", [a for a in WORDS if 0 not in a])
def test_compositions_are_a_subalgebra(alpha, beta):
    assert is_composition_supported(M(alpha) * M(beta))
    assert all(0 not in a and 0 not in b for a, b in ren_coproduct(M(alpha)).support())


class TestRotaBaxter:
    def test_term(self):
        assert RBElement.term(2, (1,)).support() == [(2, (1,))]
        with pytest.raises(ValueError):
            RBElement.term(-1)
        with pytest.raises(ValueError):
            RBElement({"a": 1})

    def test_operator(self):
        assert rb_operator(RBElement.term(2, (1,))) == RBElement.term(0, (2, 1))
        assert rb_operator(RBElement.term(0)) == RBElement.term(0, (0,))

    def test_product(self):
        x = RBElement.term(1, (1,)) * RBElement.term(2, (2,))
        expected = {(3, (1, 2)): 1, (3, (2, 1)): 1, (3, (3,)): 1}
        assert lincomb_equal(x, expected)

    @pytest.mark.parametrize(
        ["a", "b"],
        itertools.product([(0, ()), (1, ()), (0, (1,)), (1, (0,)), (2, (1, 0))], repeat=2),
    )
    def test_weight_one_identity(self, a, b):
        x, y = RBElement.term(*a), RBElement.term(*b)
        P = rb_operator
        assert P(x) * P(y) == P(x * P(y)) + P(P(x) * y) + P(x * y)
