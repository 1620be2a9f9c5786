import itertools
import math
from fractions import Fraction

import pytest

from wcqsym.birkhoff import (
    Z,
    Z_symmetrized,
    abf,
    abf_closed_form,
    check_factorization,
    leading_direction_independent,
    phi_minus_inverse,
    renormalized_M,
    renormalized_M_shifted,
)
from wcqsym.combinatorics import split_trailing_zeros
from wcqsym.qsym import QSymElement
from wcqsym.quasi_shuffle import DirectedWeakComposition, qsh_product
from wcqsym.regularization import phi
from wcqsym.series import TPoly

from .data import RENORMALIZED
from .utils import dwc, golden, tq

F = Fraction
from_word = DirectedWeakComposition.from_word

DIRECTED = [
    ((0,), (1,)),
    ((0,), (3,)),
    ((2,), (1,)),
    ((1, 0), (1, 1)),
    ((1, 0), (2, 1)),
    ((0, 0), (1, 2)),
    ((0, 1), (2, 1)),
    ((0, 1, 0), (1, 1, 1)),
    ((1, 0, 0), (1, 2, 1)),
    ((0, 0, 0), (1, 1, 1)),
]


@pytest.mark.parametrize(["alpha", "expected"], RENORMALIZED.items())
def test_renormalized_M(alpha, expected):
    assert renormalized_M(alpha) == golden(expected)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_renormalized_M_with_trailing_zero(s):
    assert renormalized_M((s, 0)) == tq([F(-3, 2), -1], (s,)) + tq([-1], (0, s))
    assert renormalized_M((0, s, 0)) == tq([F(-5, 2), -1], (0, s)) + tq([-2], (0, 0, s))


@pytest.mark.parametrize(["alpha", "expected"], RENORMALIZED.items())
@pytest.mark.parametrize("delta", [2, 3])
def test_delta_independence(alpha, expected, delta):
    assert renormalized_M(alpha, delta) == golden(expected)
    assert renormalized_M_shifted(alpha, delta) == golden(expected)


@pytest.mark.parametrize(["upper", "lower"], DIRECTED)
def test_abf_factors(upper, lower):
    d = dwc(upper, lower)
    result = abf(d)
    assert result.source == d
    assert all(e < 0 for e in result.phi_minus.series.exponents())
    assert result.phi_minus.series.is_exact
    assert all(e >= 0 for e in result.phi_plus.series.exponents())
    assert result.phi_minus.pole_order() <= len(d) - d.j


@pytest.mark.parametrize(["upper", "lower"], DIRECTED)
def test_abf_closed_form(upper, lower):
    d = dwc(upper, lower)
    recursive, closed = abf(d), abf_closed_form(d)
    assert recursive.phi_minus.series.matches(closed.phi_minus.series)
    assert recursive.phi_plus.series.matches(closed.phi_plus.series)


@pytest.mark.parametrize(["upper", "lower"], DIRECTED)
def test_check_factorization(upper, lower):
    assert check_factorization(dwc(upper, lower))
    assert check_factorization(dwc(upper, lower), zmax=len(upper) + 2)


def test_single_zero_factors():
    # φ((0); r) = -1/(rz) + ... so φ₋ = 1/(rz) and φ₊ = φ + φ₋ on the regular part
    result = abf(dwc((0,), (2,)))
    assert result.phi_minus.series.coeffs == {-1: tq([F(1, 2)])}
    assert result.phi_plus.coefficient(0) == tq([F(-1, 2), -1])


def test_phi_minus_inverse():
    d = dwc((0,), (2,))
    inverse = phi_minus_inverse(d)
    assert inverse.is_exact
    assert inverse.coeffs == {-1: tq([F(-1, 2)])}


def test_left_weak_has_trivial_minus():
    result = abf(dwc((0, 2), (1, 1)))
    assert result.phi_minus.series.coeffs == {}
    assert Z(dwc((0, 2), (1, 1))) == TPoly.constant(QSymElement.M((0, 2)))


def test_zmax_too_small():
    with pytest.raises(ValueError):
        abf(dwc((0, 0, 0), (1, 1, 1)), zmax=1)


def test_empty_word():
    result = abf(dwc((), ()))
    assert result.phi_plus.coefficient(0) == TPoly.constant(QSymElement.one())
    assert Z(dwc((), ())) == TPoly.constant(QSymElement.one())


@pytest.mark.parametrize("s", [1, 2, 3])
def test_directional_values(s):
    assert Z(dwc((s,), (2,))) == tq([1], (s,))
    assert Z(dwc((0, s), (1, 3))) == tq([1], (0, s))
    assert Z(dwc((s, 0), (2, 1))) == tq([F(-3, 2), -1], (s,)) + tq([-1], (0, s))


@pytest.mark.parametrize(
    ["alpha", "beta"],
    [((0, 0), (1, 2)), ((0, 0), (2, 5)), ((1, 0, 0), (1, 1, 2)), ((0, 1, 0), (2, 1, 3))],
)
def test_symmetrized_average(alpha, beta):
    _, zeros = split_trailing_zeros(alpha)
    averaged = Z_symmetrized(alpha, beta).scale(F(1, math.factorial(zeros)))
    assert averaged == renormalized_M(alpha)


def test_symmetrized_length_mismatch():
    with pytest.raises(ValueError):
        Z_symmetrized((0, 0), (1,))


@pytest.mark.parametrize("alpha", [(1,), (0, 1), (2, 1)])
@pytest.mark.parametrize("zeros", [1, 2])
@pytest.mark.parametrize("head", [1, 2, 5])
def test_leading_direction_independent(alpha, zeros, head):
    beta = tuple(head + i for i in range(len(alpha)))
    assert leading_direction_independent(alpha, beta, zeros)


def test_leading_direction_requires_left_weak():
    with pytest.raises(ValueError):
        leading_direction_independent((1, 0), (1, 1), 1)


@pytest.mark.parametrize(
    ["u", "v"],
    [
        (((0, 1),), ((0, 2),)),
        (((1, 1),), ((0, 1),)),
        (((0, 1),), ((1, 2), (0, 1))),
    ],
)
def test_Z_is_multiplicative(u, v):
    expected = TPoly()
    for w, c in qsh_product(u, v).items():
        expected = expected + Z(from_word(w)).scale(c)
    assert Z(from_word(u)) * Z(from_word(v)) == expected


@pytest.mark.parametrize(
    ["upper", "lower"], [(upper, lower) for upper, lower in DIRECTED if upper[-1] > 0]
)
def test_left_weak_phi_plus_is_phi(upper, lower):
    d = dwc(upper, lower)
    assert abf(d).phi_plus.series.matches(phi(d).series)


@pytest.mark.slow
@pytest.mark.parametrize(
    "word",
    [
        w
        for k in range(1, 4)
        for w in itertools.product([(s, r) for s in range(3) for r in range(1, 3)], repeat=k)
    ],
)
def test_abf_exhaustive(word):
    d = from_word(word)
    assert check_factorization(d)
    assert abf(d).phi_minus.series.matches(abf_closed_form(d).phi_minus.series)
