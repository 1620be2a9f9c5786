"""The algebra of renormalized quasisymmetric functions on the weak composition basis.

``RenElement`` is a combination of renormalized M_α over all weak compositions. It is
isomorphic to polynomials in t over left weak M_α through :func:`to_t_polynomial`, and its
Hopf structure is the quasi-shuffle one over ℕ. :class:`RBElement` adds the free Rota-Baxter
operator of weight 1 on polynomials in M₀ and x.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from fractions import Fraction
from typing import Any, Iterable, Tuple

from .combinatorics import (
    WeakComposition,
    check_weak_composition,
    coarsen,
    enumerate_compositions,
    reversal,
    split_trailing_zeros,
)
from .quasi_shuffle import LinComb, deconcat_coproduct, qsh_product, shuffle_product
from .qsym import QSymElement
from .series import TPoly

__all__ = [
    "RenElement",
    "RBElement",
    "ren_product",
    "to_t_polynomial",
    "from_t_polynomial",
    "to_m0_basis",
    "ren_coproduct",
    "ren_counit",
    "ren_antipode",
    "rb_operator",
    "rb_product",
    "m0_power_times",
    "composition_projection",
    "is_composition_supported",
]


class RenElement(LinComb[WeakComposition]):
    """``Σ c_α M_α`` over weak compositions α, multiplied by quasi-shuffle."""

    @classmethod
    def _check_key(cls, key: Any) -> None:
        if not isinstance(key, tuple):
            raise ValueError(f"invalid index {key!r}, expected a weak composition")
        check_weak_composition(key)

    @classmethod
    def M(cls, alpha: Iterable[int]) -> RenElement:
        return cls.basis(tuple(alpha))

    @classmethod
    def one(cls) -> RenElement:
        return cls.basis(())

    def _basis_product(self, a: WeakComposition, b: WeakComposition):
        return qsh_product(a, b).items()


def ren_product(a: RenElement, b: RenElement) -> RenElement:
    """``M_α · M_β = M_{α*β}``."""
    return a * b


def _rising_half(start: Fraction, count: int) -> TPoly[Fraction]:
    # Π_{i=0}^{count-1} (t + start - i)
    p: TPoly[Fraction] = TPoly.constant(Fraction(1))
    for i in range(count):
        p = p * TPoly({0: start - i, 1: Fraction(1)})
    return p


def _as_qsym(p: TPoly[Fraction], x: QSymElement) -> TPoly[QSymElement]:
    return p.map(lambda c: x.scale(c))


@functools.lru_cache(maxsize=None)
def _to_t(alpha: WeakComposition) -> TPoly[QSymElement]:
    head, zeros = split_trailing_zeros(alpha)
    if zeros == 0:
        return TPoly.constant(QSymElement.M(alpha))

    sign = (-1) ** zeros
    if not head:
        # M_{0^k} = (-1)^k/k! (t + 1/2)(t + 3/2)…(t + k - 1/2)
        p = _rising_half(Fraction(2 * zeros - 1, 2), zeros)
        return _as_qsym(p.scale(Fraction(sign, math.factorial(zeros))), QSymElement.one())

    prefix, last = head[:-1], head[-1]
    acc: TPoly[QSymElement] = TPoly()
    for p in range(zeros + 1):
        count = zeros - p
        poly = _rising_half(Fraction(2 * len(alpha) - 1, 2), count)
        poly = poly.scale(Fraction(sign, math.factorial(count)))
        x = shuffle_product(prefix, (0,) * p).map_keys(lambda w: w + (last,), QSymElement)
        acc = acc + _as_qsym(poly, x)
    return acc


def to_t_polynomial(a: RenElement) -> TPoly[QSymElement]:
    """Rewrite a renormalized element as a polynomial in t over left weak M's.

    Every M_α with ``α = (α', α_j, 0^k)`` expands into the shuffles ``α' ⧢ 0^p`` followed
    by ``α_j``, weighted by products of ``t + ℓ(α) - i + 1/2``.
    """
    acc: TPoly[QSymElement] = TPoly()
    for alpha, c in a.items():
        acc = acc + _to_t(alpha).scale(c)
    return acc


def from_t_polynomial(p: TPoly[QSymElement]) -> RenElement:
    """Inverse of :func:`to_t_polynomial`.

    The top t-degree term ``c M_γ t^d`` is the leading term of ``(-1)^d/d! M_{(γ, 0^d)}``,
    so it is removed by subtracting ``c (-1)^d d!`` times that image until nothing is left.
    """
    remaining = p
    result: Counter = Counter()
    while remaining:
        d = remaining.degree
        top = remaining.get(d)
        assert top is not None
        for gamma, c in top.items():
            factor = c * (-1) ** d * math.factorial(d)
            alpha = gamma + (0,) * d
            result[alpha] += factor
            remaining = remaining - _to_t(alpha).scale(factor)
    return RenElement(result.items())


def to_m0_basis(a: RenElement) -> LinComb[Tuple[int, WeakComposition]]:
    """Expand in the second basis ``M₀^n · M_γ`` (γ left weak), keyed by ``(n, γ)``.

    Uses ``t = -M₀ - 1/2`` on the t-polynomial form.
    """
    acc: Counter = Counter()
    for d, x in to_t_polynomial(a).items():
        for n in range(d + 1):
            w = (-1) ** d * math.comb(d, n) * Fraction(1, 2 ** (d - n))
            for gamma, c in x.items():
                acc[(n, gamma)] += w * c
    return LinComb(acc.items())


def m0_power_times(n: int, gamma: Iterable[int]) -> RenElement:
    """The product ``M₀^n · M_γ`` in the weak composition basis."""
    if n < 0:
        raise ValueError(f"invalid power {n}")
    acc = RenElement.M(tuple(gamma))
    m0 = RenElement.M((0,))
    for _ in range(n):
        acc = m0 * acc
    return acc


def ren_coproduct(a: RenElement) -> LinComb[Tuple[WeakComposition, WeakComposition]]:
    """Deconcatenation: ``Δ(M_α) = Σ_{α = β·γ} M_β ⊗ M_γ``."""
    acc: Counter = Counter()
    for alpha, c in a.items():
        for pair, m in deconcat_coproduct(alpha).items():
            acc[pair] += c * m
    return LinComb(acc.items())


def ren_counit(a: RenElement) -> Fraction:
    return a.coeff(())


@functools.lru_cache(maxsize=None)
def _antipode(alpha: WeakComposition) -> RenElement:
    rev = reversal(alpha)
    terms = [(coarsen(j, rev), 1) for j in enumerate_compositions(len(alpha))]
    return RenElement(terms).scale((-1) ** len(alpha))


def ren_antipode(a: RenElement) -> RenElement:
    """``S(M_α) = (-1)^ℓ(α) Σ_{J ⊨ ℓ(α)} M_{J[α^r]}``."""
    return sum((_antipode(alpha).scale(c) for alpha, c in a.items()), RenElement.zero())


def composition_projection(a: RenElement) -> RenElement:
    """Kill every M_α whose index has a zero entry, leaving the QSym part."""
    return RenElement((alpha, c) for alpha, c in a.items() if 0 not in alpha)


def is_composition_supported(a: RenElement) -> bool:
    return all(0 not in alpha for alpha in a.support())


class RBElement(LinComb[Tuple[int, WeakComposition]]):
    """``Σ c x^n M_α`` over weak compositions α, keyed by ``(n, α)``."""

    @classmethod
    def _check_key(cls, key: Any) -> None:
        if (
            not isinstance(key, tuple)
            or len(key) != 2
            or not isinstance(key[0], int)
            or key[0] < 0
        ):
            raise ValueError(f"invalid index {key!r}, expected (power of x, weak composition)")
        check_weak_composition(key[1])

    @classmethod
    def term(cls, n: int, alpha: Iterable[int] = ()) -> RBElement:
        """``x^n M_α``."""
        return cls.basis((n, tuple(alpha)))

    def _basis_product(self, a: Tuple[int, WeakComposition], b: Tuple[int, WeakComposition]):
        for gamma, c in qsh_product(a[1], b[1]).items():
            yield (a[0] + b[0], gamma), c


def rb_operator(e: RBElement) -> RBElement:
    """``P(x^n M_α) = M_{(n)·α}``."""
    return e.map_keys(lambda key: (0, (key[0],) + key[1]))


def rb_product(a: RBElement, b: RBElement) -> RBElement:
    return a * b
