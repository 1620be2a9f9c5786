"""The regularization map φ: directed weak compositions → Laurent series in z.

Coefficients are polynomials in t over the monomial basis of left weak compositions.

φ is never summed from its defining series. Every coefficient comes from a closed formula in
Bernoulli constants and Stirling functions, converted to the monomial basis on creation.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from collections import Counter
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .combinatorics import (
    WeakComposition,
    enumerate_weak_compositions,
    is_left_weak,
)
from .quasi_shuffle import DirectedWeakComposition
from .qsym import QSymElement, StirlingIndex, stirling_to_M
from .series import LaurentBlock, TPoly, bernoulli_b

__all__ = [
    "BoundViolation",
    "RegularizedSeries",
    "Window",
    "default_window",
    "phi",
    "phi_factorized",
    "phi_left_weak",
    "phi_single_zero",
    "phi_zero_block",
]

Window = Tuple[int, int]


class BoundViolation(ArithmeticError):
    """A computed φ broke the pole-order or t-degree bound."""


@dataclasses.dataclass(frozen=True)
class RegularizedSeries:
    """φ(d) as a truncated Laurent series, together with the directed word it regularizes."""

    series: LaurentBlock[QSymElement]
    source: DirectedWeakComposition

    def coefficient(self, exponent: int) -> TPoly[QSymElement]:
        return self.series.coefficient(exponent)

    def pole_order(self) -> int:
        return self.series.pole_order()


def default_window(d: DirectedWeakComposition) -> Window:
    """``[-ℓ, ℓ]``: contains every pole and the z^0 coefficient."""
    return -len(d), len(d)


def _check_window(d: DirectedWeakComposition, window: Window) -> None:
    zmin, zmax = window
    if zmin > -len(d) or zmax < 0:
        raise ValueError(
            f"window [{zmin}, {zmax}] too small for {d}, it must contain [{-len(d)}, 0]"
        )


def _fraction_poly(p: TPoly[Fraction]) -> TPoly[QSymElement]:
    one = QSymElement.one()
    return p.map(lambda c: one.scale(c))


def _inv_fact(*ns: int) -> Fraction:
    return Fraction(1, math.prod(math.factorial(n) for n in ns))


@functools.lru_cache(maxsize=None)
def _zero_block_coefficient(lower: Tuple[int, ...], n: int) -> TPoly[Fraction]:
    # coefficient of z^(n-k) of φ(0^k; β)
    k = len(lower)
    tails = [Fraction(sum(lower[l:])) for l in range(k)]
    acc: Dict[int, Fraction] = {}
    for s in enumerate_weak_compositions(n, k):
        w = Fraction(1)
        for l in range(1, k):
            w *= bernoulli_b(s[l]) * _inv_fact(s[l])
        for l in range(k):
            w *= tails[l] ** (s[l] - 1)
        if not w:
            continue
        for i in range(s[0] + 1):
            term = w * bernoulli_b(s[0] - i) * _inv_fact(i, s[0] - i)
            acc[i] = acc.get(i, Fraction(0)) + term
    return TPoly(acc)


@functools.lru_cache(maxsize=None)
def _coefficient(
    upper: WeakComposition, lower: Tuple[int, ...], j: int, n: int
) -> TPoly[QSymElement]:
    # coefficient of z^(n-k+j) of φ(α; β) for j >= 1
    k = len(upper)
    total = Fraction(sum(lower))
    head_tail = Fraction(sum(lower[j - 1 :]))
    tails = {l: Fraction(sum(lower[l:])) for l in range(j, k)}
    coeffs: Dict[int, QSymElement] = {}
    for i in range(n + 1):
        acc: Counter = Counter()
        for s in enumerate_weak_compositions(n - i, k):
            w = _inv_fact(*s)
            for l in range(j, k):
                w *= bernoulli_b(s[l]) * tails[l] ** (s[l] - 1)
            if not w:
                continue
            for l in range(j - 1):
                w *= Fraction(lower[l]) ** s[l]
            w *= head_tail ** s[j - 1]
            for alpha, c in stirling_to_M(StirlingIndex(upper[:j], s[:j])).items():
                acc[alpha] += w * c
        x = QSymElement((a, c) for a, c in acc.items() if c)
        if x:
            coeffs[i] = x.scale(total**i * _inv_fact(i))
    return TPoly(coeffs)


def _check_bounds(d: DirectedWeakComposition, series: LaurentBlock[QSymElement]) -> None:
    excess = len(d) - d.j
    if series.pole_order() > excess:
        raise BoundViolation(
            f"phi{d} has pole order {series.pole_order()}, bound is {excess}"
        )
    for e, c in series.coeffs.items():
        if c.degree > e + excess:
            raise BoundViolation(
                f"phi{d}: coefficient of z^{e} has t-degree {c.degree}, bound is {e + excess}"
            )


@functools.lru_cache(maxsize=None)
def _phi(d: DirectedWeakComposition, zmin: int, zmax: int) -> RegularizedSeries:
    k, j = len(d), d.j
    coeffs: Dict[int, TPoly[QSymElement]] = {}
    if k == 0:
        coeffs[0] = TPoly.constant(QSymElement.one())
    else:
        for n in range(0, zmax + k - j + 1):
            if j == 0:
                coeffs[n - k] = _fraction_poly(_zero_block_coefficient(d.lower, n))
            else:
                coeffs[n - k + j] = _coefficient(d.upper, d.lower, j, n)
    series = LaurentBlock(zmin, zmax, coeffs)
    _check_bounds(d, series)
    return RegularizedSeries(series, d)


def phi(d: DirectedWeakComposition, window: Optional[Window] = None) -> RegularizedSeries:
    """Regularize a directed weak composition.

    Args:
        d: the directed weak composition (α over β)
        window: ``(zmin, zmax)`` exponent range to compute, defaults to ``[-ℓ, ℓ]``; it must
            contain ``[-ℓ(α), 0]``

    Returns:
        φ(d) known exactly on the window

    Raises:
        ValueError: if the window is too small
        BoundViolation: if the result breaks the pole-order or t-degree bound
    """
    window = window if window is not None else default_window(d)
    _check_window(d, window)
    return _phi(d, *window)


def phi_single_zero(
    r: int, valid_to: int, at_t_zero: bool = False
) -> LaurentBlock[QSymElement]:
    """φ((0);(r)) = Σ_n (Σ_i b_(n-i)/(i!(n-i)!) t^i) (rz)^(n-1), optionally at t = 0."""
    coeffs = {}
    for n in range(0, valid_to + 2):
        top = 0 if at_t_zero else n
        scale = Fraction(r) ** (n - 1)
        p = TPoly(
            {i: bernoulli_b(n - i) * _inv_fact(i, n - i) * scale for i in range(top + 1)}
        )
        coeffs[n - 1] = _fraction_poly(p)
    return LaurentBlock(-1, valid_to, coeffs)


def phi_left_weak(
    upper: WeakComposition, lower: Tuple[int, ...], valid_to: int
) -> LaurentBlock[QSymElement]:
    """φ(α; β) for left weak α, as the product of ``e^{t(β_1+…+β_k)z}`` with the finite sums
    ``Σ_s β^s/s! M̂(α; s) z^|s|``.
    """
    if not is_left_weak(upper):
        raise ValueError(f"{upper} is not left weak")
    k = len(upper)
    total = Fraction(sum(lower))
    one = QSymElement.one()
    exp_t = LaurentBlock(
        0,
        valid_to,
        {
            n: TPoly.monomial(one.scale(total**n * _inv_fact(n)), n)
            for n in range(valid_to + 1)
        },
    )
    stirling: Dict[int, TPoly[QSymElement]] = {}
    for n in range(valid_to + 1):
        x = QSymElement.zero()
        for s in enumerate_weak_compositions(n, k):
            w = _inv_fact(*s) * math.prod(Fraction(b) ** e for b, e in zip(lower, s))
            x = x + stirling_to_M(StirlingIndex(upper, s)).scale(w)
        stirling[n] = TPoly.constant(x)
    return exp_t * LaurentBlock(0, valid_to, stirling)


def phi_zero_block(lower: Tuple[int, ...], window: Optional[Window] = None) -> LaurentBlock:
    """φ(0^k; β) from its closed form as a sum over weak compositions of n."""
    d = DirectedWeakComposition((0,) * len(lower), lower)
    zmin, zmax = window if window is not None else default_window(d)
    k = len(lower)
    coeffs = {
        n - k: _fraction_poly(_zero_block_coefficient(tuple(lower), n))
        for n in range(0, zmax + k + 1)
    }
    return LaurentBlock(min(zmin, -k), zmax, coeffs)


def phi_factorized(
    d: DirectedWeakComposition, window: Optional[Window] = None
) -> RegularizedSeries:
    """φ(d) through the split at the last positive entry.

    ``φ(α; β)(t) = φ(α_1..α_j; β_1..β_(j-1), β_j+…+β_k)(t) · φ(0^(k-j); β_(j+1)..β_k)(0)``.
    The zero-block factor is itself the product of single-zero series at t = 0, and for
    j = 0 the leading factor is φ((0); (β_1+…+β_k))(t).
    """
    window = window if window is not None else default_window(d)
    _check_window(d, window)
    zmin, zmax = window
    k, j = len(d), d.j
    upper, lower = d.upper, d.lower
    margin = zmax + k + 1

    if k == 0:
        head = LaurentBlock(0, zmax, {0: TPoly.constant(QSymElement.one())})
    elif j == 0:
        head = phi_single_zero(sum(lower), margin)
    else:
        head = phi_left_weak(upper[:j], lower[: j - 1] + (sum(lower[j - 1 :]),), margin)

    for l in range(max(j, 1), k):
        head = head * phi_single_zero(sum(lower[l:]), margin, at_t_zero=True)

    head = head.truncate(zmax)
    return RegularizedSeries(LaurentBlock(zmin, zmax, head.coeffs), d)
