"""Algebraic Birkhoff Factorization of φ and the renormalized values derived from it.

φ₋ is purely polar and φ₊ is pole-free. Their value on the empty word is the constant 1 and
is kept outside of the Laurent blocks. Directional values ``Z`` are φ₊ at z = 0.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Optional, Sequence, Tuple

from .combinatorics import enumerate_compositions, is_left_weak, partition_vectors
from .quasi_shuffle import DirectedWeakComposition, Word, convolve
from .qsym import QSymElement
from .regularization import RegularizedSeries, phi
from .series import LaurentBlock, TPoly, eval_at_zero, polar_projection, regular_part

__all__ = [
    "FactorizationResult",
    "abf",
    "abf_closed_form",
    "phi_minus_inverse",
    "check_factorization",
    "Z",
    "Z_symmetrized",
    "renormalized_M",
    "renormalized_M_shifted",
    "leading_direction_independent",
]


@dataclasses.dataclass(frozen=True)
class FactorizationResult:
    """The two factors of φ(d) together with the directed word they factor."""

    phi_minus: RegularizedSeries
    phi_plus: RegularizedSeries
    source: DirectedWeakComposition


def _one() -> LaurentBlock[QSymElement]:
    return LaurentBlock.exact({0: TPoly.constant(QSymElement.one())})


def _zmax(d: DirectedWeakComposition, zmax: Optional[int]) -> int:
    if zmax is None:
        return len(d)
    if zmax < max(len(d) - 1, 0):
        raise ValueError(f"zmax {zmax} too small for {d}, it must be at least {len(d) - 1}")
    return zmax


def _phi_word(word: Word, zmax: int) -> LaurentBlock[QSymElement]:
    return phi(DirectedWeakComposition.from_word(word), (-len(word), zmax)).series


@functools.lru_cache(maxsize=None)
def _abf(
    word: Word, zmax: int
) -> Tuple[LaurentBlock[QSymElement], LaurentBlock[QSymElement]]:
    if not word:
        return _one(), _one()
    acc = _phi_word(word, zmax)
    for i in range(1, len(word)):
        minus, _ = _abf(word[i:], zmax)
        acc = acc + _phi_word(word[:i], zmax) * minus
    return -polar_projection(acc), regular_part(acc)


def abf(d: DirectedWeakComposition, zmax: Optional[int] = None) -> FactorizationResult:
    """Factor φ(d) = φ₊ ⋆ φ₋^{⋆-1} with the recursion on proper deconcatenations.

    ``φ₋(d) = -P(φ(d) + Σ φ(d') φ₋(d''))`` and ``φ₊(d) = (id - P)(φ(d) + Σ φ(d') φ₋(d''))``.
    Every sub-word is regularized on the window ``[-len, zmax]`` and the recursion is
    memoized on ``(word, zmax)``.

    Args:
        d: directed weak composition to factor
        zmax: highest z-exponent to compute, defaults to ``len(d)``

    Returns:
        the factorization, φ₋ exact and φ₊ valid at least up to z^0
    """
    zmax = _zmax(d, zmax)
    minus, plus = _abf(d.word, zmax)
    return FactorizationResult(RegularizedSeries(minus, d), RegularizedSeries(plus, d), d)


def abf_closed_form(
    d: DirectedWeakComposition, zmax: Optional[int] = None
) -> FactorizationResult:
    """Factor φ(d) with the non-recursive sum over compositions of ``len(d)``.

    Each composition cuts the word into blocks ``w_1 … w_p`` and contributes
    ``P̌(φ(w_1) P̌(φ(w_2) … P̌(φ(w_p))))`` to φ₋, with ``P̌ = -P``. The φ₊ terms replace the
    outermost ``P̌`` by ``id - P``.
    """
    zmax = _zmax(d, zmax)
    word = d.word
    if not word:
        return FactorizationResult(
            RegularizedSeries(_one(), d), RegularizedSeries(_one(), d), d
        )

    minus = LaurentBlock.exact({})
    plus = LaurentBlock.exact({})
    for composition in enumerate_compositions(len(word)):
        blocks = partition_vectors(word, composition)
        inner: Optional[LaurentBlock] = None
        for block in reversed(blocks[1:]):
            value = _phi_word(block, zmax)
            inner = -polar_projection(value if inner is None else value * inner)
        head = _phi_word(blocks[0], zmax)
        outer = head if inner is None else head * inner
        minus = minus - polar_projection(outer)
        plus = plus + regular_part(outer)
    return FactorizationResult(RegularizedSeries(minus, d), RegularizedSeries(plus, d), d)


@functools.lru_cache(maxsize=None)
def _phi_minus_inverse(word: Word, zmax: int) -> LaurentBlock[QSymElement]:
    if not word:
        return _one()
    acc: Optional[LaurentBlock] = None
    for i in range(1, len(word) + 1):
        term = _abf(word[:i], zmax)[0] * _phi_minus_inverse(word[i:], zmax)
        acc = term if acc is None else acc + term
    assert acc is not None
    return -acc


def phi_minus_inverse(d: DirectedWeakComposition, zmax: Optional[int] = None) -> LaurentBlock:
    """The convolution inverse ψ of φ₋: ψ(∅) = 1 and ``ψ(w) = -Σ_{i>=1} φ₋(w[:i]) ψ(w[i:])``.

    ψ is exact since φ₋ is.
    """
    return _phi_minus_inverse(d.word, _zmax(d, zmax))


def check_factorization(d: DirectedWeakComposition, zmax: Optional[int] = None) -> bool:
    """Return True if ``Σ_i φ₊(w[:i]) ψ(w[i:])`` equals φ(w) where both are known."""
    zmax = _zmax(d, zmax)
    product = convolve(
        lambda w: _abf(w, zmax)[1],
        lambda w: _phi_minus_inverse(w, zmax),
        d.word,
    )
    return product.matches(_phi_word(d.word, zmax))


def Z(d: DirectedWeakComposition) -> TPoly[QSymElement]:
    """Directional value: φ₊(d) at z = 0, a polynomial in t over left weak M's."""
    return eval_at_zero(abf(d).phi_plus.series)


def Z_symmetrized(alpha: Sequence[int], beta: Sequence[int]) -> TPoly[QSymElement]:
    """Sum of Z over every permutation of the directions of the trailing zero block.

    The sum has ``(k - j)!`` terms, equal permutations counted separately.

    Raises:
        ValueError: if ``alpha`` and ``beta`` have different lengths
    """
    d = DirectedWeakComposition(tuple(alpha), tuple(beta))
    j = d.j
    acc: TPoly[QSymElement] = TPoly()
    for tail in itertools.permutations(d.lower[j:]):
        acc = acc + Z(DirectedWeakComposition(d.upper, d.lower[:j] + tail))
    return acc


def renormalized_M(alpha: Sequence[int], delta: int = 1) -> TPoly[QSymElement]:
    """The renormalized monomial quasisymmetric function M_α = Z(α; δ^k).

    Independent of δ; equal to the plain M_α when α is left weak.
    """
    alpha = tuple(alpha)
    return Z(DirectedWeakComposition(alpha, (delta,) * len(alpha)))


def renormalized_M_shifted(alpha: Sequence[int], delta: int = 1) -> TPoly[QSymElement]:
    """Z(α; α + δ) with ``α + δ = (α_1 + δ, …, α_k + δ)``."""
    alpha = tuple(alpha)
    return Z(DirectedWeakComposition(alpha, tuple(a + delta for a in alpha)))


def leading_direction_independent(
    alpha: Sequence[int], beta: Sequence[int], zeros: int, delta: int = 1
) -> bool:
    """Check ``Z((α, 0^s); (β, δ^s)) = Z((α, 0^s); δ^(k+s))`` for left weak α.

    Raises:
        ValueError: if ``alpha`` is not left weak or the lengths differ
    """
    alpha = tuple(alpha)
    if not is_left_weak(alpha):
        raise ValueError(f"{alpha} is not left weak")
    if len(alpha) != len(beta):
        raise ValueError(f"alpha {alpha} and beta {tuple(beta)} must have the same length")
    upper = alpha + (0,) * zeros
    directed = Z(DirectedWeakComposition(upper, tuple(beta) + (delta,) * zeros))
    return directed == renormalized_M(upper, delta)
