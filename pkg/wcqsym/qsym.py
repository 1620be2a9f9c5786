"""Left weak quasisymmetric functions, Stirling left weak quasisymmetric functions and the
truncated power-series oracle used to check them.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .combinatorics import (
    WeakComposition,
    check_weak_composition,
    enumerate_left_weak_compositions_up_to,
    enumerate_weak_compositions,
    is_left_weak,
    total_size,
)
from .quasi_shuffle import LinComb, Word, qsh_product
from .series import TPoly

__all__ = [
    "QSymElement",
    "StirlingIndex",
    "enumerate_stirling_indices",
    "TruncatedSeries",
    "qsym_product",
    "expand_M",
    "expand_stirling",
    "expand_qsym",
    "expand_tpoly",
    "count_filtered_pointed",
    "stirling_to_M",
    "stirling_qsh_product",
    "stirling_number_2",
    "counting_identity_holds",
]


class QSymElement(LinComb[WeakComposition]):
    """Quasisymmetric function in the monomial basis: ``Σ c_α M_α`` over left weak α."""

    @classmethod
    def _check_key(cls, key: Any) -> None:
        if not isinstance(key, tuple) or not is_left_weak(check_weak_composition(key)):
            raise ValueError(f"M_{key} is not a left weak monomial quasisymmetric function")

    @classmethod
    def M(cls, alpha: Iterable[int]) -> QSymElement:
        return cls.basis(tuple(alpha))

    @classmethod
    def one(cls) -> QSymElement:
        return cls.basis(())

    def _basis_product(self, a: WeakComposition, b: WeakComposition):
        return qsh_product(a, b).items()


def qsym_product(a: QSymElement, b: QSymElement) -> QSymElement:
    """``M_α · M_β = M_{α*β}``, extended bilinearly."""
    return a * b


@dataclasses.dataclass(frozen=True)
class StirlingIndex:
    """Index (α over β) of the Stirling function ``Σ_I I^β x_I^α``.

    ``upper`` must be left weak, ``lower`` is a weak composition of the same length.
    """

    upper: WeakComposition
    lower: WeakComposition

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", check_weak_composition(self.upper))
        object.__setattr__(self, "lower", check_weak_composition(self.lower))
        if len(self.upper) != len(self.lower):
            raise ValueError(f"rows {self.upper} and {self.lower} must have the same length")
        if not is_left_weak(self.upper):
            raise ValueError(f"upper row {self.upper} must be left weak")

    @property
    def word(self) -> Word:
        return tuple(zip(self.upper, self.lower))

    @classmethod
    def from_word(cls, word: Iterable[Tuple[int, int]]) -> StirlingIndex:
        word = tuple(word)
        return cls(tuple(a for a, _ in word), tuple(b for _, b in word))

    @property
    def weight(self) -> int:
        """``||α|| + |β|``, the grading used to bound exhaustive checks."""
        return total_size(self.upper) + sum(self.lower)


def enumerate_stirling_indices(max_weight: int) -> List[StirlingIndex]:
    """Every Stirling index of weight at most ``max_weight``, the empty one first."""
    out = []
    for upper in enumerate_left_weak_compositions_up_to(max_weight):
        for n in range(max_weight - total_size(upper) + 1):
            for lower in enumerate_weak_compositions(n, len(upper)):
                out.append(StirlingIndex(upper, lower))
    return out


Monomial = Tuple[Tuple[int, int], ...]


class TruncatedSeries:
    """Polynomial in x_1..x_N with coefficients in ℚ[t].

    Monomials are sparse: a tuple of ``(variable, exponent)`` pairs sorted by variable, with
    positive exponents only. The empty tuple is the constant monomial.
    """

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Dict[Monomial, TPoly[Fraction]] | None = None):
        self.n_vars = n_vars
        self.terms: Dict[Monomial, TPoly[Fraction]] = {}
        for mono, coeff in (terms or {}).items():
            if any(v < 1 or v > n_vars or e < 1 for v, e in mono):
                raise ValueError(f"monomial {mono} invalid for {n_vars} variables")
            if coeff:
                self.terms[mono] = coeff

    def _check_compat(self, other: TruncatedSeries) -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(
                f"cannot combine series in {self.n_vars} and {other.n_vars} variables"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compat(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out[mono] + coeff if mono in out else coeff
        return TruncatedSeries(self.n_vars, out)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.n_vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, factor: Any) -> TruncatedSeries:
        return TruncatedSeries(self.n_vars, {m: c * factor for m, c in self.terms.items()})

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if isinstance(other, (int, Fraction, TPoly)):
            return self.scale(other)
        self._check_compat(other)
        out: Dict[Monomial, TPoly[Fraction]] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps: Counter = Counter(dict(m1))
                exps.update(dict(m2))
                mono = tuple(sorted(exps.items()))
                prod = c1 * c2
                out[mono] = out[mono] + prod if mono in out else prod
        return TruncatedSeries(self.n_vars, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def sorted_terms(self) -> List[Tuple[Monomial, TPoly[Fraction]]]:
        """Terms in graded lexicographic order (x_1 ahead of x_2 within a degree)."""

        def key(item):
            mono = dict(item[0])
            dense = [mono.get(v, 0) for v in range(1, self.n_vars + 1)]
            return sum(dense), [-e for e in dense]

        return sorted(self.terms.items(), key=key)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.n_vars}, {self.terms!r})"


def _monomial(indices: Sequence[int], alpha: Sequence[int]) -> Monomial:
    return tuple((i, a) for i, a in zip(indices, alpha) if a > 0)


def expand_M(alpha: Sequence[int], n_vars: int) -> TruncatedSeries:
    """Restriction of ``M_α`` to the variables x_1..x_N.

    Zero entries of α constrain the index positions without contributing to the monomial.
    When ``N < ℓ(α)`` the restriction is zero.

    Raises:
        ValueError: if α is not left weak (``M_α`` would not be a formal power series)
    """
    alpha = check_weak_composition(alpha)
    if not is_left_weak(alpha):
        raise ValueError(f"M_{alpha} diverges, expansion needs a left weak composition")
    one = TPoly.constant(Fraction(1))
    terms: Dict[Monomial, TPoly[Fraction]] = {}
    for idx in itertools.combinations(range(1, n_vars + 1), len(alpha)):
        mono = _monomial(idx, alpha)
        terms[mono] = terms[mono] + one if mono in terms else one
    return TruncatedSeries(n_vars, terms)


def expand_stirling(s: StirlingIndex, n_vars: int) -> TruncatedSeries:
    """Restriction of ``Σ_I i_1^β_1 … i_k^β_k x_I^α`` to x_1..x_N."""
    terms: Dict[Monomial, TPoly[Fraction]] = {}
    for idx in itertools.combinations(range(1, n_vars + 1), len(s.upper)):
        weight = TPoly.constant(Fraction(math.prod(i**b for i, b in zip(idx, s.lower))))
        mono = _monomial(idx, s.upper)
        terms[mono] = terms[mono] + weight if mono in terms else weight
    return TruncatedSeries(n_vars, terms)


def expand_qsym(x: QSymElement, n_vars: int) -> TruncatedSeries:
    total = TruncatedSeries(n_vars)
    for alpha, c in x.items():
        total = total + expand_M(alpha, n_vars).scale(c)
    return total


def expand_tpoly(p: TPoly[QSymElement], n_vars: int) -> TruncatedSeries:
    """Expand a polynomial in t over the M-basis, keeping t symbolic in the coefficients."""
    total = TruncatedSeries(n_vars)
    for d, x in p.items():
        total = total + expand_qsym(x, n_vars).scale(TPoly.monomial(Fraction(1), d))
    return total


@functools.lru_cache(maxsize=None)
def stirling_number_2(m: int, i: int) -> int:
    """Stirling numbers of the second kind from ``S(m, i) = i S(m-1, i) + S(m-1, i-1)``."""
    if m == 0 and i == 0:
        return 1
    if m == 0 or i == 0:
        return 0
    return i * stirling_number_2(m - 1, i) + stirling_number_2(m - 1, i - 1)


def _tail_sums(seq: Sequence[int]) -> List[int]:
    return [sum(seq[j:]) for j in range(len(seq))]


def _satisfies_tail_condition(beta: Sequence[int], index: Sequence[int]) -> bool:
    return all(i <= b for i, b in zip(_tail_sums(index), _tail_sums(beta)))


def _count_filtered_pointed_maps(
    beta: WeakComposition, index: WeakComposition, placement: str
) -> int:
    # Gap j sits strictly between n_{j-1} and n_j. Each gap gets one or two values left out
    # of Y_j, and Y_j is put at the start or at the end of the gap.
    slack = 1 if placement == "start" else 2
    ys: List[int] = []
    forbidden: set = set()
    n_marks: List[int] = []
    prev = 0
    for i_j in index:
        gap = list(range(prev + 1, prev + 1 + i_j + slack))
        y_j = gap[:i_j] if placement == "start" else gap[slack:]
        ys.extend(y_j)
        forbidden.update(set(gap) - set(y_j))
        prev = gap[-1] + 1
        n_marks.append(prev)

    bit = {y: 1 << pos for pos, y in enumerate(ys)}
    full = (1 << len(ys)) - 1

    # coverage DP: state is the set of Y values hit so far
    states: Dict[int, int] = {0: 1}
    for t, b_t in enumerate(beta):
        allowed = [v for v in range(1, n_marks[t] + 1) if v not in forbidden]
        for _ in range(b_t):
            nxt: Dict[int, int] = {}
            for mask, count in states.items():
                for v in allowed:
                    m = mask | bit.get(v, 0)
                    nxt[m] = nxt.get(m, 0) + count
            states = nxt
    return states.get(full, 0)


@functools.lru_cache(maxsize=None)
def _count_filtered_pointed(beta: WeakComposition, index: WeakComposition) -> int:
    if not _satisfies_tail_condition(beta, index):
        return 0
    first = _count_filtered_pointed_maps(beta, index, "start")
    second = _count_filtered_pointed_maps(beta, index, "end")
    if first != second:
        raise ArithmeticError(
            f"filtered pointed map count for beta={beta}, I={index} depends on the target "
            f"sets ({first} != {second})"
        )
    return first


def count_filtered_pointed(beta: Sequence[int], index: Sequence[int]) -> int:
    """The number c_{β,I} of filtered pointed maps hitting prescribed sets Y_j, #Y_j = i_j.

    The maps are enumerated over concrete values for two different placements of the Y_j and
    the two counts are required to agree.

    Returns:
        c_{β,I}, which is 0 when the tail condition ``Σ_{t>=j} i_t <= Σ_{t>=j} β_t`` fails
    """
    beta = check_weak_composition(beta)
    index = check_weak_composition(index)
    if len(beta) != len(index):
        raise ValueError(f"beta {beta} and I {index} must have the same length")
    return _count_filtered_pointed(beta, index)


@functools.lru_cache(maxsize=None)
def _stirling_to_M(upper: WeakComposition, lower: WeakComposition) -> QSymElement:
    tails = _tail_sums(lower)
    terms = []
    for index in itertools.product(*(range(t + 1) for t in tails)):
        c = _count_filtered_pointed(lower, index)
        if c:
            target: Tuple[int, ...] = ()
            for i_j, a_j in zip(index, upper):
                target += (0,) * i_j + (a_j,)
            terms.append((target, c))
    return QSymElement(terms)


def stirling_to_M(s: StirlingIndex) -> QSymElement:
    """Expand a Stirling function in the monomial basis.

    ``Σ_I c_{β,I} M_(0^i_1, α_1, …, 0^i_k, α_k)`` with ``0 <= i_j <= β_j + … + β_k``.
    """
    return _stirling_to_M(s.upper, s.lower)


def stirling_qsh_product(s: StirlingIndex, other: StirlingIndex) -> LinComb[StirlingIndex]:
    """Quasi-shuffle of two Stirling indices as words over ℕ×ℕ."""
    return qsh_product(s.word, other.word).map_keys(StirlingIndex.from_word, LinComb)


def counting_identity_holds(beta: Sequence[int], ns: Sequence[int]) -> bool:
    """Check ``Π n_j^β_j = Σ_I c_{β,I} Π C(n_j - n_{j-1} - 1, i_j)`` for ``n_1 < … < n_k``."""
    beta = check_weak_composition(beta)
    if len(ns) != len(beta) or any(b <= a for a, b in zip([0] + list(ns), ns)):
        raise ValueError(f"invalid increasing sequence {tuple(ns)} for beta {beta}")
    lhs = math.prod(n**b for n, b in zip(ns, beta))
    gaps = [n - p - 1 for p, n in zip([0] + list(ns), ns)]
    rhs = 0
    for index in itertools.product(*(range(t + 1) for t in _tail_sums(beta))):
        c = _count_filtered_pointed(beta, index)
        if c:
            rhs += c * math.prod(math.comb(g, i) for g, i in zip(gaps, index))
    return lhs == rhs
