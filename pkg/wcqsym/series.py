"""Polynomials in t and truncated Laurent series in z over an arbitrary coefficient ring.

The coefficient ring only needs ``+``, ``-``, ``*``, scaling by a :class:`~fractions.Fraction`
and a truthiness test for zero. Both :class:`~fractions.Fraction` and the linear
combinations of :mod:`wcqsym.quasi_shuffle` qualify.
"""

from __future__ import annotations

import dataclasses
import math
import threading
from fractions import Fraction
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    TypeVar,
)

__all__ = [
    "TruncationError",
    "TPoly",
    "LaurentBlock",
    "bernoulli_number",
    "bernoulli_b",
    "polar_projection",
    "regular_part",
    "eval_at_zero",
]

C = TypeVar("C")


class TruncationError(ValueError):
    """A coefficient was requested outside the range where it is known exactly."""


def _add_into(store: Dict[int, Any], key: int, value: Any) -> None:
    if key in store:
        v = store[key] + value
        if v:
            store[key] = v
        else:
            del store[key]
    elif value:
        store[key] = value


class TPoly(Generic[C]):
    """Polynomial in t, stored sparsely as ``{degree: coefficient}`` with non-zero values."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, C] | List[C] | Tuple[C, ...] | None = None):
        items: Any
        if coeffs is None:
            items = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        store: Dict[int, Any] = {}
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative t-degree {d}")
            _add_into(store, d, c)
        self._coeffs: Dict[int, C] = store

    @classmethod
    def constant(cls, c: C) -> TPoly[C]:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: C, degree: int) -> TPoly[C]:
        return cls({degree: c})

    @property
    def degree(self) -> int:
        """Degree in t, -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def get(self, degree: int) -> Optional[C]:
        return self._coeffs.get(degree)

    def items(self) -> Iterator[Tuple[int, C]]:
        return iter(sorted(self._coeffs.items()))

    def at_zero(self) -> TPoly[C]:
        """The constant part, as a polynomial."""
        return TPoly({0: self._coeffs[0]}) if 0 in self._coeffs else TPoly()

    def map(self, func: Callable[[C], Any]) -> TPoly:
        return TPoly({d: func(c) for d, c in self._coeffs.items()})

    def scale(self, factor: Any) -> TPoly:
        return TPoly({d: c * factor for d, c in self._coeffs.items()})  # type: ignore

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TPoly({dict(sorted(self._coeffs.items()))!r})"

    def __add__(self, other: TPoly) -> TPoly:
        if not isinstance(other, TPoly):
            return NotImplemented
        store = dict(self._coeffs)
        for d, c in other._coeffs.items():
            _add_into(store, d, c)
        return TPoly(store)

    def __neg__(self) -> TPoly:
        return TPoly({d: -c for d, c in self._coeffs.items()})  # type: ignore

    def __sub__(self, other: TPoly) -> TPoly:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> TPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        store: Dict[int, Any] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                _add_into(store, d1 + d2, c1 * c2)  # type: ignore
        return TPoly(store)

    def __rmul__(self, other: Any) -> TPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def _min_bound(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclasses.dataclass(frozen=True)
class LaurentBlock(Generic[C]):
    """Truncated Laurent series ``Σ_e coeffs[e] z^e`` with an explicit validity window.

    Every coefficient below ``window_low`` is zero. Coefficients are known exactly up to and
    including exponent ``valid_to``. ``valid_to = None`` means the series is exact, i.e.
    finitely supported and fully known.

    Args:
        window_low: lowest exponent that may carry a non-zero coefficient
        valid_to: highest exponent known exactly, or None for an exact series
        coeffs: non-zero coefficients by exponent, all within the window
    """

    window_low: int
    valid_to: Optional[int]
    coeffs: Mapping[int, TPoly[C]] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for e, c in self.coeffs.items():
            if not c:
                continue
            if e < self.window_low or (self.valid_to is not None and e > self.valid_to):
                raise ValueError(
                    f"exponent {e} outside of window [{self.window_low}, {self.valid_to}]"
                )
            clean[e] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def exact(cls, coeffs: Mapping[int, TPoly[C]]) -> LaurentBlock[C]:
        """Finitely supported series known in full."""
        return cls(min(list(coeffs) + [0]), None, coeffs)

    @property
    def is_exact(self) -> bool:
        return self.valid_to is None

    def coefficient(self, exponent: int) -> TPoly[C]:
        """Coefficient of ``z^exponent``.

        Raises:
            TruncationError: if the exponent lies above ``valid_to``
        """
        if self.valid_to is not None and exponent > self.valid_to:
            raise TruncationError(
                f"coefficient of z^{exponent} unknown, series valid up to z^{self.valid_to}"
            )
        return self.coeffs.get(exponent, TPoly())

    def exponents(self) -> List[int]:
        return list(self.coeffs)

    def pole_order(self) -> int:
        return max([0] + [-e for e in self.coeffs])

    def truncate(self, valid_to: int) -> LaurentBlock[C]:
        new_valid = _min_bound(self.valid_to, valid_to)
        return LaurentBlock(
            self.window_low,
            new_valid,
            {e: c for e, c in self.coeffs.items() if new_valid is None or e <= new_valid},
        )

    def at_t_zero(self) -> LaurentBlock[C]:
        """Set t = 0 in every coefficient."""
        return LaurentBlock(
            self.window_low, self.valid_to, {e: c.at_zero() for e, c in self.coeffs.items()}
        )

    def map(self, func: Callable[[TPoly[C]], TPoly]) -> LaurentBlock:
        return LaurentBlock(
            self.window_low, self.valid_to, {e: func(c) for e, c in self.coeffs.items()}
        )

    def scale(self, factor: Any) -> LaurentBlock:
        return self.map(lambda c: c.scale(factor))

    def matches(self, other: LaurentBlock) -> bool:
        """Equality on the exponents where both series are known exactly."""
        bound = _min_bound(self.valid_to, other.valid_to)
        exps = set(self.coeffs) | set(other.coeffs)
        return all(
            self.coeffs.get(e, TPoly()) == other.coeffs.get(e, TPoly())
            for e in exps
            if bound is None or e <= bound
        )

    def __add__(self, other: LaurentBlock) -> LaurentBlock:
        if not isinstance(other, LaurentBlock):
            return NotImplemented
        valid = _min_bound(self.valid_to, other.valid_to)
        store: Dict[int, Any] = {}
        for series in (self, other):
            for e, c in series.coeffs.items():
                if valid is None or e <= valid:
                    _add_into(store, e, c)
        return LaurentBlock(min(self.window_low, other.window_low), valid, store)

    def __neg__(self) -> LaurentBlock:
        return self.map(lambda c: -c)

    def __sub__(self, other: LaurentBlock) -> LaurentBlock:
        if not isinstance(other, LaurentBlock):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> LaurentBlock:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentBlock):
            return NotImplemented

        low = self.window_low + other.window_low
        valid = _min_bound(
            None if self.valid_to is None else self.valid_to + other.window_low,
            None if other.valid_to is None else other.valid_to + self.window_low,
        )
        if valid is not None and valid < 0:
            raise TruncationError(
                f"product only valid up to z^{valid}, the z^0 coefficient would be unknown "
                "(widen the window)"
            )

        store: Dict[int, Any] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if valid is None or e <= valid:
                    _add_into(store, e, c1 * c2)
        return LaurentBlock(low, valid, store)

    def __rmul__(self, other: Any) -> LaurentBlock:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def polar_projection(a: LaurentBlock[C]) -> LaurentBlock[C]:
    """The Rota-Baxter operator P: keep the exponents <= -1.

    The result is exact as soon as ``a`` is known up to exponent -1.
    """
    valid = None if a.valid_to is None or a.valid_to >= -1 else a.valid_to
    return LaurentBlock(
        min(a.window_low, -1), valid, {e: c for e, c in a.coeffs.items() if e <= -1}
    )


def regular_part(a: LaurentBlock[C]) -> LaurentBlock[C]:
    """(id - P): keep the exponents >= 0."""
    return LaurentBlock(
        max(a.window_low, 0), a.valid_to, {e: c for e, c in a.coeffs.items() if e >= 0}
    )


def eval_at_zero(a: LaurentBlock[C]) -> TPoly[C]:
    """The z^0 coefficient of a pole-free series.

    Raises:
        TruncationError: if ``a`` has a pole or is not known up to z^0
    """
    poles = [e for e in a.coeffs if e < 0]
    if poles:
        raise TruncationError(
            f"cannot evaluate at z = 0, series has a pole of order {-poles[0]}"
        )
    return a.coefficient(0)


_BERNOULLI: List[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli_number(s: int) -> Fraction:
    """Bernoulli number B_s with the convention B_1 = -1/2.

    The table is extended lazily with ``Σ_{k<=n} C(n+1, k) B_k = 0``.
    """
    if s < 0:
        raise ValueError(f"invalid Bernoulli index {s}")
    if s >= len(_BERNOULLI):
        with _BERNOULLI_LOCK:
            for n in range(len(_BERNOULLI), s + 1):
                acc = sum(math.comb(n + 1, k) * _BERNOULLI[k] for k in range(n))
                _BERNOULLI.append(Fraction(-acc, n + 1))
    return _BERNOULLI[s]


def bernoulli_b(s: int) -> Fraction:
    """The shifted constants b_s of ``e^z/(1-e^z) = Σ b_s z^(s-1)/s!``.

    b_0 = -1, b_1 = -1/2 and b_s = -B_s for s >= 2.
    """
    if s == 0:
        return Fraction(-1)
    if s == 1:
        return Fraction(-1, 2)
    return -bernoulli_number(s)
