"""Quasi-shuffle Hopf algebras QS(A) over an additive semigroup A.

Words are tuples of letters. Three letter types are used:

- non-negative integers (A = ℕ, words are weak compositions),
- positive integers (A = ℙ, words are compositions),
- ``(s, r)`` pairs with ``s >= 0`` and ``r >= 1`` (A = ℕ×ℙ, words are directed weak
  compositions).

Letters are merged by addition, componentwise for pairs.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import Counter
from fractions import Fraction
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Tuple,
    TypeVar,
    Union,
)

from .combinatorics import (
    Composition,
    WeakComposition,
    check_composition,
    check_weak_composition,
    last_positive_index,
)

__all__ = [
    "Scalar",
    "Word",
    "LinComb",
    "DirectedWeakComposition",
    "merge_letters",
    "qsh_product",
    "shuffle_product",
    "lincomb_product",
    "deconcat_coproduct",
    "counit",
    "antipode_recursive",
    "convolve",
    "tensor_product",
]

Scalar = Union[int, Fraction]
Letter = Union[int, Tuple[int, int]]
Word = Tuple[Any, ...]

K = TypeVar("K", bound=Hashable)
L = TypeVar("L", bound="LinComb")


class LinComb(Generic[K]):
    """Finitely supported linear combination of basis indices with rational coefficients.

    Stored coefficients are always non-zero, so two combinations are equal exactly when their
    term maps are equal. Instances are immutable: every operation returns a new object of the
    same class.

    Subclasses implement :meth:`_basis_product` to give ``*`` an algebra structure and may
    override :meth:`_check_key` to restrict the allowed basis indices.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, Scalar] | Iterable[Tuple[K, Scalar]] | None = None):
        store: Dict[K, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                self._check_key(key)
                store[key] = store.get(key, Fraction(0)) + Fraction(coeff)
        self._terms: Dict[K, Fraction] = {k: c for k, c in store.items() if c != 0}

    @classmethod
    def _from_clean(cls: type[L], terms: Dict[Any, Fraction]) -> L:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls: type[L], key: Any) -> L:
        """The basis element indexed by ``key`` with coefficient 1."""
        cls._check_key(key)
        return cls._from_clean({key: Fraction(1)})

    @classmethod
    def zero(cls: type[L]) -> L:
        return cls._from_clean({})

    @classmethod
    def _check_key(cls, key: Any) -> None:
        pass

    def _basis_product(self, a: K, b: K) -> Iterable[Tuple[K, Scalar]]:
        raise TypeError(f"{type(self).__name__} has no product")

    # access

    def items(self) -> Iterator[Tuple[K, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> List[K]:
        return list(self._terms)

    def coeff(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {c}" for k, c in self._terms.items())
        return f"{type(self).__name__}({{{inner}}})"

    # linear structure

    def _combine(self: L, other: L, sign: int) -> L:
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, Fraction(0)) + sign * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return type(self)._from_clean(out)

    def __add__(self: L, other: L) -> L:
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        return self._combine(other, 1)

    def __radd__(self: L, other: Any) -> L:
        # lets builtin sum() start from 0
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        return NotImplemented

    def __sub__(self: L, other: L) -> L:
        return self._combine(other, -1)

    def __neg__(self: L) -> L:
        return type(self)._from_clean({k: -c for k, c in self._terms.items()})

    def scale(self: L, factor: Scalar) -> L:
        factor = Fraction(factor)
        if factor == 0:
            return type(self).zero()
        return type(self)._from_clean({k: factor * c for k, c in self._terms.items()})

    def __rmul__(self: L, other: Scalar) -> L:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self: L, other: Any) -> L:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinComb):
            acc: Counter = Counter()
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    for key, c in self._basis_product(a, b):
                        acc[key] += ca * cb * c
            return type(self)._from_clean({k: Fraction(c) for k, c in acc.items() if c})
        return NotImplemented

    def map_keys(self, func: Callable[[K], Any], cls: type[L] | None = None) -> Any:
        """Push the combination forward along ``func`` on basis indices."""
        target = cls if cls is not None else type(self)
        return target(((func(k), c) for k, c in self._terms.items()))


def merge_letters(a: Letter, b: Letter) -> Letter:
    """The semigroup addition: plain for integers, componentwise for pairs."""
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))  # type: ignore[arg-type,return-value]
    return a + b  # type: ignore[operator]


@functools.lru_cache(maxsize=None)
def _qsh(a: Word, b: Word) -> Tuple[Tuple[Word, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: Counter = Counter()
    for w, c in _qsh(a[1:], b):
        acc[(a[0],) + w] += c
    for w, c in _qsh(a, b[1:]):
        acc[(b[0],) + w] += c
    merged = merge_letters(a[0], b[0])
    for w, c in _qsh(a[1:], b[1:]):
        acc[(merged,) + w] += c
    return tuple(acc.items())


@functools.lru_cache(maxsize=None)
def _shuffle(a: Word, b: Word) -> Tuple[Tuple[Word, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: Counter = Counter()
    for w, c in _shuffle(a[1:], b):
        acc[(a[0],) + w] += c
    for w, c in _shuffle(a, b[1:]):
        acc[(b[0],) + w] += c
    return tuple(acc.items())


def qsh_product(a: Word, b: Word) -> LinComb[Word]:
    """Quasi-shuffle product of two words.

    Computed with the recursion
    ``a*b = (a1, a'*b) + (b1, a*b') + (a1+b1, a'*b')`` and memoized on the word pair.
    """
    return LinComb(_qsh(tuple(a), tuple(b)))


def shuffle_product(a: Word, b: Word) -> LinComb[Word]:
    """Shuffle product (quasi-shuffle without letter merges)."""
    return LinComb(_shuffle(tuple(a), tuple(b)))


def lincomb_product(
    x: LinComb[Word], y: LinComb[Word], product: Callable[[Word, Word], LinComb] = qsh_product
) -> LinComb[Word]:
    """Bilinear extension of a product defined on words."""
    acc: Counter = Counter()
    for a, ca in x.items():
        for b, cb in y.items():
            for w, c in product(a, b).items():
                acc[w] += ca * cb * c
    return LinComb(acc.items())


def deconcat_coproduct(w: Word) -> LinComb[Tuple[Word, Word]]:
    """Deconcatenation coproduct: ``Σ_i w[:i] ⊗ w[i:]`` with m+1 terms."""
    w = tuple(w)
    return LinComb(((w[:i], w[i:]), 1) for i in range(len(w) + 1))


def counit(x: LinComb[Word]) -> Fraction:
    """Coefficient of the empty word."""
    return x.coeff(())


@functools.lru_cache(maxsize=None)
def _antipode(w: Word) -> Tuple[Tuple[Word, Fraction], ...]:
    if not w:
        return (((), Fraction(1)),)
    acc: Counter = Counter()
    for i in range(len(w)):
        for u, cu in _antipode(w[:i]):
            for v, cv in _qsh(u, w[i:]):
                acc[v] -= cu * cv
    return tuple((k, Fraction(c)) for k, c in acc.items() if c)


def antipode_recursive(w: Word) -> LinComb[Word]:
    """Antipode of the quasi-shuffle Hopf algebra, from ``Σ_i S(w[:i]) * w[i:] = 0``."""
    return LinComb(_antipode(tuple(w)))


def convolve(f: Callable[[Word], Any], g: Callable[[Word], Any], w: Word) -> Any:
    """Convolution ``(f ⋆ g)(w) = Σ f(w_(1)) · g(w_(2))`` over the deconcatenation of ``w``.

    ``f`` and ``g`` may return any values supporting ``*`` and ``+`` in a common target
    algebra.
    """
    w = tuple(w)
    total = None
    for i in range(len(w) + 1):
        term = f(w[:i]) * g(w[i:])
        total = term if total is None else total + term
    return total


def tensor_product(
    x: LinComb[Tuple[Word, Word]], y: LinComb[Tuple[Word, Word]]
) -> LinComb[Tuple[Word, Word]]:
    """Componentwise quasi-shuffle product on the tensor square."""
    acc: Counter = Counter()
    for (a1, a2), ca in x.items():
        for (b1, b2), cb in y.items():
            for u, cu in _qsh(a1, b1):
                for v, cv in _qsh(a2, b2):
                    acc[(u, v)] += ca * cb * cu * cv
    return LinComb(acc.items())


@dataclasses.dataclass(frozen=True)
class DirectedWeakComposition:
    """A weak composition ``upper`` with a regularization direction ``lower``.

    ``lower`` is a composition of the same length as ``upper``. As a word over ℕ×ℙ the
    letters are the columns ``(upper[i], lower[i])``.
    """

    upper: WeakComposition
    lower: Composition

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", check_weak_composition(self.upper))
        object.__setattr__(self, "lower", check_composition(self.lower))
        if len(self.upper) != len(self.lower):
            raise ValueError(
                f"upper {self.upper} and lower {self.lower} rows must have the same length"
            )

    @classmethod
    def from_word(cls, word: Iterable[Tuple[int, int]]) -> DirectedWeakComposition:
        word = tuple(word)
        return cls(tuple(s for s, _ in word), tuple(r for _, r in word))

    @classmethod
    def from_rows(cls, upper: Iterable[int], lower: Iterable[int]) -> DirectedWeakComposition:
        return cls(tuple(upper), tuple(lower))

    @property
    def word(self) -> Word:
        return tuple(zip(self.upper, self.lower))

    def to_word(self) -> Word:
        return self.word

    @property
    def j(self) -> int:
        """1-based index of the last positive upper entry (0 if none)."""
        return last_positive_index(self.upper)

    def __len__(self) -> int:
        return len(self.upper)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.upper))};{','.join(map(str, self.lower))})"
