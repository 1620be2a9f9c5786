"""Weak compositions, their statistics, and the enumerations used by the closed formulas.

Weak compositions are plain tuples of non-negative integers. Trailing zeros are significant:
``(2,)`` and ``(2, 0)`` are different indices.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, List, Sequence, Tuple

WeakComposition = Tuple[int, ...]
Composition = Tuple[int, ...]

__all__ = [
    "WeakComposition",
    "Composition",
    "check_weak_composition",
    "check_composition",
    "is_left_weak",
    "last_positive_index",
    "split_trailing_zeros",
    "length",
    "size",
    "zero_length",
    "total_size",
    "reversal",
    "strip_zeros",
    "concat",
    "coarsen",
    "partition_vectors",
    "enumerate_compositions",
    "enumerate_weak_compositions",
    "enumerate_weak_compositions_up_to",
    "enumerate_left_weak_compositions_up_to",
    "parse_composition",
    "format_composition",
]


def check_weak_composition(alpha: Iterable[int]) -> WeakComposition:
    """Validate and normalize a weak composition to a tuple.

    Raises:
        ValueError: if any entry is negative or not an integer
    """
    res = tuple(alpha)
    for a in res:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise ValueError(f"invalid weak composition {res}: entries must be integers >= 0")
    return res


def check_composition(beta: Iterable[int]) -> Composition:
    """Validate and normalize a composition (all entries positive) to a tuple."""
    res = tuple(beta)
    for b in res:
        if not isinstance(b, int) or isinstance(b, bool) or b < 1:
            raise ValueError(f"invalid composition {res}: entries must be integers >= 1")
    return res


def is_left_weak(alpha: Sequence[int]) -> bool:
    """Return True if ``alpha`` is empty or ends with a positive entry."""
    return len(alpha) == 0 or alpha[-1] > 0


def last_positive_index(alpha: Sequence[int]) -> int:
    """1-based index of the last positive entry of ``alpha``, or 0 if there is none."""
    for i in range(len(alpha), 0, -1):
        if alpha[i - 1] > 0:
            return i
    return 0


def split_trailing_zeros(alpha: Sequence[int]) -> Tuple[WeakComposition, int]:
    """Split ``alpha`` into its left weak head and the number of trailing zeros."""
    j = last_positive_index(alpha)
    return tuple(alpha[:j]), len(alpha) - j


def length(alpha: Sequence[int]) -> int:
    return len(alpha)


def size(alpha: Sequence[int]) -> int:
    return sum(alpha)


def zero_length(alpha: Sequence[int]) -> int:
    return sum(1 for a in alpha if a == 0)


def total_size(alpha: Sequence[int]) -> int:
    """||α|| = |α| + ℓ₀(α): zeros weigh one each."""
    return size(alpha) + zero_length(alpha)


def reversal(alpha: Sequence[int]) -> WeakComposition:
    return tuple(reversed(alpha))


def strip_zeros(alpha: Sequence[int]) -> Composition:
    return tuple(a for a in alpha if a != 0)


def concat(alpha: Sequence[int], beta: Sequence[int]) -> WeakComposition:
    return tuple(alpha) + tuple(beta)


def _blocks(seq: Sequence, composition: Sequence[int]) -> List[tuple]:
    if sum(composition) != len(seq):
        raise ValueError(
            f"composition {tuple(composition)} does not match length {len(seq)} of "
            f"{tuple(seq)}"
        )
    out = []
    start = 0
    for part in composition:
        out.append(tuple(seq[start : start + part]))
        start += part
    return out


def coarsen(j: Sequence[int], alpha: Sequence[int]) -> WeakComposition:
    """Compute J[α] by summing consecutive blocks of ``alpha`` of sizes given by ``j``.

    Args:
        j: composition of ``len(alpha)``
        alpha: weak composition

    Returns:
        the coarsened weak composition, with ``len(j)`` entries
    """
    return tuple(sum(block) for block in _blocks(alpha, check_composition(j)))


def partition_vectors(alpha: Sequence, composition: Sequence[int]) -> List[tuple]:
    """Cut ``alpha`` into consecutive blocks of sizes given by ``composition``.

    Works for any sequence, so it also splits words over ℕ×ℙ.
    """
    return _blocks(alpha, check_composition(composition))


@functools.lru_cache(maxsize=None)
def _compositions(k: int) -> Tuple[Composition, ...]:
    if k == 0:
        return ((),)
    out: List[Composition] = []
    for first in range(1, k + 1):
        out.extend((first,) + rest for rest in _compositions(k - first))
    return tuple(sorted(out))


def enumerate_compositions(k: int) -> List[Composition]:
    """All 2^(k-1) compositions of ``k`` in lexicographic order (``[()]`` for k = 0)."""
    if k < 0:
        raise ValueError(f"cannot enumerate compositions of negative integer {k}")
    return list(_compositions(k))


@functools.lru_cache(maxsize=None)
def _weak_compositions(n: int, k: int) -> Tuple[WeakComposition, ...]:
    if k == 0:
        return ((),) if n == 0 else ()
    out: List[WeakComposition] = []
    for first in range(n + 1):
        out.extend((first,) + rest for rest in _weak_compositions(n - first, k - 1))
    return tuple(out)


def enumerate_weak_compositions(n: int, k: int) -> List[WeakComposition]:
    """All weak compositions of ``n`` with exactly ``k`` parts, in lexicographic order."""
    if n < 0 or k < 0:
        raise ValueError(f"invalid arguments n={n}, k={k}")
    return list(_weak_compositions(n, k))


def enumerate_weak_compositions_up_to(
    max_total_size: int, max_length: int | None = None
) -> List[WeakComposition]:
    """Every weak composition with ||α|| <= ``max_total_size`` (and optionally a length cap).

    Sorted by total size, then length, then lexicographically. The empty composition comes
    first.
    """
    if max_length is None:
        max_length = max_total_size
    out: List[WeakComposition] = []
    for k in range(0, max_length + 1):
        for alpha in itertools.product(range(max_total_size + 1), repeat=k):
            if total_size(alpha) <= max_total_size:
                out.append(tuple(alpha))
    out.sort(key=lambda a: (total_size(a), len(a), a))
    return out


def enumerate_left_weak_compositions_up_to(
    max_total_size: int, max_length: int | None = None
) -> List[WeakComposition]:
    candidates = enumerate_weak_compositions_up_to(max_total_size, max_length)
    return [a for a in candidates if is_left_weak(a)]


def parse_composition(text: str) -> WeakComposition:
    """Parse the comma-separated text form, the empty string being ∅.

    Whitespace around entries is ignored.

    Raises:
        ValueError: if an entry is not a non-negative decimal integer
    """
    text = text.strip()
    if text == "":
        return ()
    parts = []
    for field in text.split(","):
        field = field.strip()
        if not field.isdecimal():
            raise ValueError(f"cannot parse '{text}' as a weak composition")
        parts.append(int(field))
    return tuple(parts)


def format_composition(alpha: Sequence[int]) -> str:
    return ",".join(str(a) for a in alpha)
