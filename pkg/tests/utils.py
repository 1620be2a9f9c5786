from fractions import Fraction
from typing import Sequence, Union

from wcqsym import DirectedWeakComposition, QSymElement, TPoly

Number = Union[int, Fraction]


def tq(coeffs: Sequence[Number], alpha: Sequence[int] = ()) -> TPoly[QSymElement]:
    """Build ``(c_0 + c_1 t + ...) M_alpha`` as a polynomial over left weak M's.

    Examples:

        >>> tq([Fraction(-1, 2), -1])  # -t - 1/2
        >>> tq([0, 1], (0, 2))  # t M[0,2]
    """
    m = QSymElement.M(alpha)
    return TPoly({d: m.scale(c) for d, c in enumerate(coeffs) if c})


def dwc(upper: Sequence[int], lower: Sequence[int]) -> DirectedWeakComposition:
    return DirectedWeakComposition(tuple(upper), tuple(lower))


def lincomb_equal(actual, expected: dict) -> bool:
    """Compare a linear combination with a ``{index: coefficient}`` dict."""
    return dict(actual.items()) == {k: Fraction(v) for k, v in expected.items() if v}


def golden(terms: dict) -> TPoly[QSymElement]:
    """Sum of :func:`tq` over a ``{alpha: coeffs}`` dict, as stored in ``tests/data.py``."""
    acc: TPoly[QSymElement] = TPoly()
    for alpha, coeffs in terms.items():
        acc = acc + tq(coeffs, alpha)
    return acc
