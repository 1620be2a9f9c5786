"""Deterministic text and JSON rendering of command results."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple, Union

from wcqsym import (
    LaurentBlock,
    LinComb,
    QSymElement,
    TPoly,
    TruncatedSeries,
    format_composition,
)
from wcqsym.combinatorics import total_size

BASES = ("M-wc", "M-lwc-tpoly", "series")

Coeff = Union[Fraction, Tuple[Fraction, ...]]


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _as_poly(coeff: Coeff) -> TPoly[Fraction]:
    if isinstance(coeff, tuple):
        return TPoly(list(coeff))
    return TPoly.constant(Fraction(coeff))


def _dense(p: TPoly[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(p.get(d) or Fraction(0) for d in range(p.degree + 1))


def _term_count(p: TPoly) -> int:
    return sum(1 for _ in p.items())


def render_poly(p: TPoly[Fraction], compact: bool = True, ascending: bool = False) -> str:
    """Render a polynomial in t, by decreasing degree unless ``ascending`` is set.

    The compact form has no spaces (``-t-1/2``), the spaced one separates terms
    (``1/2*t^2 + t + 3/8``).
    """
    parts = []
    for i, (d, c) in enumerate(sorted(p.items(), reverse=not ascending)):
        mag = abs(c)
        if d == 0:
            body = format_fraction(mag)
        else:
            power = "t" if d == 1 else f"t^{d}"
            body = power if mag == 1 else f"{format_fraction(mag)}*{power}"
        sign = "-" if c < 0 else "+"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((sign if compact else f" {sign} ") + body)
    return "".join(parts) or "0"


def render_term(p: TPoly[Fraction], label: str) -> Tuple[bool, str]:
    """Render ``p * label`` with its sign pulled out.

    Returns:
        whether the term is negative, and the unsigned text
    """
    negative = p.get(p.degree) < 0  # type: ignore[operator]
    if negative:
        p = -p
    count = _term_count(p)
    if label == "":
        text = render_poly(p)
        return negative, f"({text})" if count > 1 else text
    if p == TPoly.constant(Fraction(1)):
        return negative, label
    if count == 1:
        return negative, f"{render_poly(p)}*{label}"
    return negative, f"({render_poly(p)})*{label}"


def join_terms(terms: Iterable[Tuple[bool, str]]) -> str:
    out = ""
    for i, (negative, text) in enumerate(terms):
        if i == 0:
            out = ("-" if negative else "") + text
        else:
            out += (" - " if negative else " + ") + text
    return out or "0"


def _label(alpha: Tuple[int, ...]) -> str:
    return f"M[{format_composition(alpha)}]" if alpha else ""


def _is_pair(index: Any) -> bool:
    return len(index) == 2 and all(isinstance(x, tuple) for x in index)


def _wc_key(alpha: Tuple[int, ...]) -> Tuple:
    return total_size(alpha), len(alpha), alpha


def _regroup(p: TPoly[QSymElement]) -> Dict[Tuple[int, ...], TPoly[Fraction]]:
    store: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
    for d, x in p.items():
        for alpha, c in x.items():
            store.setdefault(alpha, {})[d] = c
    return {alpha: TPoly(coeffs) for alpha, coeffs in store.items()}


def _tpoly_terms(p: TPoly[QSymElement]) -> List[Tuple[TPoly[Fraction], Tuple[int, ...]]]:
    groups = _regroup(p)
    order = sorted(groups, key=lambda a: (groups[a].degree,) + _wc_key(a), reverse=True)
    return [(groups[alpha], alpha) for alpha in order]


def _to_jsonable(index: Any) -> Any:
    if isinstance(index, tuple):
        return [_to_jsonable(x) for x in index]
    return index


def _from_jsonable(index: Any) -> Any:
    if isinstance(index, list):
        return tuple(_from_jsonable(x) for x in index)
    return index


@dataclasses.dataclass
class OutputRecord:
    """A command result: basis name, ordered ``(coefficient, index)`` terms and metadata.

    Coefficients are fractions, or tuples of fractions by t-degree. Indices are weak
    compositions, pairs of them for coproducts, or ``(z_exponent, composition)`` for series.
    """

    basis: str
    terms: List[Tuple[Coeff, Any]]
    meta: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise ValueError(f"unknown basis '{self.basis}'")

    @classmethod
    def from_lincomb(cls, x: LinComb, meta: Dict[str, Any]) -> OutputRecord:
        order = sorted(x.support(), key=_wc_key, reverse=True)
        return cls("M-wc", [(x.coeff(alpha), alpha) for alpha in order], meta)

    @classmethod
    def from_coproduct(cls, x: LinComb, meta: Dict[str, Any]) -> OutputRecord:
        order = sorted(x.support(), key=lambda pair: len(pair[0]))
        return cls("M-wc", [(x.coeff(pair), pair) for pair in order], meta)

    @classmethod
    def from_tpoly(cls, p: TPoly[QSymElement], meta: Dict[str, Any]) -> OutputRecord:
        return cls("M-lwc-tpoly", [(_dense(c), alpha) for c, alpha in _tpoly_terms(p)], meta)

    @classmethod
    def from_series(
        cls, series: LaurentBlock[QSymElement], meta: Dict[str, Any]
    ) -> OutputRecord:
        terms: List[Tuple[Coeff, Any]] = []
        for e, p in series.coeffs.items():
            terms.extend((_dense(c), (e, alpha)) for c, alpha in _tpoly_terms(p))
        return cls("series", terms, meta)

    def to_json(self) -> str:
        terms = []
        for coeff, index in self.terms:
            value: Any
            if isinstance(coeff, tuple):
                value = [format_fraction(c) for c in coeff]
            else:
                value = format_fraction(coeff)
            terms.append({"coeff": value, "index": _to_jsonable(index)})
        doc = {"basis": self.basis, "terms": terms, "meta": self.meta}
        return json.dumps(doc, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        doc = json.loads(text)
        terms: List[Tuple[Coeff, Any]] = []
        for term in doc["terms"]:
            value = term["coeff"]
            coeff: Coeff
            if isinstance(value, list):
                coeff = tuple(parse_fraction(c) for c in value)
            else:
                coeff = parse_fraction(value)
            terms.append((coeff, _from_jsonable(term["index"])))
        return cls(doc["basis"], terms, doc["meta"])

    def render(self) -> str:
        """The text form printed by the commands."""
        if self.basis == "series":
            return self._render_series()

        rendered = []
        for coeff, index in self.terms:
            if _is_pair(index):
                left, right = (format_composition(part) for part in index)
                label = f"M[{left}] (x) M[{right}]"
            else:
                label = _label(index)
            rendered.append(render_term(_as_poly(coeff), label))

        if len(self.terms) == 1 and self.terms[0][1] == ():
            return render_poly(_as_poly(self.terms[0][0]), compact=False)
        return join_terms(rendered)

    def _render_series(self) -> str:
        lines: Dict[int, List[Tuple[Coeff, Tuple[int, ...]]]] = {}
        for coeff, (e, alpha) in self.terms:
            lines.setdefault(e, []).append((coeff, alpha))

        out = []
        for e, terms in lines.items():
            if len(terms) == 1 and terms[0][1] == ():
                body = render_poly(_as_poly(terms[0][0]))
            else:
                body = join_terms(render_term(_as_poly(c), _label(a)) for c, a in terms)
            out.append(f"z^{e}: {body}")
        return "; ".join(out) or "0"


def render_expansion(series: TruncatedSeries) -> str:
    """Render a truncated series as ``(a0 + a1*t)*x_1^2*x_3 + …``.

    Coefficients keep their sign inside the parentheses and list t-powers by increasing
    degree. Monomials come in graded lexicographic order.
    """
    terms = []
    for monomial, p in series.sorted_terms():
        coeff = f"({render_poly(p, compact=False, ascending=True)})"
        label = "*".join(f"x_{v}" if e == 1 else f"x_{v}^{e}" for v, e in monomial)
        terms.append(f"{coeff}*{label}" if label else coeff)
    return " + ".join(terms) or "0"
