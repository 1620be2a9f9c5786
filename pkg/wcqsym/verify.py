"""Invariant suites behind ``wcqsym verify``.

A suite is a list of named checks. Each check returns ``None`` when it passes or a short
description of the counterexample when it fails. Suites take a size bound, and the same
checks serve both as a quick smoke test and as an exhaustive sweep.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from collections import Counter
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from multiprocess.pool import Pool
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from .birkhoff import (
    Z,
    Z_symmetrized,
    abf,
    abf_closed_form,
    check_factorization,
    leading_direction_independent,
    renormalized_M,
    renormalized_M_shifted,
)
from .combinatorics import (
    enumerate_left_weak_compositions_up_to,
    enumerate_weak_compositions_up_to,
    split_trailing_zeros,
    total_size,
)
from .quasi_shuffle import (
    DirectedWeakComposition,
    LinComb,
    Word,
    antipode_recursive,
    deconcat_coproduct,
    lincomb_product,
    qsh_product,
    tensor_product,
)
from .qsym import (
    QSymElement,
    StirlingIndex,
    enumerate_stirling_indices,
    count_filtered_pointed,
    counting_identity_holds,
    expand_qsym,
    expand_stirling,
    expand_tpoly,
    stirling_number_2,
    stirling_qsh_product,
    stirling_to_M,
)
from .regularization import BoundViolation, phi, phi_factorized, phi_zero_block
from .renqsym import (
    RBElement,
    RenElement,
    composition_projection,
    from_t_polynomial,
    is_composition_supported,
    m0_power_times,
    rb_operator,
    ren_antipode,
    ren_coproduct,
    ren_counit,
    to_m0_basis,
    to_t_polynomial,
)
from .series import LaurentBlock, TPoly, bernoulli_number, polar_projection

__all__ = [
    "CaseResult",
    "SuiteResult",
    "SUITES",
    "random_laurent",
    "suite_names",
    "run_suite",
    "run_suites",
]

Check = Callable[[], Optional[str]]
Case = Tuple[str, Check]


@dataclasses.dataclass(frozen=True)
class CaseResult:
    label: str
    passed: bool
    detail: str = ""


@dataclasses.dataclass
class SuiteResult:
    """Outcome of one suite, case by case."""

    name: str
    results: List[CaseResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CaseResult]:
        return [r for r in self.results if not r.passed]

    @property
    def first_failure(self) -> Optional[CaseResult]:
        failures = self.failures
        return failures[0] if failures else None


SUITES: Dict[str, Callable[[int], List[Case]]] = {}


def _suite(name: str):
    def decorator(func: Callable[[int], List[Case]]) -> Callable[[int], List[Case]]:
        SUITES[name] = func
        return func

    return decorator


def suite_names() -> List[str]:
    return list(SUITES)


def _expect(actual, expected) -> Optional[str]:
    if actual == expected:
        return None
    return f"got {actual!r}, expected {expected!r}"


def _tq(coeffs: Sequence[Fraction | int], alpha: Sequence[int] = ()) -> TPoly[QSymElement]:
    """``(c_0 + c_1 t + …) M_α`` as a polynomial in t."""
    m = QSymElement.M(alpha)
    return TPoly({d: m.scale(c) for d, c in enumerate(coeffs) if c})


def _sympy_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _phi_single(r: int):
    return phi(DirectedWeakComposition((0,), (r,)), (-1, 2))


def _directed_words(max_length: int, max_upper: int, max_lower: int) -> List[Word]:
    letters = [(s, r) for s in range(max_upper + 1) for r in range(1, max_lower + 1)]
    return [w for k in range(1, max_length + 1) for w in itertools.product(letters, repeat=k)]


########################################################################################
# paper-examples


@_suite("paper-examples")
def known_values(max_size: int) -> List[Case]:
    h = Fraction(1, 2)
    cases: List[Case] = [
        ("M[0]", lambda: _expect(renormalized_M((0,)), _tq([-h, -1]))),
        ("M[0,0]", lambda: _expect(renormalized_M((0, 0)), _tq([Fraction(3, 8), 1, h]))),
        (
            "M[0,0,0]",
            lambda: _expect(
                renormalized_M((0, 0, 0)),
                _tq([Fraction(-5, 16), Fraction(-23, 24), Fraction(-3, 4), Fraction(-1, 6)]),
            ),
        ),
    ]

    for s in range(1, 4):
        cases += [
            (
                f"M[{s},0]",
                lambda s=s: _expect(
                    renormalized_M((s, 0)), _tq([-3 * h, -1], (s,)) + _tq([-1], (0, s))
                ),
            ),
            (
                f"M[0,{s},0]",
                lambda s=s: _expect(
                    renormalized_M((0, s, 0)),
                    _tq([-5 * h, -1], (0, s)) + _tq([-2], (0, 0, s)),
                ),
            ),
            (
                f"M[{s},0,0]",
                lambda s=s: _expect(
                    renormalized_M((s, 0, 0)),
                    _tq([Fraction(15, 8), 2, h], (s,))
                    + _tq([5 * h, 1], (0, s))
                    + _tq([1], (0, 0, s)),
                ),
            ),
            (
                f"Z({s};r)",
                lambda s=s: _expect(Z(DirectedWeakComposition((s,), (2,))), _tq([1], (s,))),
            ),
            (
                f"Z(0,{s};r1,r2)",
                lambda s=s: _expect(
                    Z(DirectedWeakComposition((0, s), (1, 3))), _tq([1], (0, s))
                ),
            ),
            (
                f"Z({s},0;r1,r2)",
                lambda s=s: _expect(
                    Z(DirectedWeakComposition((s, 0), (2, 1))),
                    _tq([-3 * h, -1], (s,)) + _tq([-1], (0, s)),
                ),
            ),
        ]

    for r in range(1, 4):
        expected = {
            -1: _tq([Fraction(-1, r)]),
            0: _tq([-h, -1]),
            1: _tq([Fraction(-r, 12), -h * r, -h * r]),
            2: _tq([0, Fraction(-r * r, 12), Fraction(-r * r, 4), Fraction(-r * r, 6)]),
        }
        cases += [
            (
                f"Z(0;{r})",
                lambda r=r: _expect(Z(DirectedWeakComposition((0,), (r,))), _tq([-h, -1])),
            ),
            (
                f"phi(0;{r})",
                lambda r=r, expected=expected: _expect(
                    {e: _phi_single(r).coefficient(e) for e in expected}, expected
                ),
            ),
        ]

    def bernoulli() -> Optional[str]:
        for n in range(2, 4 * max_size + 8, 2):
            if bernoulli_number(n) != _sympy_fraction(sympy.bernoulli(n)):
                return f"B_{n} = {bernoulli_number(n)}, sympy gives {sympy.bernoulli(n)}"
        return None

    cases.append(("bernoulli", bernoulli))

    M = QSymElement.M
    for s in range(1, 3):
        cases += [
            (
                f"stirling({s};1)",
                lambda s=s: _expect(
                    stirling_to_M(StirlingIndex((s,), (1,))), M((0, s)) + M((s,))
                ),
            ),
            (
                f"stirling({s};2)",
                lambda s=s: _expect(
                    stirling_to_M(StirlingIndex((s,), (2,))),
                    M((s,)) + M((0, s)).scale(3) + M((0, 0, s)).scale(2),
                ),
            ),
            (
                f"stirling(0,{s};0,1)",
                lambda s=s: _expect(
                    stirling_to_M(StirlingIndex((0, s), (0, 1))),
                    M((0, s)).scale(2) + M((0, 0, s)).scale(2),
                ),
            ),
        ]
    for s1, s2 in itertools.product(range(1, 3), repeat=2):
        cases += [
            (
                f"stirling({s1},{s2};1,1)",
                lambda s1=s1, s2=s2: _expect(
                    stirling_to_M(StirlingIndex((s1, s2), (1, 1))),
                    M((0, s1, 0, s2))
                    + M((0, 0, s1, s2)).scale(2)
                    + M((0, s1, s2)).scale(4)
                    + M((s1, s2)).scale(2)
                    + M((s1, 0, s2)),
                ),
            ),
        ]
    return cases


########################################################################################
# quasi-shuffle


def _qsh_three_ways(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Optional[str]:
    a, b = RenElement.M(alpha), RenElement.M(beta)
    product = a * b
    if product != RenElement(qsh_product(alpha, beta).items()):
        return "basis product differs from quasi-shuffle"

    ta, tb, tab = to_t_polynomial(a), to_t_polynomial(b), to_t_polynomial(product)
    if ta * tb != tab:
        return "t-polynomial images are not multiplicative"

    n_vars = len(alpha) + len(beta) + 1
    if expand_tpoly(ta, n_vars) * expand_tpoly(tb, n_vars) != expand_tpoly(tab, n_vars):
        return f"series product differs with {n_vars} variables"
    return None


def _round_trip(alpha: Tuple[int, ...]) -> Optional[str]:
    m = RenElement.M(alpha)
    if from_t_polynomial(to_t_polynomial(m)) != m:
        return "from_t_polynomial(to_t_polynomial(M)) != M"

    head, zeros = split_trailing_zeros(alpha)
    expansion = to_m0_basis(m)
    if expansion.coeff((zeros, head)) != Fraction(1, math.factorial(zeros)):
        return f"leading coefficient {expansion.coeff((zeros, head))}"
    if any(n > zeros for n, _ in expansion.support()):
        return "expansion is not triangular"
    return None


@_suite("quasi-shuffle")
def quasi_shuffle(max_size: int) -> List[Case]:
    cases: List[Case] = []
    words = enumerate_weak_compositions_up_to(max_size)
    for alpha, beta in itertools.product(words, repeat=2):
        if total_size(alpha) + total_size(beta) <= max_size:
            cases.append(
                (f"product {alpha} {beta}", lambda a=alpha, b=beta: _qsh_three_ways(a, b))
            )

    for alpha in words:
        cases.append((f"round trip {alpha}", lambda a=alpha: _round_trip(a)))
        cases.append(
            (
                f"renormalization {alpha}",
                lambda a=alpha: _expect(to_t_polynomial(RenElement.M(a)), renormalized_M(a)),
            )
        )

    for n in range(4):
        for gamma in enumerate_left_weak_compositions_up_to(2):
            cases.append(
                (
                    f"M0^{n}*M{gamma}",
                    lambda n=n, g=gamma: _expect(
                        to_m0_basis(m0_power_times(n, g)), LinComb({(n, g): 1})
                    ),
                )
            )

    def algebra_axioms() -> Optional[str]:
        small = enumerate_weak_compositions_up_to(max(max_size - 1, 1))
        for a, b in itertools.product(small, repeat=2):
            x, y = RenElement.M(a), RenElement.M(b)
            if x * y != y * x:
                return f"not commutative on {a}, {b}"
            if RenElement.one() * x != x:
                return f"not unital on {a}"
            for c in small:
                if total_size(a) + total_size(b) + total_size(c) > max_size:
                    continue
                z = RenElement.M(c)
                if (x * y) * z != x * (y * z):
                    return f"not associative on {a}, {b}, {c}"
        return None

    cases.append(("commutative, associative, unital", algebra_axioms))
    return cases


########################################################################################
# hopf


def _coassociative(w: Word) -> Optional[str]:
    left: Counter = Counter()
    right: Counter = Counter()
    for (a, b), c in deconcat_coproduct(w).items():
        for (a1, a2), c1 in deconcat_coproduct(a).items():
            left[(a1, a2, b)] += c * c1
        for (b1, b2), c2 in deconcat_coproduct(b).items():
            right[(a, b1, b2)] += c * c2
    return None if left == right else "not coassociative"


def _counit_laws(w: Word) -> Optional[str]:
    base = LinComb({w: 1})
    pairs = list(deconcat_coproduct(w).items())
    left = LinComb((b, c) for (a, b), c in pairs if not a)
    right = LinComb((a, c) for (a, b), c in pairs if not b)
    return None if left == base and right == base else "counit laws fail"


def _antipode_identity(w: Word) -> Optional[str]:
    expected = LinComb({(): 1}) if not w else LinComb()
    left: LinComb = LinComb()
    right: LinComb = LinComb()
    for i in range(len(w) + 1):
        head, tail = LinComb({w[:i]: 1}), LinComb({w[i:]: 1})
        left = left + lincomb_product(antipode_recursive(w[:i]), tail)
        right = right + lincomb_product(head, antipode_recursive(w[i:]))
    if left != expected or right != expected:
        return "antipode convolution identity fails"
    return None


def _ren_hopf(alpha: Tuple[int, ...]) -> Optional[str]:
    m = RenElement.M(alpha)
    if ren_antipode(m) != antipode_recursive(alpha):
        return "closed antipode differs from the recursive one"

    conv = RenElement.zero()
    for (a, b), c in ren_coproduct(m).items():
        conv = conv + (ren_antipode(RenElement.M(a)) * RenElement.M(b)).scale(c)
    if conv != RenElement.one().scale(ren_counit(m)):
        return "S * id != unit counit"
    return None


def _bialgebra(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Optional[str]:
    a, b = RenElement.M(alpha), RenElement.M(beta)
    if ren_coproduct(a * b) != tensor_product(ren_coproduct(a), ren_coproduct(b)):
        return "coproduct is not multiplicative"
    return None


def _word_bialgebra(u: Word, v: Word) -> Optional[str]:
    lhs: Counter = Counter()
    for w, c in qsh_product(u, v).items():
        for pair, c2 in deconcat_coproduct(w).items():
            lhs[pair] += c * c2
    rhs = tensor_product(deconcat_coproduct(u), deconcat_coproduct(v))
    return None if LinComb(lhs.items()) == rhs else "deconcatenation is not multiplicative"


def _composition_subquotient(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Optional[str]:
    a, b = RenElement.M(alpha), RenElement.M(beta)
    if 0 not in alpha and 0 not in beta:
        if not is_composition_supported(a * b):
            return "compositions are not closed under product"
        if not all(0 not in x and 0 not in y for x, y in ren_coproduct(a).support()):
            return "compositions are not closed under coproduct"

    projected = ren_coproduct(composition_projection(a))
    both = LinComb(
        ((x, y), c) for (x, y), c in ren_coproduct(a).items() if 0 not in x and 0 not in y
    )
    return None if projected == both else "projection is not a coalgebra map"


@_suite("hopf")
def hopf(max_size: int) -> List[Case]:
    cases: List[Case] = []
    max_length = min(max_size, 3)
    for k in range(max_length + 1):
        for w in itertools.product(range(3), repeat=k):
            cases += [
                (f"coassociative {w}", lambda w=w: _coassociative(w)),
                (f"counit {w}", lambda w=w: _counit_laws(w)),
                (f"antipode {w}", lambda w=w: _antipode_identity(w)),
                (f"renormalized hopf {w}", lambda w=w: _ren_hopf(w)),
            ]

    directed = _directed_words(max_length, 1, 2)
    for w in directed:
        cases += [
            (f"coassociative {w}", lambda w=w: _coassociative(w)),
            (f"counit {w}", lambda w=w: _counit_laws(w)),
            (f"antipode {w}", lambda w=w: _antipode_identity(w)),
        ]
    for u, v in itertools.product(directed, repeat=2):
        if len(u) + len(v) <= max_length:
            cases.append((f"bialgebra {u} {v}", lambda u=u, v=v: _word_bialgebra(u, v)))

    words = enumerate_weak_compositions_up_to(max_size)
    for alpha, beta in itertools.product(words, repeat=2):
        if total_size(alpha) + total_size(beta) <= max_size:
            cases += [
                (f"bialgebra {alpha} {beta}", lambda a=alpha, b=beta: _bialgebra(a, b)),
                (
                    f"subquotient {alpha} {beta}",
                    lambda a=alpha, b=beta: _composition_subquotient(a, b),
                ),
            ]
    return cases


########################################################################################
# rota-baxter


def random_laurent(rng: np.random.Generator, max_degree: int = 1) -> LaurentBlock[Fraction]:
    """An exact Laurent polynomial with small random rational coefficients in ℚ[t]."""
    low = int(rng.integers(-3, 1))
    high = int(rng.integers(0, 4))
    coeffs = {}
    for e in range(low, high + 1):
        num = rng.integers(-5, 6, size=max_degree + 1)
        den = rng.integers(1, 5, size=max_degree + 1)
        coeffs[e] = TPoly([Fraction(int(n), int(d)) for n, d in zip(num, den)])
    return LaurentBlock.exact(coeffs)


def _polar_rota_baxter(a: LaurentBlock, b: LaurentBlock) -> Optional[str]:
    P = polar_projection
    lhs = P(a) * P(b)
    rhs = P(a * P(b)) + P(P(a) * b) - P(a * b)
    return None if lhs.matches(rhs) else "weight -1 identity fails"


def _free_rota_baxter(a: RBElement, b: RBElement) -> Optional[str]:
    P = rb_operator
    lhs = P(a) * P(b)
    rhs = P(a * P(b)) + P(P(a) * b) + P(a * b)
    return None if lhs == rhs else "weight 1 identity fails"


@_suite("rota-baxter")
def rota_baxter(max_size: int, seed: int = 0, count: int = 100) -> List[Case]:
    rng = np.random.default_rng(seed)
    cases: List[Case] = []
    for i in range(count):
        a, b = random_laurent(rng), random_laurent(rng)
        cases.append((f"polar #{i}", lambda a=a, b=b: _polar_rota_baxter(a, b)))

    bound = min(max_size, 2)
    words = enumerate_weak_compositions_up_to(bound)
    keys = [(n, alpha) for n in range(bound + 1) for alpha in words]
    for (m, alpha), (n, beta) in itertools.product(keys, repeat=2):
        cases.append(
            (
                f"free x^{m}M{alpha} x^{n}M{beta}",
                lambda m=m, a=alpha, n=n, b=beta: _free_rota_baxter(
                    RBElement.term(m, a), RBElement.term(n, b)
                ),
            )
        )
    return cases


########################################################################################
# delta-independence


def _delta_independent(alpha: Tuple[int, ...]) -> Optional[str]:
    base = renormalized_M(alpha, 1)
    for delta in (2, 3):
        if renormalized_M(alpha, delta) != base:
            return f"delta={delta} differs from delta=1"
        if renormalized_M_shifted(alpha, delta) != base:
            return f"shifted direction with delta={delta} differs"
    return None


def _averaging(alpha: Tuple[int, ...], delta: int, beta: Tuple[int, ...]) -> Optional[str]:
    _, zeros = split_trailing_zeros(alpha)
    averaged = Z_symmetrized(alpha, beta).scale(Fraction(1, math.factorial(zeros)))
    return _expect(renormalized_M_shifted(alpha, delta), averaged)


@_suite("delta-independence")
def delta_independence(max_size: int) -> List[Case]:
    cases: List[Case] = []
    for alpha in enumerate_weak_compositions_up_to(max_size, 4):
        if alpha:
            cases.append((f"delta {alpha}", lambda a=alpha: _delta_independent(a)))

    for alpha in [(0,), (0, 0), (1, 0), (0, 1, 0)]:
        for delta in (1, 2):
            for beta in [(1, 2), (2, 3), (1, 1, 1)]:
                if len(beta) >= len(alpha):
                    beta = beta[: len(alpha)]
                    cases.append(
                        (
                            f"averaging {alpha} {delta} {beta}",
                            lambda a=alpha, d=delta, b=beta: _averaging(a, d, b),
                        )
                    )

    directions = [(1,), (2,), (3,), (5,), (8,)]
    for alpha in enumerate_left_weak_compositions_up_to(min(max_size, 3)):
        for zeros in (1, 2):
            if not alpha or total_size(alpha) + zeros > max_size + 1:
                continue
            for head in directions:
                beta = head * len(alpha)
                cases.append(
                    (
                        f"leading direction {alpha}+0^{zeros} {beta}",
                        lambda a=alpha, b=beta, z=zeros: None
                        if leading_direction_independent(a, b, z)
                        else "direction of the left weak part matters",
                    )
                )
        if alpha:
            for head in directions:
                beta = tuple(h + i for i, h in enumerate(head * len(alpha)))
                cases.append(
                    (
                        f"left weak {alpha} {beta}",
                        lambda a=alpha, b=beta: _expect(
                            Z(DirectedWeakComposition(a, b)), TPoly.constant(QSymElement.M(a))
                        ),
                    )
                )
    return cases


########################################################################################
# abf-consistency


def _abf_consistent(word: Word) -> Optional[str]:
    d = DirectedWeakComposition.from_word(word)
    recursive, closed = abf(d), abf_closed_form(d)
    if not recursive.phi_minus.series.matches(closed.phi_minus.series):
        return "phi_minus differs from the closed form"
    if not recursive.phi_plus.series.matches(closed.phi_plus.series):
        return "phi_plus differs from the closed form"
    if not check_factorization(d):
        return "phi_plus * phi_minus^-1 != phi"
    if not phi(d).series.matches(phi_factorized(d).series):
        return "phi differs from its factorized form"
    return None


def _phi_of(x: LinComb, zmax: int) -> LaurentBlock:
    acc = None
    for w, c in x.items():
        term = phi(DirectedWeakComposition.from_word(w), (-len(w), zmax)).series.scale(c)
        acc = term if acc is None else acc + term
    assert acc is not None
    return acc


def _multiplicative(u: Word, v: Word) -> Optional[str]:
    zmax = len(u) + len(v)
    du, dv = DirectedWeakComposition.from_word(u), DirectedWeakComposition.from_word(v)
    product = phi(du, (-len(u), zmax)).series * phi(dv, (-len(v), zmax)).series
    if not product.matches(_phi_of(qsh_product(u, v), zmax)):
        return "phi is not multiplicative"

    z = TPoly()
    for w, c in qsh_product(u, v).items():
        z = z + Z(DirectedWeakComposition.from_word(w)).scale(c)
    return _expect(Z(du) * Z(dv), z)


def _zero_block(lower: Tuple[int, ...]) -> Optional[str]:
    series = phi(DirectedWeakComposition((0,) * len(lower), lower)).series
    return None if series.matches(phi_zero_block(lower)) else "zero block closed form differs"


@_suite("abf-consistency")
def abf_consistency(max_size: int) -> List[Case]:
    max_length = min(max_size, 3)
    words = _directed_words(max_length, 2, 2)
    cases: List[Case] = [(f"abf {w}", lambda w=w: _abf_consistent(w)) for w in words]

    short = _directed_words(2, 2, 2)
    for u, v in itertools.product(short, repeat=2):
        if len(u) + len(v) <= min(max_size + 1, 4) and (len(u) + len(v) <= 2 or u <= v):
            cases.append((f"multiplicative {u} {v}", lambda u=u, v=v: _multiplicative(u, v)))

    for k in range(1, max_length + 1):
        for lower in itertools.product(range(1, 3), repeat=k):
            cases.append(
                (
                    f"zero block {lower}",
                    lambda lower=lower: _zero_block(lower),
                )
            )
    return cases


########################################################################################
# stirling


def _stirling_single(m: int) -> Optional[str]:
    for i in range(m + 1):
        c = count_filtered_pointed((m,), (i,))
        expected = math.factorial(i) * int(sympy_stirling(m + 1, i + 1))
        if c != expected or c != math.factorial(i) * stirling_number_2(m + 1, i + 1):
            return f"c_({m}),({i}) = {c}, expected {expected}"
    return None


def _stirling_basis(s: StirlingIndex, n_vars: int = 8) -> Optional[str]:
    if expand_stirling(s, n_vars) != expand_qsym(stirling_to_M(s), n_vars):
        return "monomial expansion differs from the defining series"
    return None


def _stirling_series(s: StirlingIndex, other: StirlingIndex, n_vars: int = 8) -> Optional[str]:
    product = expand_stirling(s, n_vars) * expand_stirling(other, n_vars)
    acc = None
    for index, c in stirling_qsh_product(s, other).items():
        term = expand_stirling(index, n_vars).scale(c)
        acc = term if acc is None else acc + term
    return None if acc == product else "quasi-shuffle of Stirling indices fails"


@_suite("stirling")
def stirling(max_size: int) -> List[Case]:
    cases: List[Case] = [(f"c_({m})", lambda m=m: _stirling_single(m)) for m in range(7)]

    for k in range(1, min(max_size, 3) + 1):
        for beta in itertools.product(range(4), repeat=k):
            for ns in itertools.combinations(range(1, 9), k):
                cases.append(
                    (
                        f"counting {beta} {ns}",
                        lambda b=beta, n=ns: None
                        if counting_identity_holds(b, n)
                        else "counting identity fails",
                    )
                )

    weight = min(max_size, 3)
    indices = enumerate_stirling_indices(weight)
    for s in indices:
        cases.append((f"basis {s.word}", lambda s=s: _stirling_basis(s)))
    for s, other in itertools.combinations_with_replacement(indices, 2):
        if not s.word or not other.word or s.weight + other.weight > weight:
            continue
        cases.append(
            (f"series {s.word} {other.word}", lambda s=s, o=other: _stirling_series(s, o))
        )
    return cases


########################################################################################
# bounds


def _bounds(word: Word) -> Optional[str]:
    d = DirectedWeakComposition.from_word(word)
    try:
        series = phi(d).series
    except BoundViolation as err:
        return str(err)
    if series.pole_order() > len(d) - d.j:
        return f"pole order {series.pole_order()} above {len(d) - d.j}"
    if d.j == len(d) and series.pole_order() != 0:
        return "left weak input has a pole"
    return None


@_suite("bounds")
def bounds(max_size: int) -> List[Case]:
    words = _directed_words(min(max_size, 3), 2, 2)
    return [(f"bounds {w}", lambda w=w: _bounds(w)) for w in words]


########################################################################################
# runner


def run_suite(name: str, max_size: int = 3, multiprocessing: bool = False) -> SuiteResult:
    """Run every check of a suite.

    Args:
        name: suite name, one of :func:`suite_names`
        max_size: size bound passed to the suite
        multiprocessing: run the checks in a process pool

    Raises:
        ValueError: if the suite does not exist
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite '{name}', expected one of {', '.join(SUITES)}")
    if max_size < 1:
        raise ValueError(f"invalid size bound {max_size}")

    def _run(case: Case) -> CaseResult:
        label, check = case
        try:
            detail = check()
        except (ArithmeticError, ValueError) as err:
            detail = f"{type(err).__name__}: {err}"
        return CaseResult(label, detail is None, detail or "")

    cases = SUITES[name](max_size)
    if not multiprocessing:
        results = [_run(case) for case in cases]
    else:
        with Pool() as p:
            results = list(p.imap(_run, cases))
    return SuiteResult(name, results)


def run_suites(names: Iterable[str], max_size: int = 3, multiprocessing: bool = False):
    return [run_suite(name, max_size, multiprocessing) for name in names]
