# golden values of small renormalized functions, as {index: [c_0, c_1, ...]} by t-degree
from fractions import Fraction

H = Fraction(1, 2)

RENORMALIZED = {
    (): {(): [1]},
    (0,): {(): [-H, -1]},
    (0, 0): {(): [Fraction(3, 8), 1, H]},
    (0, 0, 0): {(): [Fraction(-5, 16), Fraction(-23, 24), Fraction(-3, 4), Fraction(-1, 6)]},
    (1, 0): {(1,): [-3 * H, -1], (0, 1): [-1]},
    (2, 0): {(2,): [-3 * H, -1], (0, 2): [-1]},
    (0, 1, 0): {(0, 1): [-5 * H, -1], (0, 0, 1): [-2]},
    (1, 0, 0): {(1,): [Fraction(15, 8), 2, H], (0, 1): [5 * H, 1], (0, 0, 1): [1]},
    (3, 0, 0): {(3,): [Fraction(15, 8), 2, H], (0, 3): [5 * H, 1], (0, 0, 3): [1]},
    (2, 1): {(2, 1): [1]},
    (0, 2): {(0, 2): [1]},
}

# coefficients of z^-1 .. z^2 of phi((0); (r)), as functions of r
PHI_SINGLE_ZERO = {
    -1: lambda r: [Fraction(-1, r)],
    0: lambda r: [-H, -1],
    1: lambda r: [Fraction(-r, 12), -H * r, -H * r],
    2: lambda r: [0, Fraction(-r * r, 12), Fraction(-r * r, 4), Fraction(-r * r, 6)],
}

# Stirling functions in the monomial basis, s = 1
STIRLING = {
    ((1,), (0,)): {(1,): 1},
    ((1,), (1,)): {(0, 1): 1, (1,): 1},
    ((1,), (2,)): {(1,): 1, (0, 1): 3, (0, 0, 1): 2},
    ((0, 1), (0, 1)): {(0, 1): 2, (0, 0, 1): 2},
    ((1, 2), (1, 1)): {
        (0, 1, 0, 2): 1,
        (0, 0, 1, 2): 2,
        (0, 1, 2): 4,
        (1, 2): 2,
        (1, 0, 2): 1,
    },
}

BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    3: Fraction(0),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    12: Fraction(-691, 2730),
}
