"""
Base benchmark formulas.

Every function takes a 1-D float array and returns a Python float. Formulas
follow the benchmark table they are registered under; where a table row's
printed formula differs from the function its name suggests, the printed
formula is implemented and the registry logs the discrepancy.
"""

from typing import Optional

import numpy as np

_TWO_PI = 2.0 * np.pi


def _indices(x: np.ndarray) -> np.ndarray:
    """1-based coordinate indices."""
    return np.arange(1, x.size + 1, dtype=float)


def ackley(x: np.ndarray) -> float:
    n = x.size
    term1 = -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x**2) / n))
    term2 = -np.exp(np.sum(np.cos(_TWO_PI * x)) / n)
    return float(term1 + term2 + 20.0 + np.e)


def alpine(x: np.ndarray) -> float:
    return float(np.sum(np.abs(x * np.sin(x) + 0.1 * x)))


def brown(x: np.ndarray) -> float:
    head, tail = x[:-1] ** 2, x[1:] ** 2
    return float(np.sum(head ** (tail + 1.0) + tail ** (head + 1.0)))


def bent_cigar(x: np.ndarray) -> float:
    return float(x[0] ** 2 + 1e6 * np.sum(x[1:] ** 2))


def discus_product(x: np.ndarray) -> float:
    """10⁶·x₁²·Σᵢ₌₂ xᵢ², the product form printed for the Dixon-Price row."""
    return float(1e6 * x[0] ** 2 * np.sum(x[1:] ** 2))


def discus(x: np.ndarray) -> float:
    return float(1e6 * x[0] ** 2 + np.sum(x[1:] ** 2))


def dixon_price(x: np.ndarray) -> float:
    i = _indices(x)[1:]
    return float((x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] ** 2 - x[:-1]) ** 2))


def dixon_price_optimum(dim: int) -> np.ndarray:
    i = np.arange(1, dim + 1, dtype=float)
    return np.power(2.0, -(np.power(2.0, i) - 2.0) / np.power(2.0, i))


def helical_valley(x: np.ndarray) -> float:
    """Fletcher-Powell helical valley on the first three coordinates."""
    x1, x2, x3 = float(x[0]), float(x[1]), float(x[2])
    if x1 == 0.0:
        angle = 0.0 if x2 == 0.0 else np.copysign(np.pi / 2.0, x2)
    else:
        angle = np.arctan(x2 / x1)
    if x1 < 0.0:
        angle = np.pi - angle
    theta = angle / _TWO_PI
    radius = np.sqrt(x1**2 + x2**2)
    return float(100.0 * ((x3 - 10.0 * theta) ** 2 + (radius - 1.0) ** 2) + x3**2)


def griewank(x: np.ndarray, divisor: float = 1400.0) -> float:
    return float(
        1.0 + np.sum(x**2) / divisor - np.prod(np.cos(x / np.sqrt(_indices(x))))
    )


def _penalty(x: np.ndarray, a: float, k: float, m: float) -> float:
    above = np.where(x > a, k * (x - a) ** m, 0.0)
    below = np.where(x < -a, k * (-x - a) ** m, 0.0)
    return float(np.sum(above + below))


def penalized_1(x: np.ndarray) -> float:
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * body + _penalty(x, 10.0, 100.0, 4.0))


def penalized_2(x: np.ndarray) -> float:
    body = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(_TWO_PI * x[-1]) ** 2)
    )
    return float(0.1 * body + _penalty(x, 5.0, 100.0, 4.0))


def weighted_quartic(x: np.ndarray) -> float:
    return float(np.sum(_indices(x) * x**4))


def hgbat(x: np.ndarray) -> float:
    n = x.size
    squares, total = np.sum(x**2), np.sum(x)
    return float(np.abs(squares**2 - total**2) ** 0.5 + (0.5 * squares + total) / n + 0.5)


def happycat(x: np.ndarray) -> float:
    n = x.size
    squares, total = np.sum(x**2), np.sum(x)
    return float(np.abs(squares - n) ** 0.25 + (0.5 * squares + total) / n + 0.5)


def elliptic(x: np.ndarray) -> float:
    n = x.size
    if n == 1:
        return float(x[0] ** 2)
    exponents = np.arange(n, dtype=float) / (n - 1)
    return float(np.sum(np.power(1e6, exponents) * x**2))


def inverted_cosine_mixture(x: np.ndarray) -> float:
    n = x.size
    return float(0.1 * n - (0.1 * np.sum(np.cos(5.0 * np.pi * x)) - np.sum(x**2)))


def levy3(x: np.ndarray) -> float:
    a, b = x[:-1], x[1:]
    numerator = np.sin(np.sqrt(100.0 * a**2 + b**2)) ** 2 - 0.5
    denominator = 1.0 + 0.001 * (a**2 - 2.0 * a * b + b**2)
    return float(np.sum(0.5 + numerator / denominator))


def levy(x: np.ndarray) -> float:
    return float(
        np.sum((x[:-1] - 1.0) ** 2 * np.sin(3.0 * np.pi * x[1:]) ** 2)
        + np.sin(3.0 * np.pi * x[0]) ** 2
        + np.abs(x[-1] - 1.0) * (1.0 + np.sin(3.0 * np.pi * x[-1]) ** 2)
    )


def levy_montalvo(x: np.ndarray) -> float:
    return float(
        0.1 * np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(_TWO_PI * x[-1]) ** 2)
    )


def quartic_noise(x: np.ndarray, rng: Optional[np.random.Generator] = None) -> float:
    """Σxᵢ⁴ plus uniform noise in [0, 1); the caller supplies the noise stream."""
    if rng is None:
        raise ValueError("quartic_noise needs a random stream for its noise term")
    return float(np.sum(x**4) + rng.random())


def shubert_product(x: np.ndarray) -> float:
    """Product of two five-term cosine sums, both in the first coordinate."""
    j = np.arange(1, 6, dtype=float)
    x1 = x[0]
    return float(np.sum(j * np.cos((j - 1.0) * x1 + j)) * np.sum(j * np.cos((j + 1.0) * x1 + j)))


def perm(x: np.ndarray, beta: float = 0.5) -> float:
    i = _indices(x)
    total = 0.0
    for k in range(1, x.size + 1):
        total += float(np.sum((i**k + beta) * ((x / i) ** k - 1.0))) ** 2
    return total


def powell(x: np.ndarray) -> float:
    """Powell's four-variable form applied to consecutive blocks of four coordinates."""
    blocks = x[: (x.size // 4) * 4].reshape(-1, 4)
    a, b, c, d = blocks[:, 0], blocks[:, 1], blocks[:, 2], blocks[:, 3]
    return float(
        np.sum((a + 10.0 * b) ** 2 + 5.0 * (c + d) ** 2 + (b - 2.0 * c) ** 4 + 10.0 * (a - d) ** 4)
    )


def rastrigin(x: np.ndarray) -> float:
    return float(np.sum(x**2 - 10.0 * np.cos(_TWO_PI * x) + 10.0))


def rotated_hyperellipsoid(x: np.ndarray) -> float:
    return float(np.sum(np.cumsum(x**2)))


def rosenbrock(x: np.ndarray) -> float:
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


SCHWEFEL_OPTIMUM = 420.9687463


def schwefel_226(x: np.ndarray) -> float:
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def schwefel_12(x: np.ndarray) -> float:
    return float(np.sum(np.cumsum(x) ** 2))


def schwefel_222(x: np.ndarray) -> float:
    magnitudes = np.abs(x)
    return float(np.sum(magnitudes) + np.prod(magnitudes))


def schwefel_221(x: np.ndarray) -> float:
    return float(np.max(np.abs(x)))


def sphere(x: np.ndarray) -> float:
    return float(np.sum(x**2))


def step(x: np.ndarray) -> float:
    return float(np.sum(np.floor(x + 0.5) ** 2))


def sum_squares(x: np.ndarray) -> float:
    return float(np.sum(_indices(x) * x**2))


def sum_power(x: np.ndarray) -> float:
    return float(np.sum(np.abs(x) ** 2))


def sum_of_different_powers(x: np.ndarray) -> float:
    return float(np.sum(np.abs(x) ** (_indices(x) + 1.0)))


def zakharov(x: np.ndarray) -> float:
    weighted = np.sum(0.5 * _indices(x) * x)
    return float(np.sum(x**2) + weighted**2 + weighted**4)


def wavy(x: np.ndarray) -> float:
    return float(np.mean(1.0 - np.cos(10.0 * x) * np.exp(-0.5 * x**2)))


def salomon(x: np.ndarray) -> float:
    radius = np.sqrt(np.sum(x**2))
    return float(1.0 - np.cos(_TWO_PI * radius) + 0.1 * radius)


_WEIERSTRASS_K = np.arange(21, dtype=float)
_WEIERSTRASS_A = 0.5**_WEIERSTRASS_K
_WEIERSTRASS_B = 3.0**_WEIERSTRASS_K


def _weierstrass_terms(values: np.ndarray) -> np.ndarray:
    return np.sum(_WEIERSTRASS_A * np.cos(_TWO_PI * _WEIERSTRASS_B * values[:, None]), axis=1)


def weierstrass(x: np.ndarray) -> float:
    """Weierstrass with the constant offset that puts its minimum at 0."""
    offset = _weierstrass_terms(np.array([0.5]))[0]
    return float(np.sum(_weierstrass_terms(x + 0.5)) - x.size * offset)


def katsuura(x: np.ndarray) -> float:
    n = x.size
    powers = 2.0 ** np.arange(1, 33, dtype=float)
    scaled = powers * x[:, None]
    inner = np.sum(np.abs(scaled - np.round(scaled)) / powers, axis=1)
    product = np.prod((1.0 + _indices(x) * inner) ** (10.0 / n**1.2))
    return float(10.0 / n**2 * product - 10.0 / n**2)
