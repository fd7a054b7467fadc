"""
Triangular fuzzy numbers and their arithmetic
"""

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple

from src.utils.errors import FuzzyError


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """A = (a, b, c): support [a, c], membership peak at b"""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not self.a <= self.b <= self.c:
            raise FuzzyError(f"Triangular fuzzy number needs a <= b <= c, got {self.astuple()}")

    def astuple(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def within_unit_interval(self) -> bool:
        return 0.0 <= self.a and self.c <= 1.0

    def __add__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        return tfn_add(self, other)

    def __sub__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        return tfn_sub(self, other)

    def __mul__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        return tfn_mul(self, other)

    def __truediv__(self, other) -> "TriangularFuzzyNumber":
        if isinstance(other, TriangularFuzzyNumber):
            return tfn_div(self, other)
        return tfn_scale(self, other)


TFN = TriangularFuzzyNumber


@dataclass(frozen=True)
class AlphaCutInterval:
    """[lb, ub] of the values whose membership is at least alpha"""

    alpha: float
    lb: float
    ub: float


def tfn_add(first: TFN, second: TFN) -> TFN:
    return TFN(first.a + second.a, first.b + second.b, first.c + second.c)


def tfn_sub(first: TFN, second: TFN) -> TFN:
    return TFN(first.a - second.c, first.b - second.b, first.c - second.a)


def tfn_mul(first: TFN, second: TFN) -> TFN:
    """Componentwise product; defined for non-negative supports only"""
    if first.a < 0 or second.a < 0:
        raise FuzzyError("Fuzzy multiplication requires non-negative operands")
    return TFN(first.a * second.a, first.b * second.b, first.c * second.c)


def tfn_div(first: TFN, second: TFN) -> TFN:
    """(a1/c2, b1/b2, c1/a2); the divisor support must be strictly positive"""
    if second.a <= 0:
        raise FuzzyError("Fuzzy division requires a divisor with positive support")
    if first.a < 0:
        raise FuzzyError("Fuzzy division requires a non-negative dividend")
    return TFN(first.a / second.c, first.b / second.b, first.c / second.a)


def tfn_scale(value: TFN, divisor: float) -> TFN:
    """A / s for a positive real s"""
    if divisor <= 0:
        raise FuzzyError(f"Scale divisor must be positive, got {divisor}")
    return TFN(value.a / divisor, value.b / divisor, value.c / divisor)


def tfn_sum(values: Iterable[TFN]) -> TFN:
    """Fuzzy sum of a non-empty sequence"""
    values = list(values)
    if not values:
        raise FuzzyError("Cannot sum an empty sequence of fuzzy numbers")
    return reduce(tfn_add, values)


def alpha_cut(value: TFN, alpha: float) -> AlphaCutInterval:
    """A_alpha = [alpha(b - a) + a, alpha(b - c) + c]"""
    if not 0.0 <= alpha <= 1.0:
        raise FuzzyError(f"alpha must lie in [0, 1], got {alpha}")
    return AlphaCutInterval(
        alpha=alpha,
        lb=alpha * (value.b - value.a) + value.a,
        ub=alpha * (value.b - value.c) + value.c,
    )


def alpha_cut_coefficients(value: TFN) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """
    The alpha-cut bounds as linear functions of alpha

    Returns:
        ((lb_intercept, lb_slope), (ub_intercept, ub_slope)) so that
        lb = a + (b - a) alpha and ub = c - (c - b) alpha
    """
    return (value.a, value.b - value.a), (value.c, value.b - value.c)


def format_alpha_cut(value: TFN, digits: int = 6) -> str:
    """Symbolic alpha-cut, e.g. [0.0666667α, 0.233333 - 0.166667α]"""

    def linear(intercept: float, slope: float) -> str:
        terms = []
        if round(intercept, digits) != 0:
            terms.append(f"{intercept:.{digits}g}")
        if round(slope, digits) != 0:
            magnitude = f"{abs(slope):.{digits}g}α"
            if not terms:
                terms.append(magnitude if slope > 0 else f"-{magnitude}")
            else:
                terms.append(("+ " if slope > 0 else "- ") + magnitude)
        return " ".join(terms) or "0"

    (lb0, lb1), (ub0, ub1) = alpha_cut_coefficients(value)
    return f"[{linear(lb0, lb1)}, {linear(ub0, ub1)}]"
