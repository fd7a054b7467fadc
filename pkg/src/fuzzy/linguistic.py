"""
Linguistic variables used by experts to rate uncertainty components
"""

from enum import Enum
from typing import Iterable, Sequence

from src.fuzzy.tfn import TFN, tfn_scale, tfn_sum
from src.utils.errors import FuzzyError


class LinguisticVariable(str, Enum):
    VL = "VL"
    L = "L"
    FL = "FL"
    M = "M"
    FH = "FH"
    H = "H"
    VH = "VH"

    @classmethod
    def parse(cls, token) -> "LinguisticVariable":
        if isinstance(token, cls):
            return token
        try:
            return cls(str(token).strip().upper())
        except ValueError:
            raise FuzzyError(
                f"Unknown linguistic variable {token!r}; expected one of "
                + " ".join(v.value for v in cls)
            ) from None


LINGUISTIC_SCALE = {
    LinguisticVariable.VL: TFN(0.0, 0.0, 0.1),
    LinguisticVariable.L: TFN(0.0, 0.1, 0.3),
    LinguisticVariable.FL: TFN(0.1, 0.3, 0.5),
    LinguisticVariable.M: TFN(0.3, 0.5, 0.7),
    LinguisticVariable.FH: TFN(0.5, 0.7, 0.9),
    LinguisticVariable.H: TFN(0.7, 0.9, 1.0),
    LinguisticVariable.VH: TFN(0.9, 1.0, 1.0),
}


def linguistic_to_tfn(variable) -> TFN:
    return LINGUISTIC_SCALE[LinguisticVariable.parse(variable)]


def parse_ratings(tokens: Iterable) -> Sequence[LinguisticVariable]:
    return [LinguisticVariable.parse(token) for token in tokens]


def average_fuzzy_number(ratings: Sequence) -> TFN:
    """
    Unweighted mean of the experts' fuzzy numbers

    Args:
        ratings: One linguistic variable (or token) per expert

    Returns:
        (A_1 + ... + A_h) / h
    """
    ratings = list(ratings)
    if not ratings:
        raise FuzzyError("At least one expert rating is required")
    return tfn_scale(tfn_sum(linguistic_to_tfn(r) for r in ratings), len(ratings))
