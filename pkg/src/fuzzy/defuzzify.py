"""
Defuzzification of average fuzzy numbers into crisp component reliabilities

The fuzzy possibility score (FPS) ranks an average fuzzy number against the
fuzzy maximizing set f_max(x) = x and the fuzzy minimizing set
f_min(x) = 1 - x on [0, 1]. The score is converted to a fuzzy failure rate
FFR = 10^-k, which is taken as the component's unreliability.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from src.fuzzy.linguistic import average_fuzzy_number, parse_ratings
from src.fuzzy.tfn import TFN
from src.network.model import ExpertRatingSet
from src.utils.errors import FuzzyError

logger = logging.getLogger(__name__)

# k = ((1 - FPS) / FPS)^(1/3) * FFR_SCALE
FFR_SCALE = 2.301


@dataclass(frozen=True)
class DefuzzificationResult:
    """Every intermediate value of the uncertainty-to-crisp conversion"""

    afn: TFN
    fps_left: float
    fps_right: float
    fps: float
    k: Optional[float]
    ffr: float
    reliability: float


def _require_unit_support(value: TFN) -> None:
    if not value.within_unit_interval():
        raise FuzzyError(f"Fuzzy number {value.astuple()} is not contained in [0, 1]")


def fps_right(value: TFN) -> float:
    """
    Height of the intersection of A's right leg with f_max

    Solves alpha = alpha (b - c) + c.
    """
    _require_unit_support(value)
    return value.c / (1.0 + value.c - value.b)


def fps_left(value: TFN) -> float:
    """
    Height of the intersection of A's left leg with f_min

    Solves 1 - alpha = alpha (b - a) + a.
    """
    _require_unit_support(value)
    return (1.0 - value.a) / (1.0 + value.b - value.a)


def combine_scores(right: float, left: float) -> float:
    """FPS = (FPS_R + 1 - FPS_L) / 2"""
    return abs(right + 1.0 - left) / 2.0


def fps(value: TFN) -> float:
    return combine_scores(fps_right(value), fps_left(value))


def fps_to_ffr(score: float) -> Tuple[Optional[float], float]:
    """
    Convert a fuzzy possibility score into a fuzzy failure rate

    Args:
        score: FPS in [0, 1]

    Returns:
        (k, ffr); k is None when the score is 0, in which case ffr is 0
    """
    if not 0.0 <= score <= 1.0:
        raise FuzzyError(f"Fuzzy possibility score must lie in [0, 1], got {score}")
    if score == 0.0:
        return None, 0.0
    k = math.pow(abs((1.0 - score) / score), 1.0 / 3.0) * FFR_SCALE
    return k, math.pow(10.0, -k)


def resolve_uncertain_component(ratings: Sequence) -> DefuzzificationResult:
    """
    Turn one component's expert ratings into a crisp reliability

    Args:
        ratings: Linguistic variables (or their tokens), one per expert

    Returns:
        DefuzzificationResult with reliability = 1 - FFR
    """
    afn = average_fuzzy_number(parse_ratings(ratings))
    left = fps_left(afn)
    right = fps_right(afn)
    score = combine_scores(right, left)
    k, ffr = fps_to_ffr(score)
    return DefuzzificationResult(
        afn=afn,
        fps_left=left,
        fps_right=right,
        fps=score,
        k=k,
        ffr=ffr,
        reliability=1.0 - ffr,
    )


def resolve_rating_set(ratings: ExpertRatingSet) -> Dict[int, DefuzzificationResult]:
    """Resolve every rated component, in ascending component order"""
    results = {}
    for component, tokens in ratings.entries.items():
        result = resolve_uncertain_component(tokens)
        logger.debug(
            f"Component {component}: AFN={result.afn.astuple()} FPS={result.fps:.6f} "
            f"FFR={result.ffr:.6f} R={result.reliability:.6f}"
        )
        results[component] = result
    logger.info(f"Resolved {len(results)} uncertainty components from {ratings.experts} experts")
    return results
