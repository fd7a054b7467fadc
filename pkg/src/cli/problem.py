"""
Line-oriented problem file: topology, crisp reliabilities, expert ratings

    mode aon|aoa
    nodes <n>
    arc <i> <j>
    reliability <component> = <p>
    ratings <component> = <tok> [<tok> ...]

Keywords are case-insensitive and '#' starts a comment. A component is a
node id in AON mode and an arc ordinal (1-based, file order) in AOA mode.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.fuzzy.linguistic import LinguisticVariable
from src.network.model import (
    ExpertRatingSet,
    Mode,
    Network,
    StateDistribution,
    build_network,
)
from src.utils.errors import FuzzyError, NetworkError, ProblemSemanticError, ProblemSyntaxError, StateError


@dataclass(frozen=True)
class ProblemFile:
    mode: Mode
    n: int
    arcs: Tuple[Tuple[int, int], ...]
    crisp: Tuple[Tuple[int, float], ...]
    uncertain: Tuple[Tuple[int, Tuple[str, ...]], ...]

    def network(self) -> Network:
        return build_network(self.n, self.arcs, self.mode)

    def crisp_distribution(self) -> Dict[int, float]:
        return dict(self.crisp)

    def rating_set(self) -> ExpertRatingSet:
        return ExpertRatingSet(dict(self.uncertain))

    def distribution(self, resolved: Dict[int, float]) -> StateDistribution:
        """Crisp entries plus the reliabilities resolved from expert ratings"""
        entries = self.crisp_distribution()
        entries.update(resolved)
        return StateDistribution(entries)


def _integer(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ProblemSyntaxError(line, f"{what} must be an integer, got {token!r}") from None


def _assignment(words: List[str], line: int, keyword: str) -> Tuple[int, List[str]]:
    # "<keyword> <component> = <values...>", tolerating "3=0.9" spacing
    rest = " ".join(words[1:]).replace("=", " = ").split()
    if len(rest) < 3 or rest[1] != "=":
        raise ProblemSyntaxError(line, f"expected '{keyword} <component> = <value>'")
    return _integer(rest[0], line, "component"), rest[2:]


def parse_problem(text: str) -> ProblemFile:
    """
    Parse and validate a problem file

    Args:
        text: File contents

    Returns:
        ProblemFile

    Raises:
        ProblemSyntaxError: malformed line (carries the line number)
        ProblemSemanticError: coverage gaps, duplicates, unknown tokens
    """
    mode: Optional[Mode] = None
    n: Optional[int] = None
    arcs: List[Tuple[int, int]] = []
    crisp: List[Tuple[int, float]] = []
    uncertain: List[Tuple[int, Tuple[str, ...]]] = []
    assigned: Dict[int, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        keyword = words[0].lower()

        if keyword == "mode":
            if len(words) != 2:
                raise ProblemSyntaxError(number, "expected 'mode aon|aoa'")
            if mode is not None:
                raise ProblemSyntaxError(number, "mode given twice")
            try:
                mode = Mode.parse(words[1])
            except NetworkError as exc:
                raise ProblemSyntaxError(number, str(exc)) from None
        elif keyword == "nodes":
            if len(words) != 2:
                raise ProblemSyntaxError(number, "expected 'nodes <n>'")
            if n is not None:
                raise ProblemSyntaxError(number, "nodes given twice")
            n = _integer(words[1], number, "node count")
        elif keyword == "arc":
            if len(words) != 3:
                raise ProblemSyntaxError(number, "expected 'arc <i> <j>'")
            arcs.append((_integer(words[1], number, "arc endpoint"),
                         _integer(words[2], number, "arc endpoint")))
        elif keyword == "reliability":
            component, values = _assignment(words, number, keyword)
            if len(values) != 1:
                raise ProblemSyntaxError(number, "expected a single probability")
            try:
                p = float(values[0])
            except ValueError:
                raise ProblemSyntaxError(number, f"probability must be a number, got {values[0]!r}") from None
            if not 0.0 <= p <= 1.0:
                raise ProblemSemanticError(f"probability {p} outside [0, 1]", component)
            if component in assigned:
                raise ProblemSemanticError(f"already defined on line {assigned[component]}", component)
            assigned[component] = number
            crisp.append((component, p))
        elif keyword == "ratings":
            component, tokens = _assignment(words, number, keyword)
            try:
                ratings = tuple(LinguisticVariable.parse(token).value for token in tokens)
            except FuzzyError as exc:
                raise ProblemSemanticError(str(exc), component) from None
            if component in assigned:
                raise ProblemSemanticError(f"already defined on line {assigned[component]}", component)
            assigned[component] = number
            uncertain.append((component, ratings))
        else:
            raise ProblemSyntaxError(number, f"unknown directive {words[0]!r}")

    if mode is None:
        raise ProblemSemanticError("missing 'mode' directive")
    if n is None:
        raise ProblemSemanticError("missing 'nodes' directive")

    problem = ProblemFile(
        mode=mode,
        n=n,
        arcs=tuple(arcs),
        crisp=tuple(crisp),
        uncertain=tuple(uncertain),
    )
    validate_problem(problem)
    return problem


def validate_problem(problem: ProblemFile) -> Network:
    """Check topology and that every failure-prone component is covered exactly once"""
    try:
        network = problem.network()
    except NetworkError as exc:
        raise ProblemSemanticError(str(exc)) from None

    valid = set(network.components)
    defined = [component for component, _ in problem.crisp]
    defined += [component for component, _ in problem.uncertain]
    for component in defined:
        if component not in valid:
            if network.mode is Mode.AON and component in (1, network.n):
                raise ProblemSemanticError("terminal nodes are perfectly reliable and take no entry", component)
            what = "arc ordinal" if network.mode is Mode.AOA else "interior node"
            raise ProblemSemanticError(f"not a valid {what}", component)
    for component in sorted(valid - set(defined)):
        raise ProblemSemanticError("no reliability or ratings given", component)

    try:
        problem.rating_set().validate_for(network)
    except StateError as exc:
        raise ProblemSemanticError(str(exc)) from None
    return network


def render_problem(problem: ProblemFile) -> str:
    """Canonical text of a problem; parse_problem(render_problem(p)) == p"""
    lines = [
        f"mode {problem.mode.value}",
        f"nodes {problem.n}",
    ]
    lines += [f"arc {i} {j}" for i, j in problem.arcs]
    lines += [f"reliability {component} = {p!r}" for component, p in problem.crisp]
    lines += [
        f"ratings {component} = {' '.join(tokens)}"
        for component, tokens in problem.uncertain
    ]
    return "\n".join(lines) + "\n"
