"""
Text rendering of resolution tables, traces and reliability reports
"""

from typing import Dict, Optional, Sequence

import pandas as pd

from src.connectivity.plsa import LayerTrace, Verdict
from src.fuzzy.defuzzify import DefuzzificationResult
from src.fuzzy.tfn import format_alpha_cut
from src.network.model import Mode, StateDistribution
from src.reliability.exact import ReliabilityReport, coordinate_factors
from src.reliability.monte_carlo import McEstimate


def _fixed(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _set(nodes: Sequence[int]) -> str:
    return "{" + ", ".join(str(node) for node in nodes) + "}"


def resolution_table(results: Dict[int, DefuzzificationResult],
                     ratings: Dict[int, Sequence[str]], precision: int = 6) -> pd.DataFrame:
    """One row per uncertainty component: ratings, AFN, alpha-cut, FPS_L, FPS_R, FPS, k, FFR, R"""
    rows = []
    for component, result in results.items():
        rows.append({
            'component': component,
            'ratings': ", ".join(ratings[component]),
            'AFN': "(" + ", ".join(f"{v:.{precision}g}" for v in result.afn.astuple()) + ")",
            'alpha-cut': format_alpha_cut(result.afn, precision),
            'FPS_L': _fixed(result.fps_left, precision),
            'FPS_R': _fixed(result.fps_right, precision),
            'FPS': _fixed(result.fps, precision),
            'k': "-" if result.k is None else _fixed(result.k, precision),
            'FFR': _fixed(result.ffr, precision),
            'R': _fixed(result.reliability, precision),
        })
    return pd.DataFrame(rows)


def distribution_table(dist: StateDistribution, resolved: Sequence[int],
                       precision: int = 6) -> pd.DataFrame:
    """Crisp state distribution after preprocessing"""
    return pd.DataFrame([
        {
            'component': component,
            'D': _fixed(p, precision),
            'source': 'fuzzy' if component in resolved else 'crisp',
        }
        for component, p in dist.entries.items()
    ])


def trace_table(report: ReliabilityReport, dist: StateDistribution, mode: Mode,
                precision: int = 6) -> pd.DataFrame:
    """One row per enumerated vector with Pr(x_k) columns, Pr(X) for connected vectors and the verdict"""
    components = list(dist.entries)
    prefix = 'a' if mode is Mode.AOA else 'x'
    rows = []
    for row in report.trace or ():
        entry = {'i': row.index, 'X': str(row.vector)}
        for component, factor in zip(components, coordinate_factors(row.vector, dist)):
            entry[f"Pr({prefix}{component})"] = f"{factor:.{precision}g}"
        entry['Pr(X)'] = f"{row.probability:.{precision}g}" if row.verdict is Verdict.CONNECTED else ""
        entry['verdict'] = row.verdict.value
        rows.append(entry)
    return pd.DataFrame(rows)


def layer_table(trace: LayerTrace) -> pd.DataFrame:
    """Layer-by-layer progress of the layered search: i, Q_i, Q_{i+1}, V*, remark"""
    connected = trace.verdict is Verdict.CONNECTED
    # a connected search ends on the row whose next layer is {n}
    last = len(trace.layers) - (2 if connected else 1)
    rows = []
    visited = set(trace.layers[0])
    for i in range(last + 1):
        following = trace.layers[i + 1] if i + 1 < len(trace.layers) else ()
        if i < last:
            visited |= set(following)
        rows.append({
            'i': i,
            'Q_i': _set(trace.layers[i]),
            'Q_i+1': _set(following),
            'V*': _set(sorted(visited)) if i < last else "",
            'remark': ("X is connected" if connected else "X is disconnected") if i == last else "",
        })
    return pd.DataFrame(rows)


def _section(title: str, frame: pd.DataFrame) -> str:
    return f"{title}\n{frame.to_string(index=False)}\n"


def render_report(report: ReliabilityReport, dist: StateDistribution, mode: Mode,
                  results: Optional[Dict[int, DefuzzificationResult]] = None,
                  ratings: Optional[Dict[int, Sequence[str]]] = None,
                  estimate: Optional[McEstimate] = None,
                  layers: Optional[Sequence] = None,
                  precision: int = 6) -> str:
    """
    Render the full text report

    Args:
        report: Exact reliability report
        dist: Crisp state distribution used for the enumeration
        mode: Network mode
        results: Resolved uncertainty components, if any
        ratings: Expert ratings of those components
        estimate: Monte Carlo estimate, if requested
        layers: (vector, LayerTrace) to explain one vector, if requested
        precision: Decimals for table columns; the final line always has six

    Returns:
        Report text ending with the line 'R = <value>'
    """
    sections = []
    if results:
        sections.append(_section("Uncertainty components", resolution_table(results, ratings, precision)))
    if dist.entries:
        sections.append(_section("State distribution", distribution_table(dist, list(results or ()), precision)))

    if layers is not None:
        vector, trace = layers
        sections.append(_section(f"Layered search for X = {vector}", layer_table(trace)))

    if report.trace is not None:
        sections.append(_section("Vectors", trace_table(report, dist, mode, precision)))

    summary = [
        "Summary",
        f"mode: {mode.value.upper()}",
        f"total vectors: {report.total_vectors}",
        f"connected vectors: {report.connected_vectors}",
        f"disconnected vectors: {report.disconnected_vectors}",
    ]
    if estimate is not None:
        summary.append(
            f"monte carlo: estimate = {_fixed(estimate.estimate, precision)}, "
            f"std_error = {estimate.std_error:.{precision}g}, "
            f"samples = {estimate.samples}, seed = {estimate.seed}"
        )
    sections.append("\n".join(summary) + "\n")

    return "\n".join(sections) + f"\nR = {report.reliability:.6f}\n"
