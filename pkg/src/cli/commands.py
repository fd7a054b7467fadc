"""
relcalc command line: problem file in, reliability report out
"""

import logging
import sys
from contextlib import suppress
from dataclasses import dataclass, field, replace
from typing import Dict, Optional, Tuple

import click
import yaml

from src.cli.problem import ProblemFile, parse_problem
from src.cli.report import render_report
from src.connectivity.plsa import LayerTrace, plsa
from src.fuzzy.defuzzify import DefuzzificationResult, resolve_rating_set
from src.network.model import Network, StateDistribution, StateVector
from src.reliability.exact import DEFAULT_MAX_BITS, ReliabilityReport, exact_reliability
from src.reliability.monte_carlo import DEFAULT_CHUNK_SIZE, McEstimate, mc_reliability
from src.utils import __version__
from src.utils.config import get_config_value, load_config
from src.utils.errors import RelcalcError, StateError
from src.utils.logger import RunLogger, setup_logging
from src.utils.metrics import RunMetrics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOptions:
    trace: bool = False
    samples: int = 0
    seed: int = 0
    workers: int = 1
    max_bits: int = DEFAULT_MAX_BITS
    chunk_size: int = DEFAULT_CHUNK_SIZE
    precision: int = 6
    vector: Optional[Tuple[int, ...]] = None


@dataclass
class RunResult:
    network: Network
    distribution: StateDistribution
    report: ReliabilityReport
    resolution: Dict[int, DefuzzificationResult] = field(default_factory=dict)
    estimate: Optional[McEstimate] = None
    layers: Optional[Tuple[StateVector, LayerTrace]] = None

    def summary(self) -> Dict:
        """JSON-friendly view of the results"""
        return {
            'mode': self.network.mode.value,
            'nodes': self.network.n,
            'arcs': self.network.m,
            'reliability': self.report.reliability,
            'total_vectors': self.report.total_vectors,
            'connected_vectors': self.report.connected_vectors,
            'distribution': {str(k): p for k, p in self.distribution.entries.items()},
            'resolution': {
                str(component): {
                    'afn': list(result.afn.astuple()),
                    'fps_left': result.fps_left,
                    'fps_right': result.fps_right,
                    'fps': result.fps,
                    'k': result.k,
                    'ffr': result.ffr,
                    'reliability': result.reliability,
                }
                for component, result in self.resolution.items()
            },
            'monte_carlo': None if self.estimate is None else {
                'estimate': self.estimate.estimate,
                'std_error': self.estimate.std_error,
                'samples': self.estimate.samples,
                'seed': self.estimate.seed,
            },
        }


def parse_vector(text: str, network: Network) -> StateVector:
    """Accept '1,1,0,1,1,0', '1 1 0 1 1 0' or '110110'"""
    cleaned = text.replace(",", " ").split()
    digits = cleaned if len(cleaned) > 1 else list(text.strip())
    try:
        bits = tuple(int(d) for d in digits)
    except ValueError:
        raise StateError(f"Vector must contain only 0 and 1, got {text!r}") from None
    if len(bits) != network.vector_length:
        raise StateError(f"Vector {text!r} needs {network.vector_length} coordinates")
    return StateVector(network.mode, bits)


def evaluate(problem: ProblemFile, options: RunOptions, run_logger: Optional[RunLogger] = None,
             metrics: Optional[RunMetrics] = None) -> RunResult:
    """
    Resolve uncertainty components, then compute exact (and optionally sampled) reliability
    """
    metrics = metrics or RunMetrics()
    network = problem.network()

    with metrics.stage('preprocess'):
        resolution = resolve_rating_set(problem.rating_set())
    if run_logger:
        run_logger.log_event('preprocess', {
            str(component): result.reliability for component, result in resolution.items()
        })
    dist = problem.distribution({c: r.reliability for c, r in resolution.items()})

    with metrics.stage('exact'):
        report = exact_reliability(
            network, dist, trace=options.trace, max_bits=options.max_bits, workers=options.workers
        )
    metrics.record_exact(report)
    if run_logger:
        run_logger.log_event('enumerate', {
            'total_vectors': report.total_vectors,
            'connected_vectors': report.connected_vectors,
            'reliability': report.reliability,
        })

    estimate = None
    if options.samples:
        with metrics.stage('monte_carlo'):
            estimate = mc_reliability(
                network, dist, options.samples, options.seed,
                workers=options.workers, chunk_size=options.chunk_size
            )
        metrics.record_monte_carlo(estimate)
        if run_logger:
            run_logger.log_event('monte_carlo', {
                'estimate': estimate.estimate,
                'std_error': estimate.std_error,
                'samples': estimate.samples,
                'seed': estimate.seed,
            })

    layers = None
    if options.vector is not None:
        layers = explain_vector(problem, options.vector)

    return RunResult(network, dist, report, resolution, estimate, layers)


def explain_vector(problem: ProblemFile, bits: Tuple[int, ...]) -> Tuple[StateVector, LayerTrace]:
    """Layered search trace for one vector of the problem's network"""
    network = problem.network()
    vector = StateVector(network.mode, tuple(bits))
    _, trace = plsa(network, vector)
    return vector, trace


def run(problem: ProblemFile, options: RunOptions, run_logger: Optional[RunLogger] = None,
        metrics: Optional[RunMetrics] = None) -> str:
    """Evaluate a problem and render the text report"""
    return render_result(evaluate(problem, options, run_logger, metrics), problem, options)


def render_result(result: RunResult, problem: ProblemFile, options: RunOptions) -> str:
    return render_report(
        result.report,
        result.distribution,
        result.network.mode,
        results=result.resolution,
        ratings=dict(problem.uncertain),
        estimate=result.estimate,
        layers=result.layers,
        precision=options.precision,
    )


def _fail(message: str, run_logger: Optional[RunLogger] = None):
    if run_logger is not None:
        run_logger.log_event('error', {'error': message})
        with suppress(OSError):
            run_logger.save_logs()
    click.echo(f"Error: {message}", err=True)
    sys.exit(1)


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.argument("problem_file", type=click.Path(dir_okay=False))
@click.option("--trace", is_flag=True, help="Print one row per enumerated vector.")
@click.option("--mc", "samples", type=click.IntRange(min=1), default=None,
              help="Add a Monte Carlo estimate with this many samples.")
@click.option("--seed", type=int, default=None, help="Seed for the Monte Carlo streams.")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Processes over disjoint enumeration ranges.")
@click.option("--max-bits", type=click.IntRange(min=1), default=None,
              help="Largest number of mutable coordinates to enumerate.")
@click.option("--vector", "vector_text", default=None,
              help="Show the layered search for one vector, e.g. 1,1,0,1,1,0.")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration file.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None,
              help="Also write a JSON summary with timings.")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Diagnostic verbosity on stderr.")
@click.version_option(__version__, prog_name="relcalc")
def main(problem_file, trace, samples, seed, workers, max_bits, vector_text, config_path,
         json_path, log_level):
    """Exact two-terminal reliability of the network in PROBLEM_FILE."""
    try:
        config = load_config(config_path)
        if log_level:
            config['logging']['level'] = log_level
        run_logger = setup_logging(config)
        options = RunOptions(
            trace=bool(trace) or bool(get_config_value(config, 'report.trace', False)),
            samples=samples if samples is not None else int(get_config_value(config, 'monte_carlo.samples', 0)),
            seed=seed if seed is not None else int(get_config_value(config, 'monte_carlo.seed', 0)),
            workers=workers or int(get_config_value(config, 'reliability.workers', 1)),
            max_bits=max_bits or int(get_config_value(config, 'reliability.max_bits', DEFAULT_MAX_BITS)),
            chunk_size=int(get_config_value(config, 'monte_carlo.chunk_size', DEFAULT_CHUNK_SIZE)),
            precision=int(get_config_value(config, 'report.precision', 6)),
        )
    except (OSError, ValueError, TypeError, yaml.YAMLError) as exc:
        _fail(str(exc))
    metrics = RunMetrics()

    try:
        with open(problem_file, 'r') as f:
            problem = parse_problem(f.read())
        if vector_text is not None:
            vector = parse_vector(vector_text, problem.network())
            options = replace(options, vector=vector.bits)

        result = evaluate(problem, options, run_logger, metrics)
        text = render_result(result, problem, options)
        # stdout stays empty unless every side output was written
        if json_path:
            metrics.save_report(json_path, result.summary())
        run_logger.save_logs()
    except (RelcalcError, OSError) as exc:
        _fail(str(exc), run_logger)

    click.echo(text, nl=False)
    logger.debug(f"Throughput: {metrics.calculate_throughput()}")
