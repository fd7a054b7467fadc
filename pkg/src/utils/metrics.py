"""
Run timing and JSON summary reports
"""

import json
import os
import time
from contextlib import contextmanager
from datetime import datetime
from typing import Any, Dict, Optional


class RunMetrics:
    """Collect stage timings and results of one engine run"""

    def __init__(self):
        self.metrics = {
            'timings': {},
            'total_vectors': 0,
            'connected_vectors': 0,
            'mc_samples': 0
        }

        self.start_time = datetime.now()

    @contextmanager
    def stage(self, name: str):
        """
        Time a pipeline stage

        Args:
            name: Stage name (preprocess, exact, monte_carlo)
        """
        started = time.perf_counter()
        try:
            yield
        finally:
            self.metrics['timings'][name] = time.perf_counter() - started

    def record_exact(self, report):
        """
        Record exact enumeration counts

        Args:
            report: ReliabilityReport
        """
        self.metrics['total_vectors'] = report.total_vectors
        self.metrics['connected_vectors'] = report.connected_vectors

    def record_monte_carlo(self, estimate):
        self.metrics['mc_samples'] = estimate.samples

    def calculate_throughput(self) -> Dict[str, float]:
        """
        Calculate enumeration and sampling rates

        Returns:
            Dictionary of vectors (or samples) per second
        """
        timings = self.metrics['timings']
        exact_time = timings.get('exact', 0.0)
        mc_time = timings.get('monte_carlo', 0.0)

        return {
            'vectors_per_second': self.metrics['total_vectors'] / exact_time if exact_time > 0 else 0.0,
            'samples_per_second': self.metrics['mc_samples'] / mc_time if mc_time > 0 else 0.0
        }

    def save_report(self, report_file: str, results: Optional[Dict[str, Any]] = None):
        """
        Save a JSON summary of the run

        Args:
            report_file: Output path
            results: Engine results to include next to the timings
        """
        directory = os.path.dirname(report_file)
        if directory:
            os.makedirs(directory, exist_ok=True)

        report = {
            'summary': {
                'total_vectors': self.metrics['total_vectors'],
                'connected_vectors': self.metrics['connected_vectors'],
                'mc_samples': self.metrics['mc_samples'],
                'run_duration': (datetime.now() - self.start_time).total_seconds()
            },
            'timings': self.metrics['timings'],
            'throughput': self.calculate_throughput(),
            'results': results or {}
        }

        with open(report_file, 'w') as f:
            json.dump(report, f, indent=2)
