"""
Logging utilities
"""

import json
import logging
import sys
from typing import Any, Dict, List, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class RunLogger:
    """Records structured events of one engine run"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.events: List[Dict] = []
        self.event_log: Optional[str] = config['logging'].get('event_log')

        self.setup_stream_logging(
            config['logging'].get('level', 'WARNING'),
            config['logging'].get('log_file'),
        )

    def setup_stream_logging(self, level: str, log_file: Optional[str]):
        """Send log records to stderr and, optionally, a log file"""
        handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
        if log_file:
            handlers.append(logging.FileHandler(log_file))

        logging.basicConfig(
            level=getattr(logging, str(level).upper(), logging.WARNING),
            format=LOG_FORMAT,
            handlers=handlers,
            force=True
        )

    def log_event(self, stage: str, data: Dict[str, Any]):
        """
        Log a run event

        Args:
            stage: Pipeline stage (preprocess, enumerate, monte_carlo, error)
            data: Event data
        """
        event = {
            'stage': stage,
            'data': self._clean_data(data)
        }

        self.events.append(event)

        if stage == 'error':
            logging.getLogger(__name__).error(data.get('error', 'Unknown error'))
        else:
            logging.getLogger(__name__).info(f"[{stage}] {event['data']}")

    def _clean_data(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Clean data for JSON serialization"""
        cleaned = {}
        for key, value in data.items():
            if isinstance(value, dict):
                cleaned[str(key)] = self._clean_data(value)
            elif isinstance(value, (list, tuple)):
                cleaned[str(key)] = list(value)
            elif isinstance(value, float) and value != value:
                cleaned[str(key)] = None
            else:
                cleaned[str(key)] = value
        return cleaned

    def save_logs(self):
        """Save all events to the configured event log"""
        if not self.event_log:
            return

        with open(self.event_log, 'w') as f:
            json.dump(self.events, f, indent=2)

        logging.getLogger(__name__).info(f"Saved {len(self.events)} events to {self.event_log}")


def setup_logging(config: Dict[str, Any]) -> RunLogger:
    """
    Setup logging system

    Args:
        config: Configuration dictionary

    Returns:
        RunLogger instance
    """
    return RunLogger(config)
