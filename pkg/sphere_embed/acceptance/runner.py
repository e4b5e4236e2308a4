"""
Acceptance test runner with per-test telemetry
"""

import os
import sys
from typing import List, Optional

from ..base_telemetry import BaseTelemetryCollector, new_run_id

DEFAULT_TARGET = "tests"


class AcceptanceTelemetryCollector(BaseTelemetryCollector):
    """Telemetry collector keyed by pytest node ids."""

    def __init__(self, run_id: str, directory: Optional[str] = None):
        super().__init__(run_id, directory)
        self.outcomes = {"passed": 0, "failed": 0, "skipped": 0}

    def start_test(self, item):
        """Start tracking a pytest item."""
        self.start_item(getattr(item, "nodeid", str(item)))

    def end_test(self, nodeid: str, outcome: str):
        status = outcome if outcome in self.outcomes else "unknown"
        if status in self.outcomes:
            self.outcomes[status] += 1
        parts = nodeid.split("::")
        test_file = parts[0] if len(parts) > 1 else ""
        record = self.end_item(
            nodeid,
            status,
            name=parts[-1],
            **{
                "class": parts[1] if len(parts) > 2 else "",
                "module": test_file.replace(".py", "").replace("/", "."),
                "file": test_file,
            },
        )
        self.output_record(record)
        return record


class AcceptanceTelemetryPlugin:
    """Pytest plugin writing one telemetry record per test call."""

    def __init__(self, telemetry_collector: AcceptanceTelemetryCollector):
        self.telemetry_collector = telemetry_collector

    def pytest_runtest_setup(self, item):
        """Called before each test setup."""
        self.telemetry_collector.start_test(item)

    def pytest_runtest_logreport(self, report):
        """Called for each test report."""
        if report.when == "call":
            self.telemetry_collector.end_test(report.nodeid, report.outcome)
        elif report.when == "setup" and report.outcome == "skipped":
            self.telemetry_collector.end_test(report.nodeid, "skipped")


def run(args: List[str], run_id: Optional[str] = None) -> int:
    import pytest

    has_target = any(not a.startswith("-") for a in args)
    targets = args if has_target else args + [DEFAULT_TARGET]
    collector = AcceptanceTelemetryCollector(run_id or new_run_id())
    plugin = AcceptanceTelemetryPlugin(collector)
    return int(pytest.main(targets + ["-p", "no:cacheprovider"], plugins=[plugin]))


def main():
    """Main entry point for the acceptance runner."""
    try:
        import pytest  # noqa: F401
    except ImportError:
        print(
            "ERROR: pytest is not installed. Please install it with: pip install pytest"
        )
        sys.exit(1)

    if not os.path.isdir(DEFAULT_TARGET) and len(sys.argv) == 1:
        print(f"ERROR: no {DEFAULT_TARGET}/ directory here; pass test paths explicitly")
        sys.exit(2)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
