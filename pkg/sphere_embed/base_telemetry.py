"""
Base telemetry collection logic shared by the CLI sweeps and the acceptance runner
"""

import json
import os
import sys
import threading
import time
from datetime import datetime
from typing import Any, Dict, Optional

SCHEMA_VERSION = "1.0.0"
TELEMETRY_DIR_ENV = "SPHERE_EMBED_TELEMETRY_DIR"


def new_run_id() -> str:
    return f"run_{datetime.now().strftime('%Y%m%d_%H%M%S')}"


def telemetry_dir() -> str:
    return os.environ.get(TELEMETRY_DIR_ENV) or os.path.join(os.getcwd(), ".telemetry")


class BaseTelemetryCollector:
    """Writes one NDJSON record per tracked item to <telemetry dir>/<run_id>.ndjson."""

    def __init__(self, run_id: str, directory: Optional[str] = None):
        self.run_id = run_id
        self.item_status: Dict[str, str] = {}
        self.item_timings: Dict[str, float] = {}
        self._lock = threading.Lock()

        # Set up telemetry file
        self.telemetry_dir = directory or telemetry_dir()
        self.telemetry_file: Optional[str] = os.path.join(
            self.telemetry_dir, f"{run_id}.ndjson"
        )
        self._ensure_telemetry_file()

    def _ensure_telemetry_file(self):
        """Ensure the telemetry directory and file exist and are writable."""
        try:
            os.makedirs(self.telemetry_dir, exist_ok=True)
            if not os.path.exists(self.telemetry_file):
                with open(self.telemetry_file, "w"):
                    pass
        except Exception:
            # stdout carries command output, so records go to stderr instead
            self.telemetry_file = None

    def _write_telemetry(self, data: Dict[str, Any]):
        """Write telemetry data to file or stderr."""
        line = json.dumps(data, sort_keys=True)
        with self._lock:
            try:
                if self.telemetry_file:
                    with open(self.telemetry_file, "a") as f:
                        f.write(line + "\n")
                        f.flush()
                else:
                    print(line, file=sys.stderr, flush=True)
            except Exception:
                print(line, file=sys.stderr, flush=True)

    def start_item(self, item_id: str):
        """Start tracking an item (a test, a complex of a sweep)."""
        self.item_status[item_id] = "running"
        self.item_timings[item_id] = time.time()

    def end_item(self, item_id: str, status: str, **fields: Any) -> Dict[str, Any]:
        """End tracking an item and return its telemetry record."""
        end_time = time.time()
        start_time = self.item_timings.get(item_id, end_time)
        record = {
            "schema_version": SCHEMA_VERSION,
            "run_id": self.run_id,
            "id": item_id,
            "status": status,
            "start_time": datetime.fromtimestamp(start_time).isoformat(),
            "end_time": datetime.fromtimestamp(end_time).isoformat(),
            "duration_ms": round((end_time - start_time) * 1000),
        }
        record.update(fields)
        self._cleanup_item(item_id)
        return record

    def _cleanup_item(self, item_id: str):
        try:
            self.item_timings.pop(item_id, None)
            self.item_status.pop(item_id, None)
        except Exception:
            # telemetry must never break a run
            pass

    def output_record(self, record: Dict[str, Any]):
        self._write_telemetry(record)
