import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr

from sphere_embed.acceptance.runner import AcceptanceTelemetryCollector
from sphere_embed.base_telemetry import (
    SCHEMA_VERSION,
    BaseTelemetryCollector,
    new_run_id,
)
from sphere_embed.cli.telemetry import SweepTelemetryCollector
from sphere_embed.combinatorics import decide_embeddability
from sphere_embed.geometry import linearize
from sphere_embed.verify import complex_id, verify_geodesic_embedding

from .support import cross_polytope_placement, octahedron


def read_records(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


class TelemetryTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)


class BaseCollectorTest(TelemetryTestCase):
    def test_run_id_format(self):
        """Test the run_<date>_<time> shape of generated run ids"""
        self.assertRegex(new_run_id(), r"^run_\d{8}_\d{6}$")

    def test_record_fields(self):
        """Test that one tracked item produces one NDJSON record"""
        collector = BaseTelemetryCollector("run_test", self.tmp)
        collector.start_item("item-1")
        record = collector.end_item("item-1", "passed", extra=3)
        collector.output_record(record)
        records = read_records(os.path.join(self.tmp, "run_test.ndjson"))
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["schema_version"], SCHEMA_VERSION)
        self.assertEqual(records[0]["run_id"], "run_test")
        self.assertEqual(records[0]["id"], "item-1")
        self.assertEqual(records[0]["extra"], 3)
        self.assertGreaterEqual(records[0]["duration_ms"], 0)
        self.assertEqual(collector.item_timings, {})

    def test_unstarted_item_has_zero_duration(self):
        """Test ending an item that was never started"""
        collector = BaseTelemetryCollector("run_test", self.tmp)
        record = collector.end_item("ghost", "unknown")
        self.assertEqual(record["duration_ms"], 0)
        self.assertEqual(record["start_time"], record["end_time"])

    def test_unwritable_directory_falls_back_to_stderr(self):
        """Test that records go to stderr when no file can be created"""
        blocker = os.path.join(self.tmp, "blocker")
        with open(blocker, "w", encoding="utf-8") as fh:
            fh.write("")
        collector = BaseTelemetryCollector("run_test", os.path.join(blocker, "sub"))
        self.assertIsNone(collector.telemetry_file)
        err = io.StringIO()
        with redirect_stderr(err):
            collector.output_record(collector.end_item("x", "passed"))
        self.assertEqual(json.loads(err.getvalue())["id"], "x")


class SweepCollectorTest(TelemetryTestCase):
    def test_records_per_complex(self):
        """Test the sweep record of a certified complex"""
        K = octahedron()
        collector = SweepTelemetryCollector("run_sweep", self.tmp)
        collector.start_complex(K)
        certificate = verify_geodesic_embedding(K, cross_polytope_placement())
        linear = linearize(K, 2)
        collector.end_complex(
            K,
            decide_embeddability(K, 3),
            certificate,
            linear=linear.status.value,
        )
        (record,) = read_records(os.path.join(self.tmp, "run_sweep.ndjson"))
        self.assertEqual(record["id"], complex_id(K))
        self.assertEqual(record["status"], "passed")
        self.assertEqual(record["index"], 0)
        self.assertEqual(record["f_vector"], [6, 12, 8])
        self.assertEqual(record["decision"], "embeds")
        self.assertEqual(record["nu"], 3)
        self.assertEqual(record["certificate"], "pass")
        self.assertEqual(record["linear"], "sphere_only")
        self.assertIsNone(record["linear_certificate"])
        self.assertEqual(collector.processed, 1)


class AcceptanceCollectorTest(TelemetryTestCase):
    def test_nodeid_is_split_into_fields(self):
        """Test name, class, module and file of a test record"""
        collector = AcceptanceTelemetryCollector("run_acc", self.tmp)
        nodeid = "tests/test_lp.py::LPExamplesTest::test_optimum"
        collector.start_item(nodeid)
        record = collector.end_test(nodeid, "passed")
        self.assertEqual(record["name"], "test_optimum")
        self.assertEqual(record["class"], "LPExamplesTest")
        self.assertEqual(record["module"], "tests.test_lp")
        self.assertEqual(record["file"], "tests/test_lp.py")
        self.assertEqual(collector.outcomes["passed"], 1)

    def test_function_tests_and_unknown_outcomes(self):
        """Test a node id without a class and an unexpected outcome"""
        collector = AcceptanceTelemetryCollector("run_acc", self.tmp)
        record = collector.end_test("tests/test_x.py::test_y", "error")
        self.assertEqual(record["status"], "unknown")
        self.assertEqual(record["class"], "")
        self.assertEqual(sum(collector.outcomes.values()), 0)
        records = read_records(os.path.join(self.tmp, "run_acc.ndjson"))
        self.assertEqual(records[0]["name"], "test_y")


if __name__ == "__main__":
    unittest.main()
