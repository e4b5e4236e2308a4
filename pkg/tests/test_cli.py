import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from math import comb
from unittest import mock

from sphere_embed.base_telemetry import TELEMETRY_DIR_ENV
from sphere_embed.cli import run
from sphere_embed.cli.commands import cross_complex
from sphere_embed.combinatorics import star_family
from sphere_embed.complex_core import canonical_form, complex_of
from sphere_embed.serialization import (
    complex_from_dict,
    complex_to_dict,
    dumps,
    placement_to_dict,
)

from .support import (
    cross_polytope_placement,
    k5,
    octahedron,
    octahedron_minus_facet,
    plane_placement,
)


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        telemetry = os.path.join(self.tmp, "tm")
        env = mock.patch.dict(os.environ, {TELEMETRY_DIR_ENV: telemetry})
        env.start()
        self.addCleanup(env.stop)
        self.addCleanup(shutil.rmtree, self.tmp, ignore_errors=True)

    def write(self, name: str, payload) -> str:
        path = os.path.join(self.tmp, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(payload))
        return path

    def invoke(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(list(argv))
        self.stderr = err.getvalue()
        text = out.getvalue()
        if text.strip() in ("", "none"):
            return code, text.strip() or None
        return code, json.loads(text)


class AnalyzeCommandTest(CliTestCase):
    def test_octahedron_embeds_in_three_sphere(self):
        """Test analyze on the octahedron with --dim 3"""
        path = self.write("oct.json", complex_to_dict(octahedron()))
        code, payload = self.invoke("analyze", path, "--dim", "3")
        self.assertEqual(code, 0)
        self.assertEqual(payload["decision"], "embeds")
        self.assertEqual(payload["nu"], 3)
        self.assertEqual(payload["f_vector"], [6, 12, 8])
        self.assertEqual(payload["ekr_k"], 3)
        self.assertEqual(payload["minimal_nonfaces"], [[1, 4], [2, 5], [3, 6]])

    def test_k5_is_not_embeddable(self):
        """Test analyze on K5 with --dim 2"""
        path = self.write("k5.json", complex_to_dict(k5()))
        code, payload = self.invoke("analyze", path, "--dim", "2")
        self.assertEqual(code, 3)
        self.assertEqual(payload["decision"], "not_embeddable")

    def test_out_of_scope(self):
        """Test a complex on d+5 vertices"""
        path = self.write("k5.json", complex_to_dict(k5()))
        code, payload = self.invoke("analyze", path, "--dim", "0")
        self.assertEqual(code, 2)
        path = self.write("oct.json", complex_to_dict(octahedron()))
        code, payload = self.invoke("analyze", path, "--dim", "1")
        self.assertEqual(code, 4)
        self.assertEqual(payload["decision"], "out_of_scope")

    def test_malformed_input(self):
        """Test that unreadable complexes exit with code 2"""
        path = os.path.join(self.tmp, "bad.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("[")
        code, _ = self.invoke("analyze", path, "--dim", "2")
        self.assertEqual(code, 2)
        self.assertIn("ERROR:", self.stderr)
        missing = os.path.join(self.tmp, "nope.json")
        code, _ = self.invoke("analyze", missing, "--dim", "2")
        self.assertEqual(code, 2)

    def test_unsorted_facets_are_malformed(self):
        """Test that repeated or decreasing vertices exit with code 2"""
        for facets in ([[1, 1, 2]], [[2, 1]]):
            path = self.write("bad.json", {"n": 3, "facets": facets})
            code, payload = self.invoke("analyze", path, "--dim", "1")
            self.assertEqual(code, 2)
            self.assertIsNone(payload)
            self.assertIn("strictly increasing", self.stderr)

    def test_oversized_ground_set_is_rejected(self):
        """Test that a ground set past sixteen elements exits with code 2"""
        path = self.write("big.json", {"n": 40, "facets": [[1]]})
        code, payload = self.invoke("analyze", path, "--dim", "37")
        self.assertEqual(code, 2)
        self.assertIsNone(payload)
        self.assertIn("ERROR:", self.stderr)
        self.assertIn("n <= 16", self.stderr)


class EmbedCommandTest(CliTestCase):
    def test_octahedron_sphere_placement(self):
        """Test embed without --linear on the octahedron"""
        path = self.write("oct.json", complex_to_dict(octahedron()))
        code, payload = self.invoke("embed", path, "--dim", "3")
        self.assertEqual(code, 0)
        self.assertEqual(payload["status"], "sphere")
        self.assertEqual(payload["certificate"]["verdict"], "pass")
        self.assertEqual(payload["placement"]["dim"], 4)
        self.assertEqual(
            payload["placement"]["coords"]["4"], ["-1/1", "0/1", "0/1", "0/1"]
        )

    def test_octahedron_is_sphere_only_in_the_plane(self):
        """Test embed --linear on the octahedron with --dim 2"""
        path = self.write("oct.json", complex_to_dict(octahedron()))
        code, payload = self.invoke("embed", path, "--dim", "2", "--linear")
        self.assertEqual(code, 0)
        self.assertEqual(payload["status"], "sphere_only")
        self.assertEqual(payload["certificate"]["verdict"], "pass")

    def test_octahedron_minus_facet_is_planar(self):
        """Test embed --linear with a cross-check on the octahedron minus a triangle"""
        path = self.write("omf.json", complex_to_dict(octahedron_minus_facet()))
        code, payload = self.invoke(
            "embed", path, "--dim", "2", "--linear", "--cross-check", "--trials", "2"
        )
        self.assertEqual(code, 0)
        self.assertEqual(payload["status"], "linear")
        self.assertEqual(payload["placement"]["dim"], 2)
        self.assertEqual(payload["certificate"]["mode"], "linear")
        self.assertEqual(payload["cross_check"]["disagreements"], [])

    def test_not_embeddable(self):
        """Test embed on K5"""
        path = self.write("k5.json", complex_to_dict(k5()))
        code, payload = self.invoke("embed", path, "--dim", "2")
        self.assertEqual(code, 3)
        self.assertEqual(payload["decision"], "not_embeddable")

    def test_output_file(self):
        """Test that --output writes the document instead of printing it"""
        path = self.write("oct.json", complex_to_dict(octahedron()))
        target = os.path.join(self.tmp, "out.json")
        code, printed = self.invoke("embed", path, "--dim", "3", "--output", target)
        self.assertEqual(code, 0)
        self.assertIsNone(printed)
        with open(target, "r", encoding="utf-8") as fh:
            self.assertEqual(json.load(fh)["certificate"]["verdict"], "pass")


class VerifyAndWitnessCommandTest(CliTestCase):
    def test_verify_pass_and_fail(self):
        """Test verify on the cross-polytope and on coincident vertices"""
        complex_path = self.write("oct.json", complex_to_dict(octahedron()))
        good = self.write("good.json", placement_to_dict(cross_polytope_placement()))
        code, payload = self.invoke("verify", complex_path, good, "--cross-check")
        self.assertEqual(code, 0)
        self.assertEqual(payload["verdict"], "pass")
        self.assertEqual(payload["cross_check"]["disagreements"], [])

        bad_coords = placement_to_dict(cross_polytope_placement())
        bad_coords["coords"]["4"] = ["1/1", "0/1", "0/1"]
        bad = self.write("bad.json", bad_coords)
        code, payload = self.invoke("verify", complex_path, bad)
        self.assertEqual(code, 3)
        self.assertEqual(payload["verdict"], "fail")
        self.assertEqual(payload["offending_pair"], [[1, 2, 3], [2, 3, 4]])

    def test_mode_mismatch(self):
        """Test that geodesic mode rejects an off-sphere placement"""
        complex_path = self.write("oct.json", complex_to_dict(octahedron()))
        data = placement_to_dict(cross_polytope_placement())
        data["on_sphere"] = False
        placement_path = self.write("flat.json", data)
        args = ("verify", complex_path, placement_path, "--mode")
        code, _ = self.invoke(*args, "geodesic")
        self.assertEqual(code, 2)
        code, payload = self.invoke(*args, "linear")
        self.assertEqual(code, 0)
        self.assertEqual(payload["mode"], "linear")

    def test_witness(self):
        """Test witness with and without an overlap"""
        complex_path = self.write("k5.json", complex_to_dict(k5()))
        points = [(0, 0), (4, 0), (2, 3), (2, 1), (100, 100)]
        placement_path = self.write(
            "k5p.json", placement_to_dict(plane_placement(points))
        )
        code, payload = self.invoke("witness", complex_path, placement_path)
        self.assertEqual(code, 0)
        self.assertFalse(set(payload["sigma"]) & set(payload["tau"]))

        segments = self.write("seg.json", {"n": 4, "facets": [[1, 2], [3, 4]]})
        line = self.write(
            "line.json",
            {
                "dim": 1,
                "on_sphere": False,
                "coords": {"1": ["0/1"], "2": ["1/1"], "3": ["5/1"], "4": ["6/1"]},
            },
        )
        code, payload = self.invoke("witness", segments, line)
        self.assertEqual(code, 1)
        self.assertEqual(payload, "none")


class GlobalFlagTest(CliTestCase):
    def test_flags_before_the_subcommand(self):
        """Test that --seed is accepted ahead of the subcommand"""
        code, payload = self.invoke("--seed", "3", "enumerate", "--n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(payload["seed"], 3)

    def test_subcommand_value_wins(self):
        """Test that a flag after the subcommand overrides the global one"""
        code, payload = self.invoke(
            "--seed", "3", "enumerate", "--n", "4", "--seed", "4"
        )
        self.assertEqual(code, 0)
        self.assertEqual(payload["seed"], 4)

    def test_global_output(self):
        """Test --output given before the subcommand"""
        target = os.path.join(self.tmp, "out.json")
        code, payload = self.invoke("--output", target, "generate", "simplex", "2")
        self.assertEqual(code, 0)
        self.assertIsNone(payload)
        with open(target, "r", encoding="utf-8") as fh:
            self.assertEqual(json.load(fh), {"n": 3, "facets": [[1, 2, 3]]})

    def test_usage_errors_return_code_two(self):
        """Test that argparse errors come back from run instead of exiting"""
        code, payload = self.invoke("enumerate", "--bogus")
        self.assertEqual(code, 2)
        self.assertIsNone(payload)
        code, _ = self.invoke("--seed", "x", "ekr", "--n", "6", "--k", "3")
        self.assertEqual(code, 2)


class GenerateCommandTest(CliTestCase):
    def test_named_complexes(self):
        """Test the generators against the library constructions"""
        code, payload = self.invoke("generate", "vkf", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload, complex_to_dict(k5()))
        code, payload = self.invoke("generate", "cross", "2,2,2")
        self.assertEqual(
            canonical_form(complex_from_dict(payload)), canonical_form(octahedron())
        )
        code, payload = self.invoke("generate", "star", "6", "3", "1")
        self.assertEqual(
            payload, complex_to_dict(complex_of(6, star_family(6, 3, 1)))
        )
        code, payload = self.invoke("generate", "simplex", "2")
        self.assertEqual(payload, {"n": 3, "facets": [[1, 2, 3]]})
        code, payload = self.invoke("generate", "boundary", "2")
        self.assertEqual(payload, {"n": 3, "facets": [[1, 2], [1, 3], [2, 3]]})

    def test_skeleton_and_leftover(self):
        """Test skeleton of a file and cross with leftover vertices"""
        path = self.write("oct.json", complex_to_dict(octahedron()))
        code, payload = self.invoke("generate", "skeleton", path, "1")
        self.assertEqual(code, 0)
        self.assertEqual(len(payload["facets"]), 12)
        code, payload = self.invoke("generate", "cross", "2,2", "--leftover", "1")
        self.assertEqual(
            payload, {"n": 5, "facets": [[1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5]]}
        )
        self.assertEqual(payload, complex_to_dict(cross_complex([2, 2], 1)))

    def test_bad_parameters(self):
        """Test parameter errors of generate"""
        code, _ = self.invoke("generate", "vkf")
        self.assertEqual(code, 2)
        code, _ = self.invoke("generate", "cross", "2,x")
        self.assertEqual(code, 2)
        code, _ = self.invoke("generate", "simplex", "-1")
        self.assertEqual(code, 2)


class EnumerateCommandTest(CliTestCase):
    def test_small_exhaustive_run(self):
        """Test a clean exhaustive run on three elements"""
        code, payload = self.invoke("enumerate", "--n", "3", "--dim", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload["complexes"], 9)
        self.assertEqual(payload["certificate_failures"], 0)
        self.assertEqual(payload["mode"], "exhaustive")

    def test_five_elements_with_linear_pipeline(self):
        """Test the d = 2 sweep with linearization"""
        code, payload = self.invoke("enumerate", "--n", "5", "--linear")
        self.assertEqual(code, 0)
        self.assertEqual(payload["d"], 2)
        self.assertEqual(payload["complexes"], 209)
        self.assertEqual(payload["linear_failures"], 0)
        self.assertEqual(payload["ekr_violations"], 0)
        self.assertEqual(len(payload["sphere_only"]), 2)

    def test_sampled_run_is_deterministic(self):
        """Test that a seeded sample reproduces its tally"""
        args = ("enumerate", "--n", "6", "--sample", "30", "--seed", "7")
        first = self.invoke(*args)
        second = self.invoke(*args)
        self.assertEqual(first, second)
        self.assertEqual(first[1]["mode"], "sample")
        self.assertEqual(sum(first[1]["decisions"].values()), 30)

    def test_stream_writes_one_record_per_complex(self):
        """Test the per-complex telemetry stream"""
        code, payload = self.invoke("enumerate", "--n", "4", "--stream")
        self.assertEqual(code, 0)
        directory = os.path.join(self.tmp, "tm")
        files = os.listdir(directory)
        self.assertEqual(len(files), 1)
        with open(os.path.join(directory, files[0]), "r", encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
        self.assertEqual(len(records), payload["complexes"])
        self.assertEqual([r["index"] for r in records], list(range(len(records))))
        self.assertTrue(all(r["schema_version"] == "1.0.0" for r in records))

    def test_invalid_configuration(self):
        """Test configuration errors"""
        code, _ = self.invoke("enumerate", "--n", "3")
        self.assertEqual(code, 2)
        code, _ = self.invoke("enumerate", "--n", "7")
        self.assertEqual(code, 2)
        code, _ = self.invoke("enumerate", "--n", "5", "--seed", "-1")
        self.assertEqual(code, 2)


class EkrCommandTest(CliTestCase):
    def test_small_cases(self):
        """Test ekr against the binomial bound"""
        for n, k, expected in ((5, 2, 4), (4, 2, 3), (6, 3, 10)):
            code, payload = self.invoke("ekr", "--n", str(n), "--k", str(k))
            self.assertEqual(code, 0)
            self.assertEqual(payload["max"], expected)
            self.assertEqual(payload["bound"], comb(n - 1, k - 1))
            self.assertEqual(len(payload["family"]), expected)

    def test_budget(self):
        """Test that oversized searches exit with an input error"""
        code, _ = self.invoke("ekr", "--n", "13", "--k", "5")
        self.assertEqual(code, 2)


if __name__ == "__main__":
    unittest.main()
