#!/usr/bin/env python3
"""End-to-end checks of the golodkit command line.

usage: test_cli.py <golodkit executable> <source dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

EXE = None
ROOT = None


def run(*args, env=None, stdin=None):
    full_env = dict(os.environ)
    full_env.pop("GOLODKIT_MAX_GENERATORS", None)
    if env:
        full_env.update(env)
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, input=stdin, timeout=300)


def fixture(name):
    return str(ROOT / "fixtures" / name)


def schema(name):
    return json.loads((ROOT / "schemas" / name).read_text())


try:
    import jsonschema
except ImportError:  # schema checks are skipped without it
    jsonschema = None


class ExitCodes(unittest.TestCase):
    def test_parse_error(self):
        r = run("betti", "--ideal", "ring x; ideal y;")
        self.assertEqual(r.returncode, 1)
        self.assertIn("parse error", r.stderr)

    def test_missing_file(self):
        self.assertEqual(run("betti", "-i", "/nonexistent/ideal").returncode, 1)

    def test_generator_cap(self):
        r = run("betti", "-i", fixture("pentagon.ideal"), env={"GOLODKIT_MAX_GENERATORS": "4"})
        self.assertEqual(r.returncode, 3)

    def test_decided(self):
        self.assertEqual(run("golod", "-i", fixture("fourgen.ideal")).returncode, 0)
        self.assertEqual(run("golod", "-i", fixture("pentagon.ideal")).returncode, 0)

    def test_invalid_matching(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump({"arrows": [{"from": "u12", "to": "u1"}]}, f)
        try:
            r = run("match", "-i", fixture("fourgen.ideal"), "--matching", f.name)
            self.assertNotEqual(r.returncode, 0)
        finally:
            os.unlink(f.name)


class Outputs(unittest.TestCase):
    def test_betti(self):
        r = run("betti", "-i", fixture("pentagon.ideal"))
        self.assertEqual(r.returncode, 0)
        self.assertIn("(1,5,5,1)", r.stdout)
        self.assertTrue(r.stdout.startswith("# golodkit betti"))

    def test_stdin(self):
        r = run("betti", "-i", "-", stdin=(ROOT / "fixtures" / "avramov.ideal").read_text())
        self.assertIn("(1,5,7,4,1)", r.stdout)

    def test_ternary_operation(self):
        r = run("ainf", "-i", fixture("avramov.ideal"), "--matching", fixture("avramov_unit.matching.json"),
                "--max-arity", "3", "--char2")
        self.assertEqual(r.returncode, 0)
        self.assertIn("mu3(u1,u3,u5) = x4*u1234 + u1245 + x1*u2345", r.stdout)

    def test_dot(self):
        r = run("export-dot", "-i", fixture("fourgen.ideal"), "--matching", fixture("fourgen_worked.matching.json"))
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.count("color=red"), 3)

    def test_resolve_is_reproducible(self):
        a = run("resolve", "-i", fixture("avramov.ideal"), "--format", "json", "--strategy", "random:9")
        b = run("resolve", "-i", fixture("avramov.ideal"), "--format", "json", "--strategy", "random:9")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)
        doc = json.loads(a.stdout)
        degrees = [c["degree"] for c in doc["cells"]]
        self.assertEqual([degrees.count(k) for k in range(5)], [1, 5, 7, 4, 1])

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as d:
            out = Path(d) / "report.json"
            r = run("golod", "-i", fixture("katthan.ideal"), "--format", "json", "-o", str(out))
            self.assertEqual(r.returncode, 0)
            report = json.loads(out.read_text())
            self.assertTrue(report["gcd_condition"]["holds"])
            self.assertTrue(report["product_trivial"]["holds"])
            self.assertEqual(report["header"]["tool"], "golodkit")


@unittest.skipIf(jsonschema is None, "jsonschema not installed")
class Schemas(unittest.TestCase):
    def validate(self, doc, name):
        jsonschema.validate(doc, schema(name))

    def test_complex(self):
        for name in ("fourgen", "katthan"):
            r = run("resolve", "-i", fixture(name + ".ideal"), "--format", "json")
            self.validate(json.loads(r.stdout), "complex.v1.schema.json")
        r = run("resolve", "-i", fixture("fourgen.ideal"), "--format", "json", "--taylor")
        self.validate(json.loads(r.stdout), "complex.v1.schema.json")

    def test_matching(self):
        for f in ("fourgen_worked.matching.json", "avramov_unit.matching.json"):
            self.validate(json.loads(Path(fixture(f)).read_text()), "matching.v1.schema.json")
        r = run("match", "-i", fixture("pentagon.ideal"), "--format", "json", "--construction", "jollenbeck")
        self.validate(json.loads(r.stdout), "matching.v1.schema.json")

    def test_golod_report(self):
        for name in ("fourgen", "pentagon", "avramov", "katthan"):
            r = run("golod", "-i", fixture(name + ".ideal"), "--format", "json")
            self.validate(json.loads(r.stdout), "golod-report.v1.schema.json")

    def test_ainf_table(self):
        r = run("ainf", "-i", fixture("fourgen.ideal"), "--format", "json", "--max-arity", "3")
        self.validate(json.loads(r.stdout), "ainf-table.v1.schema.json")


if __name__ == "__main__":
    if len(sys.argv) < 3:
        sys.exit(__doc__)
    EXE = sys.argv[1]
    ROOT = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
