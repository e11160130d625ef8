#!/usr/bin/env python3
"""End-to-end checks of the identity_forge command line.

Usage: test_cli.py <identity_forge executable> <fixtures dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

EXE = None
FIXTURES = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env["IDENTITY_FORGE_OFFLINE"] = "1"
    if env:
        full_env.update(env)
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=300)


class SeqEval(unittest.TestCase):
    def test_bronze(self):
        r = run("seq-eval", "--family", "bronze", "--n", "5")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "109")

    def test_negative_index(self):
        r = run("seq-eval", "--family", "pell", "--n", "-1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "1")

    def test_custom_rational(self):
        r = run("seq-eval", "--c1", "1/2", "--c2", "1", "--x0", "0", "--x1", "1", "--n", "3")
        self.assertEqual(r.stdout.strip(), "5/4")

    def test_zero_c2(self):
        r = run("seq-eval", "--c1", "1", "--c2", "0", "--x0", "0", "--x1", "1", "--n", "3")
        self.assertEqual(r.returncode, 2)
        self.assertIn("c2 must be nonzero", r.stderr)

    def test_usage_errors(self):
        self.assertEqual(run("seq-eval", "--family", "nope", "--n", "1").returncode, 2)
        self.assertEqual(run("seq-eval", "--n", "1").returncode, 2)
        self.assertEqual(run("seq-eval", "--family", "pell").returncode, 2)
        self.assertEqual(run("no-such-command").returncode, 2)
        self.assertEqual(run("seq-eval", "--family", "pell", "--n", "x").returncode, 2)


class Generate(unittest.TestCase):
    def test_lucas_offset_two(self):
        r = run("generate", "--family", "lucas", "--k", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("t = -1/3", r.stdout)
        self.assertIn("reduced coefficient = 1/3", r.stdout)

    def test_lucas_reduced_json(self):
        r = run("generate", "--family", "lucas", "--k", "2", "--reduced", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.assertEqual(doc["rhs"]["outer_coef"], "1/3")
        self.assertEqual(doc["rhs"]["outer_ratio"], "-1/3")

    def test_fibonacci_offset_one(self):
        r = run("generate", "--family", "fibonacci", "--k", "1")
        self.assertEqual(r.returncode, 2)
        self.assertIn("nonzero", r.stderr)

    def test_a015530(self):
        r = run("generate", "--c1", "4", "--c2", "3", "--x0", "0", "--x1", "1", "--k", "3")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("t = -12/19", r.stdout)
        self.assertIn("reduced coefficient = 1/19", r.stdout)

    def test_theorem1(self):
        r = run("generate", "--c1", "1", "--c2", "1", "--x0", "1", "--x1", "1/2", "--theorem1")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("t = 1/2", r.stdout)
        r = run("generate", "--c1", "1", "--c2", "1", "--x0", "1", "--x1", "1", "--theorem1")
        self.assertEqual(r.returncode, 2)

    def test_latex(self):
        r = run("generate", "--family", "lucas", "--k", "1", "--latex")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("\\sum_{i=0}^n (-2)^{n-i}L_{i+1}", r.stdout)


class Verify(unittest.TestCase):
    def test_catalog_entry(self):
        r = run("verify", "--id", "eq8", "--param", "m=9", "--n-max", "16")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("pass", r.stdout)

    def test_instance_id(self):
        r = run("verify", "--id", "eq45[j=3,k=-2]")
        self.assertEqual(r.returncode, 0, r.stderr)

    def test_broken_json(self):
        r = run("generate", "--family", "lucas", "--k", "1", "--json")
        doc = json.loads(r.stdout)
        doc["rhs"]["outer_coef"] = "6"
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(doc, f)
            path = f.name
        try:
            r = run("verify", "--json", path)
            self.assertEqual(r.returncode, 1, r.stdout + r.stderr)
            self.assertIn("first counterexample n=0", r.stdout)
            doc["rhs"]["outer_coef"] = "1/0"
            with open(path, "w") as f:
                json.dump(doc, f)
            r = run("verify", "--json", path)
            self.assertEqual(r.returncode, 2)
            self.assertIn("/rhs/outer_coef", r.stderr)
        finally:
            os.unlink(path)

    def test_unknown_id(self):
        self.assertEqual(run("verify", "--id", "eq99").returncode, 2)
        self.assertEqual(run("verify", "--id", "eq8", "--param", "m=4").returncode, 2)


class Catalog(unittest.TestCase):
    def test_verify_all(self):
        r = run("catalog", "verify-all", "--n-max", "64", "--jobs", "4")
        self.assertEqual(r.returncode, 0, r.stdout[-2000:])
        self.assertIn("0 failed", r.stdout)

    def test_list_and_show(self):
        r = run("catalog", "list")
        self.assertEqual(r.returncode, 0)
        self.assertGreaterEqual(len(r.stdout.splitlines()), 60)
        r = run("catalog", "show", "--id", "eq1", "--latex")
        self.assertIn("2^{n+1}F_{n+1}", r.stdout)


class Fuzz(unittest.TestCase):
    def test_seeded_is_deterministic(self):
        a = run("fuzz", "--seed", "5", "--count", "40", "--theorem1-count", "20", "--verbose")
        b = run("fuzz", "--seed", "5", "--count", "40", "--theorem1-count", "20", "--verbose", "--jobs", "3")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)

    def test_default_counts(self):
        r = run("fuzz", "--seed", "1", "--jobs", "4")
        self.assertEqual(r.returncode, 0, r.stdout)
        self.assertIn("theorem2: 500 instances", r.stdout)
        self.assertIn("0 failed", r.stdout)

    def test_random_seed_is_printed(self):
        r = run("fuzz", "--count", "2", "--theorem1-count", "2")
        self.assertEqual(r.returncode, 0)
        self.assertRegex(r.stdout.splitlines()[0], r"^seed \d+$")


class Oeis(unittest.TestCase):
    def test_pell(self):
        r = run("oeis-check", "--family", "pell", "--count", "10", "--offline", "--fixtures", FIXTURES)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("0 1 2 5 12 29 70 169 408 985", r.stdout)

    def test_pelllucas_env_offline(self):
        r = run("oeis-check", "--family", "pelllucas", "--count", "5", "--fixtures", FIXTURES)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("1 1 3 7 17", r.stdout)

    def test_vacuous(self):
        self.assertEqual(run("oeis-check", "--family", "fibonacci", "--count", "0").returncode, 0)

    def test_all_families(self):
        for fam in ["fibonacci", "lucas", "pell", "pelllucas", "bronze", "a015530"]:
            r = run("oeis-check", "--family", fam, "--count", "40", "--offline", "--fixtures", FIXTURES)
            self.assertEqual(r.returncode, 0, fam + r.stderr)

    def test_missing_fixture(self):
        with tempfile.TemporaryDirectory() as empty:
            r = run("oeis-check", "--family", "pell", "--count", "5", "--offline", "--fixtures", empty)
            self.assertEqual(r.returncode, 3)

    def test_mismatch(self):
        with tempfile.TemporaryDirectory() as d:
            with open(os.path.join(d, "A000045.txt"), "w") as f:
                f.write("0 0\n1 1\n2 1\n3 3\n")
            r = run("oeis-check", "--family", "fibonacci", "--count", "4", "--offline", "--fixtures", d)
            self.assertEqual(r.returncode, 1)
            self.assertIn("index 3", r.stdout)


if __name__ == "__main__":
    EXE, FIXTURES = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
