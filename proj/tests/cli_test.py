"""End-to-end checks of the command-line tool: output shape, exit codes, determinism."""
import json
import subprocess
import sys
import unittest

CLI = None


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def json_lines(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


class EnumerateTest(unittest.TestCase):
    def test_domino_tableaux(self):
        res = run("enumerate", "srt", "--shape", "[2,2]", "--r", "2", "--json")
        self.assertEqual(res.returncode, 0, res.stderr)
        lines = json_lines(res.stdout)
        self.assertEqual(lines[-1], {"count": 2})
        rows = sorted(json.dumps(obj["rows"]) for obj in lines[:-1])
        self.assertEqual(rows, ["[[1, 1], [2, 2]]", "[[1, 2], [1, 2]]"])
        self.assertTrue(all(obj["r"] == 2 for obj in lines[:-1]))

    def test_empty_and_syt(self):
        res = run("enumerate", "srt", "--shape", "[2,2]", "--r", "4", "--json")
        self.assertEqual(json_lines(res.stdout), [{"count": 0}])
        res = run("enumerate", "syt", "--shape", "[2,2]", "--json")
        self.assertEqual(json_lines(res.stdout)[-1], {"count": 2})


class VerifyTest(unittest.TestCase):
    def test_suites_pass(self):
        for args in (["csp", "--max-N", "16"], ["wronski", "--cases", "100", "--seed", "7"],
                     ["llt", "--rect", "3x4"], ["dihedral", "--max-N", "12"], ["puiseux"]):
            res = run("verify", *args, "--json")
            self.assertEqual(res.returncode, 0, args)
            report = json.loads(res.stdout)
            self.assertTrue(all(case["ok"] for case in report["cases"]), args)
            self.assertIn("wall_time_s", res.stderr)

    def test_same_seed_same_report(self):
        a = run("verify", "wronski", "--cases", "50", "--seed", "3", "--json")
        b = run("verify", "wronski", "--cases", "50", "--seed", "3", "--json")
        self.assertEqual(a.stdout, b.stdout)

    def test_insufficient_precision_is_a_failure(self):
        # Two terms are not enough to certify the Wronskian of the series fibre.
        res = run("verify", "puiseux", "--truncation-order", "2", "--json")
        self.assertEqual(res.returncode, 1)

    def test_csp_verify_text(self):
        res = run("csp-verify", "--d", "2", "--n", "4")
        self.assertEqual(res.returncode, 0)
        self.assertIn("PASS cyclic 2x2 r=2", res.stdout)


class BadInputTest(unittest.TestCase):
    def test_exit_code_two(self):
        cases = [
            ["enumerate", "srt", "--shape", "[2,1", "--r", "2"],
            ["enumerate", "srt", "--shape", "[1,2]", "--r", "2"],
            ["enumerate", "bogus", "--shape", "[2]"],
            ["abacus", "--shape", "[2]", "--r", "0"],
            ["apply", "promote", "--tableau", '{"outer":[2,2],"inner":[],"rows":[[1,2],[4,3]]}'],
            ["csp-verify", "--d", "2", "--n", "4", "--r", "3"],
            ["verify", "csp", "--max-N", "notanumber"],
        ]
        for args in cases:
            res = run(*args)
            self.assertEqual(res.returncode, 2, (args, res.stdout, res.stderr))


class ApplyTest(unittest.TestCase):
    def test_promote_and_abacus(self):
        res = run("apply", "promote", "--tableau", '{"outer":[2,2],"inner":[],"rows":[[1,2],[3,4]]}')
        self.assertEqual(json.loads(res.stdout)["rows"], [[1, 3], [2, 4]])
        res = run("abacus", "--shape", "[8,4,4,4,2,1]", "--r", "4")
        out = json.loads(res.stdout)
        self.assertEqual(out["abacus"]["beads"], [1, 3, 6, 7, 8, 13])
        self.assertEqual(out["core"], [2, 1])


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    unittest.main()
