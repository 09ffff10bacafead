import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout

from src.cli.commands import run


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = run(list(argv))
    return code, out.getvalue()


class TestCommands(unittest.TestCase):

    def test_repsets(self):
        code, out = invoke("repsets", "A", "4", "--p", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "42")

    def test_cores_json(self):
        code, out = invoke("cores", "B", "2", "--json")
        payload = json.loads(out)
        self.assertEqual(code, 0)
        self.assertEqual(payload["total"], 1)
        self.assertEqual(payload["forms"], {"[2,4,1]": 1})
        self.assertEqual(payload["classes"], {"F1": [1]})

    def test_graph(self):
        code, out = invoke("graph", "B", "2", "1", "--json")
        payload = json.loads(out)
        self.assertEqual((payload["I"], payload["J"]), ([1], [2]))
        self.assertEqual(payload["equation"], "s_2(a_3 t_1 + a_4 t_1 s_2)")

    def test_missing_core(self):
        code, _ = invoke("graph", "B", "2", "5")
        self.assertEqual(code, 2)

    def test_solve_core_diagnostics(self):
        code, out = invoke("solve-core", "B", "2", "1", "--q", "4", "--diagnostics", "--json")
        payload = json.loads(out)
        self.assertEqual(payload["histogram"], {"q/2": 36})
        self.assertEqual(len(payload["per_a"]), 9)
        self.assertTrue(all(row["x"] == row["y"] for row in payload["per_a"]))

    def test_numeric_census(self):
        code, out = invoke("census", "B", "2", "--q", "2", "--json")
        payload = json.loads(out)
        self.assertEqual(code, 0)
        self.assertEqual(payload["total"], 10)
        self.assertEqual(payload["counts"], {"1": 8, "2": 2})

    def test_symbolic_census_deterministic(self):
        first = invoke("census", "B", "2", "--symbolic", "--json")
        second = invoke("census", "B", "2", "--symbolic", "--json")
        self.assertEqual(first, second)
        self.assertIsNone(json.loads(first[1])["malle"])

    def test_out_of_scope(self):
        code, out = invoke("census", "F", "4", "--p", "3")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")

    def test_oracle(self):
        self.assertEqual(invoke("oracle", "classes", "B", "2"), (0, "10\n"))
        self.assertEqual(invoke("oracle", "abelianization", "B", "2", "--q", "4"), (0, "16\n"))
        code, out = invoke("oracle", "core-classes", "B", "2", "1", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {"classes": 10, "predicted": 10})

    def test_table(self):
        code, out = invoke("table", "B", "2")
        self.assertEqual(code, 0)
        self.assertTrue(out.strip())


if __name__ == '__main__':
    unittest.main()
