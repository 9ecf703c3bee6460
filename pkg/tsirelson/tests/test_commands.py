import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from main import main
from tsirelson.certificates import w3_matrix
from tsirelson.exceptions import SolverError
from tsirelson.scenario import beta_t, chsh, tsirelson_point
from tsirelson.services.serialization import (
    behavior_to_dict,
    certificate_to_dict,
    dumps,
    expression_from_dict,
    expression_to_dict,
)
from tsirelson.slices import expr_from_slice


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name: str, data) -> str:
        path = self.tmp / name
        path.write_text(data if isinstance(data, str) else dumps(data))
        return str(path)

    def run_command(self, *args, **options) -> str:
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code: int, *args, **options):
        with self.assertRaises(CommandError) as caught:
            self.run_command(*args, **options)
        self.assertEqual(caught.exception.returncode, code)


class ExactCheckCommandTests(CommandTestCase):
    def test_verify_w3(self):
        self.assertEqual(self.run_command("verify_w3").strip(), "identity exact; PSD; rank 4")

    def test_chsh_decompose(self):
        output = self.run_command("chsh_decompose")
        self.assertIn("midpoint equals CHSH: False", output)
        self.assertIn("= CHSH/(2 sqrt 2) exactly", output)

    def test_expose_check(self):
        output = self.run_command("expose_check")
        self.assertIn("beta_T . P* = 1/1", output)
        self.assertIn("dimension pair of the Tsirelson point: (0, 2)", output)

    def test_nullifiers(self):
        lines = self.run_command("nullifiers", level="L1").splitlines()
        self.assertEqual(lines[0], "level L1: 2 nullifiers")
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("K0: "))

    def test_octagon_csv(self):
        lines = self.run_command("octagon").splitlines()
        self.assertEqual(lines[0], "k,r0,r1")
        self.assertEqual(lines[1], "0,1/1-1/2*s2,0/1")
        self.assertEqual(len(lines), 9)

    def test_octagon_svg_to_file(self):
        path = self.tmp / "octagon.svg"
        self.run_command("octagon", format="svg", output=str(path))
        text = path.read_text()
        self.assertIn('viewBox="0 0 1000 1000"', text)
        self.assertIn("<polygon", text)


class FileCommandTests(CommandTestCase):
    def test_local_bound(self):
        self.assertEqual(self.run_command("local_bound", self.write("chsh.json", expression_to_dict(chsh()))).strip(), "2")
        path = self.write("chsh_float.json", expression_to_dict(chsh().to_float()))
        self.assertEqual(self.run_command("local_bound", path).strip(), "2")

    def test_local_bound_maximizers(self):
        output = self.run_command("local_bound", self.write("beta.json", expression_to_dict(beta_t())), verbosity=2)
        self.assertEqual(output.splitlines()[0], "1")
        self.assertIn("attained at L(-1,-1,-1,+1)", output)
        self.assertIn("attained at L(-1,+1,+1,-1)", output)

    def test_pair(self):
        expression = self.write("beta.json", expression_to_dict(beta_t()))
        behavior = self.write("pt.json", behavior_to_dict(tsirelson_point()))
        self.assertEqual(self.run_command("pair", expression, behavior).strip(), "1")

    def test_slice_expr_round_trip(self):
        output = self.run_command("slice_expr", r0="1/1-1/2*s2", r1="0/1", exact=True)
        self.assertEqual(expression_from_dict(json.loads(output)), beta_t())

    def test_slice_expr_float(self):
        output = self.run_command("slice_expr", r0="0.1", r1="-0.05")
        beta = expression_from_dict(json.loads(output))
        self.assertEqual(beta.kind, "float")
        self.assertAlmostEqual(beta.b[0], -0.1)

    def test_orbit(self):
        document = json.loads(self.run_command("orbit", self.write("beta.json", expression_to_dict(beta_t()))))
        self.assertEqual([entry["k"] for entry in document["orbit"]], list(range(8)))
        self.assertEqual(document["orbit"][0]["slice"], ["1/1-1/2*s2", "0/1"])
        self.assertEqual(document["orbit"][2]["slice"], ["0/1", "1/1-1/2*s2"])

    def test_verify_cert(self):
        path = self.write("w3.json", certificate_to_dict(w3_matrix()))
        self.assertEqual(self.run_command("verify_cert", path).strip(), "identity exact; PSD; rank 4")

    def test_verify_cert_failure(self):
        document = certificate_to_dict(w3_matrix())
        document["W"][0][0] = "1/1"
        self.assertExitCode(1, "verify_cert", self.write("bad.json", document))

    def test_qubit_stats(self):
        document = json.loads(self.run_command("qubit_stats"))
        self.assertEqual(document["kind"], "float")
        self.assertAlmostEqual(document["K"][0][0], 2 ** -0.5)
        self.assertAlmostEqual(document["mA"][0], 0.0)


class SolverCommandTests(CommandTestCase):
    def test_sos_search_writes_a_certificate(self):
        expression = self.write("beta.json", expression_to_dict(beta_t()))
        certificate = self.tmp / "cert.json"
        self.run_command("sos_search", expression, output=str(certificate))
        output = self.run_command("verify_cert", str(certificate), tol=1e-6)
        self.assertIn("PSD; rank", output)

    def test_sos_search_without_certificate(self):
        expression = self.write("beta.json", expression_to_dict(beta_t()))
        self.assertExitCode(1, "sos_search", expression, level="L1AB")

    def test_npa_bound(self):
        output = self.run_command("npa_bound", self.write("chsh.json", expression_to_dict(chsh())), level="L1")
        self.assertAlmostEqual(float(output), 2 * 2 ** 0.5, delta=1e-5)

    def test_solver_failure(self):
        expression = self.write("chsh.json", expression_to_dict(chsh()))
        with mock.patch(
            "tsirelson.management.commands.npa_bound.npa_bound", side_effect=SolverError("no progress")
        ):
            self.assertExitCode(3, "npa_bound", expression)

    def test_hessian_rmax(self):
        self.assertAlmostEqual(float(self.run_command("hessian_rmax", gamma=0.0)), 0.5, delta=1e-3)

    def test_face_scan_json(self):
        expression = self.write("beta.json", expression_to_dict(beta_t()))
        document = json.loads(self.run_command("face_scan", expression, restarts=50, format="json", seed=0))
        self.assertEqual(len(document["clusters"]), 3)
        self.assertEqual(document["clusters"][0]["classification"], "P_T")

    def test_dual_membership(self):
        expression = self.write("beta2.json", expression_to_dict(beta_t().scale(2)))
        document = json.loads(self.run_command("dual_membership", expression, restarts=50))
        self.assertEqual(document["verdict"], "outside")
        self.assertEqual(document["witness_source"], "P_T")


class FigureCommandTests(CommandTestCase):
    def test_fig_slice_csv(self):
        lines = self.run_command("fig_slice_data").splitlines()
        self.assertEqual(lines[0], "layer,k,r0,r1")
        layers = [line.split(",")[0] for line in lines[1:]]
        self.assertEqual(layers.count("octagon"), 8)
        self.assertEqual(layers.count("second_order"), 64)
        self.assertEqual(layers.count("almost_quantum"), 64)
        self.assertEqual(layers.count("chsh"), 1)

    def test_fig_slice_svg(self):
        text = self.run_command("fig_slice_data", format="svg")
        for name in ("octagon", "second_order", "almost_quantum", "chsh"):
            self.assertIn(f'id="{name}"', text)

    def test_proj3d_is_deterministic(self):
        first = self.run_command("proj3d_data", axes="K00,K11,mA0", samples=5, seed=7)
        second = self.run_command("proj3d_data", axes="K00,K11,mA0", samples=5, seed=7)
        self.assertEqual(first, second)
        lines = first.splitlines()
        self.assertEqual(lines[0], "kind,x,y,z")
        self.assertEqual(len(lines), 1 + 5 + 16 + 1)

    def test_proj3d_axes_file(self):
        axes = self.write("axes.json", [expression_to_dict(chsh()), expression_to_dict(beta_t()), expression_to_dict(expr_from_slice(0, 0))])
        lines = self.run_command("proj3d_data", axes=axes, samples=0).splitlines()
        self.assertTrue(lines[-1].startswith("tsirelson,"))

    def test_bad_axes(self):
        self.assertExitCode(2, "proj3d_data", axes="K00,K99")


class InputErrorTests(CommandTestCase):
    def test_malformed_json(self):
        self.assertExitCode(2, "local_bound", self.write("bad.json", "{not json"))

    def test_missing_file(self):
        self.assertExitCode(2, "local_bound", str(self.tmp / "missing.json"))

    def test_wrong_kind(self):
        self.assertExitCode(2, "local_bound", self.write("bad.json", {"kind": "complex", "a": [0, 0], "b": [0, 0], "c": [[0, 0], [0, 0]]}))

    def test_out_of_range_behavior(self):
        expression = self.write("beta.json", expression_to_dict(beta_t()))
        behavior = self.write("p.json", {"kind": "float", "mA": [2, 0], "mB": [0, 0], "K": [[0, 0], [0, 0]]})
        self.assertExitCode(2, "pair", expression, behavior)

    def test_bad_exact_scalar(self):
        self.assertExitCode(2, "slice_expr", r0="one", r1="0/1", exact=True)


class EntryPointTests(CommandTestCase):
    def test_hyphenated_command_and_exit_status(self):
        with mock.patch("sys.stderr", new_callable=StringIO):
            with self.assertRaises(SystemExit) as caught:
                main(["local-bound", str(self.tmp / "missing.json")])
        self.assertEqual(caught.exception.code, 2)
