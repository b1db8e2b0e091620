import json
import os
import random
import tempfile
from fractions import Fraction
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from common.errors import LabelMismatch, SizeBound, UsageError
from diagram_operations.data_definitions import ChordDiagram
from diagram_operations.permutation_helper import all_permutations
from diagram_operations.quantum_tangle import QuantumTangle
from diagram_operations.serializers import parse_quantum_tangle
from diagram_operations.tangle_helper import chord_tangle, permutation_tangle, theta_tangle, unit, vertexless_loop
from lie_operations.builtin_algebras import builtin
from lie_operations.lie_helper import casimir_tensor, weight_system
from partition_function_operations.partition_function_helper import eval_quantum, f_of
from tensor_operations.linear_algebra import fraction_array
from tensor_operations.serializers import parse_sym_tensor
from tensor_operations.tensor_helper import random_sym_tensor, sym_from_pairs

from .connection_matrix_helper import FAMILY_SAMPLED, connection_submatrix, exact_rank, rank_bound, rank_report, tangle_family
from .data_definitions import WeightSystemOracle
from .four_term_helper import is_multiplicative, is_weight_system, join_value, tau4
from .serializers import rank_report_to_document, weight_system_report_to_document
from .trace_helper import delta_check, delta_tangle, permutation_matrix, product_formula_check, product_formula_sides, theta

B1 = fraction_array([[1, 1], [0, 0]])
B2 = fraction_array([[0, 1], [0, 1]])


def counterexample():
    return f_of(sym_from_pairs(2, [(B1, B1), (B2, B2)]), name="counterexample")


def fixture(name):
    return str(settings.FIXTURES_DIR / name)


def without_tensor(f):
    """The same invariant with the contraction shortcut switched off"""
    return WeightSystemOracle(function=f.function, loop_value=f.loop_value, name=f.name)


class FourTermTests(SimpleTestCase):
    def test_tau4_shape(self):
        relation = tau4()
        self.assertEqual(relation.k, 3)
        self.assertEqual(len(relation), 4)
        self.assertEqual(sorted(coefficient for _, coefficient in relation.terms), [-1, -1, 1, 1])
        for tangle, _ in relation.terms:
            self.assertEqual(tangle.m, 2)

    def test_vanishes_for_lie_algebras(self):
        for name in ("sl2", "gl1", "gl2", "gl3", "abelian2"):
            r = casimir_tensor(*builtin(name))
            self.assertTrue(all(value == 0 for value in eval_quantum(r, tau4()).entries.flat), name)

    def test_does_not_vanish_for_other_tensors(self):
        r = counterexample().tensor
        self.assertTrue(any(value != 0 for value in eval_quantum(r, tau4()).entries.flat))
        r = random_sym_tensor(2, random.Random(0))
        self.assertTrue(any(value != 0 for value in eval_quantum(r, tau4()).entries.flat))

    def test_join_with_chordless_tangles(self):
        for pi in all_permutations(3):
            joined = tau4().join(QuantumTangle.from_tangle(permutation_tangle(1, 3, pi)))
            self.assertLessEqual(len(joined), 4)
            for diagram, _ in joined.diagrams():
                self.assertIsInstance(diagram, ChordDiagram)

    def test_join_value_with_and_without_shortcut(self):
        f = weight_system(*builtin("sl2"))
        t = chord_tangle(3, 0, 2)
        self.assertEqual(join_value(f, tau4(), t), 0)
        self.assertEqual(join_value(without_tensor(f), tau4(), t), 0)

    def test_lie_weight_systems(self):
        for name in ("sl2", "gl2", "gl3", "abelian1"):
            report = is_weight_system(weight_system(*builtin(name)), 2)
            self.assertTrue(report.ok, name)
            self.assertGreater(report.checked, 2)

    def test_counterexample_is_a_weight_system(self):
        self.assertTrue(is_weight_system(counterexample(), 2).ok)

    def test_non_invariant_tensor_fails(self):
        with open(settings.FIXTURES_DIR / "non-invariant-sym.json") as document:
            f = f_of(parse_sym_tensor(json.load(document)))
        report = is_weight_system(f, 1)
        self.assertFalse(report.ok)
        self.assertEqual(report.reason, "four-term relation")
        self.assertNotEqual(report.value, 0)
        self.assertEqual(report.counterexample.k, 3)
        document = weight_system_report_to_document(report, 1)
        self.assertEqual(document["counterexample"]["kind"], "tangle")

    def test_wrong_loop_value(self):
        f = counterexample()
        lying = WeightSystemOracle(function=f.function, loop_value=Fraction(3), tensor=f.tensor)
        report = is_weight_system(lying, 1)
        self.assertFalse(report.ok)
        self.assertEqual(report.counterexample, vertexless_loop())

    def test_multiplicativity_failure(self):
        square_of_chords = WeightSystemOracle(function=lambda d: Fraction(d.m * d.m), loop_value=Fraction(0))
        report = is_multiplicative(square_of_chords, 1)
        self.assertFalse(report.ok)
        self.assertEqual(report.reason, "multiplicativity")


class TraceTests(SimpleTestCase):
    def test_theta_of_unit(self):
        for name, n in (("gl2", 2), ("sl2", 2), ("gl3", 3)):
            f = weight_system(*builtin(name))
            for k in range(4):
                self.assertEqual(theta(f, QuantumTangle.identity(k)), n**k)

    def test_antisymmetrizer_trace_vanishes(self):
        for name, n in (("abelian1", 1), ("gl2", 2)):
            f = weight_system(*builtin(name))
            self.assertEqual(theta(f, delta_tangle(n)), 0)
        self.assertNotEqual(theta(weight_system(*builtin("gl2")), delta_tangle(1)), 0)

    def test_antisymmetrizer_squares_to_a_multiple(self):
        for n, factorial in ((1, 2), (2, 6)):
            delta = delta_tangle(n)
            self.assertEqual(delta.compose(delta), factorial * delta)

    def test_antisymmetrizer_size_guard(self):
        with self.assertRaises(SizeBound):
            delta_tangle(50)
        with self.assertRaises(UsageError):
            delta_tangle(-1)
        with self.assertRaises(UsageError):
            delta_check(weight_system(*builtin("gl2")), 2, -1, 1, random.Random(0))

    def test_antisymmetrizer_kills_sampled_tangles(self):
        for f in (weight_system(*builtin("gl2")), counterexample()):
            report = delta_check(f, 2, 20, 2, random.Random(1))
            self.assertTrue(report.ok)
            self.assertEqual(report.samples, 20)
            self.assertEqual(report.failures, 0)
        report = delta_check(without_tensor(weight_system(*builtin("sl2"))), 2, 5, 1, random.Random(2))
        self.assertTrue(report.ok)

    def test_antisymmetrizer_fails_below_the_loop_value(self):
        report = delta_check(weight_system(*builtin("gl2")), 1, 5, 1, random.Random(3))
        self.assertFalse(report.ok)
        self.assertNotEqual(report.theta, 0)

    def test_product_formula(self):
        f = weight_system(*builtin("sl2"))
        x = QuantumTangle.from_tangle(theta_tangle())
        for rho in all_permutations(2):
            for sigma in all_permutations(2):
                self.assertTrue(product_formula_check(f, x, 2, rho, sigma))
        rng = random.Random(5)
        permutations = list(all_permutations(3))
        for _ in range(10):
            left, right = product_formula_sides(f, x, 3, rng.choice(permutations), rng.choice(permutations))
            self.assertEqual(left, right)

    def test_product_formula_for_a_combination(self):
        f = counterexample()
        x = QuantumTangle.from_tangle(theta_tangle()) + QuantumTangle.identity(1).scale(Fraction(1, 2))
        for rho in all_permutations(2):
            for sigma in all_permutations(2):
                self.assertTrue(product_formula_check(f, x, 2, rho, sigma))

    def test_permutation_matrix_of_the_unit(self):
        f = weight_system(*builtin("gl2"))
        matrix = permutation_matrix(f, QuantumTangle.identity(1), 2)
        self.assertEqual(matrix.tolist(), [[4, 2], [2, 4]])

    def test_permutation_matrix_of_the_normalized_antisymmetrizer(self):
        f = weight_system(*builtin("abelian1"))
        idempotent = delta_tangle(1).scale(Fraction(1, 2))
        self.assertEqual(idempotent.compose(idempotent), idempotent)
        matrix = permutation_matrix(f, idempotent, 2)
        self.assertTrue(all(value == 0 for value in matrix.flat))
        with self.assertRaises(SizeBound):
            permutation_matrix(f, idempotent, 9)


class ConnectionMatrixTests(SimpleTestCase):
    def test_rank_bound_for_one_label(self):
        for name in ("sl2", "gl2"):
            report = rank_report(weight_system(*builtin(name)), 1, 2)
            self.assertTrue(report.ok, name)
            self.assertLessEqual(report.rank, 4)
            self.assertEqual(report.bound, 4)

    def test_rank_bound_for_sampled_two_tangles(self):
        report = rank_report(counterexample(), 2, 2, family=FAMILY_SAMPLED, samples=40, rng=random.Random(7))
        self.assertEqual(report.size, (40, 40))
        self.assertLessEqual(report.rank, 16)
        self.assertTrue(report.ok)
        self.assertEqual(rank_report_to_document(report)["family"], "sampled:chords<=2")

    def test_abelian_rank_is_one(self):
        f = weight_system(*builtin("abelian1"))
        report = rank_report(f, 1, 2)
        self.assertEqual(report.rank, 1)
        self.assertEqual(rank_bound(f, 1), 1)

    def test_submatrix_is_symmetric(self):
        f = counterexample()
        tangles = tangle_family(1, 2)
        submatrix = connection_submatrix(f, 1, tangles, tangles)
        self.assertTrue((submatrix.entries == submatrix.entries.T).all())
        slow = connection_submatrix(without_tensor(f), 1, tangles[:6], tangles[:6])
        self.assertTrue((slow.entries == submatrix.entries[:6, :6]).all())
        self.assertEqual(exact_rank(slow), exact_rank(slow.entries))

    def test_submatrix_guards(self):
        f = counterexample()
        with self.assertRaises(SizeBound):
            connection_submatrix(f, 1, tangle_family(1, 2), tangle_family(1, 2), max_size=3)
        with self.assertRaises(LabelMismatch):
            connection_submatrix(f, 1, [unit(1)], [unit(2)])

    def test_fractional_bound(self):
        f = WeightSystemOracle(function=lambda d: Fraction(1), loop_value=Fraction(1, 2))
        self.assertEqual(rank_bound(f, 1), Fraction(1, 4))


class CheckCommandTests(SimpleTestCase):
    def run_command(self, name, *args):
        out = StringIO()
        call_command(name, *args, stdout=out)
        return json.loads(out.getvalue())

    def test_check_4t(self):
        self.assertTrue(self.run_command("check_4t", "--builtin", "sl2")["ok"])
        self.assertTrue(self.run_command("check_4t", "--tensor", fixture("counterexample.json"), "--max-chords", "2")["ok"])
        with self.assertRaises(CommandError) as raised:
            call_command("check_4t", "--tensor", fixture("non-invariant-sym.json"), "--max-chords", "1", stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 1)

    def test_rank(self):
        document = self.run_command("rank", "--builtin", "gl2", "-k", "1", "--max-chords", "2")
        self.assertTrue(document["ok"])
        self.assertEqual(document["bound"], 4)

    def test_delta_check(self):
        document = self.run_command("delta_check", "--builtin", "gl2", "--n", "2", "--samples", "20")
        self.assertTrue(document["ok"])
        self.assertEqual(document["theta"], "0")
        with self.assertRaises(CommandError) as raised:
            call_command("delta_check", "--builtin", "gl2", "--n", "1", "--max-chords", "1", stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 1)

    def test_negative_arguments_exit_2(self):
        for args in (("--n", "-1"), ("--n", "2", "--samples", "-3"), ("--n", "2", "--max-chords", "-1")):
            with self.assertRaises(CommandError) as raised:
                call_command("delta_check", "--builtin", "gl2", *args, stdout=StringIO())
            self.assertEqual(raised.exception.returncode, 2, args)
        with self.assertRaises(CommandError) as raised:
            call_command("rank", "--builtin", "gl2", "-k", "-1", stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 2)

    def test_dump_delta(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "delta.json")
            self.run_command("delta_check", "--builtin", "gl2", "--n", "2", "--samples", "5", "--max-chords", "1", "--dump-delta", path)
            with open(path) as dump:
                self.assertEqual(parse_quantum_tangle(json.load(dump)), delta_tangle(2))

    def test_tsv_output(self):
        out = StringIO()
        call_command("rank", "--builtin", "abelian1", "--format", "tsv", stdout=out)
        self.assertEqual(out.getvalue().strip().split("\t")[-1], "true")
