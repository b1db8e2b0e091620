import random
from fractions import Fraction
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from diagram_operations.enumeration_helper import enumerate_diagrams_up_to
from diagram_operations.permutation_helper import all_permutations
from diagram_operations.tangle_helper import (
    compose,
    disjoint_union,
    dumbbell_diagram,
    is_connected,
    join,
    permutation_tangle,
    random_diagram,
    random_relabeling,
    random_tangle,
    relabel,
    shift_union,
    theta_diagram,
    unit,
    vertexless_loop,
)
from tensor_operations.linear_algebra import fraction_array
from tensor_operations.tensor_helper import (
    compose_operators,
    gl_action,
    identity_operator,
    permutation_operator,
    random_invertible,
    random_sym_tensor,
    sym_from_pairs,
    tensor_product,
    trace_pair,
)

from .network_helper import TensorNetwork
from .partition_function_helper import eval_diagram, eval_diagram_bruteforce, eval_edge_coloring, eval_tangle, f_of

B1 = fraction_array([[1, 1], [0, 0]])
B2 = fraction_array([[0, 1], [0, 1]])


def counterexample_tensor():
    return sym_from_pairs(2, [(B1, B1), (B2, B2)])


def fixture(name):
    return str(settings.FIXTURES_DIR / name)


class TensorNetworkTests(SimpleTestCase):
    def test_matrix_product(self):
        network = TensorNetwork()
        network.add(fraction_array([[1, 2], [3, 4]]), ["a", "x"])
        network.add(fraction_array([[0, 1], [1, 0]]), ["x", "b"])
        result = network.result(["a", "b"])
        self.assertEqual(result.tolist(), [[2, 1], [4, 3]])

    def test_self_trace(self):
        network = TensorNetwork()
        network.add(fraction_array([[1, 2], [3, 4]]), ["x", "x"])
        self.assertEqual(network.result([])[()], 5)

    def test_open_legs_are_checked(self):
        network = TensorNetwork()
        network.add(fraction_array([1, 1]), ["a"])
        with self.assertRaises(ValueError):
            network.result(["b"])


class DiagramValueTests(SimpleTestCase):
    def test_loop_value_is_n(self):
        rng = random.Random(1)
        for n in (1, 2, 3):
            for _ in range(5):
                r = random_sym_tensor(n, rng)
                self.assertEqual(eval_diagram(r, vertexless_loop()), n)
                self.assertEqual(eval_diagram(r, disjoint_union(vertexless_loop(), vertexless_loop())), n * n)

    def test_multiplicative_on_small_diagrams(self):
        r = random_sym_tensor(2, random.Random(2))
        diagrams = enumerate_diagrams_up_to(2)
        for c in diagrams:
            for d in diagrams:
                self.assertEqual(eval_diagram(r, disjoint_union(c, d)), eval_diagram(r, c) * eval_diagram(r, d))

    def test_three_evaluations_agree(self):
        rng = random.Random(3)
        diagrams = enumerate_diagrams_up_to(3)
        for _ in range(5):
            r = random_sym_tensor(2, rng)
            for c in diagrams:
                value = eval_diagram(r, c)
                self.assertEqual(eval_diagram_bruteforce(r, c), value)
                self.assertEqual(eval_edge_coloring(r, c), value)

    def test_isomorphism_invariance(self):
        rng = random.Random(5)
        r = random_sym_tensor(2, rng)
        for _ in range(100):
            m = rng.randint(1, 3)
            c = random_diagram(m, rng)
            self.assertEqual(eval_diagram(r, relabel(c, random_relabeling(m, rng))), eval_diagram(r, c))

    def test_gl_invariance(self):
        rng = random.Random(11)
        r = random_sym_tensor(2, rng)
        diagrams = enumerate_diagrams_up_to(3)
        for _ in range(3):
            moved = gl_action(random_invertible(2, rng), r)
            for c in diagrams:
                self.assertEqual(eval_diagram(moved, c), eval_diagram(r, c))

    def test_counterexample_is_two_on_connected_diagrams(self):
        r = counterexample_tensor()
        for c in enumerate_diagrams_up_to(4):
            if c.m > 0 and is_connected(c):
                self.assertEqual(eval_diagram(r, c), 2, c)
        self.assertEqual(eval_edge_coloring(r, dumbbell_diagram()), 2)
        self.assertEqual(eval_diagram(r, theta_diagram()), 2)

    def test_counterexample_moved_by_gl(self):
        r = gl_action(fraction_array([[2, 0], [0, 1]]), counterexample_tensor())
        for c in enumerate_diagrams_up_to(2):
            if c.m > 0 and is_connected(c):
                self.assertEqual(eval_diagram(r, c), 2)

    def test_oracle(self):
        f = f_of(counterexample_tensor())
        self.assertEqual(f.loop_value, 2)
        self.assertEqual(f(theta_diagram()), Fraction(2))


class TanglePartitionFunctionTests(SimpleTestCase):
    def test_unit_is_identity(self):
        r = random_sym_tensor(2, random.Random(4))
        for k in range(3):
            self.assertEqual(eval_tangle(r, unit(k)), identity_operator(2, k))

    def test_permutation_tangles(self):
        r = random_sym_tensor(2, random.Random(4))
        for pi in all_permutations(3):
            self.assertEqual(eval_tangle(r, permutation_tangle(1, 3, pi)), permutation_operator(2, pi))

    def test_trace_identity(self):
        rng = random.Random(12)
        r = random_sym_tensor(2, rng)
        for _ in range(50):
            k = rng.randint(0, 2)
            s = random_tangle(k, rng.randint(0, 2), rng)
            t = random_tangle(k, rng.randint(0, 2), rng)
            self.assertEqual(eval_diagram(r, join(s, t)), trace_pair(eval_tangle(r, s), eval_tangle(r, t)))

    def test_composition_and_shifted_union(self):
        rng = random.Random(13)
        r = random_sym_tensor(2, rng)
        for _ in range(20):
            s = random_tangle(2, rng.randint(0, 2), rng)
            t = random_tangle(2, rng.randint(0, 2), rng)
            self.assertEqual(eval_tangle(r, compose(s, t)), compose_operators(eval_tangle(r, s), eval_tangle(r, t)))
            u = random_tangle(1, rng.randint(0, 1), rng)
            self.assertEqual(eval_tangle(r, shift_union(s, u)), tensor_product(eval_tangle(r, s), eval_tangle(r, u)))


class EvalCommandTests(SimpleTestCase):
    def run_eval(self, *args):
        out = StringIO()
        call_command("eval", *args, stdout=out)
        return out.getvalue().strip()

    def test_builtin_values(self):
        self.assertEqual(self.run_eval("--builtin", "gl2", "--diagram", fixture("theta.json")), "4")
        self.assertEqual(self.run_eval("--builtin", "sl2", "--diagram", fixture("theta.json")), "3")
        self.assertEqual(self.run_eval("--builtin", "sl2", "--diagram", fixture("loop.json")), "2")

    def test_tensor_and_lie_documents(self):
        self.assertEqual(self.run_eval("--tensor", fixture("counterexample.json"), "--diagram", fixture("theta.json")), "2")
        self.assertEqual(self.run_eval("--tensor", fixture("counterexample.json"), "--diagram", fixture("dumbbell.json")), "2")
        self.assertEqual(self.run_eval("--lie", fixture("sl2.json"), "--diagram", fixture("theta.json")), "3")

    def test_exit_codes(self):
        cases = [
            (("--tensor", fixture("counterexample.json"), "--diagram", fixture("truncated.json")), 2),
            (("--tensor", fixture("counterexample.json"), "--diagram", fixture("missing.json")), 2),
            (("--tensor", fixture("counterexample.json"), "--diagram", fixture("not-a-bijection.json")), 3),
            (("--tensor", fixture("not-symmetric.json"), "--diagram", fixture("theta.json")), 3),
            (("--lie", fixture("sl2-perturbed.json"), "--diagram", fixture("theta.json")), 3),
            (("--builtin", "so3", "--diagram", fixture("theta.json")), 3),
        ]
        for args, returncode in cases:
            with self.assertRaises(CommandError) as raised:
                self.run_eval(*args)
            self.assertEqual(raised.exception.returncode, returncode, args)
