import json
import random
from fractions import Fraction

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from common.errors import DocumentParseError, NotSymmetric, ShapeMismatch, Singular
from diagram_operations.permutation_helper import all_permutations, multiply

from .data_definitions import GlTensor
from .linear_algebra import bareiss_rank, determinant, fraction_array, identity_matrix, inverse, solve_in_span, zeros
from .serializers import parse_sym_tensor, sym_tensor_to_document
from .tensor_helper import (
    compose_operators,
    gl_action,
    identity_operator,
    pair_tensor,
    permutation_operator,
    random_invertible,
    random_sym_tensor,
    rank_factorize,
    sym_from_pairs,
    tensor_product,
    trace_pair,
)

B1 = fraction_array([[1, 1], [0, 0]])
B2 = fraction_array([[0, 1], [0, 1]])


def matrix_unit(n, i, j):
    unit = zeros((n, n))
    unit[i, j] = Fraction(1)
    return unit


def gl_trace_casimir(n):
    return sym_from_pairs(n, [(matrix_unit(n, i, j), matrix_unit(n, j, i)) for i in range(n) for j in range(n)])


def counterexample_tensor():
    return sym_from_pairs(2, [(B1, B1), (B2, B2)])


class LinearAlgebraTests(SimpleTestCase):
    def test_rank(self):
        self.assertEqual(bareiss_rank(fraction_array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])), 2)
        self.assertEqual(bareiss_rank(zeros((3, 2))), 0)
        self.assertEqual(bareiss_rank(identity_matrix(4)), 4)
        self.assertEqual(bareiss_rank(fraction_array([[0, 0, 1], [0, 1, 0]])), 2)

    def test_rank_never_drops_when_rows_are_added(self):
        rng = random.Random(4)
        rows = []
        previous = 0
        for _ in range(6):
            rows.append([rng.randint(-2, 2) for _ in range(4)])
            rank = bareiss_rank(fraction_array(rows))
            self.assertGreaterEqual(rank, previous)
            previous = rank

    def test_determinant_and_inverse(self):
        matrix = fraction_array([[2, 1], [7, 4]])
        self.assertEqual(determinant(matrix), 1)
        self.assertTrue(np.all(matrix.dot(inverse(matrix)) == identity_matrix(2)))
        self.assertEqual(determinant(fraction_array([[0, 1], [1, 0]])), -1)
        with self.assertRaises(Singular):
            inverse(fraction_array([[1, 2], [2, 4]]))

    def test_random_inverse(self):
        rng = random.Random(9)
        for _ in range(5):
            h = random_invertible(3, rng)
            self.assertTrue(np.all(inverse(h).dot(h) == identity_matrix(3)))

    def test_solve_in_span(self):
        self.assertEqual(solve_in_span([B1, B2], B1 + 2 * B2), [1, 2])
        self.assertIsNone(solve_in_span([B1, B2], matrix_unit(2, 0, 1)))


class SymTensorTests(SimpleTestCase):
    def test_counterexample_from_pairs(self):
        r = counterexample_tensor()
        with open(settings.FIXTURES_DIR / "counterexample.json") as fixture:
            self.assertEqual(parse_sym_tensor(json.load(fixture)), r)
        self.assertEqual(r.entries[0, 0, 1, 1], 2)

    def test_gl_casimir_is_symmetric(self):
        r = gl_trace_casimir(2)
        self.assertEqual(r.entries[0, 1, 1, 0], 1)
        self.assertEqual(r.entries[0, 0, 0, 0], 1)
        self.assertEqual(r.entries[0, 1, 0, 1], 0)

    def test_empty_pairs(self):
        self.assertTrue(sym_from_pairs(3, []).is_zero())

    def test_asymmetric_pairs_are_rejected(self):
        with self.assertRaises(NotSymmetric) as raised:
            sym_from_pairs(2, [(B1, B2)])
        self.assertEqual(len(raised.exception.witness), 4)

    def test_shape_checked(self):
        with self.assertRaises(ShapeMismatch):
            sym_from_pairs(3, [(B1, B1)])

    def test_entries_are_read_only(self):
        r = counterexample_tensor()
        with self.assertRaises(ValueError):
            r.entries[0, 0, 0, 0] = Fraction(5)


class GlActionTests(SimpleTestCase):
    def test_identity_acts_trivially(self):
        r = counterexample_tensor()
        self.assertEqual(gl_action(identity_matrix(2), r), r)

    def test_group_action(self):
        rng = random.Random(21)
        r = random_sym_tensor(2, rng)
        for _ in range(3):
            g, h = random_invertible(2, rng), random_invertible(2, rng)
            self.assertEqual(gl_action(g.dot(h), r), gl_action(g, gl_action(h, r)))

    def test_casimir_is_invariant(self):
        r = gl_trace_casimir(2)
        self.assertEqual(gl_action(fraction_array([[2, 0], [0, 1]]), r), r)

    def test_singular_matrix(self):
        with self.assertRaises(Singular):
            gl_action(fraction_array([[1, 1], [1, 1]]), counterexample_tensor())


class RankFactorizeTests(SimpleTestCase):
    def test_ranks(self):
        self.assertEqual(rank_factorize(sym_from_pairs(2, [])), [])
        self.assertEqual(len(rank_factorize(counterexample_tensor())), 2)
        self.assertEqual(len(rank_factorize(gl_trace_casimir(2))), 4)

    def test_reconstruction(self):
        rng = random.Random(8)
        for n in (1, 2, 3):
            r = random_sym_tensor(n, rng)
            pairs = rank_factorize(r)
            self.assertEqual(len(pairs), bareiss_rank(r.as_matrix()))
            rebuilt = zeros((n,) * 4)
            for x, y in pairs:
                rebuilt = rebuilt + pair_tensor(x, y)
            self.assertTrue(np.all(rebuilt == r.entries))

    def test_rational_entries(self):
        c = B1 + B2
        r = sym_from_pairs(2, [(B1 * Fraction(1, 2), B1), (B2 * Fraction(2, 3), B2), (c * Fraction(-3, 5), c)])
        pairs = rank_factorize(r)
        self.assertEqual(len(pairs), bareiss_rank(r.as_matrix()))
        self.assertEqual(sym_from_pairs(2, pairs), r)


class GlTensorTests(SimpleTestCase):
    def test_trace_of_identities(self):
        for n, k in ((2, 0), (2, 2), (3, 1)):
            self.assertEqual(trace_pair(identity_operator(n, k), identity_operator(n, k)), n**k)

    def test_trace_of_matrix_units(self):
        e11 = matrix_unit(2, 0, 0)
        x = GlTensor(n=2, k=2, entries=np.multiply.outer(e11, e11))
        self.assertEqual(trace_pair(x, x), 1)

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeMismatch):
            trace_pair(identity_operator(2, 1), identity_operator(2, 2))

    def test_operator_view_round_trip(self):
        rng = random.Random(6)
        entries = fraction_array([rng.randint(-3, 3) for _ in range(2**4)], (2,) * 4)
        x = GlTensor(n=2, k=2, entries=entries)
        self.assertEqual(GlTensor.from_operator(2, 2, x.as_operator()), x)

    def test_permutation_operators_multiply(self):
        for pi in all_permutations(3):
            for sigma in all_permutations(3):
                product = compose_operators(permutation_operator(2, pi), permutation_operator(2, sigma))
                self.assertEqual(product, permutation_operator(2, multiply(pi, sigma)))

    def test_tensor_product_of_identities(self):
        self.assertEqual(tensor_product(identity_operator(2, 1), identity_operator(2, 2)), identity_operator(2, 3))
        self.assertEqual(tensor_product(identity_operator(2, 0), identity_operator(2, 1)), identity_operator(2, 1))


class SymTensorDocumentTests(SimpleTestCase):
    def test_round_trip(self):
        r = random_sym_tensor(2, random.Random(3))
        document = json.loads(json.dumps(sym_tensor_to_document(r)))
        self.assertEqual(parse_sym_tensor(document), r)

    def test_rationals_are_normalized(self):
        r = sym_from_pairs(1, [(fraction_array([[Fraction(2, 4)]]), fraction_array([[1]]))])
        self.assertEqual(sym_tensor_to_document(r)["entries"], [[1, 1, 1, 1, "1/2"]])

    def test_bad_documents(self):
        with self.assertRaises(DocumentParseError):
            parse_sym_tensor({"kind": "sym-tensor", "n": 2, "entries": [[1, 1, 1, "1"]]})
        with self.assertRaises(DocumentParseError):
            parse_sym_tensor({"kind": "sym-tensor", "n": 2, "entries": [[1, 1, 1, 1, "x"]]})
        with self.assertRaises(DocumentParseError):
            parse_sym_tensor({"kind": "diagram", "n": 2, "entries": []})
        with self.assertRaises(ShapeMismatch):
            parse_sym_tensor({"kind": "sym-tensor", "n": 2, "entries": [[1, 1, 3, 1, "1"]]})
        with open(settings.FIXTURES_DIR / "not-symmetric.json") as fixture:
            with self.assertRaises(NotSymmetric):
                parse_sym_tensor(json.load(fixture))
