import json
import random

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase

from common.errors import Degenerate, JacobiFails, NotAdInvariant, NotAntisymmetric, NotARepresentation, NotBracketClosed, NotSymmetricForm, UnknownName
from diagram_operations.tangle_helper import theta_diagram, vertexless_loop
from tensor_operations.linear_algebra import fraction_array, identity_matrix, zeros
from tensor_operations.tensor_helper import random_invertible, sym_from_pairs

from .builtin_algebras import builtin, matrix_unit
from .data_definitions import MetrizedLieAlgebra, Representation
from .lie_helper import casimir_tensor, change_basis, check_metrized, check_representation, matrix_lie_algebra, weight_system
from .serializers import lie_to_document, parse_lie


def load_fixture(name):
    with open(settings.FIXTURES_DIR / name) as fixture:
        return json.load(fixture)


def abelian(gram):
    dim = len(gram)
    return MetrizedLieAlgebra(dim=dim, structure=zeros((dim, dim, dim)), gram=fraction_array(gram))


class CheckMetrizedTests(SimpleTestCase):
    def test_builtins_pass(self):
        for name in ("sl2", "gl1", "gl2", "gl3", "abelian2"):
            g, rho = builtin(name)
            check_metrized(g)
            check_representation(g, rho)

    def test_abelian_with_identity_form(self):
        check_metrized(abelian(identity_matrix(3)))

    def test_perturbed_form_is_not_invariant(self):
        g, _ = parse_lie(load_fixture("sl2.json"))
        gram = np.array(g.gram)
        gram[2, 2] = 3
        with self.assertRaises(NotAdInvariant) as raised:
            check_metrized(MetrizedLieAlgebra(dim=3, structure=g.structure, gram=gram))
        self.assertEqual(raised.exception.witness, (1, 2, 3))
        with self.assertRaises(NotAdInvariant):
            parse_lie(load_fixture("sl2-perturbed.json"))

    def test_bracket_not_antisymmetric(self):
        structure = zeros((2, 2, 2))
        structure[0, 1, 0] = 1
        structure[1, 0, 0] = 1
        with self.assertRaises(NotAntisymmetric) as raised:
            check_metrized(MetrizedLieAlgebra(dim=2, structure=structure, gram=identity_matrix(2)))
        self.assertEqual(raised.exception.witness, (1, 2))

    def test_jacobi_identity_fails(self):
        structure = zeros((3, 3, 3))
        structure[0, 1, 0], structure[1, 0, 0] = 1, -1
        structure[1, 2, 1], structure[2, 1, 1] = 1, -1
        with self.assertRaises(JacobiFails) as raised:
            check_metrized(MetrizedLieAlgebra(dim=3, structure=structure, gram=identity_matrix(3)))
        self.assertEqual(raised.exception.witness, (1, 2, 3))

    def test_form_defects(self):
        with self.assertRaises(NotSymmetricForm) as raised:
            check_metrized(abelian([[1, 1], [0, 1]]))
        self.assertEqual(raised.exception.witness, (1, 2))
        with self.assertRaises(Degenerate) as raised:
            check_metrized(abelian([[1, 0], [0, 0]]))
        self.assertEqual(raised.exception.witness, 2)

    def test_representation_must_respect_the_bracket(self):
        g, rho = builtin("sl2")
        images = (rho.images[0], rho.images[1], identity_matrix(2))
        with self.assertRaises(NotARepresentation) as raised:
            check_representation(g, Representation(n=2, images=images))
        self.assertEqual(raised.exception.witness, (1, 2))


class CasimirTests(SimpleTestCase):
    def test_gl_casimir(self):
        for n in (1, 2, 3):
            g, rho = builtin("gl{n}".format(n=n))
            pairs = [(matrix_unit(n, i, j), matrix_unit(n, j, i)) for i in range(n) for j in range(n)]
            self.assertEqual(casimir_tensor(g, rho), sym_from_pairs(n, pairs))

    def test_zero_action(self):
        g = abelian([[1]])
        rho = Representation(n=2, images=(zeros((2, 2)),))
        self.assertTrue(casimir_tensor(g, rho).is_zero())

    def test_basis_independence(self):
        rng = random.Random(17)
        for name in ("sl2", "gl2"):
            g, rho = builtin(name)
            r = casimir_tensor(g, rho)
            for _ in range(3):
                moved_g, moved_rho = change_basis(g, rho, random_invertible(g.dim, rng))
                check_metrized(moved_g)
                self.assertEqual(casimir_tensor(moved_g, moved_rho), r)

    def test_sl2_weight_system(self):
        phi = weight_system(*builtin("sl2"))
        self.assertEqual(phi(vertexless_loop()), 2)
        self.assertEqual(phi(theta_diagram()), 3)
        self.assertEqual(phi.loop_value, 2)

    def test_gl2_theta(self):
        self.assertEqual(weight_system(*builtin("gl(2)"))(theta_diagram()), 4)


class BuiltinTests(SimpleTestCase):
    def test_sl2(self):
        g, rho = builtin("sl2")
        self.assertEqual(g.dim, 3)
        self.assertTrue(np.all(g.gram == fraction_array([[0, 1, 0], [1, 0, 0], [0, 0, 2]])))
        self.assertEqual(rho.n, 2)

    def test_names(self):
        self.assertEqual(builtin("gl(2)")[0].dim, 4)
        self.assertEqual(builtin("GL2")[0].dim, 4)
        g, rho = builtin("abelian1")
        self.assertEqual((g.dim, rho.n), (1, 1))
        self.assertEqual(casimir_tensor(g, rho).entries[0, 0, 0, 0], 1)
        for name in ("sl3", "gl0", "gl7", "so3", ""):
            with self.assertRaises(UnknownName):
                builtin(name)

    def test_span_not_closed(self):
        b1 = fraction_array([[1, 1], [0, 0]])
        b2 = fraction_array([[0, 1], [0, 1]])
        with self.assertRaises(NotBracketClosed) as raised:
            matrix_lie_algebra([b1, b2])
        self.assertEqual(raised.exception.witness, (1, 2))


class LieDocumentTests(SimpleTestCase):
    def test_fixture_matches_builtin(self):
        self.assertEqual(parse_lie(load_fixture("sl2.json")), builtin("sl2"))

    def test_round_trip(self):
        for name in ("sl2", "gl2"):
            g, rho = builtin(name)
            self.assertEqual(parse_lie(json.loads(json.dumps(lie_to_document(g, rho)))), (g, rho))
