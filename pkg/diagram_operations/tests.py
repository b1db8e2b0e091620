import itertools
import json
import random
from fractions import Fraction
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from common.data_definitions import CANONICAL_MAX_CHORDS
from common.errors import DanglingLabel, DocumentParseError, LabelMismatch, NotABijection, SizeBound, UsageError
from common.utils import load_json_document

from .data_definitions import ChordDiagram, Tangle, validate
from .enumeration_helper import enumerate_diagrams, enumerate_tangles, enumerate_tangles_up_to
from .permutation_helper import all_permutations, hyperoctahedral_group, multiply, orbit_count
from .quantum_tangle import QuantumTangle
from .serializers import (
    diagram_to_document,
    parse_diagram,
    parse_quantum_tangle,
    parse_tangle,
    quantum_tangle_to_document,
    tangle_to_document,
)
from .tangle_helper import (
    canonical_form,
    chord_tangle,
    components,
    compose,
    copy_permutation_tangle,
    disjoint_union,
    dumbbell_diagram,
    empty_diagram,
    is_connected,
    is_isomorphic,
    join,
    permutation_tangle,
    random_relabeling,
    random_tangle,
    relabel,
    shift_union,
    theta_diagram,
    theta_tangle,
    unit,
    vertexless_loop,
)


class ValidationTests(SimpleTestCase):
    def test_vertexless_loop_and_theta_are_valid(self):
        validate(vertexless_loop())
        validate(theta_diagram())
        self.assertEqual(vertexless_loop().loops, 1)

    def test_vertex_entered_twice(self):
        with self.assertRaises(NotABijection) as raised:
            ChordDiagram(m=1, succ=(1, 1))
        self.assertEqual(raised.exception.witness, (0, 1, 1))

    def test_sink_outside_labels(self):
        with self.assertRaises(DanglingLabel):
            Tangle(k=1, m=0, wiring=(1,))

    def test_random_maps_against_degree_count(self):
        rng = random.Random(7)
        for _ in range(1000):
            k = rng.randrange(3)
            m = rng.randrange(3)
            size = 2 * m + k
            images = [rng.randrange(size) for _ in range(size)]
            in_degrees = [images.count(v) for v in range(size)]
            expected = all(d == 1 for d in in_degrees)
            try:
                Tangle(k=k, m=m, wiring=images)
                accepted = True
            except NotABijection:
                accepted = False
            self.assertEqual(accepted, expected, images)


class CanonicalFormTests(SimpleTestCase):
    def test_theta_is_fixed_by_every_relabeling(self):
        for h in hyperoctahedral_group(1):
            self.assertEqual(canonical_form(relabel(theta_diagram(), h)), canonical_form(theta_diagram()))

    def test_idempotent_on_random_tangles(self):
        rng = random.Random(1)
        for _ in range(100):
            t = random_tangle(rng.randrange(3), rng.randrange(5), rng)
            once = canonical_form(t)
            self.assertEqual(canonical_form(once), once)

    def test_constant_on_orbits(self):
        for m in range(4):
            for diagram in enumerate_diagrams(m):
                for h in hyperoctahedral_group(m):
                    self.assertEqual(canonical_form(relabel(diagram, h)), diagram)
        rng = random.Random(3)
        for _ in range(20):
            t = random_tangle(1, 4, rng)
            self.assertEqual(canonical_form(relabel(t, random_relabeling(4, rng))), canonical_form(t))

    def test_crossed_diagram_with_swapped_chords(self):
        crossed = ChordDiagram(m=2, succ=(2, 3, 1, 0))
        swapped = relabel(crossed, (2, 3, 0, 1))
        self.assertNotEqual(crossed, swapped)
        self.assertEqual(canonical_form(crossed), canonical_form(swapped))
        brute_force = min(relabel(crossed, h).succ for h in hyperoctahedral_group(2))
        self.assertEqual(len(hyperoctahedral_group(2)), 8)
        self.assertEqual(canonical_form(crossed).succ, brute_force)

    def test_is_isomorphic(self):
        self.assertTrue(is_isomorphic(theta_diagram(), relabel(theta_diagram(), (1, 0))))
        self.assertFalse(is_isomorphic(theta_diagram(), dumbbell_diagram()))
        self.assertFalse(is_isomorphic(vertexless_loop(), empty_diagram()))

    def test_refuses_too_many_chords(self):
        with self.assertRaises(SizeBound):
            canonical_form(random_tangle(0, 7, random.Random(0)))


class GluingTests(SimpleTestCase):
    def test_join_of_units_counts_loops(self):
        for k in range(4):
            closed = join(unit(k), unit(k))
            self.assertEqual((closed.m, closed.loops), (0, k))

    def test_join_of_diagrams_is_disjoint_union(self):
        c, d = theta_diagram(), dumbbell_diagram()
        self.assertTrue(is_isomorphic(join(c.as_tangle(), d.as_tangle()), disjoint_union(c, d)))

    def test_join_of_chord_tangles(self):
        t12 = chord_tangle(3, 0, 1)
        closed = join(t12, t12)
        self.assertEqual(closed.m, 2)
        self.assertEqual(len(closed.wilson_loops()), 2)
        self.assertEqual(closed.loops, 1)

    def test_join_requires_matching_labels(self):
        with self.assertRaises(LabelMismatch):
            join(unit(1), unit(2))

    def test_compose_of_chord_tangles(self):
        composed = compose(chord_tangle(3, 0, 1), chord_tangle(3, 0, 2))
        self.assertEqual(composed.wiring, (2, 5, 4, 6, 0, 1, 3))

    def test_unit_laws_and_associativity(self):
        rng = random.Random(11)
        for _ in range(30):
            k = rng.randrange(4)
            s, t, u = (random_tangle(k, rng.randrange(3), rng) for _ in range(3))
            self.assertEqual(compose(unit(k), t), t)
            self.assertEqual(compose(t, unit(k)), t)
            self.assertTrue(is_isomorphic(compose(compose(s, t), u), compose(s, compose(t, u))))
            self.assertTrue(is_isomorphic(join(compose(s, t), u), join(s, compose(t, u))))

    def test_join_output_is_valid(self):
        rng = random.Random(5)
        for _ in range(50):
            k = rng.randrange(4)
            closed = join(random_tangle(k, rng.randrange(3), rng), random_tangle(k, rng.randrange(3), rng))
            validate(closed)

    def test_shift_union(self):
        loops = shift_union(vertexless_loop().as_tangle(), vertexless_loop().as_tangle())
        self.assertEqual((loops.k, loops.m, loops.loops), (0, 0, 2))
        self.assertEqual(shift_union(unit(1), unit(1)), unit(2))
        thetas = shift_union(theta_tangle(), theta_tangle())
        self.assertEqual(thetas, Tangle(k=2, m=2, wiring=(1, 4, 3, 5, 0, 2)))


class PermutationTangleTests(SimpleTestCase):
    def test_identity_is_unit(self):
        for m in range(4):
            self.assertEqual(permutation_tangle(1, m, tuple(range(m))), unit(m))

    def test_permutation_tangles_multiply(self):
        for k in (1, 2):
            for rho in all_permutations(3):
                for sigma in all_permutations(3):
                    product = permutation_tangle(k, 3, multiply(rho, sigma))
                    self.assertTrue(is_isomorphic(compose(permutation_tangle(k, 3, rho), permutation_tangle(k, 3, sigma)), product))
                    block_product = copy_permutation_tangle(k, 3, multiply(rho, sigma))
                    self.assertTrue(is_isomorphic(compose(copy_permutation_tangle(k, 3, rho), copy_permutation_tangle(k, 3, sigma)), block_product))

    def test_closure_counts_orbits(self):
        for pi in all_permutations(3):
            closed = join(permutation_tangle(1, 3, pi), unit(3))
            self.assertEqual((closed.m, closed.loops), (0, orbit_count(pi)))

    def test_transposition_is_an_involution(self):
        swap = permutation_tangle(1, 2, (1, 0))
        self.assertEqual(compose(swap, swap), unit(2))

    def test_copy_permutation_agrees_for_single_strands(self):
        for pi in all_permutations(3):
            self.assertEqual(copy_permutation_tangle(1, 3, pi), permutation_tangle(1, 3, pi))


class EnumerationTests(SimpleTestCase):
    @staticmethod
    def _brute_force_classes(k, m):
        classes = []
        for wiring in itertools.permutations(range(2 * m + k)):
            t = Tangle(k=k, m=m, wiring=wiring)
            if not any(is_isomorphic(t, c) for c in classes):
                classes.append(t)
        return classes

    def test_small_diagram_counts(self):
        self.assertEqual(enumerate_diagrams(0), [empty_diagram()])
        ones = enumerate_diagrams(1)
        self.assertEqual(len(ones), 2)
        self.assertTrue(any(is_isomorphic(d, theta_diagram()) for d in ones))
        self.assertTrue(any(is_isomorphic(d, dumbbell_diagram()) for d in ones))
        self.assertEqual(len(enumerate_diagrams(2)), len(self._brute_force_classes(0, 2)))

    def test_tangle_counts_match_brute_force(self):
        for k, m in ((1, 1), (2, 1), (1, 2)):
            self.assertEqual(len(enumerate_tangles(k, m)), len(self._brute_force_classes(k, m)))

    def test_no_isomorphic_pairs_and_closed(self):
        rng = random.Random(2)
        for k, m in ((0, 3), (2, 2)):
            family = enumerate_tangles(k, m)
            canonical = {t.wiring for t in family}
            self.assertEqual(len(canonical), len(family))
            for t in family:
                self.assertEqual(canonical_form(t), t)
            for _ in range(30):
                self.assertIn(canonical_form(random_tangle(k, m, rng)).wiring, canonical)

    def test_deterministic_order(self):
        self.assertEqual(enumerate_tangles(1, 2), enumerate_tangles(1, 2))

    def test_budget(self):
        with self.assertRaises(SizeBound):
            enumerate_diagrams(3, budget=100)

    def test_chord_guard_names_its_own_bound(self):
        with self.assertRaises(SizeBound) as raised:
            enumerate_diagrams(CANONICAL_MAX_CHORDS + 1, budget=10**40)
        self.assertEqual(raised.exception.requested, CANONICAL_MAX_CHORDS + 1)
        self.assertEqual(raised.exception.bound, CANONICAL_MAX_CHORDS)

    def test_negative_counts(self):
        with self.assertRaises(UsageError):
            enumerate_diagrams(-1)
        with self.assertRaises(UsageError):
            enumerate_tangles(-1, 1)
        with self.assertRaises(UsageError):
            enumerate_tangles_up_to(1, -1)


class ComponentTests(SimpleTestCase):
    def test_components(self):
        self.assertTrue(is_connected(theta_diagram()))
        self.assertTrue(is_connected(dumbbell_diagram()))
        self.assertTrue(is_connected(vertexless_loop()))
        self.assertFalse(is_connected(empty_diagram()))
        self.assertFalse(is_connected(disjoint_union(theta_diagram(), theta_diagram())))
        self.assertEqual(components(disjoint_union(theta_diagram(), vertexless_loop())), [(0, 1), ()])


class QuantumTangleTests(SimpleTestCase):
    def test_cancellation(self):
        t = QuantumTangle.from_tangle(theta_tangle())
        self.assertTrue((2 * t - t - t).is_zero())
        self.assertEqual(t + t, t.scale(2))

    def test_terms_are_canonical(self):
        crossed = ChordDiagram(m=2, succ=(2, 3, 1, 0))
        x = QuantumTangle.from_tangle(crossed) - QuantumTangle.from_tangle(relabel(crossed, (2, 3, 0, 1)))
        self.assertTrue(x.is_zero())

    def test_mismatched_labels(self):
        with self.assertRaises(LabelMismatch):
            QuantumTangle.identity(1) + QuantumTangle.identity(2)

    def test_powers(self):
        theta = QuantumTangle.from_tangle(theta_tangle())
        self.assertEqual(theta.power_union(2), QuantumTangle.from_tangle(shift_union(theta_tangle(), theta_tangle())))
        self.assertEqual(theta.power(0), QuantumTangle.identity(1))
        self.assertEqual(theta.power(2), QuantumTangle.from_tangle(compose(theta_tangle(), theta_tangle())))


class SerializerTests(SimpleTestCase):
    def test_diagram_document(self):
        document = diagram_to_document(theta_diagram())
        self.assertEqual(document, {"kind": "diagram", "m": 1, "succ": [2, 1], "loops": 0})
        self.assertEqual(parse_diagram(json.loads(json.dumps(document))), theta_diagram())

    def test_tangle_document(self):
        t = compose(chord_tangle(3, 0, 1), permutation_tangle(1, 3, (2, 0, 1)))
        document = tangle_to_document(t)
        self.assertEqual(parse_tangle(json.loads(json.dumps(document))), t)
        self.assertEqual(tangle_to_document(theta_tangle())["wiring"], {"internal": [2, "sink:1"], "roots": [1], "sinks_from": [2]})

    def test_quantum_tangle_document(self):
        x = QuantumTangle.from_tangle(theta_tangle(), 3) - QuantumTangle.identity(1).scale(Fraction(1, 2))
        self.assertEqual(parse_quantum_tangle(json.loads(json.dumps(quantum_tangle_to_document(x)))), x)

    def test_inconsistent_sinks(self):
        document = tangle_to_document(unit(2))
        document["wiring"]["sinks_from"] = ["root:2", "root:1"]
        with self.assertRaises(NotABijection):
            parse_tangle(document)

    def test_unknown_key(self):
        with self.assertRaises(DocumentParseError):
            parse_diagram({"kind": "diagram", "m": 0, "succ": [], "loops": 0, "colour": 1})

    def test_binding_errors_name_the_field(self):
        with self.assertRaises(DocumentParseError) as raised:
            parse_diagram({"kind": "diagram", "m": "1", "succ": [2, 1], "loops": 0})
        self.assertEqual(raised.exception.field, "m")

    def test_booleans_are_not_vertices(self):
        with self.assertRaises(DocumentParseError) as raised:
            parse_diagram({"kind": "diagram", "m": 1, "succ": [True, 1], "loops": 0})
        self.assertEqual(raised.exception.field, "succ[0]")
        document = tangle_to_document(theta_tangle())
        document["wiring"]["roots"] = [True]
        with self.assertRaises(DocumentParseError) as raised:
            parse_tangle(document)
        self.assertEqual(raised.exception.field, "wiring.roots[0]")

    def test_json_position(self):
        with self.assertRaises(DocumentParseError) as raised:
            load_json_document('{"kind": "diagram",\n "m": }')
        self.assertEqual(raised.exception.line, 2)


class EnumerateCommandTests(SimpleTestCase):
    def _run(self, **options):
        out = StringIO()
        call_command("enumerate", stdout=out, **options)
        return out.getvalue().splitlines()

    def test_enumerate_counts(self):
        self.assertEqual(len(self._run(m=1)), 2)
        self.assertEqual(self._run(m=0), ['{"kind":"diagram","m":0,"succ":[],"loops":0}'])

    def test_enumerate_round_trips(self):
        for line in self._run(m=1, tangles=True, k=1):
            t = parse_tangle(json.loads(line))
            self.assertEqual(canonical_form(t), t)

    def test_enumerate_is_deterministic(self):
        self.assertEqual(self._run(m=2), self._run(m=2))

    def test_budget_refusal_exits_2(self):
        with self.assertRaises(CommandError) as raised:
            call_command("enumerate", m=3, budget=10, stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 2)

    def test_negative_counts_exit_2(self):
        for options in ({"m": -1}, {"m": 1, "tangles": True, "k": -1}, {"m": 1, "budget": -5}):
            with self.assertRaises(CommandError) as raised:
                call_command("enumerate", stdout=StringIO(), **options)
            self.assertEqual(raised.exception.returncode, 2, options)

    def test_fixture_diagrams_parse(self):
        for name in ("theta.json", "loop.json", "dumbbell.json", "crossed.json"):
            with open(settings.FIXTURES_DIR / name) as fixture:
                validate(parse_diagram(json.load(fixture)))
