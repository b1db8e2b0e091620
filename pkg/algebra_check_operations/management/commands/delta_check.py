import random

from algebra_check_operations.serializers import delta_report_to_document
from algebra_check_operations.trace_helper import delta_check, delta_tangle
from common.command_helpers import ChordWeightCommand, load_oracle
from common.utils import render_document
from diagram_operations.serializers import quantum_tangle_to_document


class Command(ChordWeightCommand):
    help = "Check that the antisymmetrizer on n+1 strands has zero trace and lies in the kernel of f on sampled tangles."

    uses_oracle = True

    def add_command_arguments(self, parser):
        parser.add_argument("--n", dest="n", type=int, required=True, help="The antisymmetrizer runs over n+1 strands")
        parser.add_argument("--samples", dest="samples", type=int, default=20, help="Number of sampled (n+1)-tangles")
        parser.add_argument("--max-chords", dest="max_chords", type=int, default=2, help="Largest chord count of the sampled tangles")
        parser.add_argument("--dump-delta", dest="dump_delta", metavar="FILE", help="Also write the antisymmetrizer as a quantum-tangle document")

    def run(self, **options):
        f = load_oracle(options)
        if options.get("dump_delta"):
            with open(options["dump_delta"], "w", encoding="utf-8") as dump:
                dump.write(render_document(quantum_tangle_to_document(delta_tangle(options["n"])), "json"))
        report = delta_check(f, options["n"], options["samples"], options["max_chords"], random.Random(options["seed"]), options["budget"])
        self.emit(delta_report_to_document(report))
        if not report.ok:
            self.check_failed("Antisymmetrizer identities fail for n={n}".format(n=report.n))
