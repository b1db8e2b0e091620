import logging

from common.command_helpers import ChordWeightCommand, load_oracle, read_document
from common.utils import format_rational
from diagram_operations.serializers import parse_closed_diagram

logger = logging.getLogger("django")


class Command(ChordWeightCommand):
    help = "Evaluate a partition function or Lie algebra weight system on a chord diagram and print the exact value."

    uses_oracle = True

    def add_command_arguments(self, parser):
        diagram_source = parser.add_mutually_exclusive_group(required=True)
        diagram_source.add_argument("--diagram", dest="diagram", metavar="FILE", help="diagram document (or a 0-tangle document)")
        diagram_source.add_argument("--stdin", dest="stdin", action="store_true", help="Read the diagram document from standard input")

    def run(self, **options):
        f = load_oracle(options)
        diagram = parse_closed_diagram(read_document(None if options["stdin"] else options["diagram"]))
        value = f(diagram)
        logger.debug("{name} evaluates to {value} on a diagram with {m} chords".format(name=f.name, value=value, m=diagram.m))
        self.stdout.write(format_rational(value))
