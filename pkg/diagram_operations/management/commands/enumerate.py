from common.command_helpers import ChordWeightCommand
from diagram_operations.enumeration_helper import enumerate_diagrams, enumerate_tangles
from diagram_operations.serializers import diagram_to_document, tangle_to_document


class Command(ChordWeightCommand):
    help = "Print one canonical document per isomorphism class of chord diagrams (or k-tangles) with m chords."

    def add_command_arguments(self, parser):
        parser.add_argument("-m", "--chords", dest="m", type=int, required=True, help="Number of chords")
        parser.add_argument("--tangles", dest="tangles", action="store_true", help="Enumerate k-tangles instead of diagrams")
        parser.add_argument("-k", "--labels", dest="k", type=int, default=0, help="Number of labels when enumerating tangles")

    def run(self, **options):
        if options["tangles"]:
            for tangle in enumerate_tangles(options["k"], options["m"], options["budget"]):
                self.emit(tangle_to_document(tangle))
        else:
            for diagram in enumerate_diagrams(options["m"], options["budget"]):
                self.emit(diagram_to_document(diagram))
