import logging

from algebra_check_operations.four_term_helper import is_weight_system
from algebra_check_operations.serializers import weight_system_report_to_document
from common.command_helpers import ChordWeightCommand, load_oracle

logger = logging.getLogger("django")


class Command(ChordWeightCommand):
    help = "Check the four-term relation on every 3-tangle up to a chord bound, and multiplicativity, for a partition function."

    uses_oracle = True

    def add_command_arguments(self, parser):
        parser.add_argument("--max-chords", dest="max_chords", type=int, default=2, help="Largest chord count of the enumerated 3-tangles")

    def run(self, **options):
        f = load_oracle(options)
        report = is_weight_system(f, options["max_chords"], options["budget"])
        self.emit(weight_system_report_to_document(report, options["max_chords"]))
        if not report.ok:
            self.check_failed("{name} is not a weight system: {reason} fails".format(name=f.name, reason=report.reason))
