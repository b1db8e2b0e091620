import random

from algebra_check_operations.connection_matrix_helper import FAMILY_ALL, FAMILY_SAMPLED, rank_report
from algebra_check_operations.serializers import rank_report_to_document
from common.command_helpers import ChordWeightCommand, load_oracle


class Command(ChordWeightCommand):
    help = "Compute the exact rank of a finite connection submatrix and compare it with f(loop)^(2k)."

    uses_oracle = True

    def add_command_arguments(self, parser):
        parser.add_argument("-k", "--labels", dest="k", type=int, default=1, help="Number of labels of the tangles")
        parser.add_argument("--max-chords", dest="max_chords", type=int, default=2, help="Largest chord count of the tangles")
        parser.add_argument("--family", dest="family", choices=(FAMILY_ALL, FAMILY_SAMPLED), default=FAMILY_ALL, help="Use every tangle or a seeded sample")
        parser.add_argument("--samples", dest="samples", type=int, default=40, help="Sample size for --family sampled")

    def run(self, **options):
        f = load_oracle(options)
        report = rank_report(
            f,
            options["k"],
            options["max_chords"],
            family=options["family"],
            samples=options["samples"],
            rng=random.Random(options["seed"]),
            budget=options["budget"],
        )
        self.emit(rank_report_to_document(report))
        if not report.ok:
            self.check_failed("Rank {rank} exceeds the bound {bound}".format(rank=report.rank, bound=report.bound))
