import logging
import sys
from typing import Any, Dict, Optional

from django.core.management.base import BaseCommand, CommandError

from algebra_check_operations.data_definitions import WeightSystemOracle
from lie_operations.builtin_algebras import builtin
from lie_operations.lie_helper import weight_system
from lie_operations.serializers import parse_lie
from partition_function_operations.partition_function_helper import f_of
from tensor_operations.serializers import parse_sym_tensor

from .data_definitions import DEFAULT_SEED, ENUMERATION_BUDGET, EXIT_CHECK_FAILED, EXIT_PARSE_ERROR, EXIT_VALIDATION_ERROR, OUTPUT_FORMATS
from .errors import ChordValidationError, DocumentParseError, SizeBound, UsageError
from .utils import load_json_document, render_document

logger = logging.getLogger("django")

# Options that count something; a negative value is a usage error
COUNT_OPTIONS = {"m": "--chords", "k": "--labels", "n": "--n", "max_chords": "--max-chords", "samples": "--samples", "budget": "--budget"}


def read_document(path: Optional[str]) -> Dict[str, Any]:
    """Load a JSON document from `path`, or from standard input when path is None or "-" """
    if path is None or path == "-":
        return load_json_document(sys.stdin.read())
    with open(path, encoding="utf-8") as document_file:
        return load_json_document(document_file.read())


def check_count_options(options: Dict[str, Any]) -> None:
    for name, flag in COUNT_OPTIONS.items():
        value = options.get(name)
        if value is not None and value < 0:
            raise UsageError("{flag} must be non-negative, got {value}".format(flag=flag, value=value))


def load_oracle(options: Dict[str, Any]) -> WeightSystemOracle:
    """The partition function named by exactly one of --tensor, --lie and --builtin"""
    if options.get("tensor"):
        return f_of(parse_sym_tensor(read_document(options["tensor"])), name=options["tensor"])
    if options.get("lie"):
        g, rho = parse_lie(read_document(options["lie"]))
        return weight_system(g, rho, name=options["lie"])
    g, rho = builtin(options["builtin"])
    return weight_system(g, rho, name=options["builtin"])


class ChordWeightCommand(BaseCommand):
    """Shared flags and exit codes of the chordweight commands.

    Subclasses implement `add_command_arguments` and `run`; errors are mapped to
    exit 2 (parse, usage or size guard) and exit 3 (validation with witness).
    """

    uses_oracle = False
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=OUTPUT_FORMATS,
            default="json",
            help="Render documents as compact JSON or as tab separated values",
        )
        parser.add_argument("--seed", dest="seed", type=int, default=DEFAULT_SEED, help="Seed of sampled checks")
        parser.add_argument("--budget", dest="budget", type=int, default=ENUMERATION_BUDGET, help="Largest number of raw wirings to enumerate")
        if self.uses_oracle:
            source = parser.add_mutually_exclusive_group(required=True)
            source.add_argument("--tensor", dest="tensor", metavar="FILE", help="sym-tensor document")
            source.add_argument("--lie", dest="lie", metavar="FILE", help="lie document, evaluated through its Casimir tensor")
            source.add_argument("--builtin", dest="builtin", metavar="NAME", help="Built in Lie algebra: glN, sl2 or abelianD")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.output_format = options["output_format"]
        try:
            check_count_options(options)
            self.run(**options)
        except (UsageError, SizeBound, DocumentParseError) as e:
            logger.error(str(e))
            raise CommandError(str(e), returncode=EXIT_PARSE_ERROR)
        except OSError as e:
            raise CommandError("Cannot read document: {error}".format(error=e), returncode=EXIT_PARSE_ERROR)
        except ChordValidationError as e:
            logger.error(str(e))
            raise CommandError(str(e), returncode=EXIT_VALIDATION_ERROR)

    def run(self, **options):
        raise NotImplementedError("subclasses of ChordWeightCommand must provide a run() method")

    def emit(self, document: Any) -> None:
        self.stdout.write(render_document(document, self.output_format))

    def check_failed(self, message: str) -> None:
        raise CommandError(message, returncode=EXIT_CHECK_FAILED)
