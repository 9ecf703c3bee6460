from tsirelson.optimize.npa import npa_bound
from tsirelson.services.serialization import format_scalar, load_expression

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the NPA upper bound on the quantum value of an expression."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        self.add_level_argument(parser)
        parser.add_argument(
            "--tol",
            type=float,
            default=1e-6,
            help="Solver tolerance (default: 1e-6)"
        )

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        self.stdout.write(format_scalar(npa_bound(beta, options["level"], options["tol"])))
