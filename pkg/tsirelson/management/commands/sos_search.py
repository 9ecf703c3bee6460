from tsirelson.optimize.sos import sos_search
from tsirelson.services.serialization import certificate_to_dict, dumps, load_expression

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Search a float sum-of-squares certificate that the quantum value of an expression is at most 1."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        self.add_level_argument(parser, default="L1AB_ABB")
        parser.add_argument(
            "--tol",
            type=float,
            default=1e-7,
            help="Feasibility and verification tolerance (default: 1e-7)"
        )
        self.add_output_argument(parser)

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        cert = sos_search(beta, options["level"], options["tol"])
        if cert is None:
            self.fail(f"No certificate at level {options['level']}")
        self.emit(dumps(certificate_to_dict(cert)), options)
