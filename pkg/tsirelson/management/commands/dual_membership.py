from tsirelson.certificates import LEVEL_TAGS
from tsirelson.optimize.membership import dual_membership
from tsirelson.services.serialization import behavior_to_dict, certificate_to_dict, dumps, load_expression

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Decide whether an expression lies in the dual of the quantum set: inside, outside or unknown."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        parser.add_argument(
            "--levels",
            type=str,
            nargs="+",
            choices=LEVEL_TAGS,
            default=list(LEVEL_TAGS),
            help="Relaxation levels tried in order for a certificate (default: all)"
        )
        parser.add_argument("--tol", type=float, default=1e-7, help="Violation and certificate tolerance (default: 1e-7)")
        parser.add_argument("--restarts", type=int, default=200, help="Qubit search restarts (default: 200)")
        self.add_seed_argument(parser)
        self.add_output_argument(parser)

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        result = dual_membership(beta, options["levels"], options["tol"], options["restarts"], self.seed(options))
        document = {"verdict": result.verdict}
        if result.certificate is not None:
            document["level"] = result.level
            document["certificate"] = certificate_to_dict(result.certificate)
        if result.witness is not None:
            document["witness_source"] = result.witness_source
            document["witness_value"] = result.witness_value
            document["witness"] = behavior_to_dict(result.witness)
        self.emit(dumps(document), options)
