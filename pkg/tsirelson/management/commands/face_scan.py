import logging

from tsirelson.optimize.face import face_scan
from tsirelson.services.serialization import behavior_to_dict, cluster_csv, dumps, load_expression

from ._base import TsirelsonCommand

logger = logging.getLogger(__name__)


class Command(TsirelsonCommand):
    help = "Cluster the qubit maximizers of an expression and classify them."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        parser.add_argument(
            "--restarts",
            type=int,
            default=200,
            help="Quasi-random starting points (default: 200, at least 50)"
        )
        parser.add_argument("--tol", type=float, default=1e-7, help="Value window of the maximizers (default: 1e-7)")
        parser.add_argument(
            "--format",
            type=str,
            choices=["csv", "json"],
            default="csv",
            help="Output format (default: csv)"
        )
        self.add_seed_argument(parser)
        self.add_output_argument(parser)

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        report = face_scan(beta, options["restarts"], options["tol"], self.seed(options))
        logger.info(f"{len(report.clusters)} clusters at value {report.value!r}")
        if options["format"] == "json":
            document = {
                "value": report.value,
                "clusters": [
                    {
                        "cluster": k,
                        "classification": cluster.label,
                        "value": cluster.value,
                        "size": cluster.size,
                        "behavior": behavior_to_dict(cluster.center),
                    }
                    for k, cluster in enumerate(report.clusters)
                ],
            }
            self.emit(dumps(document), options)
        else:
            self.emit(cluster_csv(report.clusters), options)
