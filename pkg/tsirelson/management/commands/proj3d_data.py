from tsirelson.services.figures import parse_axes, projection_csv, projection_rows

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Scatter data of quantum and local behaviors projected onto three explicit axes."

    def add_arguments(self, parser):
        parser.add_argument(
            "--axes",
            type=str,
            required=True,
            help="Three behavior labels such as K00,K11,mA0, or a JSON file with three expressions"
        )
        parser.add_argument("--samples", type=int, default=1000, help="Random qubit behaviors (default: 1000)")
        self.add_seed_argument(parser)
        self.add_output_argument(parser)

    def run(self, *args, **options):
        rows = projection_rows(parse_axes(options["axes"]), options["samples"], self.seed(options))
        self.emit(projection_csv(rows), options)
