from tsirelson.services.figures import layers_svg, octagon_layer
from tsirelson.services.serialization import octagon_csv
from tsirelson.slices import octagon_vertices

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the exact vertices of the octagonal slice of the dual quantum set."

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            type=str,
            choices=["csv", "svg"],
            default="csv",
            help="Output format (default: csv)"
        )
        self.add_output_argument(parser)

    def run(self, *args, **options):
        if options["format"] == "svg":
            self.emit(layers_svg([octagon_layer()]), options)
        else:
            self.emit(octagon_csv(octagon_vertices()), options)
