from tsirelson.services.figures import layers_csv, layers_svg, slice_layers

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Emit the layers of the slice figure: octagon, second-order disk, almost-quantum disk and CHSH."

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
        layers = slice_layers()
        self.emit(layers_svg(layers) if options["format"] == "svg" else layers_csv(layers), options)
