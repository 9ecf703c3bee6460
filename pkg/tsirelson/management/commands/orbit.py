from tsirelson.scenario import symmetry_orbit
from tsirelson.services.serialization import dumps, expression_to_dict, format_scalar, load_expression
from tsirelson.slices import slice_coords_of

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the eight images S^k beta of an expression under the octagonal symmetry."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        self.add_output_argument(parser)

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        entries = []
        for k, image in enumerate(symmetry_orbit(beta)):
            coords = slice_coords_of(image)
            entries.append(
                {
                    "k": k,
                    "expression": expression_to_dict(image),
                    "slice": None if coords is None else [format_scalar(coords.r0), format_scalar(coords.r1)],
                }
            )
        self.emit(dumps({"orbit": entries}), options)
