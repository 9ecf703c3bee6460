from tsirelson.exact_algebra import QSqrt2Scalar
from tsirelson.exceptions import InputError
from tsirelson.services.serialization import dumps, expression_to_dict
from tsirelson.slices import expr_from_slice

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the slice expression with coordinates (r0, r1)."

    def add_arguments(self, parser):
        parser.add_argument("--r0", type=str, required=True, help="First slice coordinate")
        parser.add_argument("--r1", type=str, required=True, help="Second slice coordinate")
        parser.add_argument(
            "--exact",
            action="store_true",
            help="Read the coordinates as exact scalars such as 1/1-1/2*s2"
        )
        self.add_output_argument(parser)

    def _coordinate(self, text, exact):
        if exact:
            return QSqrt2Scalar.parse(text)
        try:
            return float(text)
        except ValueError as exc:
            raise InputError(f"Not a number: {text!r}") from exc

    def run(self, *args, **options):
        r0 = self._coordinate(options["r0"], options["exact"])
        r1 = self._coordinate(options["r1"], options["exact"])
        self.emit(dumps(expression_to_dict(expr_from_slice(r0, r1))), options)
