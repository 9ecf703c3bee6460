from tsirelson.optimize.hessian import FINITE_DIFFERENCE, PAPER_FORMULA, hessian_rmax
from tsirelson.services.serialization import format_scalar

from ._base import TsirelsonCommand

SOURCES = {"paper": PAPER_FORMULA, "fd": FINITE_DIFFERENCE}


class Command(TsirelsonCommand):
    help = "Largest slice radius at angle gamma whose second-order test passes at the Tsirelson point."

    def add_arguments(self, parser):
        parser.add_argument("--gamma", type=float, default=0.0, help="Slice angle in radians (default: 0)")
        parser.add_argument(
            "--alpha-grid",
            type=int,
            default=256,
            help="Rotation angles sampled on [0, 2 pi) (default: 256, at least 64)"
        )
        parser.add_argument("--tol", type=float, default=1e-4, help="Bisection tolerance (default: 1e-4)")
        parser.add_argument(
            "--source",
            type=str,
            choices=sorted(SOURCES),
            default="paper",
            help="Closed-form Hessian or finite differences (default: paper)"
        )

    def run(self, *args, **options):
        value = hessian_rmax(options["gamma"], options["alpha_grid"], options["tol"], SOURCES[options["source"]])
        self.stdout.write(format_scalar(value))
