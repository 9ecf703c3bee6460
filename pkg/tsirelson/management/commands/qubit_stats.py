from tsirelson.scenario import TSIRELSON_PARAMS, behavior_from_qubit
from tsirelson.services.serialization import behavior_to_dict, dumps

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the behavior of the two-qubit realization with the given angles."

    def add_arguments(self, parser):
        for name, default in TSIRELSON_PARAMS._asdict().items():
            parser.add_argument(
                f"--{name}",
                type=float,
                default=default,
                help=f"Angle {name} in radians (default: Tsirelson value {default:.6f})"
            )
        self.add_output_argument(parser)

    def run(self, *args, **options):
        params = [options[name] for name in TSIRELSON_PARAMS._fields]
        self.emit(dumps(behavior_to_dict(behavior_from_qubit(params))), options)
