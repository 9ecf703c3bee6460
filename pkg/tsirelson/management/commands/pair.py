from tsirelson.scenario import pair
from tsirelson.services.serialization import format_value, load_behavior, load_expression

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the value beta . P of a Bell expression on a behavior."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")
        parser.add_argument("behavior", type=str, help="Behavior JSON file")

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        behavior = load_behavior(options["behavior"])
        self.stdout.write(format_value(pair(beta, behavior)))
