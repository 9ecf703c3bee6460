from tsirelson.optimize.face import vertex_label
from tsirelson.scenario import local_bound
from tsirelson.services.serialization import format_value, load_expression

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print the local bound of a Bell expression (maximum over the 16 deterministic vertices)."

    def add_arguments(self, parser):
        parser.add_argument("expression", type=str, help="Bell expression JSON file")

    def run(self, *args, **options):
        beta = load_expression(options["expression"])
        value, maximizers = local_bound(beta)
        self.stdout.write(format_value(value))
        if options["verbosity"] > 1:
            for idx in maximizers:
                self.stdout.write(f"attained at {vertex_label(idx)}")
