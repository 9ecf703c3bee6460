from tsirelson.certificates import nullifier_basis

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Print an exact basis of the nullifiers of |phi+> at a relaxation level."

    def add_arguments(self, parser):
        self.add_level_argument(parser)

    def run(self, *args, **options):
        basis = nullifier_basis(options["level"])
        self.stdout.write(f"level {options['level']}: {basis.dimension} nullifiers")
        for k, poly in enumerate(basis.polys):
            self.stdout.write(f"K{k}: {poly}")
