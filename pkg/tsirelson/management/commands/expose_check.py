from tsirelson.slices import expose_check

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Check that beta_T is exposed: the mixed point pairs to 1 with it and with no other slice expression."

    def run(self, *args, **options):
        report = expose_check()
        self.stdout.write(f"beta_T . P* = {report.pair_value}")
        solution = "none" if report.solution is None else f"({report.solution.r0}, {report.solution.r1})"
        self.stdout.write(f"slice expressions saturated on both local vertices: {solution}")
        self.stdout.write(f"octagon vertex: {report.is_vertex}")
        self.stdout.write(f"octagon affine dimension: {report.affine_dimension}")
        self.stdout.write(f"dimension pair of the Tsirelson point: {report.dimension_pair}")
        if not report.passed:
            self.fail("beta_T is not exposed by P*")
        self.stdout.write(self.style.SUCCESS("beta_T is the unique slice expression exposed by P*"))
