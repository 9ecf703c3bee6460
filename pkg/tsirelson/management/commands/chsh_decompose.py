from tsirelson.slices import chsh_decompose_check

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Check exactly that (beta_T + S^4 beta_T)/2 is the CHSH expression divided by 2 sqrt 2."

    def run(self, *args, **options):
        report = chsh_decompose_check()
        self.stdout.write(f"S^4 beta_T has slice coordinates {tuple(str(x) for x in report.mirrored_coords or ())}")
        self.stdout.write(f"midpoint has slice coordinates {tuple(str(x) for x in report.midpoint_coords or ())}")
        self.stdout.write(f"midpoint equals CHSH: {report.unnormalized_identity} (scale factor {report.scale_factor})")
        if not report.passed:
            self.fail("(beta_T + S^4 beta_T)/2 != CHSH/(2 sqrt 2)")
        self.stdout.write(self.style.SUCCESS("(beta_T + S^4 beta_T)/2 = CHSH/(2 sqrt 2) exactly"))
