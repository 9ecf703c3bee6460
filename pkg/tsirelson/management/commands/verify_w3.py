import numpy as np

from tsirelson.certificates import verify_certificate, w3_eigenvalues, w3_matrix
from tsirelson.scenario import beta_t

from ._base import TsirelsonCommand

EIGENVALUE_TOL = 1e-10


class Command(TsirelsonCommand):
    help = "Verify exactly that 1 - beta_T = N^dagger W3 N with W3 positive semidefinite of rank 4."

    def run(self, *args, **options):
        report = verify_certificate(beta_t(), w3_matrix())
        if not report.identity_holds:
            self.fail(f"identity fails; residual {report.residual}")
        if not report.psd_holds:
            self.fail(f"W3 is not PSD; witness {[str(x) for x in report.psd.witness]}")
        if report.rank != 4:
            self.fail(f"W3 has rank {report.rank}, expected 4")

        nonzero = sorted(value for value in report.eigenvalues if abs(value) > EIGENVALUE_TOL)
        if not np.allclose(nonzero, w3_eigenvalues(), rtol=0, atol=EIGENVALUE_TOL):
            self.fail(f"Eigenvalues {nonzero} differ from the closed forms {w3_eigenvalues()}")
        self.stdout.write(self.style.SUCCESS(f"identity {'exact' if report.exact else 'float'}; PSD; rank {report.rank}"))
        if options["verbosity"] > 1:
            self.stdout.write(f"non-zero eigenvalues: {', '.join(repr(v) for v in nonzero)}")
