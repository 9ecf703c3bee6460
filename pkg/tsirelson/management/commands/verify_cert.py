from tsirelson.certificates import verify_certificate
from tsirelson.services.serialization import load_certificate

from ._base import TsirelsonCommand


class Command(TsirelsonCommand):
    help = "Verify a sum-of-squares certificate file for its target expression."

    def add_arguments(self, parser):
        parser.add_argument("certificate", type=str, help="Certificate JSON file")
        parser.add_argument(
            "--tol",
            type=float,
            default=1e-8,
            help="Tolerance for float certificates (default: 1e-8)"
        )

    def run(self, *args, **options):
        cert = load_certificate(options["certificate"])
        report = verify_certificate(cert.target, cert, tol=options["tol"])
        identity = "identity exact" if report.exact else f"identity within {report.max_residual:.3g}"
        if not report.identity_holds:
            self.fail(f"identity fails; max residual {report.max_residual:.3g}")
        if not report.psd_holds:
            self.fail(f"{identity}; W is not PSD (smallest eigenvalue {min(report.eigenvalues):.3g})")
        self.stdout.write(self.style.SUCCESS(f"{identity}; PSD; rank {report.rank}"))
