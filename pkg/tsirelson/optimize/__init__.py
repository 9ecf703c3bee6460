from .face import appendix_d_check, face_scan
from .hessian import hessian_paper, hessian_rmax
from .membership import dual_membership
from .npa import moment_structure, npa_bound
from .qubit import qubit_max
from .sdp import SDPProblem, SDPSolution, solve_sdp
from .sos import sos_search

__all__ = [
    "SDPProblem",
    "SDPSolution",
    "appendix_d_check",
    "dual_membership",
    "face_scan",
    "hessian_paper",
    "hessian_rmax",
    "moment_structure",
    "npa_bound",
    "qubit_max",
    "solve_sdp",
    "sos_search",
]
