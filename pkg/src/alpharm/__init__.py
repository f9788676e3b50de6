"""Sharp pointwise estimates for alpha-harmonic functions on the unit disk.

Closed-form bound functions live in :mod:`alpharm.bounds`, the kernel and
boundary-data extension in :mod:`alpharm.kernel`, the hypergeometric layer
in :mod:`alpharm.specfun`, and the brute-force cross-checks in
:mod:`alpharm.oracle`.
"""

from ._backend import BACKEND
from .bounds import (B1_func, B_func, BoundValue, C_func, b_const, c_const,
                     df0_bound, grad_bound_conjecture, gradient_bound,
                     pointwise_bound, schwarz_bound)
from .errors import DomainError, NonConvergenceError, PreconditionError, QuadratureError
from .kernel import (BoundaryFunction, DerivMatrix, DiskPoint, Params, c_alpha,
                     deriv_matrix, extend, kernel_dbar, kernel_value)
from .quadrature import DEFAULT_QUAD, QuadratureConfig
from .specfun import gamma, hyp2f1, hyp3f2, hyp_pfq, pochhammer

__version__ = "0.1.0"
tool_version = __version__

__all__ = [
    "BACKEND", "B1_func", "B_func", "BoundValue", "BoundaryFunction", "C_func",
    "DEFAULT_QUAD", "DerivMatrix", "DiskPoint", "DomainError", "NonConvergenceError",
    "Params", "PreconditionError", "QuadratureConfig", "QuadratureError", "b_const",
    "c_alpha", "c_const", "deriv_matrix", "df0_bound", "extend", "gamma",
    "grad_bound_conjecture", "gradient_bound", "hyp2f1", "hyp3f2", "hyp_pfq",
    "kernel_dbar", "kernel_value", "pochhammer", "pointwise_bound", "schwarz_bound",
]
