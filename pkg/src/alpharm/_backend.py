"""Select the compiled series summation when available, else the numpy fallback.

Only the hypergeometric series loop is compiled: it is a serial recurrence
that numpy cannot vectorize.  The elementwise kernel evaluations always use
numpy, whose vectorized transcendental functions outrun a scalar C loop.
"""

import os
from types import SimpleNamespace

from . import _pykernels


def _load_compiled():
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = None if os.environ.get("ALPHARM_BACKEND", "").lower() == "python" else _load_compiled()

kernels = SimpleNamespace(
    series_sum=(_compiled or _pykernels).series_sum,
    kernel_eval=_pykernels.kernel_eval,
    kernel_dbar_eval=_pykernels.kernel_dbar_eval,
    power_cos_weight=_pykernels.power_cos_weight,
)

BACKEND = "python" if _compiled is None else "cython"


def available_backends():
    """Return ``{name: module}`` for every series backend importable here."""
    found = {"python": _pykernels}
    compiled = _load_compiled()
    if compiled is not None:
        found["cython"] = compiled
    return found
