import subprocess
import sys

import pytest

from alpharm import _pykernels
from alpharm._backend import BACKEND, available_backends

BACKENDS = available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")


def test_backend_name():
    assert BACKEND in BACKENDS


def test_env_var_forces_python():
    code = "from alpharm._backend import BACKEND; print(BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"ALPHARM_BACKEND": "python", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"


@compiled
def test_series_sum_agrees():
    ck = BACKENDS["cython"]
    cases = [((1.0, 1.0), (2.0,), 0.5), ((0.5, -0.5), (1.0,), 0.99),
             ((1.0, 1.5, 2.0), (1.5, 1.5), 0.3), ((-3.0, 1.2), (2.5,), 0.9)]
    for upper, lower, x in cases:
        a = _pykernels.series_sum(upper, lower, x, 1e-15, 1_000_000, 5)
        b = ck.series_sum(upper, lower, x, 1e-15, 1_000_000, 5)
        assert a[1:] == b[1:]
        assert a[0] == pytest.approx(b[0], rel=1e-14)
