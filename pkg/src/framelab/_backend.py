"""Kernel backend selection.

Imports the compiled extension when it was built, the NumPy kernels
otherwise. Set ``FRAMELAB_PURE_PYTHON=1`` to force the fallback (used by
the benchmark and the backend equivalence tests).
"""

import os

if os.environ.get("FRAMELAB_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _accel as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

logsumexp = _impl.logsumexp
power_log_norms_sq = _impl.power_log_norms_sq
carleson_log_sums = _impl.carleson_log_sums
scaled_power_matrix = _impl.scaled_power_matrix


def kernel_backend() -> str:
    """Name of the active kernel implementation: 'compiled' or 'python'."""
    return BACKEND
