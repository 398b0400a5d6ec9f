import os

#: Set ``GEOBCH_DISABLE_NUMBA=1`` to force the pure-numpy kernels.
DISABLE_NUMBA = os.environ.get("GEOBCH_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if DISABLE_NUMBA:
        raise ImportError("numba disabled by GEOBCH_DISABLE_NUMBA")
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not DISABLE_NUMBA

#: ``GEOBCH_DEBUG=1`` turns on per-call structural checks in the matrix fast path.
DEBUG = os.environ.get("GEOBCH_DEBUG", "").strip().lower() in {"1", "true", "yes", "on"}
