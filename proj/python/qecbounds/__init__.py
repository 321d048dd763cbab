"""Channel-level bounds on real-time quantum memories.

Thin python layer over the C++ core: quantum channels in Kraus form,
fidelity measures, twirling, diamond-distance estimates, recovery
optimization, and the spectator/multi-cycle bound calculations.
"""

from ._qecbounds import *  # noqa: F401,F403
from ._qecbounds import __doc__ as _core_doc  # noqa: F401


def cli_path():
    """Absolute path to the bundled command-line binary, if installed."""
    import os

    path = os.path.join(os.path.dirname(__file__), "bin", "qecbounds")
    return path if os.path.exists(path) else None
