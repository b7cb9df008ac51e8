"""Interactive certificates for exact linear algebra over prime fields.

The compiled extension carries the implementation; this package just
re-exports it.  When running from a build tree, point LINCERT_PYMODULE_DIR
at the directory holding the compiled module.
"""

import os
import sys

_override = os.environ.get("LINCERT_PYMODULE_DIR")
if _override and _override not in sys.path:
    sys.path.insert(0, _override)

try:
    from _core import *  # noqa: F401,F403  (build-tree layout)
    from _core import oracle  # noqa: F401
except ImportError:
    from ._core import *  # noqa: F401,F403  (installed layout)
    from ._core import oracle  # noqa: F401
