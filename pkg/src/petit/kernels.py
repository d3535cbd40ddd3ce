"""Select the compiled kernels when available.

Set ``PETIT_PURE_PYTHON=1`` to force the interpreted fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("PETIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"

fq_add = _impl.fq_add
fq_mul = _impl.fq_mul
twisted_mul = _impl.twisted_mul
twisted_divmod = _impl.twisted_divmod
rref_mod_p = _impl.rref_mod_p
