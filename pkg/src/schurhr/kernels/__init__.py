"""Kernel backend selection.

The compiled extension is preferred when importable; setting the environment
variable ``SCHURHR_PURE_PYTHON`` (to anything nonempty) forces the reference
implementation.  ``BACKEND`` names the active one.
"""

import os

if os.environ.get("SCHURHR_PURE_PYTHON"):
    from ._ref import BACKEND, add_scaled, mul_terms, mul_terms_capped
else:
    try:
        from ._fast import BACKEND, add_scaled, mul_terms, mul_terms_capped
    except ImportError:
        from ._ref import BACKEND, add_scaled, mul_terms, mul_terms_capped

__all__ = ["BACKEND", "mul_terms", "mul_terms_capped", "add_scaled"]
