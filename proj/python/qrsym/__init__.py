"""Exact operator calculus in lowest-weight modules.

Thin python surface over the C++ core: identity verification, bracket-defect
analysis (rank / Hilbert-Schmidt), central-term asymptotics and the circle
cocycle suite. All values cross the boundary as exact rational strings.
"""

from ._core import (
    __version__,
    central_charge_report,
    cocycle_report,
    commutator_symbol,
    defect_matrix_entries,
    defect_report,
    ladder_symbol,
    verify_exact,
    verma_norms,
)

__all__ = [
    "__version__",
    "central_charge_report",
    "cocycle_report",
    "commutator_symbol",
    "defect_matrix_entries",
    "defect_report",
    "ladder_symbol",
    "verify_exact",
    "verma_norms",
]
