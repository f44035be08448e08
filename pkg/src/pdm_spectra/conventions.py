"""Kinetic-operator normalization conventions.

HALF means the constant-mass wave operator is -(1/2) d^2/dy^2 + Omega and
the position-dependent-mass kinetic weight is 1/(2m); UNIT means
-d^2/dy^2 + Omega and weight 1/m. Closed-form reference energies are quoted
in UNIT and halved under HALF. Exactly one convention can make the closed
forms agree with the finite-difference oracle; the verify command adjudicates
which and records it.
"""

from __future__ import annotations

from enum import Enum

__all__ = ["SpectrumConvention"]


class SpectrumConvention(Enum):
    HALF = "half"
    UNIT = "unit"

    @property
    def kinetic_factor(self) -> float:
        """Coefficient c in the kinetic term -c * d/dx[(1/m) d/dx]."""
        return 0.5 if self is SpectrumConvention.HALF else 1.0

    def energy_from_unit(self, e_unit: complex) -> complex:
        return self.kinetic_factor * e_unit
