"""Numerical tolerances and evaluation knobs passed through the whole stack."""

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalSettings:
    """Tolerances for series truncation, quadrature and path clearance.

    All values are absolute.  Instances are immutable so they can be shared
    freely between threads.
    """

    series_tol: float = 1e-12
    quad_tol: float = 1e-10
    max_terms: int = 10_000_000
    eps_path: float = 1e-3

    def __post_init__(self):
        if self.series_tol <= 0 or self.quad_tol <= 0 or self.eps_path <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT = EvalSettings()
