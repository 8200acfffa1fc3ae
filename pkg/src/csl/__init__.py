"""Class semigroups of integral domains: quadratic orders, conductor-window
rings and pseudo-valuation pullbacks, with Clifford/Boolean verdicts."""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
