"""Wavelike term of the Kelvin wave-source Green's function.

Thin wrapper over the compiled extension. The main operations are
``eval_i``, ``eval_i_infinity`` and ``deriv``; see their docstrings.
"""

from ._shipwave import (
    EvalReport,
    cc_integrate,
    cc_weights,
    closed_form_axis,
    critical_points,
    deriv,
    erfc,
    eval_i,
    eval_i_infinity,
    faddeeva_w,
    levin_solve,
)

__all__ = [
    "EvalReport",
    "cc_integrate",
    "cc_weights",
    "closed_form_axis",
    "critical_points",
    "deriv",
    "erfc",
    "eval_i",
    "eval_i_infinity",
    "faddeeva_w",
    "levin_solve",
]
