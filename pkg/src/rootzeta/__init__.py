"""Exact and certified-numeric zeta values attached to the root systems B_r and C_r."""

__version__ = "0.1.0"

from .exact import ZetaExpression, ZetaGenerator, bernoulli, bernoulli_poly  # noqa: E402
from .genfunc import GeneratingFunction, generating_function_Fstar, p_coefficient  # noqa: E402
from .roots import build_root_datum  # noqa: E402
from .series import EvalConfig, ez_mzv, riemann_zeta, sharp_mzv  # noqa: E402

__all__ = [
    "EvalConfig",
    "GeneratingFunction",
    "ZetaExpression",
    "ZetaGenerator",
    "bernoulli",
    "bernoulli_poly",
    "build_root_datum",
    "ez_mzv",
    "generating_function_Fstar",
    "p_coefficient",
    "riemann_zeta",
    "sharp_mzv",
]
