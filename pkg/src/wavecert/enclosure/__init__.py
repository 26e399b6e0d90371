"""Ball arithmetic and certified special functions.

All operations return enclosures: the exact mathematical value of the
operation applied to any members of the input balls lies inside the output
ball.  Inputs outside a function's domain (or straddling a singularity)
yield a domain-error ball that propagates through subsequent arithmetic,
so callers can treat "could not evaluate" as "must subdivide".
"""

from wavecert.enclosure.ball import (
    Ball,
    ComplexBall,
    DOMAIN_ERROR,
    atan,
    cexp,
    clog,
    cos,
    cpow_real,
    exp,
    hull,
    intersect,
    log,
    log_two_pi_ball,
    pi_ball,
    pow_ball,
    sin,
    sqrt,
    two_pi_ball,
)
from wavecert.enclosure.context import Precision, get_precision, set_precision
from wavecert.enclosure.removable import eval_removable
from wavecert.enclosure.series import (
    series_add,
    series_compose_linear,
    series_div,
    series_eval,
    series_exp,
    series_log,
    series_mul,
    series_neg,
    series_pow_linear,
    series_recip,
    series_scale,
    series_shift_mul_z,
    series_sin_cos,
    series_sub,
    series_truncate,
)
from wavecert.enclosure.special import (
    bernoulli_ball,
    deflated_zeta,
    digamma,
    euler_gamma_ball,
    exp_minus_one_over,
    expm1_over_series,
    gamma,
    gamma_series_pos,
    hurwitz_series,
    hurwitz_zeta,
    hurwitz_zeta_complex,
    hyp2f1,
    incomplete_gamma_upper,
    lerch_phi,
    lgamma,
    polygamma,
    stieltjes,
    zeta,
    zeta_deriv,
)

__all__ = [
    "Ball",
    "ComplexBall",
    "DOMAIN_ERROR",
    "Precision",
    "get_precision",
    "set_precision",
    "sqrt",
    "exp",
    "log",
    "sin",
    "cos",
    "atan",
    "pow_ball",
    "hull",
    "intersect",
    "pi_ball",
    "two_pi_ball",
    "log_two_pi_ball",
    "cexp",
    "clog",
    "cpow_real",
    "series_add",
    "series_sub",
    "series_neg",
    "series_scale",
    "series_mul",
    "series_recip",
    "series_div",
    "series_exp",
    "series_log",
    "series_sin_cos",
    "series_pow_linear",
    "series_eval",
    "series_truncate",
    "series_shift_mul_z",
    "series_compose_linear",
    "bernoulli_ball",
    "hurwitz_series",
    "hurwitz_zeta",
    "deflated_zeta",
    "zeta",
    "zeta_deriv",
    "stieltjes",
    "euler_gamma_ball",
    "lgamma",
    "gamma",
    "gamma_series_pos",
    "digamma",
    "polygamma",
    "incomplete_gamma_upper",
    "lerch_phi",
    "hyp2f1",
    "exp_minus_one_over",
    "expm1_over_series",
    "hurwitz_zeta_complex",
    "eval_removable",
]
