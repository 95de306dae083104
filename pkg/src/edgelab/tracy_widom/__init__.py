"""Tracy-Widom distributions via Painleve II, with a Fredholm-determinant oracle."""

from edgelab.tracy_widom.distribution import (
    TWValue,
    gue_sharp_shape,
    tail_asymptote,
    tw_cdf,
    tw_pdf,
    tw_quantile,
    tw_sf,
)
from edgelab.tracy_widom.fredholm import fredholm_oracle
from edgelab.tracy_widom.painleve import (
    PainleveSolution,
    default_solution,
    hastings_mcleod,
    left_asymptote,
)

__all__ = [
    "PainleveSolution",
    "TWValue",
    "default_solution",
    "fredholm_oracle",
    "gue_sharp_shape",
    "hastings_mcleod",
    "left_asymptote",
    "tail_asymptote",
    "tw_cdf",
    "tw_pdf",
    "tw_quantile",
    "tw_sf",
]
