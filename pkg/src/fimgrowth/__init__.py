"""Sphere sizes, idempotent counts and growth rates of free inverse monoids."""

from .counting import (
    ball_size,
    binomial,
    count_munn_trees,
    fuss_catalan,
    idempotent_sphere_size,
    p_catalan,
    sphere_size,
    sphere_table,
)
from .growth import (
    asymptotic_growth,
    growth_poly,
    growth_rate,
    idempotent_growth_rate,
    irreducibility_certificate,
    maximize_h,
)
from .munn import MunnTree, eval_word, geodesic_word, invert, multiply
from .words import ReducedWord, concat, reduce

__version__ = "0.1.0"
