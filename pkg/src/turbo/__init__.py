from .canonical import canonicalize, reparametrization_mass
from .families import flat_sigma, g_theta_family, paper_limit, paper_sigma_theta, unit_constant_pair
from .turbofunction import Instanton, Turbofunction, embed, reparametrize, sigma_delta
from .visualization import (
    dense_approximation,
    hat_plus,
    instantons,
    right_continuous_inverse,
    visualize,
    visualize_pair,
)

__all__ = [
    "Instanton",
    "Turbofunction",
    "canonicalize",
    "dense_approximation",
    "embed",
    "flat_sigma",
    "g_theta_family",
    "hat_plus",
    "instantons",
    "paper_limit",
    "paper_sigma_theta",
    "reparametrization_mass",
    "reparametrize",
    "right_continuous_inverse",
    "sigma_delta",
    "unit_constant_pair",
    "visualize",
    "visualize_pair",
]
