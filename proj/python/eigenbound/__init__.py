"""Lower bounds for sums of Dirichlet Laplacian, Stokes and bi-Laplacian eigenvalues."""

from ._core import (
    Geometry,
    Operator,
    ShapeParseError,
    beta,
    bound_exact,
    bound_liyau,
    bound_theorem,
    box_spectrum,
    geometry_from_json,
    lp_minimize,
    m_star_floor,
    parse_operator,
    run_cli,
    scaled_mass,
    sigma4_exact,
    sigma_asymptotic,
    sigma_exact,
    sigma_excess,
    sigma_liyau,
    solve_t,
)

__all__ = [
    "Geometry",
    "Operator",
    "ShapeParseError",
    "beta",
    "bound_exact",
    "bound_liyau",
    "bound_theorem",
    "box_spectrum",
    "geometry_from_json",
    "lp_minimize",
    "m_star_floor",
    "parse_operator",
    "run_cli",
    "scaled_mass",
    "sigma4_exact",
    "sigma_asymptotic",
    "sigma_exact",
    "sigma_excess",
    "sigma_liyau",
    "solve_t",
]
