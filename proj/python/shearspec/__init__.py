"""Exact spectra and eigenfunctions of sheared monomial potential wells."""

from ._core import (
    BracketError,
    ConvergenceError,
    DomainError,
    EnergyLevel,
    Error,
    FunctionValue,
    MatchingError,
    MonomialFamily,
    OverflowError,
    PiecewiseEigenfunction,
    QuadratureError,
    RangeError,
    ResolutionError,
    ShearParam,
    action_integral,
    airy_ai,
    airy_ai_prime,
    airy_bi,
    airy_bi_prime,
    airy_zero,
    build,
    classical_period,
    conjugate_shear,
    f_linear,
    f_oscillator,
    find_levels,
    find_levels_dirichlet,
    gamma,
    harmonic_family,
    hellmann_feynman_derivative,
    kummer_1f1,
    linear_family,
    oracle_levels,
    pcf_d,
    pcf_d_prime,
    pcf_u,
    pcf_u_prime,
    wkb_level,
    wkb_level_quantum,
)

__version__ = "0.1.0"

_FAMILIES = {"linear": linear_family, "harmonic": harmonic_family}


def levels(family, nu=1.0, n_max=4, k=1.0):
    """Eigenvalues 0..n_max as plain floats.

    family is "linear" or "harmonic" (the CLI vocabulary); nu = 0.5 routes
    to the Dirichlet-limit closed forms like the CLI does.
    """
    try:
        fam = _FAMILIES[family](k)
    except KeyError:
        raise DomainError(f"unknown family {family!r}; use 'linear' or 'harmonic'")
    if nu == 0.5:
        found = find_levels_dirichlet(fam, n_max)
    else:
        found = find_levels(fam, ShearParam(nu), n_max)
    return [level.E for level in found]
