"""Finite windows of the spectrum: basic opens, isolated points, closure, Spec A embedding."""
from .core import (
    ClosureReport,
    FunctorProbe,
    ImageNode,
    InjectivityReport,
    Isolation,
    LengthSetReport,
    PrimeDatum,
    SpectrumWindow,
    SupportReport,
    basic_open_membership,
    closed_length_set_check,
    closure_extra_point_check,
    default_primes,
    empty_window,
    enumerate_sp_dual_numbers,
    fitting_witness,
    functor_membership,
    functor_value,
    image_nodes,
    image_probe,
    isolated_points,
    multiplication_cone,
    rho,
    rho_injectivity_check,
    simple_functor_probe,
    spectrum_csv,
    spectrum_summary,
    supp_dichotomy_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
