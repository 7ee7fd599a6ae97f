"""Cohomological functions: construction, axioms, extension, decomposition."""
from .functions import (
    CohFunction,
    ComboFunction,
    IncompatibleAlgebra,
    IrreducibleLabel,
    ModuleFunction,
    ObjectFunction,
    ObjectLabel,
    ResidueFunction,
    ResidueLabel,
    SimpleLabel,
    chi_of_complex,
    chi_of_module,
    combo,
    end_data_of_complex,
    eval_chi,
    simple_module_function,
)
from .ops import (
    AxiomViolation,
    BasisInsufficient,
    IsoVerdict,
    WindowError,
    barcode_labels,
    check_cohomological,
    check_sequence,
    chi_table,
    chi_table_csv,
    decompose_chi,
    extend_chi,
    extend_chi_all,
    extension_anchors,
    five_term_sum,
    length_table,
    lengths_determine_iso,
    object_multiplicity,
    probe_window,
    simple_functor_eval,
    strip_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
