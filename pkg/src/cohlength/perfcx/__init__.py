"""Perfect complexes: shifts, cones, Hom complexes, minimal models, barcodes, AR triangles."""
from .complex import (
    ChainMap,
    ComplexError,
    PerfectComplex,
    Violation,
    change_basis,
    direct_sum,
    direct_sum_map,
    identity_map,
    inclusion,
    is_acyclic,
    k_homology_dims,
    projection,
    shift,
    stalk,
    string_complex,
    validate,
    zero_complex,
    zero_map,
)
from .hom import HomComplex, derived_hom_dim, derived_hom_profile, find_null_homotopy, hom_complex
from .minimal import (
    Barcode,
    UndecidableError,
    barcode,
    barcode_certificate,
    barcode_from_reps,
    from_barcode,
    homotopy_equivalent,
    interval_bases,
    is_homotopy_equivalence,
    minimal_model,
    minimal_model_with_map,
)
from .triangles import (
    ARTriangle,
    Triangle,
    ar_triangle,
    canonical_null_homotopy,
    check_homotopy,
    cone,
    contractible,
    extension_map,
    free_resolution_of_k,
    pad_a_and_b,
    pad_b_and_c,
    phi_map,
    schanuel_free_parity_check,
    schanuel_triangle_check,
    triangle_sum,
    truncation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
