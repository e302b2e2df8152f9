"""Entanglement-assisted quantum error-correcting codes from classical codes."""

from .catalytic import ParamTuple, bootstrap, combine_ea, combine_with_standard
from .code import (
    CodeParams,
    EaqeccCode,
    augment,
    canonical_generators,
    distance,
    from_css,
    from_generators,
    from_gf4,
    params,
    with_distance,
)
from .decoder import (
    PauliChannel,
    SimReport,
    SyndromeTable,
    build_syndrome_table,
    correctable_set_check,
    decode,
    is_correction_successful,
    monte_carlo,
    syndrome_of,
)
from .exceptions import CompositionError, DimensionError, InvalidFormError, ParseError
from .gf4 import (
    GF4,
    GF4Matrix,
    classical_min_distance,
    dagger,
    ebit_count_css,
    ebit_count_gf4,
    expand_ctq,
    gf4_rank,
    gf4_to_symplectic,
)
from .pauli import (
    CheckMatrix,
    SympVector,
    gf2_rank,
    in_rowspace,
    multiply,
    parse_pauli_string,
    symplectic_product,
    weight,
)
from .sgs import (
    StandardForm,
    complete_symplectic_basis,
    decompose,
    group_equal,
    verify_standard_form,
)

__all__ = [
    "CheckMatrix",
    "CodeParams",
    "CompositionError",
    "DimensionError",
    "EaqeccCode",
    "GF4",
    "GF4Matrix",
    "InvalidFormError",
    "ParamTuple",
    "ParseError",
    "PauliChannel",
    "SimReport",
    "StandardForm",
    "SympVector",
    "SyndromeTable",
    "augment",
    "bootstrap",
    "build_syndrome_table",
    "canonical_generators",
    "classical_min_distance",
    "combine_ea",
    "combine_with_standard",
    "complete_symplectic_basis",
    "correctable_set_check",
    "dagger",
    "decode",
    "decompose",
    "distance",
    "ebit_count_css",
    "ebit_count_gf4",
    "expand_ctq",
    "from_css",
    "from_generators",
    "from_gf4",
    "gf2_rank",
    "gf4_rank",
    "gf4_to_symplectic",
    "group_equal",
    "in_rowspace",
    "is_correction_successful",
    "monte_carlo",
    "multiply",
    "params",
    "parse_pauli_string",
    "symplectic_product",
    "syndrome_of",
    "verify_standard_form",
    "weight",
    "with_distance",
]

__version__ = "0.1.0"
