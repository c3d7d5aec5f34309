"""Exact formal characters of twisted generalized Verma modules over gl(m|n)."""

from .charring import (
    DEFAULT_TRUNC,
    FormalCharacter,
    K_coeffs,
    act_on_char,
    char_exp,
    coefficient,
    first_discrepancy,
    from_weights,
    height,
    kostant_p,
    p_of,
    p_series,
    partition_series,
    r_of,
    s_of,
)
from .errors import (
    IncompatibleTwistError,
    NotOneDimensionalError,
    PreconditionError,
    SupertwistError,
    WindowError,
)
from .modules import (
    LeviDecomposition,
    gvm_char,
    gvm_char_1dim,
    levi_decompose,
    levi_highest_weight_char,
    pbw_coefficient_oracle,
    verma_char,
)
from .root_systems import (
    ParabolicData,
    Root,
    RootSystem,
    Weight,
    eval_cartan,
    gamma_set,
    levi_from_blocks,
    make_gl,
    one_dimensional_weight,
    parabolic_from_simples,
    parse_algebra,
    parse_weight,
    standard_parabolics,
)
from .twist import (
    TwistReport,
    check_twist_compatible,
    oracle_twisted_char,
    theorem_report,
    theorem_sweep,
    twisted_gvm_char,
    twisted_gvm_char_1dim,
    verify_asp,
    verify_don,
    verify_pig,
    verify_pug,
)
from .weyl import (
    WeylElement,
    act,
    act_circle,
    act_dot,
    act_star,
    elements,
    from_word,
    inversion_set,
    parse_word,
)

__version__ = "0.1.0"
