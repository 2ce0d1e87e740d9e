"""Self-dual double circulant codes over finite fields."""

from .census import (
    brute_force_enumerate,
    census_run,
    count_formula,
    crt_enumerate,
    entropy_q,
    gv_quarter,
    inv_entropy_q,
    lemma7_audit,
)
from .codes import (
    Codeword,
    DoubleCirculantCode,
    contains,
    encode,
    is_self_dual,
    make_code,
    min_distance,
    weight_distribution,
)
from .finite_field import (
    FieldElement,
    FieldSpec,
    arith,
    make_field,
    minus_one_is_square,
    sqrt_of_minus_one,
)
from .kernels import BACKEND
from .polyring import (
    Poly,
    XnFactorization,
    artin_condition,
    cyclotomic_cosets,
    factor_xn_minus_1,
    poly_mulmod,
    reciprocal,
)
from .symmetry import (
    MonomialTransform,
    antiswap_flip,
    apply,
    invariant_under,
    pi_sigma,
    tau,
    verify_constadihedral,
    verify_dihedral,
)

__version__ = "0.1.0"
