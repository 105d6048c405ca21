"""Pure paraunitary groups of finite-dimensional matrix *-algebras.

Factor pure paraunitary Laurent operator polynomials into degree-one
projection factors, decide the divisibility order, compute lattice
meets and joins through the windowed invariant-subspace correspondence,
and machine-verify the axioms that make the group the structure group
of the projection orthomodular lattice of the commutant.
"""

from .numfield import (
    InputError,
    NumericalError,
    Subspace,
    Tolerances,
    join_subspace,
    kernel,
    meet_subspace,
    ortho_complement,
    orthonormal_basis,
    projector,
    set_tolerances,
    subspace_from_projector,
    tolerance_scope,
    tolerances,
)
from .star_algebra import (
    InvariantSubspace,
    StarAlgebra,
    certify_member,
    check_orthomodular,
    commutant,
    generate_algebra,
    is_member_XAprime,
    is_perp,
    oml_complement,
    oml_join,
    oml_meet,
    partial_oplus,
    random_projection_in,
)
from .laurent import (
    LaurentOp,
    PpuElement,
    in_positive_cone,
    is_paraunitary,
    is_pure,
    ppu_identity,
    ppu_t_power,
    twist_alpha,
)
from .ppu import (
    FactorList,
    WindowSubspace,
    complement_in_t,
    factor_positive,
    gamma_inverse,
    join,
    leq,
    leq_mirror,
    meet,
    omega_window,
    order_unit_exponent,
    p_of,
    random_ppu,
    reconstruct,
)
from .axioms import (
    CHECK_NAMES,
    check_commutative_model,
    check_gamma_oml,
    check_gvm,
    check_normality,
    check_order_unit,
    check_singularity,
    diagonal_algebra,
    run_suite,
)
from .reporting import CheckReport, derive_seed

__all__ = [
    "CHECK_NAMES",
    "CheckReport",
    "FactorList",
    "InputError",
    "InvariantSubspace",
    "LaurentOp",
    "NumericalError",
    "PpuElement",
    "StarAlgebra",
    "Subspace",
    "Tolerances",
    "WindowSubspace",
    "certify_member",
    "check_commutative_model",
    "check_gamma_oml",
    "check_gvm",
    "check_normality",
    "check_order_unit",
    "check_orthomodular",
    "check_singularity",
    "commutant",
    "complement_in_t",
    "derive_seed",
    "diagonal_algebra",
    "factor_positive",
    "gamma_inverse",
    "generate_algebra",
    "in_positive_cone",
    "is_member_XAprime",
    "is_paraunitary",
    "is_perp",
    "is_pure",
    "join",
    "join_subspace",
    "kernel",
    "leq",
    "leq_mirror",
    "meet",
    "meet_subspace",
    "oml_complement",
    "oml_join",
    "oml_meet",
    "omega_window",
    "order_unit_exponent",
    "ortho_complement",
    "orthonormal_basis",
    "p_of",
    "partial_oplus",
    "ppu_identity",
    "ppu_t_power",
    "projector",
    "random_ppu",
    "random_projection_in",
    "reconstruct",
    "run_suite",
    "set_tolerances",
    "subspace_from_projector",
    "tolerance_scope",
    "tolerances",
    "twist_alpha",
]
