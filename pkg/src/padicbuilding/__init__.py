"""Exact computation in the seminorm compactification of the PGL_n building.

All arithmetic is exact: the base field is Q with a p-adic valuation,
absolute values are carried in log scale, and every equality decision is
a decision about rationals.
"""

from .arith import (
    INF,
    LogValue,
    LScalar,
    PrimeContext,
    abs_k,
    k_rank,
    l_add,
    l_from_k,
    l_inv,
    l_mul,
    l_pi,
    l_scalar,
    l_scale,
    solve_linear,
    val_k,
    val_l,
)
from .apartment import (
    ApartmentPoint,
    MonomialElement,
    OpenBox,
    Root,
    act_monomial,
    apartment_point,
    dual_flip,
    f_point,
    f_sigma,
    gamma_membership,
    interior_point,
    monomial_compose,
    monomial_element,
    monomial_identity,
    monomial_inverse,
    monomial_matrix,
    nu_translation,
    open_box,
    ray_limit,
    root_eval,
    s_project,
)
from .seminorm import (
    DiagonalSeminorm,
    class_equals,
    compose_with,
    diagonal_seminorm,
    distance_constants,
    equals,
    evaluate,
    kernel_of,
    orthogonalize,
    phi_from_apartment,
    phi_inverse,
    pullback_from_functional,
)
from .building import (
    BuildingPoint,
    ChartPoint,
    ElementaryUnipotent,
    act_group,
    building_point,
    chart_equivalent,
    fixes_pointwise,
    from_chart,
    in_stabilizer_P_x,
    in_U_a_sigma,
    sample_P_x_generators,
    sigma_project,
    unipotent_matrix,
)
from .berkovich import (
    LFunctional,
    MonomialPoint,
    PolynomialSymV,
    alpha_evaluate,
    check_multiplicative,
    gauss_point,
    in_omega,
    j_section,
    l_functional,
    monomial_class_equals,
    monomial_point,
    polynomial,
    r_reduce_L_point,
    r_reduce_monomial,
    r_reduce_rational,
)

__version__ = "0.1.0"
