"""Non-abelian tensor squares of finite-dimensional Lie superalgebras."""

from .exactlin import GF, QQ, Field
from .gamma import gamma_dim, gamma_of_abelianization
from .superalg import (
    LieSuperAlgebra,
    SuperDim,
    abelian,
    abelianization,
    center,
    derived_subalgebra,
    direct_sum,
    heisenberg_even,
    heisenberg_odd,
    quotient,
    recognize_heisenberg_plus_abelian,
    validate,
)
from .tensor import exterior_square, multiplier_dim, square_ideal, tensor_square
from .bounds import check_bound, family_sweep, upper_bound

__all__ = [
    "GF", "QQ", "Field", "LieSuperAlgebra", "SuperDim",
    "abelian", "abelianization", "center", "derived_subalgebra", "direct_sum",
    "heisenberg_even", "heisenberg_odd", "quotient", "recognize_heisenberg_plus_abelian", "validate",
    "gamma_dim", "gamma_of_abelianization",
    "tensor_square", "exterior_square", "square_ideal", "multiplier_dim",
    "check_bound", "family_sweep", "upper_bound",
]
