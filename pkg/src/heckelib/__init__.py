"""Exact Hecke traces and Li-type coefficients for Hecke L-functions.

The trace formula runs in exact arithmetic (Fractions over cyclotomic
integers), verified against independent q-expansion and dimension-count
oracles, and feeds the explicit-formula assembly of the Li-type
coefficients tau_N(n) and tau_f(n).
"""

from .cache import TraceCache
from .classnum import class_number, form_class_weight, reduced_forms
from .cyclotomic import CyclotomicRational
from .dirichlet import (
    DirichletCharacter,
    kronecker_symbol,
    load_character,
    quadratic_character,
    save_character,
    trivial_character,
)
from .errors import (
    DataError,
    DomainError,
    HeckeError,
    InternalConsistencyError,
    ResourceLimitError,
)
from .li import (
    EigenData,
    LiReport,
    euler_factor_li_sum,
    euler_factor_zero_sum,
    load_eigen_data,
    save_eigen_data,
    tau_N,
    tau_f,
)
from .newforms import NewformDimensionTable, level_log_term, nu_table
from .oracle import gamma0_dimension_oracle, trace_oracle
from .series import archimedean_c1, euler_gamma, hurwitz_tail
from .trace import (
    HeckeSpace,
    TraceValue,
    b_coefficient,
    dimension,
    set_persistent_cache,
    trace_hecke,
    trivial_space,
)

__version__ = "0.1.0"

__all__ = [
    "TraceCache",
    "class_number",
    "form_class_weight",
    "reduced_forms",
    "CyclotomicRational",
    "DirichletCharacter",
    "kronecker_symbol",
    "load_character",
    "quadratic_character",
    "save_character",
    "trivial_character",
    "DataError",
    "DomainError",
    "HeckeError",
    "InternalConsistencyError",
    "ResourceLimitError",
    "EigenData",
    "LiReport",
    "euler_factor_li_sum",
    "euler_factor_zero_sum",
    "load_eigen_data",
    "save_eigen_data",
    "tau_N",
    "tau_f",
    "NewformDimensionTable",
    "level_log_term",
    "nu_table",
    "gamma0_dimension_oracle",
    "trace_oracle",
    "archimedean_c1",
    "euler_gamma",
    "hurwitz_tail",
    "HeckeSpace",
    "TraceValue",
    "b_coefficient",
    "dimension",
    "set_persistent_cache",
    "trace_hecke",
    "trivial_space",
]
