"""Exact computations with Hessenberg functions and the ideals I_h and J_h."""

from .groebner import GroebnerBasis, buchberger, ideal_membership, is_groebner, reduce_basis, s_polynomial
from .hessenberg import (
    DegreeTuple,
    HasseDiagram,
    HessenbergFunction,
    InvalidDegreeTuple,
    InvalidHessenbergFunction,
    count_maximal_chains,
    enumerate_hessenberg,
    from_degree_tuple,
    from_dyck_path,
    hasse_diagram,
    parse_hessenberg,
    to_degree_tuple,
    to_dyck_path,
)
from .ideals import (
    antidiagonal_generators,
    c_generators,
    groebner_basis,
    ideal_contains,
    j_generators,
    verify_I_equals_J,
    verify_minimality,
)
from .poly import GRLEX, LEX, MonomialOrder, Polynomial, divide, parse_polynomial
from .quotient import graded_dimensions, monomial_basis, rank
from .symfun import complete_truncated, elementary_truncated, matrix_B, matrix_B_inverse

__version__ = "0.1.0"

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "ideal_membership",
    "is_groebner",
    "reduce_basis",
    "s_polynomial",
    "DegreeTuple",
    "HasseDiagram",
    "HessenbergFunction",
    "InvalidDegreeTuple",
    "InvalidHessenbergFunction",
    "count_maximal_chains",
    "enumerate_hessenberg",
    "from_degree_tuple",
    "from_dyck_path",
    "hasse_diagram",
    "parse_hessenberg",
    "to_degree_tuple",
    "to_dyck_path",
    "antidiagonal_generators",
    "c_generators",
    "groebner_basis",
    "ideal_contains",
    "j_generators",
    "verify_I_equals_J",
    "verify_minimality",
    "GRLEX",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "divide",
    "parse_polynomial",
    "graded_dimensions",
    "monomial_basis",
    "rank",
    "complete_truncated",
    "elementary_truncated",
    "matrix_B",
    "matrix_B_inverse",
]
