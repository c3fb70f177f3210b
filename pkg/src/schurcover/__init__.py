"""Schur expansions of s_{mu'} s_{mu^c}, cover decisions and tableau injections."""

from .classify import TypeClass, classify, is_corner_symmetric, is_self_conjugate, predicted_cover
from .covers import (
    ConjectureReport,
    CoverVerdict,
    check_lexmin,
    covers,
    lexmin_actual,
    lexmin_conjectured,
    verify_conjecture,
)
from .expand import (
    LambdaIndex,
    SchurExpansion,
    assemble_lambda,
    check_stability,
    check_symmetry,
    difference,
    is_schur_positive,
    kronecker_hook_square,
    omega,
    product_conj_comp,
)
from .partitions import Cell, Partition, complement, conjugate, format_partition, parse_partition
from .tableaux import Tableau, count_lr, enumerate_lr, is_lattice, rotate180

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "ConjectureReport",
    "CoverVerdict",
    "LambdaIndex",
    "Partition",
    "SchurExpansion",
    "Tableau",
    "TypeClass",
    "assemble_lambda",
    "check_lexmin",
    "check_stability",
    "check_symmetry",
    "classify",
    "complement",
    "conjugate",
    "count_lr",
    "covers",
    "difference",
    "enumerate_lr",
    "format_partition",
    "is_corner_symmetric",
    "is_lattice",
    "is_schur_positive",
    "is_self_conjugate",
    "kronecker_hook_square",
    "lexmin_actual",
    "lexmin_conjectured",
    "omega",
    "parse_partition",
    "predicted_cover",
    "product_conj_comp",
    "rotate180",
    "verify_conjecture",
]
