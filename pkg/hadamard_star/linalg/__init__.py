from .matrix import (
    Matrix,
    cofactor_determinant,
    determinant,
    kernel_basis,
    mat_vec,
    maximal_minors,
    rank,
    solve,
)

__all__ = [
    "matrix",
    "Matrix",
    "cofactor_determinant",
    "determinant",
    "kernel_basis",
    "mat_vec",
    "maximal_minors",
    "rank",
    "solve",
]
