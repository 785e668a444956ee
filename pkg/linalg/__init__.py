"""
linalg package – Exact prime-field linear algebra and surrogate generic frameworks.

Modules:
    field      – FieldMatrix, elimination, rank, kernel basis, random kernel element
    framework  – Framework, sample_framework, splittable trial seeds
"""

from .field import (
    FieldMatrix, FieldVector,
    apply, field_rng, kernel_basis, matmul, null_space, random_kernel_element,
    rank, row_reduce, transpose,
)
from .framework import Framework, sample_framework, trial_seeds
