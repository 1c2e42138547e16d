#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Backend that takes the eigenvalues of the companion matrix in double precision.

Used as an independent cross-check of the default backend.
"""
from fractions import Fraction

import numpy as np

from ssnn_roots.backends import SolveResult

EFFECTIVE_PRECISION = 53


def companion_matrix(coefficients):
    """
    Companion matrix of the monic polynomial with the given coefficients.
    """
    scale = max(abs(c) for c in coefficients)
    normalized = np.array([float(Fraction(c, scale)) for c in coefficients])
    monic = normalized / normalized[-1]
    degree = len(coefficients) - 1
    matrix = np.zeros((degree, degree))
    matrix[1:, :-1] = np.eye(degree - 1)
    matrix[:, -1] = -monic[:-1]
    return matrix


def solve(coefficients, cfg):  # pylint: disable=unused-argument
    """
    Eigenvalues of the companion matrix.
    """
    eigenvalues = np.linalg.eigvals(companion_matrix(coefficients))
    return SolveResult([complex(value) for value in eigenvalues], 0, True)
