"""
Root solver backends.

A backend is a module exposing ``solve(coefficients, cfg) -> SolveResult`` for
a squarefree polynomial given by integer coefficients (constant term first),
and ``EFFECTIVE_PRECISION`` (None when it honours cfg.precision_bits). The
module used is named by the SSNN_ROOTS_SOLVER_BACKEND setting or by
SolverConfig.backend.
"""
from typing import List, NamedTuple


class SolveResult(NamedTuple):
    """ Raw approximations as returned by a backend. """
    roots: List
    iterations: int
    converged: bool
