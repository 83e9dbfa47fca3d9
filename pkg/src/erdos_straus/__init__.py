"""Search, verify, classify and survey solutions of 4/p = 1/x + 1/y + 1/z."""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    Bounds,
    EquationError,
    Factorization,
    NotPrimeError,
    OrderingError,
    Solution,
    SolutionError,
    SolutionType,
    make_solution,
)
from .oracle import enumerate_all, is_solution  # noqa: E402
from .reduction import NoSolutionFound, hybrid_search, search_one_var, search_two_var  # noqa: E402
from .structure import classify, factorize, verify_all  # noqa: E402

__all__ = [
    "Bounds",
    "EquationError",
    "Factorization",
    "NoSolutionFound",
    "NotPrimeError",
    "OrderingError",
    "Solution",
    "SolutionError",
    "SolutionType",
    "classify",
    "enumerate_all",
    "factorize",
    "hybrid_search",
    "is_solution",
    "make_solution",
    "search_one_var",
    "search_two_var",
    "verify_all",
]
