"""Primary decomposition of squarefree monomial ideals."""

from .primes import drop_boolean_primes, intersect_primes, minimal_primes, sorted_primes

__all__ = ["drop_boolean_primes", "intersect_primes", "minimal_primes", "sorted_primes"]
