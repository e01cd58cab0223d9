"""Ferrers diagrams of the naturals via prime factorization.

``n = p_a1^b1 ... p_as^bs`` is drawn as ``b_i`` rows of length ``a_i``.
Containment of figures orders the naturals compatibly with ``<=``, which
yields ``pi(x) >= floor(lg x) / lg(floor(lg x) + 1)``.
"""

from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    RectDims,
    VerificationReport,
    bound_report,
    count_subfigures_rect,
    enumerate_subfigures,
    floor_lg,
    pi_lower_bound,
    rectangle,
    verify_lemma1,
    verify_lemma2,
    verify_theorem,
)
from .diagram import Partition, from_diagram, height, is_subfigure, to_diagram, width
from .errors import DomainError, IntegerOverflow, NotPrime
from .primes import Factorization, PrimeTable, factorize, nth_prime, prime_count, prime_index
from .render import RenderSpec, render

__version__ = "0.1.0"
