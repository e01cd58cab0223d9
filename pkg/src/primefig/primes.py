"""Prime sequence, prime counting and factorization into indexed primes.

Primes are indexed from 1, so ``nth_prime(1) == 2``.  A :class:`PrimeTable`
sieves on demand and doubles its range whenever a query needs more; the
module-level functions share one default table.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from . import _kernels
from .errors import NotPrime

__all__ = [
    "Factorization",
    "PrimeTable",
    "default_table",
    "factorize",
    "is_prime",
    "nth_prime",
    "prime_count",
    "prime_index",
]


def floor_real(x) -> int:
    """Exact floor of an int, Fraction, Decimal-like or float."""
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"expected a finite number, got {x!r}")
        return math.floor(x)
    return math.floor(Fraction(x))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``(alpha, beta)`` pairs: ``n = prod p_alpha ** beta``.

    The empty factorization stands for ``n = 1``.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        terms = tuple((int(a), int(b)) for a, b in self.terms)
        object.__setattr__(self, "terms", terms)
        last = 0
        for alpha, beta in terms:
            if alpha <= last:
                raise ValueError(f"prime indices must be strictly increasing and >= 1: {terms}")
            if beta < 1:
                raise ValueError(f"exponents must be >= 1: {terms}")
            last = alpha

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def value(self, table: PrimeTable | None = None) -> int:
        table = table or default_table
        n = 1
        for alpha, beta in self.terms:
            n *= table.nth_prime(alpha) ** beta
        return n

    def notation(self) -> str:
        """Flattened subscript form, e.g. ``p1 p3`` or ``p2^2``; ``-`` for 1."""
        if not self.terms:
            return "-"
        return " ".join(f"p{a}" if b == 1 else f"p{a}^{b}" for a, b in self.terms)

    __str__ = notation


class _Sieved(NamedTuple):
    limit: int
    spf: object  # array('I') of smallest prime factors
    primes: tuple[int, ...]


class PrimeTable:
    """Growable sieve answering prime-index and prime-count queries.

    Queries read an immutable snapshot; growth builds a new snapshot under a
    lock and swaps it in, so concurrent readers never see a partial table.
    """

    def __init__(self, limit: int = 1 << 12):
        spf, primes = _kernels.sieve(limit)
        self._state = _Sieved(max(int(limit), 1), spf, tuple(primes))
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return self._state.limit

    @property
    def primes(self) -> tuple[int, ...]:
        return self._state.primes

    def ensure(self, limit: int) -> _Sieved:
        """Make sure every integer up to ``limit`` is sieved."""
        state = self._state
        if state.limit >= limit:
            return state
        with self._lock:
            state = self._state
            if state.limit >= limit:
                return state
            new_limit = state.limit
            while new_limit < limit:
                new_limit *= 2
            spf, primes = _kernels.sieve(new_limit)
            self._state = state = _Sieved(new_limit, spf, tuple(primes))
        return state

    def nth_prime(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"prime index must be >= 1, got {k}")
        state = self._state
        if len(state.primes) < k:
            # p_k < k (ln k + ln ln k) for k >= 6
            estimate = 16 if k < 6 else int(k * (math.log(k) + math.log(math.log(k)))) + 1
            state = self.ensure(estimate)
            while len(state.primes) < k:
                state = self.ensure(2 * state.limit)
        return state.primes[k - 1]

    def is_prime(self, n: int) -> bool:
        if n < 2:
            return False
        state = self.ensure(n)
        return state.spf[n] == n

    def prime_index(self, p: int) -> int:
        """Return ``k`` with ``nth_prime(k) == p``; raise :class:`NotPrime` otherwise."""
        if p < 2:
            raise NotPrime(f"{p} is not prime")
        state = self.ensure(p)
        if state.spf[p] != p:
            raise NotPrime(f"{p} is not prime")
        return bisect_left(state.primes, p) + 1

    def prime_count(self, x) -> int:
        """Number of primes ``<= x`` for real ``x >= 0``."""
        n = floor_real(x)
        if n < 0:
            raise ValueError(f"prime_count needs x >= 0, got {x!r}")
        if n < 2:
            return 0
        state = self.ensure(n)
        return bisect_right(state.primes, n)

    def factorize(self, n: int) -> Factorization:
        if n < 1:
            raise ValueError(f"factorize needs n >= 1, got {n}")
        primes_found = []
        state = self._state
        if n > state.limit:
            state = self.ensure(isqrt(n))
            for p in state.primes:
                if p * p > n:
                    break
                while n % p == 0:
                    primes_found.append(p)
                    n //= p
            if n > state.limit:
                # remaining cofactor is a prime beyond the table
                primes_found.append(n)
                n = 1
        spf = state.spf
        while n > 1:
            p = spf[n]
            primes_found.append(p)
            n //= p
        terms: list[tuple[int, int]] = []
        primes = self.ensure(primes_found[-1]).primes if primes_found else ()
        for p in primes_found:
            alpha = bisect_left(primes, p) + 1
            if terms and terms[-1][0] == alpha:
                terms[-1] = (alpha, terms[-1][1] + 1)
            else:
                terms.append((alpha, 1))
        return Factorization(tuple(terms))


default_table = PrimeTable()


def nth_prime(k: int) -> int:
    """The ``k``-th prime, 1-based."""
    return default_table.nth_prime(k)


def prime_index(p: int) -> int:
    return default_table.prime_index(p)


def prime_count(x) -> int:
    return default_table.prime_count(x)


def is_prime(n: int) -> bool:
    return default_table.is_prime(n)


def factorize(n: int) -> Factorization:
    return default_table.factorize(n)
