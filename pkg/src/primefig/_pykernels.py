"""Pure-Python implementations of the hot loops.

Every function here has a twin of the same signature in ``_ckernels.pyx``.
Arrays are ``array('I')`` so both backends share one memory layout.
"""

from array import array
from math import isqrt


def sieve(limit):
    """Smallest-prime-factor table and prime list up to ``limit``.

    ``spf[n]`` is the least prime dividing ``n`` for ``n >= 2`` and 0 for
    ``n < 2``.
    """
    limit = max(int(limit), 1)
    spf = array("I", bytes(4 * (limit + 1)))
    # descending so that smaller primes overwrite larger ones
    small = [p for p in range(2, isqrt(limit) + 1) if all(p % q for q in range(2, isqrt(p) + 1))]
    for p in reversed(small):
        start = p * p
        count = len(range(start, limit + 1, p))
        spf[start::p] = array("I", [p]) * count
    primes = []
    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = n
            primes.append(n)
    return spf, primes


def height_width_tables(spf, primes):
    """Per-``n`` row count and top row length of the figure of ``n``.

    ``heights[n]`` is the number of prime factors with multiplicity and
    ``widths[n]`` the 1-based index of the largest prime factor; both are
    0 at ``n = 0, 1``.
    """
    size = len(spf)
    index = array("I", bytes(4 * size))
    for k, p in enumerate(primes, 1):
        index[p] = k
    heights = array("I", bytes(4 * size))
    widths = array("I", bytes(4 * size))
    for n in range(2, size):
        p = spf[n]
        m = n // p
        heights[n] = heights[m] + 1
        w = widths[m]
        widths[n] = index[p] if index[p] > w else w
    return heights, widths


def subfigure_violations(flat, offsets, a_lo, a_hi, b_hi):
    """Pairs ``(a, b)`` with ``a > b`` whose figures nest as ``F(a) <= F(b)``.

    The figure of ``n`` is ``flat[offsets[n]:offsets[n + 1]]`` (nonincreasing).
    Every pair in ``[a_lo, a_hi) x [1, b_hi]`` is tested.
    """
    figures = [tuple(flat[offsets[n]:offsets[n + 1]]) for n in range(b_hi + 1)]
    found = []
    for a in range(a_lo, a_hi):
        f = figures[a] if a <= b_hi else tuple(flat[offsets[a]:offsets[a + 1]])
        k = len(f)
        for b in range(1, b_hi + 1):
            g = figures[b]
            if k > len(g):
                continue
            for x, y in zip(f, g):
                if x > y:
                    break
            else:
                if a > b:
                    found.append((a, b))
    return found
