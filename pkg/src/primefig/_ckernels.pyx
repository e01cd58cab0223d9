# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``."""

from array import array



def sieve(limit):
    cdef Py_ssize_t n, j, lim = max(int(limit), 1)
    cdef unsigned int[:] spf
    buf = array("I", bytes(4 * (lim + 1)))
    spf = buf
    primes = []
    for n in range(2, lim + 1):
        if spf[n] == 0:
            spf[n] = <unsigned int>n
            primes.append(n)
            if n <= lim // n:
                j = n * n
                while j <= lim:
                    if spf[j] == 0:
                        spf[j] = <unsigned int>n
                    j += n
    return buf, primes


def height_width_tables(spf_buf, primes):
    cdef unsigned int[:] spf = spf_buf
    cdef Py_ssize_t size = spf.shape[0], n, m, k
    cdef unsigned int p, w
    index_buf = array("I", bytes(4 * size))
    heights_buf = array("I", bytes(4 * size))
    widths_buf = array("I", bytes(4 * size))
    cdef unsigned int[:] index = index_buf
    cdef unsigned int[:] heights = heights_buf
    cdef unsigned int[:] widths = widths_buf
    k = 0
    for q in primes:
        k += 1
        index[<Py_ssize_t>q] = <unsigned int>k
    for n in range(2, size):
        p = spf[n]
        m = n // p
        heights[n] = heights[m] + 1
        w = widths[m]
        widths[n] = index[p] if index[p] > w else w
    return heights_buf, widths_buf


def subfigure_violations(flat_buf, offsets_buf, Py_ssize_t a_lo, Py_ssize_t a_hi,
                         Py_ssize_t b_hi):
    cdef unsigned int[:] flat = flat_buf
    cdef unsigned int[:] offsets = offsets_buf
    cdef Py_ssize_t a, b, i, fa, ka, gb, kb
    cdef bint nested
    found = []
    for a in range(a_lo, a_hi):
        fa = offsets[a]
        ka = offsets[a + 1] - fa
        for b in range(1, b_hi + 1):
            gb = offsets[b]
            kb = offsets[b + 1] - gb
            if ka > kb:
                continue
            nested = True
            for i in range(ka):
                if flat[fa + i] > flat[gb + i]:
                    nested = False
                    break
            if nested and a > b:
                found.append((a, b))
    return found
