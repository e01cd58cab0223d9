"""The bijection between naturals and Ferrers diagrams, and subfigure order.

``n = p_a1^b1 * ... * p_as^bs`` maps to the figure with ``b_i`` rows of
length ``a_i``.  Figures are stored canonically as nonincreasing row
lengths, so two figures are equal exactly when their row multisets are.
"""

from __future__ import annotations

from array import array
from typing import Iterable

from .errors import IntegerOverflow
from .primes import PrimeTable, default_table

__all__ = [
    "Partition",
    "figure_arrays",
    "from_diagram",
    "from_json",
    "height",
    "is_subfigure",
    "to_diagram",
    "to_json",
    "width",
]


class Partition(tuple):
    """A Ferrers diagram: a nonincreasing tuple of positive row lengths.

    >>> Partition([3, 1])
    Partition([3, 1])
    >>> Partition.canonical([1, 3])
    Partition([3, 1])
    """

    __slots__ = ()

    def __new__(cls, rows: Iterable[int] = ()):
        rows = tuple(rows)
        prev = None
        for r in rows:
            if not isinstance(r, int) or isinstance(r, bool):
                raise TypeError(f"row lengths must be integers, got {r!r}")
            if r < 1:
                raise ValueError(f"row lengths must be >= 1, got {list(rows)}")
            if prev is not None and r > prev:
                raise ValueError(f"row lengths must be nonincreasing, got {list(rows)}")
            prev = r
        return super().__new__(cls, rows)

    @classmethod
    def _trusted(cls, rows) -> Partition:
        # caller guarantees canonical rows
        return tuple.__new__(cls, rows)

    @classmethod
    def canonical(cls, rows: Iterable[int]) -> Partition:
        """Sort arbitrary row lengths into canonical order."""
        return cls(sorted(rows, reverse=True))

    @property
    def rows(self) -> list[int]:
        return list(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    @property
    def size(self) -> int:
        """Number of squares."""
        return sum(self)

    def __repr__(self):
        return f"Partition({list(self)})"


def to_diagram(n: int, table: PrimeTable | None = None) -> Partition:
    """The figure of ``n``: ``beta`` rows of length ``alpha`` per prime power."""
    table = table or default_table
    rows: list[int] = []
    for alpha, beta in reversed(table.factorize(n).terms):
        rows.extend([alpha] * beta)
    return Partition._trusted(rows)


def from_diagram(d: Iterable[int], table: PrimeTable | None = None,
                 max_bits: int | None = None) -> int:
    """Inverse of :func:`to_diagram`: the product of ``p_r`` over rows ``r``.

    With ``max_bits`` set, raise :class:`IntegerOverflow` as soon as the
    partial product needs more bits than that.
    """
    table = table or default_table
    d = d if isinstance(d, Partition) else Partition(d)
    n = 1
    for r in d:
        n *= table.nth_prime(r)
        if max_bits is not None and n.bit_length() > max_bits:
            raise IntegerOverflow(f"F^-1({list(d)}) needs more than {max_bits} bits")
    return n


def is_subfigure(f: Partition, g: Partition) -> bool:
    """True when ``g`` covers ``f`` with bottom-left corners aligned."""
    if len(f) > len(g):
        return False
    for a, b in zip(f, g):
        if a > b:
            return False
    return True


def height(d: Partition) -> int:
    return len(d)


def width(d: Partition) -> int:
    return d[0] if d else 0


def to_json(d: Partition, table: PrimeTable | None = None,
            max_bits: int | None = None) -> dict:
    """Canonical JSON-ready form ``{"n": ..., "rows": [...]}``.

    ``n`` is ``None`` when it would exceed ``max_bits``.
    """
    try:
        n = from_diagram(d, table, max_bits=max_bits)
    except IntegerOverflow:
        n = None
    return {"n": n, "rows": list(d)}


def from_json(obj: dict) -> Partition:
    """Read the canonical JSON form; ``n`` is checked when present."""
    d = Partition(obj["rows"])
    n = obj.get("n")
    if n is not None and from_diagram(d) != n:
        raise ValueError(f"rows {list(d)} do not encode n = {n}")
    return d


def figure_arrays(n_max: int, table: PrimeTable | None = None):
    """Figures of ``1..n_max`` packed as ``(flat, offsets)`` ``array('I')``.

    The figure of ``n`` is ``flat[offsets[n]:offsets[n + 1]]``; index 0 is an
    empty placeholder.
    """
    table = table or default_table
    state = table.ensure(max(n_max, 2))
    spf, primes = state.spf, state.primes
    index = {p: k for k, p in enumerate(primes, 1) if p <= n_max}
    flat = array("I")
    offsets = array("I", [0, 0])
    for n in range(1, n_max + 1):
        rows = []
        m = n
        while m > 1:
            p = spf[m]
            rows.append(index[p])
            m //= p
        rows.reverse()
        flat.extend(rows)
        offsets.append(len(flat))
    return flat, offsets
