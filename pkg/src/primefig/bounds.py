"""Subfigure counting and the lower bound pi(x) >= h / lg(h + 1), h = floor(lg x).

Besides the formulas this module carries brute-force sweeps that check each
step of the counting argument:

* figures nested under the subfigure order decode to ordered integers;
* an ``i x j`` rectangle has ``C(i + j, j)`` subfigures;
* ``2^h <= floor(x) <= C(h + w, w) <= (h + 1)^w`` with ``w = pi(x)``, exactly.

Every chain value is an exact Python integer.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import IO, Iterator, NamedTuple

from . import _kernels
from ._util import dumps, unlimited_int_digits
from .diagram import Partition, figure_arrays, is_subfigure
from .errors import DomainError, IntegerOverflow
from .primes import PrimeTable, default_table, floor_real

__all__ = [
    "CSV_COLUMNS",
    "BoundReport",
    "RectDims",
    "VerificationReport",
    "bound_report",
    "count_subfigures_rect",
    "dumps",
    "enumerate_subfigures",
    "floor_lg",
    "pi_lower_bound",
    "rectangle",
    "verify_lemma1",
    "verify_lemma2",
    "verify_theorem",
]

CSV_COLUMNS = ("x", "h", "w", "m_size", "binom", "power", "bound_value", "bound_ok", "chain_ok")

# bound values closer than this to an integer are re-decided exactly
NEAR_TIE = 1e-9


class RectDims(NamedTuple):
    height_i: int
    width_j: int


def rectangle(height_i: int, width_j: int) -> Partition:
    """The ``height_i x width_j`` rectangular figure (empty if either is 0)."""
    if height_i < 0 or width_j < 0:
        raise ValueError(f"rectangle dimensions must be >= 0, got {height_i}x{width_j}")
    if width_j == 0:
        return Partition()
    return Partition([width_j] * height_i)


def count_subfigures_rect(dims, max_bits: int | None = None) -> int:
    """``C(i + j, j)``, the number of subfigures of an ``i x j`` rectangle.

    Uses the multiplicative formula; every intermediate quotient is exact.
    """
    i, j = RectDims(*dims)
    if i < 0 or j < 0:
        raise ValueError(f"dimensions must be >= 0, got {i}x{j}")
    result = 1
    for k in range(1, j + 1):
        result = result * (i + k) // k
        if max_bits is not None and result.bit_length() > max_bits:
            raise IntegerOverflow(f"C({i + j}, {j}) exceeds {max_bits} bits")
    return result


def _subfigures(g: Partition, prefix: list[int], depth: int) -> Iterator[Partition]:
    yield Partition(prefix)
    if depth == len(g):
        return
    cap = g[depth] if not prefix else min(g[depth], prefix[-1])
    for r in range(1, cap + 1):
        prefix.append(r)
        yield from _subfigures(g, prefix, depth + 1)
        prefix.pop()


def enumerate_subfigures(g: Partition) -> list[Partition]:
    """Every subfigure of ``g`` once, in lexicographic order, ``()`` first."""
    g = g if isinstance(g, Partition) else Partition(g)
    return list(_subfigures(g, [], 0))


def floor_lg(x) -> int:
    """Largest ``h`` with ``2**h <= x``; exact for ints, Fractions and floats."""
    n = floor_real(x)
    if n < 1:
        raise DomainError(f"floor_lg needs x >= 1, got {x}")
    return n.bit_length() - 1


def pi_lower_bound(x) -> float:
    """``floor(lg x) / lg(floor(lg x) + 1)`` for ``x >= 2``."""
    if floor_real(x) < 2:
        raise DomainError(f"the bound is defined for x >= 2, got {x}")
    h = floor_lg(x)
    return h / math.log2(h + 1)


@dataclass
class BoundReport:
    x: object
    h: int
    w: int
    bound_value: float
    m_size: int
    binom: int
    power: int
    chain_ok: bool
    bound_ok: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["x"] = _json_number(self.x)
        return d


def _json_number(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else float(x)
    return x


def bound_report(x, table: PrimeTable | None = None) -> BoundReport:
    """Evaluate the bound and every member of the proof chain at ``x``."""
    table = table or default_table
    bound_value = pi_lower_bound(x)
    m_size = floor_real(x)
    h = floor_lg(m_size)
    w = table.prime_count(m_size)
    binom = count_subfigures_rect((h, w))
    power = (h + 1) ** w
    return BoundReport(
        x=x,
        h=h,
        w=w,
        bound_value=bound_value,
        m_size=m_size,
        binom=binom,
        power=power,
        chain_ok=(1 << h) <= m_size <= binom <= power,
        bound_ok=w >= bound_value,
    )


@dataclass
class VerificationReport:
    range_description: str
    cases_checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "range_description": self.range_description,
            "cases_checked": self.cases_checked,
            "counterexamples": list(self.counterexamples),
            "ok": self.ok,
        }


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[lo, hi)`` into at most ``parts`` contiguous ranges."""
    parts = max(1, min(parts, hi - lo))
    step, extra = divmod(hi - lo, parts)
    out, start = [], lo
    for k in range(parts):
        end = start + step + (1 if k < extra else 0)
        out.append((start, end))
        start = end
    return out


def _run(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return map(fn, tasks)
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        return list(pool.map(fn, tasks))
    finally:
        pool.shutdown()


def _lemma1_task(args):
    flat, offsets, lo, hi, n_max = args
    return _kernels.subfigure_violations(flat, offsets, lo, hi, n_max)


def verify_lemma1(n_max: int, jobs: int = 1, table: PrimeTable | None = None) -> VerificationReport:
    """Check ``F(a) <= F(b)  =>  a <= b`` for every pair in ``[1, n_max]^2``."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    flat, offsets = figure_arrays(n_max, table)
    tasks = [(flat, offsets, lo, hi, n_max) for lo, hi in _chunks(1, n_max + 1, jobs)]
    report = VerificationReport(f"pairs (a, b) in [1, {n_max}]^2", cases_checked=n_max * n_max)
    for found in _run(_lemma1_task, tasks, jobs):
        report.counterexamples.extend(
            f"F({a}) is a subfigure of F({b}) but {a} > {b}" for a, b in found
        )
    return report


def verify_lemma2(i_max: int, j_max: int) -> VerificationReport:
    """Enumerate subfigures of each ``i x j`` rectangle and compare with ``C(i + j, j)``."""
    if i_max < 0 or j_max < 0:
        raise ValueError(f"limits must be >= 0, got {i_max}, {j_max}")
    report = VerificationReport(f"rectangles i x j, 0 <= i <= {i_max}, 0 <= j <= {j_max}")
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            rect = rectangle(i, j)
            subs = enumerate_subfigures(rect)
            expected = count_subfigures_rect((i, j))
            report.cases_checked += 1
            if len(subs) != expected:
                report.counterexamples.append(f"{i}x{j}: enumerated {len(subs)}, C({i + j},{j}) = {expected}")
            elif len(set(subs)) != len(subs):
                report.counterexamples.append(f"{i}x{j}: enumeration repeats a figure")
            elif not all(is_subfigure(f, rect) for f in subs):
                report.counterexamples.append(f"{i}x{j}: enumeration yields a non-subfigure")
    return report


def _theorem_task(args):
    lo, hi, want_rows = args
    table = default_table
    state = table.ensure(max(hi, 2))
    spf, primes = state.spf, state.primes
    heights, widths = _kernels.height_width_tables(spf[:hi], [p for p in primes if p < hi])

    # running maxima and first attainers over [1, lo)
    max_h = max_w = 0
    arg_h = arg_w = 1
    for n in range(2, lo):
        if heights[n] > max_h:
            max_h, arg_h = heights[n], n
        if widths[n] > max_w:
            max_w, arg_w = widths[n], n

    w = table.prime_count(lo - 1)
    h = -1
    binom = power = 0
    bound_value = 0.0
    cases = 0
    bad: list[str] = []
    rows: list[tuple] = []
    for x in range(lo, hi):
        cases += 1
        is_p = spf[x] == x
        if is_p:
            w += 1
        hx = x.bit_length() - 1
        if hx != h:
            h = hx
            bound_value = h / math.log2(h + 1)
            near_tie = abs(bound_value - round(bound_value)) < NEAR_TIE
            binom = count_subfigures_rect((h, w))
            power = (h + 1) ** w
        elif is_p:
            binom = binom * (h + w) // w
            power *= h + 1

        chain_ok = (1 << h) <= x <= binom <= power
        bound_ok = w >= bound_value
        if near_tie and w == round(bound_value):
            # w >= h / lg(h + 1)  <=>  (h + 1)^w >= 2^h
            if bound_ok != (power >= (1 << h)):
                bad.append(f"x={x}: float comparison disagrees with exact (h+1)^w >= 2^h")
        if not chain_ok:
            bad.append(f"x={x}: chain 2^{h} <= {x} <= C({h + w},{w}) <= {h + 1}^{w} fails")
        if not bound_ok:
            bad.append(f"x={x}: pi(x)={w} < {bound_value!r}")

        if heights[x] > max_h:
            max_h, arg_h = heights[x], x
        if widths[x] > max_w:
            max_w, arg_w = widths[x], x
        if max_h != h or arg_h != 1 << h:
            bad.append(f"x={x}: max height {max_h} first at {arg_h}, expected {h} at {1 << h}")
        if max_w != w or arg_w != primes[w - 1]:
            bad.append(f"x={x}: max width {max_w} first at {arg_w}, expected {w} at {primes[w - 1]}")

        if want_rows:
            rows.append((x, h, w, x, binom, power, bound_value, bound_ok, chain_ok))
    return cases, bad, rows


def _write_rows(writer, rows, cache):
    for x, h, w, m_size, binom, power, bound_value, bound_ok, chain_ok in rows:
        # binom/power change only when (h, w) does
        if cache.get("key") != (h, w):
            cache["key"] = (h, w)
            cache["text"] = (str(binom), str(power))
        b_text, p_text = cache["text"]
        writer.writerow([x, h, w, m_size, b_text, p_text, repr(bound_value),
                         "true" if bound_ok else "false", "true" if chain_ok else "false"])


def verify_theorem(x_max: int, jobs: int = 1, csv_file: IO[str] | None = None) -> VerificationReport:
    """Sweep every integer ``x`` in ``[2, x_max]``.

    At each ``x`` this checks the bound, the exact chain, and that the
    tallest and widest figures among ``F(1..x)`` are ``F(2^h)`` and
    ``F(p_w)``.  With ``csv_file`` one row per ``x`` is streamed.
    """
    if x_max < 2:
        raise ValueError(f"x_max must be >= 2, got {x_max}")
    default_table.ensure(x_max + 1)
    want_rows = csv_file is not None
    tasks = [(lo, hi, want_rows) for lo, hi in _chunks(2, x_max + 1, jobs)]
    report = VerificationReport(f"integers x in [2, {x_max}]")
    writer = None
    cache: dict = {}
    with unlimited_int_digits():
        if want_rows:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
        for cases, bad, rows in _run(_theorem_task, tasks, jobs):
            report.cases_checked += cases
            report.counterexamples.extend(bad)
            if writer is not None:
                _write_rows(writer, rows, cache)
    return report
