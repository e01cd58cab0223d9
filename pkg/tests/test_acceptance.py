"""Exit criteria, one test per criterion, each under its wall-clock budget.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import math
import time

import pytest

from primefig.bounds import (
    count_subfigures_rect,
    enumerate_subfigures,
    floor_lg,
    pi_lower_bound,
    rectangle,
)
from primefig.cli import main
from primefig.diagram import from_diagram, height, to_diagram, width
from primefig.primes import nth_prime, prime_count

from oracles import pi_td

pytestmark = pytest.mark.acceptance


def cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


TABLE = [
    (1, "-", []),
    (2, "p1", ["#"]),
    (3, "p2", ["##"]),
    (4, "p1^2", ["#", "#"]),
    (5, "p3", ["###"]),
    (6, "p1 p2", ["#", "##"]),
    (7, "p4", ["####"]),
    (8, "p1^3", ["#", "#", "#"]),
    (9, "p2^2", ["##", "##"]),
    (10, "p1 p3", ["#", "###"]),
]
SQUARES = [0, 1, 2, 2, 3, 3, 4, 3, 4, 4]


def test_ac1_paper_table(capsys):
    with Budget(1):
        code, out = cli(capsys, "table", "10")
    assert code == 0
    blocks = out.rstrip("\n").split("\n\n")
    assert len(blocks) == 10
    for block, (n, factors, art), squares in zip(blocks, TABLE, SQUARES):
        head, *lines = block.split("\n")
        assert head.split(None, 1) == [str(n), factors]
        drawn = [line.strip() for line in lines]
        assert drawn == (art or ["(empty)"])
        assert sum(line.count("#") for line in drawn) == squares


def test_ac2_bijection_first_million():
    with Budget(30):
        seen = set()
        for n in range(1, 1_000_001):
            d = to_diagram(n)
            assert from_diagram(d) == n
            seen.add(d)
    assert len(seen) == 1_000_000


def test_ac3_lemma1_oracle(capsys):
    with Budget(60):
        code, out = cli(capsys, "verify", "lemma1", "--max", "2000")
    report = json.loads(out)
    assert code == 0
    assert report["cases_checked"] == 4 * 10 ** 6
    assert report["counterexamples"] == []


def test_ac4_lemma2_oracle(capsys):
    with Budget(10):
        code, out = cli(capsys, "verify", "lemma2", "--imax", "8", "--jmax", "8")
        subs = enumerate_subfigures(rectangle(8, 8))
    report = json.loads(out)
    assert code == 0 and report["counterexamples"] == []
    assert report["cases_checked"] == 81
    assert len(subs) == len(set(subs)) == 12870 == count_subfigures_rect((8, 8))


def test_ac5_theorem_sweep(capsys):
    with Budget(300):
        code, out = cli(capsys, "verify", "theorem", "--xmax", "1000000")
    report = json.loads(out)
    assert code == 0
    assert report["cases_checked"] == 999_999
    assert report["counterexamples"] == []


def test_ac6_witness_claims():
    with Budget(60):
        max_h = max_w = 0
        arg_h = arg_w = 1
        for x in range(2, 10_001):
            d = to_diagram(x)
            if height(d) > max_h:
                max_h, arg_h = height(d), x
            if width(d) > max_w:
                max_w, arg_w = width(d), x
            h, w = floor_lg(x), prime_count(x)
            assert (max_h, arg_h) == (h, 2 ** h), x
            assert (max_w, arg_w) == (w, nth_prime(w)), x


def test_ac7_infinitude():
    with Budget(1):
        values = [pi_lower_bound(2 ** h) for h in range(1, 4097)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert pi_lower_bound(2 ** 1024) > 100
    assert values[1023] == pytest.approx(1024 / math.log2(1025), abs=1e-9)


def test_ac8_spot_values(capsys):
    assert prime_count(100) == pi_td(100) == 25
    code, out = cli(capsys, "bound", "100")
    report = json.loads(out)
    assert code == 0 and report["bound_ok"] is True and report["w"] == 25
    assert abs(report["bound_value"] - 2.137243122648133) < 1e-9
    assert abs(report["bound_value"] - 6 / math.log2(7)) < 1e-9
    code, out = cli(capsys, "bound", "10")
    assert json.loads(out)["bound_value"] == 1.5
