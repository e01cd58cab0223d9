import importlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def _backends():
    names = ["primefig._pykernels"]
    try:
        importlib.import_module("primefig._ckernels")
        names.append("primefig._ckernels")
    except ImportError:
        pass
    return names


@pytest.fixture(params=_backends(), ids=lambda name: name.rsplit(".", 1)[-1])
def kernels(request):
    return importlib.import_module(request.param)


CRITERIA = {
    "test_ac1_paper_table": "AC1 table 10 reproduces the n <= 10 table",
    "test_ac2_bijection_first_million": "AC2 bijection round-trip and injectivity on [1, 10^6]",
    "test_ac3_lemma1_oracle": "AC3 verify lemma1 --max 2000: 0 counterexamples / 4e6 pairs",
    "test_ac4_lemma2_oracle": "AC4 verify lemma2 8x8: 0 counterexamples, 12870 subfigures",
    "test_ac5_theorem_sweep": "AC5 verify theorem --xmax 10^6: bound and exact chain hold",
    "test_ac6_witness_claims": "AC6 tallest/widest figures are F(2^h) and F(p_w), x <= 10^4",
    "test_ac7_infinitude": "AC7 bound nondecreasing on 2^h, > 100 at 2^1024",
    "test_ac8_spot_values": "AC8 pi(100) = 25, bound(100) ~ 2.137, bound(10) = 1.5",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and outcome != "error":
                continue
            name = rep.nodeid.rsplit("::", 1)[-1]
            if name in CRITERIA:
                status = "PASS" if outcome == "passed" else "FAIL"
                lines.append((name, f"{status}  {CRITERIA[name]}  ({rep.duration:.2f}s)"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
