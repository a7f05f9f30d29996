import itertools
import random

import pytest


def binary_words(max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        yield from itertools.product((0, 1), repeat=n)


def factors(w):
    n = len(w)
    return {w[i:j] for i in range(n) for j in range(i + 1, n + 1)}


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    import sys

    for name, mod in list(sys.modules.items()):
        if name.endswith("test_acceptance") and getattr(mod, "RESULTS", None):
            terminalreporter.section("acceptance criteria")
            for num in sorted(mod.RESULTS):
                terminalreporter.write_line(mod.RESULTS[num])
