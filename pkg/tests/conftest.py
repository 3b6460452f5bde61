import sys

import pytest

from motrec.generators import fibonacci_source


def rewrite_fibonacci(n):
    """Fibonacci prefix by plain string rewriting; independent of the generator module."""
    w = "a"
    while len(w) < n:
        w = "".join("ab" if ch == "a" else "a" for ch in w)
    return w[:n]


def brute_P(text, n):
    return len({text[i:i + n] for i in range(len(text) - n + 1)})


@pytest.fixture(scope="session")
def fib_text():
    return rewrite_fibonacci(20000)


@pytest.fixture
def fib():
    return fibonacci_source()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[i])
