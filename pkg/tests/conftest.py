from fractions import Fraction

import pytest

_acceptance_lines: list[str] = []


def vertex_moments(sizes):
    """Mean and population variance of the color index over individual vertices.

    Independent of equichroma.stats: expands each class into one sample per
    vertex and sums directly.
    """
    ordered = sorted(sizes, reverse=True)
    xs = [Fraction(i) for i, s in enumerate(ordered, 1) for _ in range(s)]
    m = sum(xs) / len(xs)
    return m, sum((x - m) ** 2 for x in xs) / len(xs)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_lines.append(f"[{'PASS' if rep.passed else 'FAIL'}] {doc}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
