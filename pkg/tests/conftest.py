import pytest

from fqstruct.field import make_field, odd_prime_powers

ACCEPTANCE_LINES = []

SMALL_Q = [3, 5, 7, 9, 11, 13, 23, 25, 27, 49, 81, 121, 125]


def fields_upto(hi, lo=3):
    return [make_field(p, n) for _, p, n in odd_prime_powers(lo, hi)]


@pytest.fixture(params=SMALL_Q, ids=lambda q: f"q{q}")
def small_field(request):
    from fqstruct.field import field_for_q

    return field_for_q(request.param)


@pytest.fixture
def record_criterion():
    def record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
