import random

import pytest
from hypothesis import strategies as st

from vknots.gausscode import parse_gauss, validate_code

# one line per acceptance criterion, emitted after the test run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_code_text(rng, n, allow_multi=False):
    """A random valid single-component code with n crossings (text form)."""
    if n == 0:
        return "()"
    pat = list(range(1, n + 1)) * 2
    rng.shuffle(pat)
    passages = {lab: rng.choice("OU") for lab in range(1, n + 1)}
    signs = {lab: rng.choice("+-") for lab in range(1, n + 1)}
    first = set()
    parts = []
    for lab in pat:
        if lab not in first:
            first.add(lab)
            parts.append(f"{passages[lab]}{lab}{signs[lab]}")
        else:
            other = "U" if passages[lab] == "O" else "O"
            parts.append(f"{other}{lab}{signs[lab]}")
    return "".join(parts)


def random_code(rng, n):
    code = parse_gauss(random_code_text(rng, n))
    assert not validate_code(code)
    return code


@pytest.fixture
def rng():
    return random.Random(20240601)


# hypothesis strategy: valid single-component codes with up to 4 crossings
@st.composite
def small_codes(draw):
    n = draw(st.integers(min_value=0, max_value=4))
    seed = draw(st.integers(min_value=0, max_value=2**31))
    return random_code(random.Random(seed), n)
