"""The seven acceptance criteria; each prints one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the table alone.
"""

import pytest

from logdelpezzo import reproduce

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = {}


@pytest.mark.parametrize("key", list(reproduce.CHECKS))
def test_criterion(key):
    ck = reproduce.run(key)
    line = f"{ck.line()} ({ck.seconds:.1f}s)"
    ACCEPTANCE_LINES[key] = line
    print(line)
    for f in ck.findings:
        print(f"    note: {f}")
    assert ck.passed, "\n".join(ck.details[:20])


if __name__ == "__main__":
    for ck in reproduce.run_all():
        print(ck.line())
