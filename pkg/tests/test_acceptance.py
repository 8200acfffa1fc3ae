"""The twelve acceptance checks, each reported as one PASS/FAIL line.

Also runnable directly: ``python tests/test_acceptance.py``.
"""

import pytest

from csl.registry import CRITERIA, run_example

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # direct script run
    ACCEPTANCE_LINES = []


def _line(res):
    status = "PASS" if res.passed else "FAIL"
    extra = "" if res.passed else f"  {res.diff()}"
    return f"{status} {res.id}: {res.title} ({res.seconds:.2f}s){extra}"


@pytest.mark.parametrize("cid", CRITERIA)
def test_criterion(cid):
    res = run_example(cid)
    line = _line(res)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert res.passed, res.diff()


if __name__ == "__main__":
    import sys

    results = [run_example(c) for c in CRITERIA]
    for r in results:
        print(_line(r))
    sys.exit(0 if all(r.passed for r in results) else 1)
