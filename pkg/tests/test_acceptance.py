"""The thirteen acceptance criteria, one test each.

Every test runs the full suite of the criterion (the same code as
`schurkit verify <suite>`) and prints a single PASS/FAIL line.  Run this file
directly to get just the thirteen lines.
"""
import json
import os
import sys

import pytest

from schurkit import suites

CRITERIA = suites.criteria()


def summary(report):
    status = "PASS" if report["pass"] else "FAIL"
    total = report["passed"] + report["failed"]
    desc = suites.SUITES[report["suite"]][2]
    return (f"criterion {report['criterion']:>2} {status} "
            f"{report['suite']}: {report['passed']}/{total} cases ({desc})")


def failures(report, limit=5):
    bad = [c for c in report["cases"] if not c["pass"]]
    return "\n".join(json.dumps(c, sort_keys=True) for c in bad[:limit])


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(name, capsys):
    os.environ.setdefault("SCHURKIT_QUIET", "1")
    report = suites.run_suite(name)
    with capsys.disabled():
        print("\n" + summary(report))
    assert report["cases"], f"{name} produced no cases"
    assert report["pass"], f"{summary(report)}\n{failures(report)}"


def test_thirteen_criteria():
    assert len(CRITERIA) == 13
    assert [suites.SUITES[n][0] for n in CRITERIA] == list(range(1, 14))


if __name__ == "__main__":
    os.environ.setdefault("SCHURKIT_QUIET", "1")
    ok = True
    for name in CRITERIA:
        rep = suites.run_suite(name)
        ok &= rep["pass"]
        print(summary(rep), flush=True)
    sys.exit(0 if ok else 1)
