"""The twelve acceptance criteria, each run exactly at its stated scope.

Every criterion prints one PASS/FAIL line.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest, where the lines are
also collected into the terminal summary.
"""

import sys

import pytest

from wreathfock.verify import run_suite

# (number, suite, description, runtime limit in seconds or None)
CRITERIA = [
    (1, "dimension", "dimension count, r <= 4, n <= 8", 1.0),
    (2, "heisenberg", "Heisenberg commutators, r <= 3, |lambda| <= 5, m,n in +-1..3", 30.0),
    (3, "isomorphism", "phi ring isomorphism against group convolution", 120.0),
    (4, "jm", "Jucys-Murphy eigenvalues, r <= 2, n <= 3, m <= 3", None),
    (5, "vertex", "vertex composite vs JM spectrum, r <= 2, |lambda| <= 3, order 6", None),
    (6, "g-equals-h", "H_k = G~_k eigenvalues, r <= 3, |n_i| <= 2, |lambda| <= 4, order 8", 60.0),
    (7, "npoint", "n-point reduction, r = 2, |lambda| <= 3, N <= 3, order 6", None),
    (8, "tau", "tau factorization, r <= 3, |n_i| <= 1, degree 4", None),
    (9, "toda", "lowest 2-Toda residual, charges -2..2, r = 1 and per color r = 2", None),
    (10, "graded", "graded class algebra, r = 2, n <= 3", None),
    (11, "mckay", "McKay/Cartan lattice identities, 2 <= r <= 6", 1.0),
    (12, "generation", "modified Chern classes generate H_n for (1,3), (2,2)", None),
]

RESULTS: list[str] = []


def _line(number, suite, ok, seconds, limit, description):
    status = "PASS" if ok else "FAIL"
    budget = f" (limit {limit:g}s)" if limit else ""
    return f"criterion {number:2d} [{suite}] {status} in {seconds:.2f}s{budget}: {description}"


def check(number, suite, description, limit):
    report = run_suite(suite)
    within = limit is None or report["seconds"] < limit
    ok = report["ok"] and within
    line = _line(number, suite, ok, report["seconds"], limit, description)
    if suite == "jm":
        d = report["details"]
        line += (f" [note: {d['note']}; {d['literal_mismatches_without_r^m']} of {d['checked']}"
                 " cases differ by the factor r^m without it]")
    if report["ok"] and not within:
        line += " [exact check passed but runtime limit exceeded]"
    RESULTS.append(line)
    print(line)
    return ok, report


@pytest.mark.parametrize("number, suite, description, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}_{c[1]}" for c in CRITERIA])
def test_criterion(number, suite, description, limit):
    ok, report = check(number, suite, description, limit)
    assert ok, report


def main() -> int:
    failures = 0
    for number, suite, description, limit in CRITERIA:
        ok, _ = check(number, suite, description, limit)
        failures += not ok
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
