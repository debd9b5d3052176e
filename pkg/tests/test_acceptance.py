"""Acceptance gate: each criterion runs its cross-check suite, exactly, and
must finish inside its stated time budget.  One pass/fail line per criterion
is printed (run pytest with -s to see them on success)."""

import time

import pytest

from tensorwalks.verify import run_suite

CRITERIA = [
    ("criterion-01 cyclic fixtures (three routes)", "z10", 1.0),
    ("criterion-02 rank-two abelian fixtures", "z4xz2", 1.0),
    ("criterion-03 S4 table and closed forms", "s4", 5.0),
    ("criterion-04 S_n Stirling-Kostka identities", "sn", 30.0),
    ("criterion-05 Paley closed forms + discrepancy report", "paley", 10.0),
    ("criterion-06 wreath invariants (four routes)", "wreath", 60.0),
    ("criterion-07 GL2/SL2 dimensions and series", "gl2sl2", 5.0),
    ("criterion-08 generic engines over the registry", "generic", 120.0),
    ("criterion-09 abelian EGF products", "genfnc", 30.0),
    ("criterion-10 diagram algebra basis", "diagram", 10.0),
    ("criterion-11 Gauss-sum identities", "gauss", 1.0),
]


@pytest.mark.parametrize("label,suite,budget", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(label, suite, budget):
    start = time.perf_counter()
    results = run_suite(suite)
    elapsed = time.perf_counter() - start
    failures = [r for r in results if not r.ok]
    status = "PASS" if not failures and elapsed < budget else "FAIL"
    print(f"{status} {label}: {len(results) - len(failures)}/{len(results)} "
          f"checks in {elapsed:.2f}s (budget {budget:.0f}s)")
    for r in failures:
        print(f"     failed: {r.name} -- {r.detail}")
    assert not failures, f"{label}: {[r.name for r in failures]}"
    assert elapsed < budget, f"{label}: {elapsed:.2f}s exceeded {budget:.0f}s"
