"""The acceptance gate: nine criteria, each printing one PASS/FAIL line.

Every criterion compares independently computed routes (closed form,
recursion engine, brute-force enumeration) with exact equality — integers and
canonical rational functions, never tolerances.  A criterion passes only if
every load-bearing check in its suites passes; the rotated-block family
additionally tolerates the recorded formula discrepancies (verdict
``discrepancy``), which are informational and listed in the line.
"""

import time

import pytest

from artifact.verify import (
    summarize,
    verify_contain_eqs,
    verify_contain_once,
    verify_chebyshev,
    verify_engine_oracle,
    verify_examples,
    verify_gk,
    verify_identities,
    verify_increasing,
    verify_kd,
    verify_mmc,
    verify_parity_counts,
    verify_rlm,
    verify_two_restrict,
    verify_wedge,
    verify_213k,
)


@pytest.fixture
def report(capsys):
    """Print the criterion verdict straight to the terminal, then assert."""

    def _report(number: int, ok: bool, detail: str) -> None:
        line = (f"ACCEPTANCE CRITERION {number}: "
                f"{'PASS' if ok else 'FAIL'} — {detail}")
        with capsys.disabled():
            print(f"\n{line}")
        assert ok, line

    return _report


def _tally(records):
    s = summarize(records)
    return s["total"], s["fail"], s["discrepancy"]


def test_criterion_1_engine_vs_oracle(report):
    """Every pattern of length 1..5: engine parity series equal enumeration
    counts through order 12, exactly; expected under five minutes."""
    t0 = time.perf_counter()
    records = verify_engine_oracle(max_len=5, max_n=12)
    elapsed = time.perf_counter() - t0
    total, fails, _ = _tally(records)
    ok = total == 64 and fails == 0 and elapsed < 300
    report(1, ok,
           f"{total} patterns (lengths 1-5), even/odd series through x^12 "
           f"vs enumeration, {fails} mismatches, {elapsed:.1f}s")


def test_criterion_2_worked_examples(report):
    """The three worked base patterns reproduce their pinned canonical
    rational functions exactly."""
    records = verify_examples()
    total, fails, _ = _tally(records)
    ok = total == 12 and fails == 0
    report(2, ok,
           f"{total} pinned rational-function values across the three "
           f"worked patterns, {fails} mismatches")


def test_criterion_3_parity_count_identities(report):
    """Unrestricted even/odd counts match enumeration and the half-Catalan
    identities for every length through 13."""
    records = verify_parity_counts(13)
    total, fails, _ = _tally(records)
    ok = fails == 0 and total >= 27
    report(3, ok,
           f"{total} parity-count checks (enumeration + closed identities) "
           f"through length 13, {fails} mismatches")


def test_criterion_4_polynomial_identities(report):
    """The three polynomial-layer identity suites, at full size, in under
    ten seconds."""
    t0 = time.perf_counter()
    records = verify_chebyshev(max_k=50, max_pq=20)
    elapsed = time.perf_counter() - t0
    total, fails, _ = _tally(records)
    ok = fails == 0 and total == 50 + (50 + 51) + 2 * 21 * 21 \
        and elapsed < 10
    report(4, ok,
           f"{total} exact polynomial identities (convergent step, dual "
           f"route, product/sum quotients), {fails} mismatches, "
           f"{elapsed:.2f}s")


def test_criterion_5_closed_form_families(report):
    """Every closed-form avoidance family equals the recursion engine as
    canonical rational functions; the replayed printed rotated-block
    formula may record known discrepancies, never silent failures."""
    records = (verify_mmc(4) + verify_increasing(8) + verify_213k(9)
               + verify_kd(9) + verify_wedge(7))
    total, fails, discrepancies = _tally(records)
    ok = fails == 0 and total >= 130
    report(5, ok,
           f"{total} closed-form-vs-engine checks (appended maximum, "
           f"increasing, head-swapped, rotated block, layered wedge), "
           f"{fails} failures, {discrepancies} recorded formula "
           f"discrepancies (oracle-confirmed, even-length/odd-cut family)")


def test_criterion_6_coefficient_identities(report):
    """Signed-count coefficient identities for increasing patterns of
    length 5, 7, 9 through order 25."""
    records = verify_identities(25)
    total, fails, _ = _tally(records)
    ok = total == 3 and fails == 0
    report(6, ok,
           f"{total} coefficient identities (alternating, power-of-two, "
           f"Fibonacci) through x^25, {fails} mismatches")


def test_criterion_7_exact_occurrence(report):
    """Exactly-once closed forms vs enumeration (lengths up to 6, order 12),
    the 0/1/2-occurrence forms, and the seven occurrence recursions for the
    four reference patterns through order 10."""
    records = (verify_contain_once(max_k=6, max_n=12)
               + verify_contain_eqs(taus=((1, 2), (2, 1), (1, 2, 3),
                                          (2, 1, 3)), order=10))
    total, fails, _ = _tally(records)
    ok = fails == 0 and total == 12 + 28
    report(7, ok,
           f"{total} exact-occurrence checks (closed forms vs enumeration "
           f"+ recursion identities), {fails} mismatches")


def test_criterion_8_statistic_distribution(report):
    """Bivariate right-to-left-maxima distributions match enumeration
    histograms through length 12."""
    records = verify_rlm(12)
    total, fails, _ = _tally(records)
    ok = total == 13 and fails == 0
    report(8, ok,
           f"{total} bivariate distribution rows (lengths 0-12) vs "
           f"enumeration, {fails} mismatches")


def test_criterion_9_double_restriction_and_marking(report):
    """Simultaneous-restriction closed forms vs enumeration (k = 2, 3; both
    parities of length; order 12) and the signed occurrence-marking series
    vs enumeration (k = 2, 3; order 10) with its y = 1 collapse."""
    records = (verify_two_restrict(max_k=3, max_n=12)
               + verify_gk(max_k=3, order=10))
    total, fails, _ = _tally(records)
    ok = fails == 0 and total == 4 + 4
    report(9, ok,
           f"{total} double-restriction and occurrence-marking checks, "
           f"{fails} mismatches")
