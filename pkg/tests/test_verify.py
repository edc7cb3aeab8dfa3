"""Units for the cross-verification suites and their dispatch layer."""

import pytest

from artifact.verify import (
    FAMILIES,
    run_all,
    run_family,
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

RECORD_KEYS = {"family", "params", "source", "expected", "observed",
               "verdict", "runtime_ms"}


def assert_all_pass(records, expected_count=None):
    assert records, "suite produced no records"
    if expected_count is not None:
        assert len(records) == expected_count
    for rec in records:
        assert set(rec) == RECORD_KEYS
        assert rec["verdict"] == "pass", rec


class TestSuites:
    def test_examples(self):
        assert_all_pass(verify_examples(), 12)

    def test_engine_oracle_small(self):
        assert_all_pass(verify_engine_oracle(max_len=3, max_n=8), 8)

    def test_parity_counts_small(self):
        assert_all_pass(verify_parity_counts(8))

    def test_chebyshev_small(self):
        assert_all_pass(verify_chebyshev(max_k=10, max_pq=3))

    def test_increasing_small(self):
        assert_all_pass(verify_increasing(5), 5)

    def test_mmc_small(self):
        # bases: empty + lengths 1..3 = 1 + 1 + 2 + 5
        assert_all_pass(verify_mmc(3), 9)

    def test_213k_small(self):
        assert_all_pass(verify_213k(6), 4)

    def test_wedge_small(self):
        records = verify_wedge(5)
        assert_all_pass(records)
        taus = {tuple(r["params"]["tau"]) for r in records}
        assert (2, 3, 1, 4, 5) in taus

    def test_identities_small(self):
        assert_all_pass(verify_identities(15), 3)

    def test_contain_once_small(self):
        assert_all_pass(verify_contain_once(max_k=2, max_n=8), 8)

    def test_contain_eqs_small(self):
        assert_all_pass(verify_contain_eqs(taus=((1, 2), (2, 1)), order=6),
                        14)

    def test_rlm_small(self):
        assert_all_pass(verify_rlm(6), 7)

    def test_two_restrict_small(self):
        assert_all_pass(verify_two_restrict(max_k=2, max_n=8), 2)

    def test_gk_small(self):
        assert_all_pass(verify_gk(max_k=2, order=6), 2)


class TestRotatedBlockPolicy:
    def test_closed_route_never_fails_and_discrepancies_are_scoped(self):
        records = verify_kd(6)
        fails = [r for r in records if r["verdict"] == "fail"]
        assert fails == []
        discrepancies = [r for r in records if r["verdict"] == "discrepancy"]
        # the replayed printed formula disagrees exactly at even length with
        # an odd cut, except the degenerate length-2 case
        assert {(r["params"]["k"], r["params"]["d"])
                for r in discrepancies} == {(4, 1), (4, 3), (6, 1), (6, 3),
                                            (6, 5)}
        for rec in discrepancies:
            assert rec["params"]["route"] == "printed"
            assert rec["params"]["k"] % 2 == 0
            assert rec["params"]["d"] % 2 == 1

    def test_degenerate_case_passes_even_on_the_printed_route(self):
        records = verify_kd(2)
        assert [r["verdict"] for r in records] == ["pass", "pass"]


class TestDispatch:
    def test_families_cover_documented_choices(self):
        documented = {"increasing", "kd", "wedge", "213k", "contain-once",
                      "contain-eqs", "rlm", "two-restrict", "gk-xy"}
        assert documented <= set(FAMILIES)

    def test_run_family_applies_limits(self):
        assert len(run_family("increasing", max_k=3)) == 3
        assert len(run_family("mmc", max_k=2)) == 4
        assert len(run_family("rlm", max_n=4)) == 5

    def test_run_family_ignores_inapplicable_limits(self):
        # examples has no knobs; limits silently ignored
        assert len(run_family("examples", max_k=99, max_n=99)) == 12

    def test_run_family_unknown_name(self):
        with pytest.raises(ValueError):
            run_family("nonsense")

    def test_run_all_concatenates_in_declaration_order(self):
        records = run_all(("examples", "increasing"), max_k=3)
        assert [r["family"] for r in records] == ["examples"] * 12 + \
            ["increasing"] * 3

    def test_summarize(self):
        records = [
            {"family": "a", "verdict": "pass"},
            {"family": "a", "verdict": "fail"},
            {"family": "b", "verdict": "discrepancy"},
        ]
        s = summarize(records)
        assert s["total"] == 3
        assert (s["pass"], s["fail"], s["discrepancy"]) == (1, 1, 1)
        assert s["families"]["a"] == {"total": 2, "pass": 1, "fail": 1,
                                      "discrepancy": 0}
        assert s["families"]["b"]["discrepancy"] == 1

    def test_summarize_empty(self):
        s = summarize([])
        assert s == {"total": 0, "pass": 0, "fail": 0, "discrepancy": 0,
                     "families": {}}
