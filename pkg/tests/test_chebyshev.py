"""Units for the polynomial families and their exact identity suites."""

import pytest

from artifact.chebyshev import (
    R,
    R_sq,
    chebyshev_U,
    cleared_U,
    cleared_W,
    u_recip,
    verify_identity,
)
from artifact.exact_algebra import (
    POLY_ONE,
    Poly,
    RF_ONE,
    RF_ZERO,
    RatFunc,
    series_expand,
)


class TestChebyshevU:
    def test_known_values(self):
        assert chebyshev_U(0).coeffs == (1,)
        assert chebyshev_U(1).coeffs == (0, 2)
        assert chebyshev_U(2).coeffs == (-1, 0, 4)
        assert chebyshev_U(3).coeffs == (0, -4, 0, 8)
        assert chebyshev_U(4).coeffs == (1, 0, -12, 0, 16)

    def test_three_term_recurrence(self):
        two_t = Poly((0, 2))
        for n in range(2, 20):
            assert chebyshev_U(n) == two_t * chebyshev_U(n - 1) - chebyshev_U(n - 2)

    def test_value_at_one_counts_index(self):
        # U_n(1) = n + 1
        for n in range(12):
            assert chebyshev_U(n)(1) == n + 1

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            chebyshev_U(-1)


class TestClearedFamilies:
    def test_known_values(self):
        assert cleared_W(0).coeffs == (1,)
        assert cleared_W(1).coeffs == (1,)
        assert cleared_W(2).coeffs == (1, -1)
        assert cleared_W(3).coeffs == (1, -2)
        assert cleared_W(4).coeffs == (1, -3, 1)
        assert cleared_W(5).coeffs == (1, -4, 3)

    def test_recurrence(self):
        x = Poly((0, 1))
        for n in range(2, 30):
            assert cleared_W(n) == cleared_W(n - 1) - x * cleared_W(n - 2)

    def test_cleared_U_is_W_at_square(self):
        for n in range(15):
            assert cleared_U(n) == cleared_W(n).subs_square()

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            cleared_W(-1)
        with pytest.raises(ValueError):
            cleared_U(-2)


class TestReciprocalArgument:
    def test_backward_extensions(self):
        assert u_recip(-1) == RF_ZERO
        assert u_recip(-2) == -RF_ONE
        with pytest.raises(ValueError):
            u_recip(-3)

    def test_matches_cleared_polynomial(self):
        # u_recip(n) = cleared_U(n) / x^n
        for n in range(8):
            assert u_recip(n) == RatFunc(cleared_U(n), POLY_ONE.shift(n))

    def test_three_term_recurrence_in_reciprocal_form(self):
        # U_n(1/(2x)) = (1/x) U_{n-1}(1/(2x)) - U_{n-2}(1/(2x))
        inv_x = RatFunc(Poly((1,)), Poly((0, 1)))
        for n in range(0, 10):
            assert u_recip(n) == inv_x * u_recip(n - 1) - u_recip(n - 2)


class TestConvergents:
    def test_known_values(self):
        assert R(0) == RF_ZERO
        assert R(1) == RF_ONE
        assert R(2) == RatFunc(Poly((1,)), Poly((1, -1)))
        assert R(3) == RatFunc(Poly((1, -1)), Poly((1, -2)))

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            R(-1)

    def test_series_counts_bounded_increasing_runs(self):
        # coefficients of R(k) count 132-avoiders with no increasing run of
        # length k; spot-check against the enumeration oracle
        from artifact.patterns import (contains, generate_132_avoiders)

        for k in (2, 3, 4):
            s = series_expand(R(k), 6)
            run = tuple(range(1, k + 1))
            for n in range(7):
                count = sum(1 for p in generate_132_avoiders(n)
                            if not contains(p, run))
                assert s.coefficient(n) == count

    def test_square_substitution_memo(self):
        for k in (0, 1, 2, 5):
            assert R_sq(k) == R(k).subs_square()


class TestIdentitySuites:
    def test_continued_fraction_step(self):
        records = verify_identity("rk", max_k=12)
        assert len(records) == 12
        assert all(r["verdict"] == "pass" for r in records)

    def test_quotient_route(self):
        records = verify_identity("drk", max_k=12)
        assert len(records) == 25  # 12 quotient checks + 13 dual-route values
        assert all(r["verdict"] == "pass" for r in records)

    def test_product_and_sum_quotients(self):
        records = verify_identity("irks", max_pq=4)
        assert len(records) == 2 * 5 * 5
        assert all(r["verdict"] == "pass" for r in records)

    def test_record_schema(self):
        rec = verify_identity("rk", max_k=1)[0]
        assert set(rec) == {"family", "params", "source", "expected",
                            "observed", "verdict", "runtime_ms"}
        assert rec["verdict"] in ("pass", "fail", "discrepancy")
        assert isinstance(rec["runtime_ms"], float)

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            verify_identity("nope")
