import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobbench.frobenius import frobenius_exact, frobenius_sylvester
from frobbench.subquadratic import (
    PRIME_RATIOS_HEADER,
    SUBQUADRATIC_HEADER,
    build_table,
    construct_thm2_instance,
    is_prime,
    primes_up_to,
    ratio_series,
    write_prime_ratios_csv,
    write_subquadratic_csv,
)
from frobbench.subquadratic import test_bound as eval_test_bound


def test_primes_up_to_examples():
    assert primes_up_to(60) == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
    ]
    assert primes_up_to(2) == [2]
    assert primes_up_to(1) == []
    assert primes_up_to(-5) == []


@given(st.integers(0, 2000))
@settings(max_examples=40)
def test_primes_up_to_agrees_with_trial_division(limit):
    assert primes_up_to(limit) == [p for p in range(2, limit + 1) if is_prime(p)]


def test_is_prime_examples():
    assert is_prime(2) and is_prime(13) and is_prime(59)
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)
    assert not is_prime(57) and not is_prime(49)


def test_test_bound_examples():
    assert eval_test_bound(11, 1, 0.005) == pytest.approx(128.82, abs=0.01)
    assert eval_test_bound(11, 1, 0.01) == pytest.approx(125.71, abs=0.01)
    assert eval_test_bound(5, 1, 0.2) == pytest.approx(15.19, abs=0.01)
    # eps -> 0 approaches the plain product
    assert eval_test_bound(7, 1.0, 1e-9) == pytest.approx(56.0, rel=1e-6)


def test_test_bound_validation():
    with pytest.raises(ValueError, match="p must be >= 2"):
        eval_test_bound(1, 1, 0.1)
    with pytest.raises(ValueError, match="C must be positive"):
        eval_test_bound(5, 0, 0.1)
    with pytest.raises(ValueError, match="epsilon must lie in"):
        eval_test_bound(5, 1, 0.0)
    with pytest.raises(ValueError, match="degenerates"):
        eval_test_bound(5, 1, 1.0)


def row_for(rows, p, eps):
    return next(r for r in rows if r.p == p and r.epsilon == eps)


def test_build_table_reproduces_known_rows():
    rows = build_table(59, 1, [0.005])
    row = row_for(rows, 53, 0.005)
    assert row.frobenius == 2755
    assert row.test_bound == pytest.approx(2750.34, abs=0.01)
    assert row.violated
    row = row_for(build_table(59, 1, [0.02]), 19, 0.02)
    assert (row.frobenius, row.violated) == (341, True)
    assert row.test_bound == pytest.approx(337.43, abs=0.01)
    row = row_for(build_table(13, 1, [0.2]), 3, 0.2)
    assert (row.frobenius, row.violated) == (5, False)
    assert row.test_bound == pytest.approx(7.30, abs=0.01)


def test_build_table_canonical_order():
    rows = build_table(13, 1, [0.1, 0.05])
    keys = [(r.epsilon, r.p) for r in rows]
    assert keys == sorted(keys)
    assert keys[0] == (0.05, 2)
    assert len(rows) == 2 * len(primes_up_to(13))


def test_build_table_validates_epsilons_up_front():
    with pytest.raises(ValueError, match="epsilon"):
        build_table(13, 1, [0.1, 1.5])


@given(
    st.integers(2, 300),
    st.floats(0.01, 10.0),
    st.floats(0.001, 0.999),
)
@settings(max_examples=60)
def test_build_table_rows_are_self_consistent(limit, c_const, eps):
    for row in build_table(limit, c_const, [eps]):
        assert row.frobenius == row.p * row.p - row.p - 1
        assert row.violated == (row.frobenius > row.test_bound)
        assert row.test_bound == eval_test_bound(row.p, c_const, eps)


def test_frobenius_of_consecutive_pair_cross_checked():
    for p in primes_up_to(60):
        v_frob = frobenius_exact(
            construct_thm2_instance(p, 3)
        ).value
        assert v_frob == p * p - p - 1 == frobenius_sylvester(p, p + 1)


def test_quadratic_lower_bound_for_odd_primes():
    # p^2 - p - 1 >= p^2 / 2 holds from p = 3 on; p = 2 sits just below
    for p in primes_up_to(200):
        if p == 2:
            assert p * p - p - 1 == 1 < p * p / 2 == 2
        else:
            assert p * p - p - 1 >= p * p / 2


def test_violations_are_upward_closed_in_p():
    for c_const, eps_list, limit in (
        (1, (0.005, 0.01, 0.02), 59),
        (1, (0.05, 0.1, 0.2), 13),
        (2, (0.2,), 59),
    ):
        for eps in eps_list:
            flags = [r.violated for r in build_table(limit, c_const, [eps])]
            assert flags == sorted(flags)  # False..False True..True


def test_ratio_series_known_checkpoints():
    rows = ratio_series(13, 2, [0.2])
    by_p = {p: ratio for p, _, ratio in rows}
    assert by_p[7] == pytest.approx(0.818848, abs=1e-6)
    assert by_p[11] == pytest.approx(1.096320, abs=1e-6)


def test_ratio_series_first_violations():
    first = next(p for p, _, ratio in ratio_series(13, 1, [0.05]) if ratio > 1)
    assert first == 11
    first = next(p for p, _, ratio in ratio_series(13, 2, [0.2]) if ratio > 1)
    assert first == 11


def test_ratio_series_increases_with_p():
    ratios = [ratio for _, _, ratio in ratio_series(59, 1, [0.01])]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


def test_construct_thm2_instance_examples():
    v = construct_thm2_instance(5, 4)
    assert v.entries == (5, 6, 11, 11)
    assert frobenius_exact(v).value == 19
    v = construct_thm2_instance(2, 3)
    assert v.entries == (2, 3, 5)
    assert frobenius_exact(v).value == 1
    v = construct_thm2_instance(11, 5)
    assert v.entries == (11, 12, 23, 23, 23)
    assert frobenius_exact(v).value == 109


def test_construct_thm2_instance_validation():
    with pytest.raises(ValueError, match="prime"):
        construct_thm2_instance(4, 3)
    with pytest.raises(ValueError, match="n must be >= 3"):
        construct_thm2_instance(5, 2)


@given(st.sampled_from(primes_up_to(100)), st.integers(3, 8))
@settings(max_examples=60)
def test_construct_thm2_instance_padding_is_inert(p, n):
    v = construct_thm2_instance(p, n)
    assert v.n == n
    assert frobenius_exact(v).value == p * p - p - 1


def test_write_subquadratic_csv_layout(tmp_path):
    rows = build_table(5, 1, [0.2])
    out = tmp_path / "subquadratic.csv"
    write_subquadratic_csv(str(out), rows, {"prime_limit": 5, "c": 1})
    lines = out.read_text().splitlines()
    assert lines[0] == "# prime_limit=5"
    assert lines[1] == "# c=1"
    assert lines[2] == ",".join(SUBQUADRATIC_HEADER)
    assert lines[3].startswith("2,0.2,1,1,")
    assert lines[3].endswith(",False")
    assert lines[5].startswith("5,0.2,1,19,")
    assert lines[5].endswith(",True")


def test_write_prime_ratios_csv_layout(tmp_path):
    rows = ratio_series(5, 2.0, [0.2])
    out = tmp_path / "ratios_primes.csv"
    write_prime_ratios_csv(str(out), rows, 2.0, {"prime_limit": 5})
    lines = out.read_text().splitlines()
    assert lines[0] == "# prime_limit=5"
    assert lines[1] == ",".join(PRIME_RATIOS_HEADER)
    assert len(lines) == 2 + 3
    assert lines[2].startswith("2,0.2,2.0,")
