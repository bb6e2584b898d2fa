import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobbench.counterexamples import (
    COUNTEREXAMPLES_HEADER,
    embed_multiples,
    search_selmer_failures,
    verify_failure,
    write_counterexamples_csv,
)
from frobbench.frobenius import frobenius_exact, frobenius_sylvester, is_representable
from frobbench.vectors import make_coin_vector

V = make_coin_vector


def test_verify_failure_on_the_witness():
    row = verify_failure(V((8, 32, 59)))
    assert row.frobenius == 405
    assert row.selmer_value == 228
    assert row.fails
    assert not row.pairwise_coprime
    # the formula value really is exceeded by a non-representable integer
    assert not is_representable(row.vector, row.frobenius)


def test_verify_failure_under_pairwise_coprimality():
    # the formula can fail even where its own precondition holds
    row = verify_failure(V((5, 7, 12)))
    assert (row.frobenius, row.selmer_value) == (23, 19)
    assert row.fails and row.pairwise_coprime


def test_verify_failure_on_a_sound_case():
    row = verify_failure(V((3, 5, 7)))
    assert (row.frobenius, row.selmer_value) == (4, 11)
    assert not row.fails
    assert row.pairwise_coprime


def test_verify_failure_preconditions():
    with pytest.raises(ValueError, match="n >= 3"):
        verify_failure(V((2, 3)))
    with pytest.raises(ValueError, match="a_1 >= n"):
        verify_failure(V((2, 3, 5)))


def test_search_contains_known_failures():
    rows = search_selmer_failures([4], 26)
    by_entries = {r.vector.entries: r for r in rows}
    row = by_entries[(4, 12, 25)]
    assert (row.frobenius, row.selmer_value) == (71, 46)
    assert all(r.fails for r in rows)
    keys = [r.vector.entries for r in rows]
    assert keys == sorted(keys)


def test_search_handles_unsorted_duplicate_a1_values():
    assert search_selmer_failures([5, 4, 5], 20) == search_selmer_failures(
        [4, 5], 20
    )


def test_search_validation():
    with pytest.raises(ValueError, match="nonempty"):
        search_selmer_failures([], 30)
    with pytest.raises(ValueError, match=">= 3"):
        search_selmer_failures([2, 5], 30)
    with pytest.raises(ValueError, match="below largest"):
        search_selmer_failures([4, 8], 7)


def test_search_rows_are_genuine_failures():
    for row in search_selmer_failures([5], 18):
        assert row.frobenius > row.selmer_value
        assert frobenius_exact(row.vector).value == row.frobenius
        assert not is_representable(row.vector, row.frobenius)


def test_embed_multiples_examples():
    assert embed_multiples(8, 59, (4, 2)).entries == (8, 16, 32, 59)
    assert embed_multiples(8, 59, ()).entries == (8, 59)
    assert embed_multiples(5, 7, (1,)).entries == (5, 5, 7)


def test_embed_multiples_validation():
    with pytest.raises(ValueError, match="no Frobenius number"):
        embed_multiples(4, 8, (2,))
    with pytest.raises(ValueError, match="out of range"):
        embed_multiples(8, 59, (8,))
    with pytest.raises(ValueError, match="out of range"):
        embed_multiples(8, 59, (0,))


@given(
    st.tuples(st.integers(2, 40), st.integers(3, 120)).filter(
        lambda t: t[0] < t[1] and math.gcd(*t) == 1
    ),
    st.data(),
)
@settings(max_examples=60)
def test_embed_multiples_preserves_frobenius(pair, data):
    a1, an = pair
    top = an // a1
    multipliers = data.draw(
        st.lists(st.integers(1, top), min_size=0, max_size=4)
    )
    embedded = embed_multiples(a1, an, multipliers)
    assert embedded.n == 2 + len(multipliers)
    assert frobenius_exact(embedded).value == frobenius_sylvester(a1, an)


def test_write_counterexamples_csv_layout(tmp_path):
    rows = [verify_failure(V((8, 32, 59))), verify_failure(V((5, 7, 12)))]
    out = tmp_path / "counterexamples.csv"
    write_counterexamples_csv(str(out), rows, {"a1_range": "4:8", "max_entry": 60})
    lines = out.read_text().splitlines()
    assert lines[0] == "# a1_range=4:8"
    assert lines[1] == "# max_entry=60"
    assert lines[2] == ",".join(COUNTEREXAMPLES_HEADER)
    assert lines[3] == "8,32,59,405,228,True,False"
    assert lines[4] == "5,7,12,23,19,True,True"
