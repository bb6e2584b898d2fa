"""Shared hypothesis strategies for the suite."""

import math

from hypothesis import strategies as st

from frobbench.vectors import is_pairwise_coprime, make_coin_vector


def raw_gcd_one_lists(min_n=2, max_n=5, min_entry=1, max_entry=60):
    """Entry lists whose gcd is 1 (before sorting/validation)."""
    return st.lists(
        st.integers(min_entry, max_entry), min_size=min_n, max_size=max_n
    ).filter(lambda xs: math.gcd(*xs) == 1)


def raw_pairwise_coprime_lists(min_n=2, max_n=5, min_entry=1, max_entry=60):
    return st.lists(
        st.integers(min_entry, max_entry), min_size=min_n, max_size=max_n
    ).filter(is_pairwise_coprime)


def gcd_one_vectors(min_n=2, max_n=5, min_entry=1, max_entry=60):
    return raw_gcd_one_lists(min_n, max_n, min_entry, max_entry).map(make_coin_vector)


def pairwise_coprime_vectors(min_n=2, max_n=5, min_entry=1, max_entry=60):
    return raw_pairwise_coprime_lists(min_n, max_n, min_entry, max_entry).map(
        make_coin_vector
    )


def coprime_pairs(max_entry=10_000):
    """Sorted coprime pairs (a1, a2) with a1 <= a2."""
    return (
        st.tuples(st.integers(1, max_entry), st.integers(1, max_entry))
        .filter(lambda ab: math.gcd(ab[0], ab[1]) == 1)
        .map(lambda ab: tuple(sorted(ab)))
    )
