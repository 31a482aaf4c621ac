import pytest
from hypothesis import given, strategies as st

from lyndex import oracle
from lyndex.lyndon import (
    duval_factorize,
    from_ranks,
    is_lyndon,
    longest_lyndon_prefix,
    significant_suffixes,
    standard_factorization,
    to_ranks,
)

words = st.binary(min_size=1, max_size=60).map(lambda b: bytes(97 + c % 3 for c in b))


@pytest.mark.parametrize("w, expected", [
    (b"a", True), (b"ab", True), (b"aab", True), (b"aababaababb", True),
    (b"ba", False), (b"aa", False), (b"abab", False), (b"abaab", False),
])
def test_is_lyndon_examples(w, expected):
    assert is_lyndon(w) is expected


def test_is_lyndon_rejects_empty():
    with pytest.raises(ValueError):
        is_lyndon(b"")


@given(words)
def test_is_lyndon_matches_definition(w):
    assert is_lyndon(w) == oracle.naive_is_lyndon(w)


def test_rank_mapping_round_trip():
    data = bytes(range(256))
    ranks = to_ranks(data)
    assert min(ranks) == 1 and max(ranks) == 256
    assert from_ranks(ranks) == data


def test_standard_factorization_example():
    assert standard_factorization(b"aababaababb") == (b"aabab", b"aababb")


def test_standard_factorization_needs_lyndon():
    with pytest.raises(ValueError):
        standard_factorization(b"ba")


@given(words.filter(lambda w: len(w) >= 2 and oracle.naive_is_lyndon(w)))
def test_standard_factorization_matches_oracle(w):
    assert standard_factorization(w) == oracle.naive_standard_factorization(w)


def test_worked_factorization():
    w = b"abacabadabacababa"
    f = duval_factorize(w)
    assert f.strings(w) == [(b"abacabad", 1), (b"abac", 1), (b"ab", 2), (b"a", 1)]
    assert f.lam == 3
    assert significant_suffixes(f) == [13, 17]


def test_factor_exponents_not_merged_across_different_words():
    f = duval_factorize(b"ba")
    assert f.strings(b"ba") == [(b"b", 1), (b"a", 1)]


def test_empty_factorization_rejected():
    with pytest.raises(ValueError):
        duval_factorize(b"")


@given(words)
def test_factorization_matches_oracle(w):
    assert duval_factorize(w).strings(w) == oracle.naive_lyndon_factorization(w)


@given(words)
def test_factors_strictly_decrease_and_tile(w):
    f = duval_factorize(w)
    pieces = f.strings(w)
    assert b"".join(p * e for p, e in pieces) == w
    for (a, _), (b, _) in zip(pieces, pieces[1:]):
        assert a > b
    assert all(is_lyndon(p) for p, _ in pieces)


@given(words)
def test_significant_suffix_definition(w):
    f = duval_factorize(w)
    p = len(f.factors)
    sig = significant_suffixes(f)
    assert sig[-1] == f.factors[-1].start + 1
    assert len(sig) == p - f.lam + 1
    # lfs(x+1) must be a prefix of factor x for every x >= lambda
    for x in range(f.lam, p):
        tail = w[f.lfs_start(x + 1):]
        fac = f.factors[x - 1]
        assert w[fac.start:fac.start + fac.length].startswith(tail)


@given(words, st.integers(0, 59))
def test_longest_lyndon_prefix(w, k):
    k %= len(w)
    ell = longest_lyndon_prefix(w, k)
    assert is_lyndon(w[k:k + ell])
    assert all(not is_lyndon(w[k:k + j]) for j in range(ell + 1, len(w) - k + 1))
