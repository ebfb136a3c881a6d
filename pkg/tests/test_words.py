import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fbwords.harness import naive_borders, naive_period
from fbwords.words import (
    Order,
    RootDecomposition,
    WordError,
    borders,
    conjugate_at,
    cyclic_occurrences,
    is_lyndon,
    is_palindrome,
    is_primitive,
    local_root,
    lyndon_conjugate,
    parse_word,
    period,
    root_decomposition,
    shortest_border,
    two_palindrome_splits,
)

binary = st.text(alphabet="01", min_size=1, max_size=40)


def all_words(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for letters in itertools.product("01", repeat=n):
            yield "".join(letters)


def test_parse_word():
    assert parse_word("0101") == "0101"
    assert parse_word("") == ""
    for bad in ["00x1", "012", " 01", "ab"]:
        with pytest.raises(WordError):
            parse_word(bad)


@pytest.mark.parametrize(
    "fn",
    [borders, shortest_border, period, root_decomposition, is_primitive, lambda w: is_lyndon(w, Order.ZERO_FIRST)],
)
def test_empty_word_rejected(fn):
    with pytest.raises(WordError):
        fn("")


@pytest.mark.parametrize("w, expected", [("0", []), ("0101", ["01"]), ("00100", ["0", "00"])])
def test_borders(w, expected):
    assert naive_borders(w) == expected
    assert borders(w) == expected


@pytest.mark.parametrize("w, expected", [("001", None), ("010", "0"), ("1100", None)])
def test_shortest_border(w, expected):
    assert shortest_border(w) == expected


@pytest.mark.parametrize("w, expected", [("0101", 2), ("001", 3), ("010010", 3)])
def test_period(w, expected):
    assert naive_period(w) == expected
    assert period(w) == expected


@pytest.mark.parametrize(
    "w, expected",
    [
        ("0010", RootDecomposition("0", "01", 1)),
        ("010010", RootDecomposition("010", "", 1)),
        ("001", RootDecomposition("001", "", 0)),
    ],
)
def test_root_decomposition(w, expected):
    assert root_decomposition(w) == expected


@pytest.mark.parametrize("w, expected", [("0101", False), ("00101", True), ("0", True)])
def test_is_primitive(w, expected):
    assert is_primitive(w) is expected


@pytest.mark.parametrize("w, m, expected", [("00101", 2, "10100"), ("01", 1, "10"), ("0011", 2, "1100")])
def test_conjugate_at(w, m, expected):
    assert conjugate_at(w, m) == expected


@pytest.mark.parametrize("m", [-1, 4, 10])
def test_conjugate_at_out_of_range(m):
    with pytest.raises(WordError):
        conjugate_at("0011", m)


@pytest.mark.parametrize(
    "w, order, expected",
    [("001", Order.ZERO_FIRST, True), ("110", Order.ONE_FIRST, True), ("0101", Order.ZERO_FIRST, False)],
)
def test_is_lyndon(w, order, expected):
    assert is_lyndon(w, order) is expected


@pytest.mark.parametrize(
    "w, order, expected",
    [("100", Order.ZERO_FIRST, "001"), ("100", Order.ONE_FIRST, "100"), ("0", Order.ZERO_FIRST, "0")],
)
def test_lyndon_conjugate(w, order, expected):
    assert lyndon_conjugate(w, order) == expected


def test_lyndon_conjugate_rejects_imprimitive():
    with pytest.raises(WordError):
        lyndon_conjugate("0101", Order.ZERO_FIRST)


@pytest.mark.parametrize(
    "w, m, root, trivial",
    [("0011", 1, "0", False), ("0011", 2, "1100", True), ("00101", 0, "00101", True)],
)
def test_local_root(w, m, root, trivial):
    r = local_root(w, m)
    assert (r.point, r.root, r.trivial) == (m, root, trivial)


@pytest.mark.parametrize("w, expected", [("", True), ("00100", True), ("001", False)])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected


@pytest.mark.parametrize("u, w, expected", [("0", "0010", [0, 1, 3]), ("00", "0011", [0]), ("01", "01", [0])])
def test_cyclic_occurrences(u, w, expected):
    ww = w + w
    assert [m for m in range(len(w)) if ww[m : m + len(u)] == u] == expected
    assert cyclic_occurrences(u, w) == expected


def test_cyclic_occurrences_errors():
    with pytest.raises(WordError):
        cyclic_occurrences("000", "00")
    with pytest.raises(WordError):
        cyclic_occurrences("", "00")


@pytest.mark.parametrize("w, expected", [("00101", [2]), ("01", [1]), ("0", [0, 1])])
def test_two_palindrome_splits(w, expected):
    assert two_palindrome_splits(w) == expected


# -- properties ------------------------------------------------------------


@given(binary)
def test_borders_match_naive_scan(w):
    assert borders(w) == naive_borders(w)
    assert period(w) == naive_period(w)


@given(binary)
def test_period_is_length_minus_longest_border(w):
    bs = borders(w)
    assert period(w) == len(w) - (len(bs[-1]) if bs else 0)
    assert (period(w) == len(w)) == (not bs)
    assert shortest_border(w) == (bs[0] if bs else None)


@given(binary)
def test_lyndon_conjugate_is_a_lyndon_conjugate(w):
    if not is_primitive(w):
        return
    for o in Order:
        c = lyndon_conjugate(w, o)
        assert is_lyndon(c, o)
        assert c in {conjugate_at(w, m) for m in range(len(w))}


def check_root_decomposition(w):
    d = root_decomposition(w)
    assert d.assemble() == w
    assert d.s and (d.s + d.t).startswith(d.s)
    assert len(d.s + d.t) == period(w)
    assert is_primitive(d.s + d.t)
    assert (d.k == 0) == (not borders(w))


def test_root_decomposition_exhaustive():
    for w in all_words(16):
        check_root_decomposition(w)


def test_local_root_lengths_exhaustive():
    # for primitive w the local period is below |w|/2 or trivial
    for w in all_words(16):
        if not is_primitive(w):
            continue
        n = len(w)
        for m in range(n):
            r = local_root(w, m)
            assert not borders(r.root)
            assert r.trivial == (len(r.root) == n)
            assert 2 * len(r.root) < n or len(r.root) == n


@given(binary, st.integers(min_value=0, max_value=39))
def test_local_root_is_shortest_border_of_conjugate(w, m):
    m %= len(w)
    c = conjugate_at(w, m)
    r = local_root(w, m)
    bs = naive_borders(c)
    assert r.root == (bs[0] if bs else c)
