import pytest
from hypothesis import given, strategies as st

from mahlerlab.sequences import BitSequence, SequenceKind, bit, prefix

TM, PF, CANTOR = SequenceKind.THUE_MORSE, SequenceKind.PAPERFOLDING, SequenceKind.CANTOR


@pytest.mark.parametrize(
    "kind, expected",
    [
        (TM, [0, 1, 1, 0, 1, 0, 0, 1]),
        (PF, [1, 1, 0, 1, 1, 0, 0, 1]),
        (CANTOR, [1, 0, 1, 0, 0, 0, 1, 0, 1]),
    ],
)
def test_first_terms(kind, expected):
    assert [bit(kind, n) for n in range(len(expected))] == expected


def test_thue_morse_starts_at_zero():
    assert bit(TM, 0) == 0


@pytest.mark.parametrize("kind, n, expected", [(CANTOR, 1, [1]), (TM, 4, [0, 1, 1, 0]), (PF, 3, [1, 1, 0])])
def test_prefix(kind, n, expected):
    assert prefix(kind, n) == expected


def test_prefix_rejects_empty():
    with pytest.raises(ValueError):
        prefix(TM, 0)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bit(TM, -1)


def test_kind_parsing():
    assert SequenceKind.parse("Thue_Morse") is TM
    assert SequenceKind.parse("paperfolding") is PF
    assert bit("cantor", 2) == 1
    with pytest.raises(ValueError):
        SequenceKind.parse("fibonacci")


def test_thue_morse_matches_recursion():
    # t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n, unrolled into a table
    N = 1 << 16
    t = [0] * N
    for n in range(1, N):
        t[n] = t[n // 2] if n % 2 == 0 else 1 - t[n // 2]
    assert prefix(TM, N) == t


def test_cantor_matches_subset_sums():
    sums = {0}
    for k in range(10):
        sums |= {s + 2 * 3**k for s in sums}
    assert prefix(CANTOR, 3**10) == [int(n in sums) for n in range(3**10)]


def test_paperfolding_clauses_consistent_and_covering():
    u = prefix(PF, 1 << 16)
    for n in range(1 << 16):
        clauses = [n % 4 == 0, n % 4 == 2, n % 2 == 1]
        assert sum(clauses) == 1
        if n % 4 == 0:
            assert u[n] == 1
        elif n % 4 == 2:
            assert u[n] == 0
        else:
            assert u[n] == u[(n - 1) // 2]


@given(st.integers(min_value=0, max_value=10**30))
def test_thue_morse_recursion_property(n):
    assert bit(TM, 2 * n) == bit(TM, n)
    assert bit(TM, 2 * n + 1) == 1 - bit(TM, n)


@given(st.integers(min_value=0, max_value=10**30))
def test_paperfolding_recursion_property(n):
    assert bit(PF, 4 * n) == 1
    assert bit(PF, 4 * n + 2) == 0
    assert bit(PF, 2 * n + 1) == bit(PF, n)


def test_bit_sequence_view():
    s = BitSequence("cantor")
    assert s[6] == 1
    assert s[0:9] == [1, 0, 1, 0, 0, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        s[3:]
