import pytest

from mpart.bijection import BetaSeq, enumerate_members, is_member, phi, phi_inv
from mpart.partitions import MaryPartition, enumerate_b
from mpart.radix import to_base

# the full correspondence for base 4, n = 36 (multiplicities and sequences
# both written largest index first)
TABLE_4_36 = [
    ((2, 1, 0), (0, 0)),
    ((2, 0, 4), (0, 1)),
    ((1, 5, 0), (1, 0)),
    ((1, 4, 4), (1, 1)),
    ((1, 3, 8), (1, 2)),
    ((1, 2, 12), (1, 3)),
    ((1, 1, 16), (1, 4)),
    ((1, 0, 20), (1, 5)),
    ((0, 9, 0), (2, 0)),
    ((0, 8, 4), (2, 1)),
    ((0, 7, 8), (2, 2)),
    ((0, 6, 12), (2, 3)),
    ((0, 5, 16), (2, 4)),
    ((0, 4, 20), (2, 5)),
    ((0, 3, 24), (2, 6)),
    ((0, 2, 28), (2, 7)),
    ((0, 1, 32), (2, 8)),
    ((0, 0, 36), (2, 9)),
]


def from_msb(m, mults_msb):
    mults = list(mults_msb)
    while len(mults) > 1 and mults[0] == 0:
        mults.pop(0)
    return MaryPartition(m, tuple(reversed(mults)))


def test_phi_known_pairs():
    assert phi(from_msb(4, (2, 1, 0)), 36).msb_first() == (0, 0)
    assert phi(from_msb(4, (1, 4, 4)), 36).msb_first() == (1, 1)
    assert phi(from_msb(4, (0, 0, 36)), 36).msb_first() == (2, 9)


def test_phi_of_digit_vector_is_zero():
    for m, n in [(2, 19), (3, 25), (5, 485), (7, 100)]:
        digits = to_base(m, n).digits
        p = from_msb(m, tuple(reversed(digits)))
        assert phi(p, n).betas == (0,) * to_base(m, n).j


def test_phi_weight_mismatch_raises():
    with pytest.raises(ValueError):
        phi(MaryPartition(4, (4, 4, 1)), 35)


def test_phi_inv_known_pairs():
    assert phi_inv(BetaSeq(4, 36, (0, 2))).mults == (0, 9)
    assert phi_inv(BetaSeq(4, 36, (1, 0))).msb_first() == (2, 0, 4)
    # the all-zero sequence undoes nothing: back to the digit vector
    assert phi_inv(BetaSeq(4, 36, (0, 0))).msb_first() == (2, 1, 0)


def test_phi_inv_rejects_nonmember():
    with pytest.raises(ValueError):
        phi_inv(BetaSeq(4, 36, (10, 2)))


def test_full_table_4_36():
    parts = enumerate_b(4, 36)
    got = [(p.padded_msb_first(2), phi(p, 36).msb_first()) for p in parts]
    assert got == TABLE_4_36


def test_is_member_examples():
    assert is_member(BetaSeq(4, 36, (9, 2)))
    assert not is_member(BetaSeq(4, 36, (10, 2)))
    assert not is_member(BetaSeq(4, 36, (2, 0)))
    assert not is_member(BetaSeq(4, 36, (-1, 0)))


def test_beta_seq_length_checked():
    with pytest.raises(ValueError):
        BetaSeq(4, 36, (1, 2, 3))
    with pytest.raises(ValueError):
        BetaSeq(4, 36, (1,))
    # n < m has the empty sequence
    assert BetaSeq(7, 6, ()).msb_first() == ()


def test_empty_sequence_case():
    assert is_member(BetaSeq(7, 6, ()))
    assert phi_inv(BetaSeq(7, 6, ())).mults == (6,)
    assert phi(MaryPartition(7, (6,)), 6).betas == ()


def test_round_trip_small_grid():
    for m in (2, 3, 4, 5):
        for n in range(1, 121):
            for p in enumerate_b(m, n):
                assert phi_inv(phi(p, n)) == p


def test_bijection_onto_members_small_grid():
    for m in (2, 3, 4, 5):
        for n in range(1, 121):
            parts = enumerate_b(m, n)
            members = enumerate_members(m, n)
            images = [phi(p, n) for p in parts]
            # injectivity, surjectivity, and cardinality in one comparison:
            # descending partitions map to ascending sequences
            assert images == members


def test_members_all_satisfy_bounds():
    for m, n in [(3, 80), (4, 36), (5, 123)]:
        for b in enumerate_members(m, n):
            assert is_member(b)
