import pytest

from schurcover.classify import (
    BOTH,
    CONJUGATE,
    DIRECT,
    classify,
    corner_witness,
    is_corner_symmetric,
    is_self_conjugate,
    is_type1,
    predicted_cover,
    predicted_cover_conjugate_reading,
    type2_decomposition,
)
from schurcover.partitions import Cell, PartitionError, conjugate, contains, outer_corners, partitions_of

from . import oracles


def all_partitions(max_weight, min_weight=1):
    for n in range(min_weight, max_weight + 1):
        yield from partitions_of(n)


def test_classify_worked_example():
    tc = classify((6, 5, 3, 3, 3, 1))
    assert (tc.variant, tc.beta, tc.s, tc.alpha, tc.side) == ("type2", (3, 3, 3, 3, 3, 1), 2, (1,), BOTH)
    assert tc.render() == "type2 beta=[3,3,3,3,3,1] s=2 alpha=[1] (both)"


def test_staircase_is_not_c1():
    assert classify((3, 2, 1)).variant == "none"
    assert classify((3, 2, 1)).render() == "none"


def test_two_two_one_reading():
    # (2,2,1) is type 1 directly; its conjugate (3,2) is also type 2 with an
    # empty beta, so the side comes out as "both" with the direct reading kept.
    tc = classify((2, 2, 1))
    assert tc.variant == "type1" and tc.beta == (2, 2, 1)
    assert tc.side == BOTH
    assert type2_decomposition((3, 2)) == ((), 2, (1,))
    assert tc.render() == "type1 beta=[2,2,1] (both)"


def test_classify_rejects_empty():
    with pytest.raises(PartitionError):
        classify(())


def test_type2_decomposition_matches_exhaustive_search():
    for nu in all_partitions(12):
        readings = oracles.type2_readings(tuple(nu))
        assert len(readings) <= 1, (nu, readings)
        got = type2_decomposition(nu)
        assert (got is None) == (not readings)
        if got is not None:
            assert (tuple(got[0]), got[1], tuple(got[2])) == readings[0]


def test_type1_matches_oracle():
    for nu in all_partitions(14):
        assert is_type1(nu) == oracles.is_type1(tuple(nu))


def test_never_both_types():
    for nu in all_partitions(18):
        assert not (is_type1(nu) and type2_decomposition(nu) is not None)


def test_type1_conjugate_is_never_type1():
    for nu in all_partitions(18):
        if is_type1(nu):
            assert not is_type1(conjugate(nu)), nu


def test_empty_beta_type2_iff_conjugate_is_type1_over_square():
    for nu in all_partitions(18):
        dec = type2_decomposition(nu)
        lhs = dec is not None and dec[0] == ()
        chi = conjugate(nu)
        rhs = is_type1(chi) and contains(chi, (chi[0],) * chi[0])
        assert lhs == rhs, nu


def test_classify_sides_are_consistent_under_conjugation():
    swap = {DIRECT: CONJUGATE, CONJUGATE: DIRECT, BOTH: BOTH, None: None}
    for nu in all_partitions(14):
        a, b = classify(nu), classify(conjugate(nu))
        assert b.side == swap[a.side]
        if a.side == DIRECT:
            assert (b.variant, b.beta, b.s, b.alpha) == (a.variant, a.beta, a.s, a.alpha)


def test_type2_invariants():
    for nu in all_partitions(14):
        dec = type2_decomposition(nu)
        if dec is None:
            continue
        beta, s, alpha = dec
        assert s >= 1 and alpha and len(alpha) <= s
        n = max(len(nu), len(beta))
        b = tuple(beta) + (0,) * (n - len(beta))
        a = tuple(alpha) + (0,) * (n - len(alpha))
        sq = (s,) * s + (0,) * (n - s)
        assert tuple(nu) + (0,) * (n - len(nu)) == tuple(x + y + z for x, y, z in zip(b, sq, a))


@pytest.mark.parametrize(
    "nu, expected",
    [((6, 5, 3, 3, 3, 1), (6, 5, 4, 3, 3, 1)), ((2, 2), None), ((2, 2, 1), (3, 2, 1)), ((1,), None)],
)
def test_predicted_cover_examples(nu, expected):
    assert predicted_cover(nu) == expected


def test_conjugate_side_cover_goes_into_first_column():
    # (3,2) read through its conjugate (2,2,1): box at the end of column one
    nu = (3, 2)
    assert classify(nu).side == BOTH
    assert predicted_cover_conjugate_reading(nu) == (3, 2, 1)


def test_both_readings_predict_the_same_box():
    for nu in all_partitions(14):
        if classify(nu).side == BOTH:
            assert predicted_cover(nu) == predicted_cover_conjugate_reading(nu), nu


def test_predicted_cover_commutes_with_conjugation():
    for nu in all_partitions(14):
        mu = predicted_cover(nu)
        mu_c = predicted_cover(conjugate(nu))
        assert (mu is None) == (mu_c is None)
        if mu is not None:
            assert conjugate(mu) == mu_c


def test_predicted_covers_are_not_covered():
    for nu in all_partitions(13):
        mu = predicted_cover(nu)
        if mu is not None:
            assert contains(mu, nu) and sum(mu) == sum(nu) + 1
            assert predicted_cover(mu) is None, (nu, mu)


def test_self_conjugate():
    assert is_self_conjugate((3, 2, 1))
    assert is_self_conjugate((1,))
    assert conjugate((6, 5, 3, 3, 3, 1)) == (6, 5, 5, 2, 2, 1)
    assert not is_self_conjugate((6, 5, 3, 3, 3, 1))
    assert not is_self_conjugate((6, 5, 5, 2, 2, 1))


def test_doubly_corner_symmetric_partitions_predict_no_cover():
    for nu in all_partitions(14):
        if is_corner_symmetric(nu)[0] and is_corner_symmetric(conjugate(nu))[0]:
            assert classify(nu).variant == "none", nu


def test_self_conjugate_partitions_with_a_predicted_cover():
    # Hooks (k,1^{k-1}) with k >= 3 are type 2 on both sides and are not
    # corner-symmetric, so the criterion does predict a cover for them.
    found = [tuple(nu) for nu in all_partitions(10) if is_self_conjugate(nu) and predicted_cover(nu)]
    assert found[:2] == [(3, 1, 1), (4, 1, 1, 1)]
    for nu in found:
        assert not is_corner_symmetric(nu)[0]
    assert predicted_cover((3, 1, 1)) == (3, 2, 1)


# corner symmetry


def test_corner_symmetric_witness_example():
    ok, witnesses = is_corner_symmetric((5, 5, 4, 4, 2, 2))
    assert ok
    assert [w.corner for w in witnesses] == [Cell(3, 5), Cell(5, 3), Cell(7, 1)]
    # (5,5) is an admissible witness for the corner (7,1)
    assert (5, 5) in oracles.corner_witnesses((5, 5, 4, 4, 2, 2), (7, 1))
    # a seven-row witness cannot sit inside a six-row partition
    assert not contains((5, 5, 4, 4, 2, 2), (5, 5, 2, 2, 2, 2, 2))


def test_corner_symmetric_negative_example():
    assert is_corner_symmetric((5, 5, 4, 4, 3)) == (False, [])
    assert corner_witness((5, 5, 4, 4, 3), Cell(6, 1)) is None
    assert oracles.corner_witnesses((5, 5, 4, 4, 3), (6, 1)) == []


def test_staircase_is_corner_symmetric():
    ok, witnesses = is_corner_symmetric((3, 2, 1))
    assert ok and len(witnesses) == 3


def test_corner_symmetry_rejects_empty():
    with pytest.raises(PartitionError):
        is_corner_symmetric(())


def test_corner_witness_search_matches_brute_force():
    for nu in all_partitions(11):
        for c in outer_corners(nu):
            if c.row == 1:
                continue
            found = corner_witness(nu, c)
            every = oracles.corner_witnesses(tuple(nu), (c.row, c.col))
            assert (found is None) == (not every), (nu, c)
            if found is not None:
                assert tuple(found.eta) in every


def test_witness_invariants():
    for nu in all_partitions(14):
        ok, witnesses = is_corner_symmetric(nu)
        if not ok:
            continue
        for w in witnesses:
            k, j = w.corner
            eta = tuple(w.eta) + (0,) * (len(nu) - len(w.eta))
            cells = [(r, c) for r in range(len(nu)) for c in range(eta[r], nu[r])]
            assert cells and (k - 2, j - 1) in cells
            assert min(c for _, c in cells) >= j - 1
            r0 = min(r for r, _ in cells)
            c0 = min(c for _, c in cells)
            shape = tuple(nu[r] - eta[r] for r in range(r0, max(r for r, _ in cells) + 1))
            assert all(eta[r] == c0 for r in range(r0, r0 + len(shape)))
            assert conjugate(shape) == shape
