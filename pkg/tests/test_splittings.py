import itertools
from fractions import Fraction

import pytest

from ellstrata.splittings import balanced_type, enumerate_types, type_bound_check


# --- brute-force oracle ---------------------------------------------------
#
# Independent generator: enumerate rank partitions, then sweep every part's
# degree over the window [d' - sum of the other parts' caps, own cap] and
# keep the assignments that sum to d'.  Canonical form: parts sorted
# descending.

def _rank_partitions(total, cap=None):
    cap = total if cap is None else cap
    if total == 0:
        yield ()
        return
    for first in range(min(cap, total), 0, -1):
        for rest in _rank_partitions(total - first, first):
            yield (first,) + rest


def _oracle_types(n, d, nprime, dprime):
    found = set()
    for ranks in _rank_partitions(nprime):
        caps = [(nj * d) // n for nj in ranks]
        total_cap = sum(caps)
        windows = [range(dprime - (total_cap - cap), cap + 1) for cap in caps]
        for degrees in itertools.product(*windows):
            if sum(degrees) != dprime:
                continue
            found.add(tuple(sorted(zip(ranks, degrees), reverse=True)))
    return found


class TestEnumerate:
    def test_single_type_positive_delta(self):
        types = enumerate_types(2, 1, 1, 0)
        assert [t.parts for t in types] == [((1, 0),)]
        assert types[0].dim_X == 1 and types[0].rk_Hom == 1
        assert types[0].eps == (0,)

    def test_empty_when_delta_negative(self):
        assert enumerate_types(2, 1, 1, 1) == []

    def test_equal_slope_type(self):
        types = enumerate_types(2, 0, 1, 0)
        assert [t.parts for t in types] == [((1, 0),)]
        assert types[0].eps == (1,)
        assert types[0].dim_X == 0
        assert types[0].rk_Hom == 1  # min(gcd(2,0), gcd(1,0))

    def test_matches_oracle_on_grid(self):
        for n in range(2, 6):
            for d in range(-4, 5):
                for nprime in range(1, n):
                    hi = (nprime * d) // n
                    for dprime in range(-4, min(4, hi) + 1):
                        got = {t.parts for t in
                               enumerate_types(n, d, nprime, dprime)}
                        assert got == _oracle_types(n, d, nprime, dprime), (
                            n, d, nprime, dprime)

    def test_all_parts_satisfy_constraint(self):
        for t in enumerate_types(6, 5, 4, -2):
            assert sum(nj for nj, _ in t.parts) == 4
            assert sum(dj for _, dj in t.parts) == -2
            assert all(nj * 5 - 6 * dj >= 0 for nj, dj in t.parts)

    def test_deterministic_order(self):
        assert enumerate_types(5, 3, 3, 1) == enumerate_types(5, 3, 3, 1)

    def test_rejects_bad_ranks(self):
        with pytest.raises(ValueError):
            enumerate_types(2, 1, 2, 0)


class TestBalanced:
    def test_examples(self):
        assert balanced_type(2, 0) == ((1, 0), (1, 0))
        assert balanced_type(3, 2) == ((3, 2),)
        assert balanced_type(4, 2) == ((2, 1), (2, 1))

    def test_flagged_in_enumeration(self):
        types = enumerate_types(4, 3, 2, 0)
        flagged = [t for t in types if t.balanced]
        assert len(flagged) == 1
        assert flagged[0].parts == ((1, 0), (1, 0))


class TestBound:
    def test_equality_example(self):
        (t,) = enumerate_types(2, 1, 1, 0)
        assert type_bound_check(t, 2, 1, 1, 0) == (2, 2, True)

    def test_balanced_equal_slope_example(self):
        types = enumerate_types(4, 2, 2, 1)
        (bal,) = [t for t in types if t.balanced]
        assert bal.parts == ((2, 1),)
        assert bal.eps == (1,)
        assert bal.dim_X == 0 and bal.rk_Hom == 1 and bal.h0_end == 1
        assert type_bound_check(bal, 4, 2, 2, 1) == (1, 1, True)

    def test_single_type_of_3221(self):
        types = enumerate_types(3, 2, 2, 1)
        assert [t.parts for t in types] == [((2, 1),)]
        assert type_bound_check(types[0], 3, 2, 2, 1) == (2, 2, True)

    def test_bound_and_equality_structure_on_grid(self):
        for n in range(2, 6):
            for d in range(-4, 5):
                for nprime in range(1, n):
                    hi = (nprime * d) // n
                    for dprime in range(-4, min(4, hi) + 1):
                        s1 = nprime * d - n * dprime
                        for t in enumerate_types(n, d, nprime, dprime):
                            lhs, rhs, equal = type_bound_check(
                                t, n, d, nprime, dprime)
                            assert lhs <= rhs
                            if t.balanced and s1 > 0:
                                assert equal
                            if equal:
                                slopes = {Fraction(dj, nj) for nj, dj in t.parts}
                                assert len(slopes) == 1

    def test_rejects_mismatched_type(self):
        (t,) = enumerate_types(2, 1, 1, 0)
        with pytest.raises(ValueError):
            type_bound_check(t, 3, 1, 2, 0)
