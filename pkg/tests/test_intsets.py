"""Tests for set descriptors: membership, enumeration order, residue knowledge."""

from __future__ import annotations

import pytest

from borderings.intsets import (
    AllIntegers,
    ArithmeticProgression,
    CustomPredicate,
    ExplicitFinite,
    NonnegativeIntegers,
    Primes,
    ResidueKind,
    SetSpecError,
    canonical_key,
    parse_set_spec,
)
from borderings.numerics import INF


class TestParsing:
    def test_grammar(self):
        assert isinstance(parse_set_spec("Z"), AllIntegers)
        assert isinstance(parse_set_spec("N"), NonnegativeIntegers)
        assert isinstance(parse_set_spec("P"), Primes)
        ap = parse_set_spec("ap:1,4")
        assert isinstance(ap, ArithmeticProgression)
        assert (ap.first, ap.step) == (1, 4)
        s = parse_set_spec("list:3,1,2,2")
        assert s.values == (1, 2, 3)
        r = parse_set_spec("range:-2..2")
        assert r.values == (-2, -1, 0, 1, 2)

    def test_file_spec(self, tmp_path):
        path = tmp_path / "set.txt"
        path.write_text("5\n-3\n8\n")
        s = parse_set_spec(f"file:{path}")
        assert s.values == (-3, 5, 8)

    def test_errors(self):
        for bad in ("???", "ap:1", "ap:1,0", "list:", "range:5..1", "range:abc", "file:/nonexistent"):
            with pytest.raises(SetSpecError):
                parse_set_spec(bad)
        with pytest.raises(SetSpecError):
            ExplicitFinite([])


class TestEnumeration:
    def test_canonical_order_examples(self):
        assert AllIntegers().elements_up_to(2) == [0, 1, -1, 2, -2]
        assert Primes().elements_up_to(10) == [2, 3, 5, 7]
        assert ExplicitFinite(range(6)).elements_up_to(100) == [0, 1, 2, 3, 4, 5]
        assert NonnegativeIntegers().elements_up_to(3) == [0, 1, 2, 3]
        assert ExplicitFinite([-2, 2, 1]).elements_up_to(2) == [1, 2, -2]

    def test_prefix_closure(self):
        sets = [
            AllIntegers(),
            NonnegativeIntegers(),
            Primes(),
            ArithmeticProgression(-7, 3),
            ExplicitFinite([-9, -2, 0, 4, 11]),
        ]
        for S in sets:
            for b1, b2 in ((0, 5), (5, 17), (17, 60)):
                small = S.elements_up_to(b1)
                big = S.elements_up_to(b2)
                assert big[: len(small)] == small

    def test_iter_canonical_matches_bounded(self):
        for S in (AllIntegers(), Primes(), ArithmeticProgression(1, 4)):
            from itertools import islice

            head = list(islice(S.iter_canonical(), 12))
            assert sorted(head, key=canonical_key) == head
            assert all(S.contains(a) for a in head)

    def test_membership(self):
        assert Primes().contains(97)
        assert not Primes().contains(91)
        assert ArithmeticProgression(1, 4).contains(13)
        assert not ArithmeticProgression(1, 4).contains(-3)  # one-sided
        assert not ExplicitFinite(range(6)).contains(6)
        assert AllIntegers().contains(-(10**12))

    def test_cardinality(self):
        assert ExplicitFinite(range(6)).cardinality == 6
        assert AllIntegers().cardinality == INF


class TestResidueStatus:
    def test_primes_examples(self):
        P = Primes()
        assert P.residue_status(3, 4).kind is ResidueKind.INFINITE
        assert P.residue_status(0, 4).kind is ResidueKind.EMPTY
        st = P.residue_status(2, 4)
        assert st.kind is ResidueKind.FINITE_ONLY and st.members == (2,)
        st = P.residue_status(3, 9)
        assert st.kind is ResidueKind.FINITE_ONLY and st.members == (3,)

    def test_custom_predicate_unknown(self):
        S = CustomPredicate(lambda a: a % 7 == 1, enumeration_cap=500, name="custom7")
        assert S.residue_status(1, 7).kind is ResidueKind.UNKNOWN

    def test_custom_predicate_refuses_bounds_above_cap(self):
        S = CustomPredicate(lambda a: a % 7 == 1, enumeration_cap=500, name="custom7")
        assert 1 in S.elements_up_to(500)
        with pytest.raises(SetSpecError):
            S.elements_up_to(501)

    def test_consistency_with_scan(self):
        scan_bound = 10**4
        sets = [
            AllIntegers(),
            NonnegativeIntegers(),
            Primes(),
            ArithmeticProgression(2, 6),
            ArithmeticProgression(-5, 4),
            ExplicitFinite([-50, -3, 0, 9, 14, 27]),
        ]
        for S in sets:
            scan = S.elements_up_to(scan_bound)
            for m in (2, 3, 4, 5, 8, 9, 12):
                by_class: dict[int, list[int]] = {r: [] for r in range(m)}
                for a in scan:
                    by_class[a % m].append(a)
                for r in range(m):
                    st = S.residue_status(r, m)
                    members = by_class[r]
                    if st.kind is ResidueKind.EMPTY:
                        assert not members, (S.spec, r, m)
                    elif st.kind is ResidueKind.FINITE_ONLY:
                        assert sorted(st.members) == sorted(members), (S.spec, r, m)
                    else:
                        assert st.kind is ResidueKind.INFINITE
                        assert members, (S.spec, r, m)


class TestPickInClass:
    def test_examples(self):
        assert Primes().pick_in_class(1, 4, exclude={5}) == 13
        assert AllIntegers().pick_in_class(2, 5) == 2
        assert ExplicitFinite(range(6)).pick_in_class(1, 6, exclude={1}) is None

    def test_result_is_canonical_member(self):
        sets = [
            AllIntegers(),
            NonnegativeIntegers(),
            Primes(),
            ArithmeticProgression(-5, 4),
            ExplicitFinite([-9, -2, 0, 4, 11]),
        ]
        for S in sets:
            for m in (2, 3, 5, 9):
                for r in range(m):
                    st = S.residue_status(r, m)
                    if not st.nonempty:
                        continue
                    a = S.pick_in_class(r, m)
                    assert a is not None
                    assert S.contains(a) and a % m == r
                    # nothing smaller in canonical order sits in the class
                    for x in S.elements_up_to(abs(a)):
                        if canonical_key(x) < canonical_key(a):
                            assert x % m != r

    def test_exclusion(self):
        Z = AllIntegers()
        first = Z.pick_in_class(1, 3)
        second = Z.pick_in_class(1, 3, exclude={first})
        assert first != second and second % 3 == 1

    def test_negative_first_progression(self):
        S = ArithmeticProgression(-10, 3)
        a = S.pick_in_class(2, 9)
        assert a is not None and S.contains(a) and a % 9 == 2
