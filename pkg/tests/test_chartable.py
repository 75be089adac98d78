from __future__ import annotations

from zvect.chartable import CharacterTable
from zvect.groups import cyclic_group, group_from_generators
from zvect.scalars import Cyclotomic


def _orthogonality(table, G):
    n = len(table)
    for i in range(n):
        for j in range(n):
            s = Cyclotomic.zero()
            for a in G.elements():
                s = s + table.value(i, a) * table.value(j, a).conjugate()
            expect = Cyclotomic.from_rational(G.order if i == j else 0)
            assert s == expect, (i, j)


def test_s3_table(s3):
    t = CharacterTable(s3)
    assert t.degrees == [1, 1, 2]
    # trivial character sorts first
    assert all(t.value(0, a).is_one() for a in s3.elements())
    two = 2
    for a in s3.elements():
        o = s3.element_order(a)
        v = t.value(two, a)
        if o == 1:
            assert v == Cyclotomic.from_rational(2)
        elif o == 2:
            assert v.is_zero()
        else:
            assert v == Cyclotomic.from_rational(-1)
    _orthogonality(t, s3)


def test_q8_table(q8):
    t = CharacterTable(q8)
    assert t.degrees == [1, 1, 1, 1, 2]
    _orthogonality(t, q8)
    # the 2-dim character of Q8 takes value -2 at the central -1
    minus_one = q8.names.index("-1")
    assert t.value(4, minus_one) == Cyclotomic.from_rational(-2)


def test_a4_s4_d4_degrees():
    a4 = group_from_generators(4, [[1, 0, 3, 2], [1, 2, 0, 3]])
    assert CharacterTable(a4).degrees == [1, 1, 1, 3]
    s4 = group_from_generators(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    assert CharacterTable(s4).degrees == [1, 1, 2, 3, 3]
    d4 = group_from_generators(4, [[1, 2, 3, 0], [3, 2, 1, 0]])
    assert CharacterTable(d4).degrees == [1, 1, 1, 1, 2]
    _orthogonality(CharacterTable(s4), s4)


def test_abelian_path():
    z6 = cyclic_group(6)
    t = CharacterTable(z6)
    assert t.degrees == [1] * 6
    _orthogonality(t, z6)
