from __future__ import annotations

import pytest

from zvect.cocycles import cyclic_cocycle, trivial_cocycle
from zvect.groups import character_group
from zvect.pointed import (
    UnsupportedFamilyError,
    base_sphericity,
    pivotal_scalar,
    pointed_category,
    verify_pivotality,
)
from zvect.scalars import RootOfUnity


def test_pivotal_scalar_examples(z3):
    d = next(c for c in character_group(z3) if c(1) == RootOfUnity(3, 1))
    C = pointed_category(z3, trivial_cocycle(z3), d)
    for g in z3.elements():
        assert pivotal_scalar(C, g) == d(g)  # trivial associator factor
    c21 = cyclic_cocycle(2, 1)
    C2 = pointed_category(c21.group, c21)
    assert pivotal_scalar(C2, 1) == RootOfUnity(2, 1)
    assert pivotal_scalar(C2, 0).is_one()


def test_pivotal_scalar_identity_always_one(s3):
    C = pointed_category(s3, trivial_cocycle(s3))
    assert pivotal_scalar(C, s3.identity).is_one()


def test_pivotality_trivial_cocycle(z3, s3):
    for G in (z3, s3):
        C = pointed_category(G, trivial_cocycle(G))
        assert verify_pivotality(C).ok


@pytest.mark.parametrize("n", range(1, 7))
def test_pivotality_cyclic_cocycles(n):
    for q in range(n):
        coc = cyclic_cocycle(n, q)
        for d in character_group(coc.group):
            C = pointed_category(coc.group, coc, d)
            report = verify_pivotality(C)
            assert report.ok, (n, q, report.first())


def test_base_sphericity(z2, z3):
    d3 = next(c for c in character_group(z3) if not c.is_trivial())
    assert base_sphericity(pointed_category(z3, trivial_cocycle(z3), d3)) is False
    assert base_sphericity(pointed_category(z3, trivial_cocycle(z3))) is True
    dm = next(c for c in character_group(z2) if not c.is_trivial())
    assert base_sphericity(pointed_category(z2, trivial_cocycle(z2), dm)) is True
    c21 = cyclic_cocycle(2, 1)
    with pytest.raises(UnsupportedFamilyError):
        base_sphericity(pointed_category(c21.group, c21))


def test_base_sphericity_matches_center_report(z2, z3, z4):
    from zvect.gv import sphericity_report

    for G in (z2, z3, z4):
        for d in character_group(G):
            C = pointed_category(G, trivial_cocycle(G), d)
            assert base_sphericity(C) == sphericity_report(C).spherical
