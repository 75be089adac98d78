from __future__ import annotations

from fractions import Fraction

import pytest

from zvect.center import hom_dim, verify_half_braiding
from zvect.cocycles import cyclic_cocycle, trivial_cocycle
from zvect.gradedchar import character_of_object, unit_character
from zvect.pointed import UnsupportedFamilyError, pointed_category
from zvect.scalars import RootOfUnity
from zvect.simples import find_simple, simples, simples_count, supported_family


def test_abelian_counts(z2, z3, z2z2):
    for G in (z2, z3, z2z2):
        C = pointed_category(G, trivial_cocycle(G))
        S = simples(C)
        assert len(S) == G.order**2 == simples_count(C)
        assert all(s.invertible and s.dim == 1 for s in S)


def test_s3_structure(s3):
    C = pointed_category(s3, trivial_cocycle(s3))
    S = simples(C)
    assert len(S) == 8 == simples_count(C)
    assert sorted(s.dim for s in S) == [1, 1, 2, 2, 2, 2, 3, 3]
    materialized = [s for s in S if s.obj is not None]
    assert len(materialized) == 7  # all induced from linear centralizer characters
    for s in materialized:
        assert verify_half_braiding(s.obj)
        assert hom_dim(s.obj, s.obj) == 1
    for i, a in enumerate(materialized):
        for j, b in enumerate(materialized):
            if i < j:
                assert hom_dim(a.obj, b.obj) == 0


def test_q8_counts(q8):
    C = pointed_category(q8, trivial_cocycle(q8))
    S = simples(C)
    assert len(S) == 22 == simples_count(C)
    assert sum(s.dim**2 for s in S) == 64


def test_character_orthonormality(s3, q8, z3):
    for G in (s3, q8, z3):
        C = pointed_category(G, trivial_cocycle(G))
        S = simples(C)
        for i, a in enumerate(S):
            for j, b in enumerate(S):
                assert a.char.inner(b.char) == Fraction(1 if i == j else 0)


def test_characters_match_traces(s3):
    C = pointed_category(s3, trivial_cocycle(s3))
    for s in simples(C):
        if s.obj is not None:
            assert character_of_object(s.obj) == s.char


def test_cyclic_twisted_simples():
    c21 = cyclic_cocycle(2, 1)
    C = pointed_category(c21.group, c21)
    S = simples(C)
    assert supported_family(C) == "cyclic-twisted"
    assert len(S) == 4 and all(s.invertible for s in S)
    thetas = {s.theta_root() for s in S}
    assert RootOfUnity(4, 1) in thetas and RootOfUnity(4, 3) in thetas
    for i, a in enumerate(S):
        for j, b in enumerate(S):
            assert hom_dim(a.obj, b.obj) == (1 if i == j else 0)


@pytest.mark.parametrize("n,q", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 3), (8, 1)])
def test_cyclic_twisted_counts(n, q):
    coc = cyclic_cocycle(n, q)
    C = pointed_category(coc.group, coc)
    S = simples(C)
    assert len(S) == n**2
    labels = [s.label for s in S]
    assert len(set(labels)) == len(labels)


def test_unsupported_family_error(z2z2):
    from zvect.cocycles import cyclic_cocycle, verify_three_cocycle

    c21 = cyclic_cocycle(2, 1)
    tab = [
        [[c21(a // 2, b // 2, c // 2) for c in range(4)] for b in range(4)]
        for a in range(4)
    ]
    coc = verify_three_cocycle(z2z2, tab)
    C = pointed_category(z2z2, coc)
    with pytest.raises(UnsupportedFamilyError):
        simples(C)


def test_find_simple_matches(z3):
    C = pointed_category(z3, trivial_cocycle(z3))
    S = simples(C)
    unit = next(s for s in S if s.char == unit_character(z3))
    assert find_simple(S, unit.obj) is unit
    assert find_simple(S, unit.char) is unit


def test_theta_values_nonabelian(s3):
    # twist of an induced simple is d(r)^-1 * rho(r)-scalar; for the class of
    # 3-cycles with a cube-root character this is a cube root of unity
    C = pointed_category(s3, trivial_cocycle(s3))
    S = simples(C)
    thetas = {s.label: s.theta_root() for s in S}
    cube_roots = {t for t in thetas.values() if t.order == 3}
    assert len(cube_roots) == 2  # zeta3 and zeta3^2 appear among 3-cycle simples
    assert any(t.order == 2 for t in thetas.values())  # a sign twist appears
    # unit twist is 1
    unit = next(s for s in S if s.char == unit_character(s3))
    assert unit.theta_root().is_one()


def test_cyclic_twisted_simples_match_scalar_scan():
    # independent oracle: scan all candidate generator values in mu_{n^2}
    # (the closing constraint forces z^n into mu_n) and keep the valid lines
    from zvect.center import line_object

    for n, q in [(2, 1), (3, 1), (3, 2), (4, 2)]:
        coc = cyclic_cocycle(n, q)
        C = pointed_category(coc.group, coc)
        G = coc.group
        found = set()
        for g in G.elements():
            for k in range(n * n):
                z = RootOfUnity(n * n, k)
                # build sigma from the candidate generator value via the
                # twisted multiplicativity sigma(x+1) = F(g,x,1) sigma(1) sigma(x)
                vals = {G.identity: RootOfUnity.one()}
                acc, x = z, 1
                for _ in range(n - 1):
                    vals[x] = acc
                    f = coc(x, 1, g).inverse() * coc(x, g, 1) * coc(g, x, 1).inverse()
                    acc = acc * f * z
                    x = G.mul(x, 1)
                try:
                    line_object(C, g, vals, check=True)
                    found.add((g, z))
                except Exception:
                    pass
        S = simples(C)
        expected = {(s.obj.line_grade(), s.obj.line_value(1).as_root_of_unity()) for s in S}
        assert found == expected, (n, q)


def test_s3_twist_spectrum(s3):
    # twists per class: trivial on the identity class, a sign on the
    # transposition class, cube roots on the 3-cycle class
    C = pointed_category(s3, trivial_cocycle(s3))
    by_class = {}
    for s in simples(C):
        rep = min(s.grade_support)
        by_class.setdefault(s3.element_order(rep), []).append(s.theta_root())
    assert sorted((t.order, t.exponent) for t in by_class[1]) == [(1, 0)] * 3
    assert sorted((t.order, t.exponent) for t in by_class[2]) == [(1, 0), (2, 1)]
    assert sorted((t.order, t.exponent) for t in by_class[3]) == [(1, 0), (3, 1), (3, 2)]
