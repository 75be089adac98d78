"""Acceptance suite: one test per acceptance criterion, exact tolerances.

Run with  pytest tests/test_acceptance.py -v -s  to see one line per
criterion.  All equalities are exact (no floating point anywhere); runtime
bounds are asserted where the criterion carries one.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from zvect.blocks import abelian_closed_form, block_dim, block_table, brute_force_block_dim, fusion_ring
from zvect.center import (
    CenterObject,
    dualizing_object,
    first_halfbraiding_violation,
    hom_dim,
    tensor,
)
from zvect.classify import ribbon_gv_extensions, symmetric_control_extensions
from zvect.cocycles import CocycleError, cyclic_cocycle, trivial_cocycle, verify_three_cocycle
from zvect.groups import character_group, cyclic_group, group_from_generators, product_group
from zvect.gv import gv_dual, sphericity_report, verify_ribbon
from zvect.pointed import pointed_category
from zvect.scalars import Cyclotomic, RootOfUnity
from zvect.simples import simples


def _report(num: int, text: str) -> None:
    print(f"\nACCEPTANCE CRITERION {num}: PASS - {text}")


def _abelian_inputs(orders):
    cats = []
    for n in orders:
        G = cyclic_group(n)
        for d in character_group(G):
            cats.append(pointed_category(G, trivial_cocycle(G), d))
    return cats


def _all_core_inputs():
    """Every (G, lambda, d) exercised by criteria 1-4."""
    cats = _abelian_inputs([2, 3, 4])
    z2z2 = product_group(cyclic_group(2), cyclic_group(2))
    for d in character_group(z2z2):
        cats.append(pointed_category(z2z2, trivial_cocycle(z2z2), d))
    c21 = cyclic_cocycle(2, 1)
    cats.append(pointed_category(c21.group, c21))
    s3 = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
    cats.append(pointed_category(s3, trivial_cocycle(s3)))
    return cats


def test_criterion_1_sphericity():
    start = time.monotonic()
    cats = _abelian_inputs([2, 3, 4])
    assert len(cats) == 9
    for C in cats:
        d_squared_trivial = all((C.d(g) ** 2).is_one() for g in C.group.elements())
        rep = sphericity_report(C)
        assert rep.consistent
        for value in (rep.unit_isomorphic, rep.base_spherical, rep.duality_rigid, rep.modular):
            assert value == d_squared_trivial
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"criterion 1 took {elapsed:.2f}s"
    _report(1, f"9 inputs, four conditions == (d^2 trivial), {elapsed:.2f}s")


def test_criterion_2_sphere_block():
    for C in _abelian_inputs([2, 3, 4]):
        sims = simples(C)
        ring = fusion_ring(C, sims)
        expected = 1 if sphericity_report(C, sims).spherical else 0
        assert block_dim(C, 0, ring, sims) == expected
    _report(2, "genus-0 block is 1 exactly on spherical inputs, 0 otherwise")


def test_criterion_3_torus_block():
    start = time.monotonic()
    cases = []
    for n in (2, 3):
        G = cyclic_group(n)
        for d in character_group(G):
            cases.append((pointed_category(G, trivial_cocycle(G), d), n * n))
    z2z2 = product_group(cyclic_group(2), cyclic_group(2))
    for d in character_group(z2z2):
        cases.append((pointed_category(z2z2, trivial_cocycle(z2z2), d), 16))
    c21 = cyclic_cocycle(2, 1)
    cases.append((pointed_category(c21.group, c21), 4))
    s3 = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
    cases.append((pointed_category(s3, trivial_cocycle(s3)), 8))
    for C, count in cases:
        sims = simples(C)
        assert len(sims) == count
        ring = fusion_ring(C, sims)
        assert block_dim(C, 1, ring, sims) == count
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"criterion 3 took {elapsed:.2f}s"
    _report(3, f"torus block equals simples count on all {len(cases)} inputs, {elapsed:.2f}s")


def test_criterion_4_abelian_closed_form():
    for n in (2, 3):
        G = cyclic_group(n)
        for d in character_group(G):
            C = pointed_category(G, trivial_cocycle(G), d)
            sims = simples(C)
            ring = fusion_ring(C, sims)
            for g in range(7):
                assert block_dim(C, g, ring, sims) == abelian_closed_form(C, g)
    z3 = cyclic_group(3)
    d = next(c for c in character_group(z3) if c(1) == RootOfUnity(3, 1))
    C = pointed_category(z3, trivial_cocycle(z3), d)
    table = [dim for _, dim in block_table(C, 6)]
    assert table == [0, 9, 0, 0, 6561, 0, 0]
    _report(4, "block_dim == closed form for Z2, Z3, all d, g <= 6; twisted-Z3 table exact")


def test_criterion_5_ribbon_everywhere():
    failures = []
    for C in _all_core_inputs():
        rep = verify_ribbon(C)
        if not rep.ok:
            failures.extend(r for r in rep.rows if not r["ribbon_ok"])
    assert not failures, failures
    _report(5, "theta(D s) == theta(s) for every simple of every core input")


def test_criterion_6_gv_representability():
    z2z2 = product_group(cyclic_group(2), cyclic_group(2))
    cats = _abelian_inputs([2, 3, 4])
    cats.append(pointed_category(z2z2, trivial_cocycle(z2z2)))
    c21 = cyclic_cocycle(2, 1)
    cats.append(pointed_category(c21.group, c21))
    pairs = 0
    for C in cats:
        sims = simples(C)
        K = dualizing_object(C)
        for s in sims:
            ds = gv_dual(s.obj, check=False)
            for t in sims:
                assert hom_dim(K, tensor(s.obj, t.obj, check=False)) == hom_dim(ds, t.obj)
                pairs += 1
    _report(6, f"hom(K, s@t) == hom(Ds, t) on {pairs} simple pairs, exact")


def test_criterion_7_uniqueness():
    for C in _all_core_inputs():
        rep = ribbon_gv_extensions(C)
        assert rep.extension_candidates == 1
        assert rep.uniqueness_certified
    control = symmetric_control_extensions(cyclic_group(2))
    assert control.extension_candidates == 2
    assert not control.uniqueness_certified
    _report(7, "unique certified class per center; control input reports 2 uncertified")


def test_criterion_8_property_suite():
    start = time.monotonic()
    rng = random.Random(20240811)

    # every cyclic cocycle up to order 8 passes the verifier
    tables = {}
    for n in range(1, 9):
        for q in range(n):
            tables[(n, q)] = cyclic_cocycle(n, q)

    # 100 random single-entry corruptions are rejected
    rejected = 0
    while rejected < 100:
        n = rng.randrange(2, 9)
        q = rng.randrange(n)
        base = tables[(n, q)]
        a = rng.randrange(1, n)
        b = rng.randrange(1, n)
        c = rng.randrange(1, n)
        mu = RootOfUnity(rng.choice([3, 4, 5, 8]), rng.randrange(1, 3))
        if n == 2:
            mu = RootOfUnity(4, rng.choice([1, 3]))  # -1 at (1,1,1) is a valid cocycle
        tab = [
            [[base(x, y, z) for z in range(n)] for y in range(n)]
            for x in range(n)
        ]
        tab[a][b][c] = tab[a][b][c] * mu
        with pytest.raises(CocycleError):
            verify_three_cocycle(base.group, tab)
        rejected += 1

    # constructed simples and the dualizing object pass the half-braiding check
    core = []
    for n in (2, 3):
        G = cyclic_group(n)
        d = character_group(G)[-1]
        core.append(pointed_category(G, trivial_cocycle(G), d))
    c31 = cyclic_cocycle(3, 1)
    core.append(pointed_category(c31.group, c31))
    s3 = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
    core.append(pointed_category(s3, trivial_cocycle(s3)))
    objects = []
    for C in core:
        assert first_halfbraiding_violation(dualizing_object(C)) is None
        for s in simples(C):
            if s.obj is not None:
                assert first_halfbraiding_violation(s.obj) is None
                objects.append(s.obj)

    # 100 random sigma corruptions are rejected
    rejected = 0
    while rejected < 100:
        V = rng.choice(objects)
        G = V.category.group
        g = rng.choice(V.grades())
        h = rng.choice([x for x in G.elements() if x != G.identity])
        # scaling by -1 can land on another valid object when |G| = 2, so the
        # corruption factor always has multiplicative order >= 3
        mu = Cyclotomic.from_root_of_unity(
            rng.choice([RootOfUnity(3, 1), RootOfUnity(3, 2), RootOfUnity(4, 1), RootOfUnity(5, 2)])
        )
        sigma = {k: [row[:] for row in m] for k, m in V.sigma.items()}
        m = sigma[(g, h)]
        nz = [(i, j) for i in range(len(m)) for j in range(len(m[0])) if not m[i][j].is_zero()]
        i, j = rng.choice(nz)
        m[i][j] = m[i][j] * mu
        corrupted = CenterObject(V.category, dict(V.dims), sigma, check=False)
        assert first_halfbraiding_violation(corrupted) is not None
        rejected += 1

    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"criterion 8 took {elapsed:.2f}s"
    _report(8, f"verifier property suite (36 cocycles, 200 corruptions), {elapsed:.2f}s")


def test_criterion_9_oracle_equivalence():
    for n in (2, 3):
        G = cyclic_group(n)
        for d in character_group(G):
            C = pointed_category(G, trivial_cocycle(G), d)
            sims = simples(C)
            ring = fusion_ring(C, sims)
            for g in range(3):
                assert block_dim(C, g, ring, sims) == brute_force_block_dim(C, g, sims)
    s3 = group_from_generators(3, [[1, 0, 2], [1, 2, 0]])
    C3 = pointed_category(s3, trivial_cocycle(s3))
    sims = simples(C3)
    ring = fusion_ring(C3, sims)
    fusion_value = block_dim(C3, 2, ring, sims)
    verlinde_value = sum(Fraction(6, s.dim) ** (2 * 2 - 2) for s in sims)
    assert fusion_value == 116
    assert verlinde_value == Fraction(116)
    _report(9, "fusion ring == brute force (Z2, Z3, g<=2); S3 genus 2 = 116 both paths")


def test_criterion_10_excluded_scope_documented():
    # the non-semisimple coend formula and the autoequivalence stages are out
    # of desk-scale scope; the tool must say so rather than fake numbers
    z3 = cyclic_group(3)
    C = pointed_category(z3, trivial_cocycle(z3))
    rep = ribbon_gv_extensions(C)
    assert rep.autoequivalence_stages == "not computed"
    _report(10, "excluded computations are reported as not computed")
