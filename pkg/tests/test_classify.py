from __future__ import annotations

import pytest

from zvect.classify import (
    aut_tensor_id,
    caut_tensor_id,
    muger_data,
    ribbon_gv_extensions,
    symmetric_control_extensions,
)
from zvect.cocycles import cyclic_cocycle, trivial_cocycle
from zvect.groups import character_group, cyclic_group, group_from_generators
from zvect.pointed import UnsupportedFamilyError, pointed_category


def test_muger_center_trivial_for_centers(z2, z3):
    d3 = next(c for c in character_group(z3) if not c.is_trivial())
    C = pointed_category(z3, trivial_cocycle(z3), d3)
    md = muger_data(C)
    assert md.transparent == ["g0|x0"]
    assert md.balanced_transparent == ["g0|x0"]
    assert md.picard_order == 1

    dm = next(c for c in character_group(z2) if not c.is_trivial())
    C2 = pointed_category(z2, trivial_cocycle(z2), dm)
    assert muger_data(C2).transparent == ["g0|x0"]


def test_muger_scan_nonabelian(s3):
    C = pointed_category(s3, trivial_cocycle(s3))
    md = muger_data(C)
    assert len(md.transparent) == 1
    assert md.picard_order == 1


def test_unique_extension_for_centers(z2, z3, s3):
    cats = [pointed_category(z3, trivial_cocycle(z3), d) for d in character_group(z3)]
    cats += [pointed_category(z2, trivial_cocycle(z2), d) for d in character_group(z2)]
    cats.append(pointed_category(s3, trivial_cocycle(s3)))
    c21 = cyclic_cocycle(2, 1)
    cats.append(pointed_category(c21.group, c21))
    for C in cats:
        rep = ribbon_gv_extensions(C)
        assert rep.extension_candidates == 1
        assert rep.uniqueness_certified
        assert rep.autoequivalence_stages == "not computed"


def test_symmetric_control(z2):
    rep = symmetric_control_extensions(z2)
    assert rep.extension_candidates == 2
    assert not rep.uniqueness_certified
    assert rep.candidates == ["k0", "k1"]
    trivial = symmetric_control_extensions(cyclic_group(1))
    assert trivial.extension_candidates == 1


def test_symmetric_control_rejects_nonabelian(s3):
    with pytest.raises(UnsupportedFamilyError):
        symmetric_control_extensions(s3)


def test_aut_tensor_id_orders(z2, z3):
    dm = next(c for c in character_group(z2) if not c.is_trivial())
    C2 = pointed_category(z2, trivial_cocycle(z2), dm)
    assert aut_tensor_id(C2).order == 4
    d3 = next(c for c in character_group(z3) if not c.is_trivial())
    C3 = pointed_category(z3, trivial_cocycle(z3), d3)
    assert aut_tensor_id(C3).order == 9
    t = group_from_generators(1, [])
    Ct = pointed_category(t, trivial_cocycle(t))
    assert aut_tensor_id(Ct).order == 1


def test_aut_tensor_id_rejects_noninvertible(s3):
    C = pointed_category(s3, trivial_cocycle(s3))
    with pytest.raises(UnsupportedFamilyError):
        aut_tensor_id(C)


def test_caut_tensor_id_spherical_condition(z2, z3):
    # spherical + rigid duality: condition is chi^2 = 1 on the simples group
    C3 = pointed_category(z3, trivial_cocycle(z3))
    assert caut_tensor_id(C3).order == 1  # Z3 x Z3 has no 2-torsion characters
    dm = next(c for c in character_group(z2) if not c.is_trivial())
    C2 = pointed_category(z2, trivial_cocycle(z2), dm)
    c = caut_tensor_id(C2)
    a = aut_tensor_id(C2)
    assert c.order == 4  # every character of Z2 x Z2 squares to 1
    assert a.order % c.order == 0


def test_caut_is_subgroup_nonspherical(z3):
    d3 = next(c for c in character_group(z3) if not c.is_trivial())
    C = pointed_category(z3, trivial_cocycle(z3), d3)
    c = caut_tensor_id(C)
    a = aut_tensor_id(C)
    assert a.order % c.order == 0


def test_twisted_center_classification():
    c21 = cyclic_cocycle(2, 1)
    C = pointed_category(c21.group, c21)
    md = muger_data(C)
    assert len(md.transparent) == 1
    assert aut_tensor_id(C).order == 4
    assert ribbon_gv_extensions(C).uniqueness_certified


def test_caut_kills_everything_nonspherical(z3):
    # D s (x) s^-1 ranges over generators of the full simples group when d^2
    # is nontrivial on Z3, so only the trivial scalar automorphism survives
    d = next(c for c in character_group(z3) if not c.is_trivial())
    C = pointed_category(z3, trivial_cocycle(z3), d)
    assert aut_tensor_id(C).order == 9
    assert caut_tensor_id(C).order == 1
