"""Transparency, Picard data, and the classification of ribbon GV extensions.

The extension classes of a balanced braided category re-using its balanced
structure are parameterized (up to the action of balanced braided
autoequivalences) by invertible transparent objects with trivial twist:
each such L gives a new duality D' = D (x) L.  For a center the braiding is
non-degenerate, the only transparent simple is the unit, and the extension
is unique; the symmetric control input (a plain Vect_G with trivial
braiding and twist) keeps all |G| invertibles and so reports |G| candidates
without a uniqueness certificate.

The isomorphism-class stages beyond the scalar level (balanced braided
autoequivalence groups) are reported as not computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import tensor
from .gradedchar import unit_character
from .groups import FiniteGroup, character_group
from .gv import _dual_simple_of, double_braiding_trivial
from .pointed import PointedCategory, UnsupportedFamilyError
from .scalars import Cyclotomic
from .simples import Simple, find_simple, simples


@dataclass
class MugerData:
    simples: list[Simple]
    transparent: list[str]
    balanced_transparent: list[str]
    picard_order: int
    picard_table: dict  # (label, label) -> label on balanced transparent invertibles

    def to_json(self) -> dict:
        return {
            "transparent": list(self.transparent),
            "balanced_transparent": list(self.balanced_transparent),
            "picard_order": self.picard_order,
        }


def _is_unit_simple(C: PointedCategory, s: Simple) -> bool:
    if s.char is not None:
        return s.char == unit_character(C.group)
    return (
        s.obj.is_line()
        and s.obj.line_grade() == C.group.identity
        and all(s.obj.line_value(h).is_one() for h in C.group.elements())
    )


def muger_data(C: PointedCategory, sims: list[Simple] | None = None) -> MugerData:
    """Exhaustive transparency scan, twist filter, and Picard group table."""
    sims = sims if sims is not None else simples(C)
    transparent = [
        s for s in sims if all(double_braiding_trivial(s, t) for t in sims)
    ]
    balanced = [s for s in transparent if s.theta == Cyclotomic.one()]
    invertibles = [s for s in balanced if s.invertible]
    table = {}
    balanced_labels = {s.label for s in balanced}
    for a in invertibles:
        for b in invertibles:
            if a.obj is None or b.obj is None:
                raise UnsupportedFamilyError(
                    "Picard table needs explicit invertible objects"
                )
            prod = find_simple(sims, tensor(a.obj, b.obj, check=False))
            if prod is None:
                raise ArithmeticError("product of invertibles not found among simples")
            if prod.label not in balanced_labels:
                raise ArithmeticError(
                    "balanced transparent invertibles are not closed under tensor"
                )
            table[(a.label, b.label)] = prod.label
    return MugerData(
        simples=sims,
        transparent=[s.label for s in transparent],
        balanced_transparent=[s.label for s in balanced],
        picard_order=len(invertibles),
        picard_table=table,
    )


@dataclass
class ExtensionReport:
    candidates: list[str]
    extension_candidates: int
    uniqueness_certified: bool
    autoequivalence_stages: str = "not computed"

    def to_json(self) -> dict:
        return {
            "extension_candidates": self.extension_candidates,
            "candidates": list(self.candidates),
            "uniqueness_certified": self.uniqueness_certified,
            "unit_automorphisms": "k^x (scalars; unit is simple)",
            "autoequivalence_stages": self.autoequivalence_stages,
        }


def ribbon_gv_extensions(C: PointedCategory, sims: list[Simple] | None = None) -> ExtensionReport:
    """Candidate duality twists D' = D (x) L over the balanced transparent
    Picard group; uniqueness is certified when only the unit survives."""
    data = muger_data(C, sims)
    by_label = {s.label: s for s in data.simples}
    unit_only = (
        len(data.transparent) == 1
        and len(data.balanced_transparent) == 1
        and _is_unit_simple(C, by_label[data.transparent[0]])
    )
    return ExtensionReport(
        candidates=list(data.balanced_transparent),
        extension_candidates=max(1, len(data.balanced_transparent)),
        uniqueness_certified=unit_only,
    )


# -- symmetric control input ---------------------------------------------------

@dataclass
class SymmetricControlReport:
    group_order: int
    transparent: list[str]
    balanced_transparent: list[str]
    picard_order: int
    candidates: list[str]
    extension_candidates: int
    uniqueness_certified: bool

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "transparent": list(self.transparent),
            "balanced_transparent": list(self.balanced_transparent),
            "picard_order": self.picard_order,
            "extension_candidates": self.extension_candidates,
            "candidates": list(self.candidates),
            "uniqueness_certified": self.uniqueness_certified,
        }


def symmetric_control_extensions(G: FiniteGroup) -> SymmetricControlReport:
    """Vect_G with trivial braiding and twist: every simple is transparent and
    balanced, so each of the |G| invertibles is a candidate twist."""
    if not G.is_abelian():
        raise UnsupportedFamilyError("symmetric control input requires an abelian group")
    labels = [f"k{G.names[g]}" for g in G.elements()]
    return SymmetricControlReport(
        group_order=G.order,
        transparent=list(labels),
        balanced_transparent=list(labels),
        picard_order=G.order,
        candidates=labels,
        extension_candidates=len(labels),
        uniqueness_certified=False,
    )


# -- scalar automorphism stages -------------------------------------------------

@dataclass
class ScalarAutomorphisms:
    order: int
    factors: tuple[int, ...]  # invariant factors of the group

    def to_json(self) -> dict:
        return {"order": self.order, "invariant_factors": list(self.factors)}


def _simples_group(C: PointedCategory, sims: list[Simple]) -> tuple[FiniteGroup, list[str]]:
    """The group of invertible simples under tensor, as a Cayley table."""
    if not all(s.invertible for s in sims):
        raise UnsupportedFamilyError(
            "scalar automorphism stages need all simples invertible"
        )
    labels = [s.label for s in sims]
    index = {lab: i for i, lab in enumerate(labels)}
    table = []
    for a in sims:
        row = []
        for b in sims:
            prod = find_simple(sims, tensor(a.obj, b.obj, check=False))
            if prod is None:
                raise ArithmeticError("invertible product missing from simples list")
            row.append(index[prod.label])
        table.append(row)
    return FiniteGroup(table, names=labels), labels


def aut_tensor_id(C: PointedCategory, sims: list[Simple] | None = None) -> ScalarAutomorphisms:
    """Monoidal automorphisms of the identity functor: characters of the
    group of invertible simples."""
    from .groups import invariant_factors

    sims = sims if sims is not None else simples(C)
    group, _ = _simples_group(C, sims)
    return ScalarAutomorphisms(order=group.order, factors=invariant_factors(group))


def caut_tensor_id(C: PointedCategory, sims: list[Simple] | None = None) -> ScalarAutomorphisms:
    """Subgroup of scalar automorphisms compatible with the duality:
    characters with chi(D s) = chi(s) for every simple s."""
    from .groups import invariant_factors, Subgroup

    sims = sims if sims is not None else simples(C)
    group, labels = _simples_group(C, sims)
    index = {lab: i for i, lab in enumerate(labels)}
    dual_idx = {index[s.label]: index[_dual_simple_of(C, s, sims).label] for s in sims}
    chars = character_group(group)
    members = []
    for i, chi in enumerate(chars):
        if all(chi(dual_idx[a]) == chi(a) for a in group.elements()):
            members.append(i)
    # the surviving characters form a subgroup of the character group
    char_group, _ = _character_group_as_group(group, chars)
    sub = Subgroup(char_group, members)
    return ScalarAutomorphisms(order=sub.group.order, factors=invariant_factors(sub.group))


def _character_group_as_group(G: FiniteGroup, chars) -> tuple[FiniteGroup, list[int]]:
    index = {c: i for i, c in enumerate(chars)}
    table = [[index[a * b] for b in chars] for a in chars]
    return FiniteGroup(table, names=[f"x{i}" for i in range(len(chars))], check=False), list(
        range(len(chars))
    )
