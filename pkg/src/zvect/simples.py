"""Complete lists of simple objects of the center, per supported family.

Supported inputs:

* abelian G, trivial associator: the |G|^2 invertible lines (grade, character);
* cyclic G, cyclic cocycle: n^2 invertible lines found by solving the twisted
  multiplicativity relation for the generator value;
* any G, trivial associator: one simple per (conjugacy class, irreducible
  centralizer character), materialized as explicit monomial matrices when the
  centralizer character is linear and kept at character level otherwise.

Every materialized object is re-validated by the half-braiding verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .center import CenterObject, line_object
from .chartable import CharacterTable
from .gradedchar import GradedCharacter
from .groups import centralizer, character_group, conjugacy_classes
from .pointed import PointedCategory, UnsupportedFamilyError
from .scalars import Cyclotomic, RootOfUnity


@dataclass
class Simple:
    """One isomorphism class of simple center objects."""

    label: str
    dim: int
    invertible: bool
    grade_support: tuple[int, ...]
    obj: CenterObject | None
    char: GradedCharacter | None
    theta: Cyclotomic

    def theta_root(self) -> RootOfUnity:
        r = self.theta.as_root_of_unity()
        if r is None:
            raise ArithmeticError(f"twist of {self.label} is not a root of unity")
        return r


def _is_cyclic(C: PointedCategory) -> bool:
    G = C.group
    return any(G.element_order(a) == G.order for a in G.elements())


def supported_family(C: PointedCategory) -> str:
    """'abelian-trivial' | 'nonabelian-trivial' | 'cyclic-twisted'; raises otherwise."""
    if C.is_lambda_trivial():
        return "abelian-trivial" if C.group.is_abelian() else "nonabelian-trivial"
    if _is_cyclic(C):
        return "cyclic-twisted"
    raise UnsupportedFamilyError(
        "nontrivial cocycles are supported on cyclic groups only"
    )


def simples(C: PointedCategory) -> list[Simple]:
    family = supported_family(C)
    if family == "abelian-trivial":
        return _simples_abelian(C)
    if family == "cyclic-twisted":
        return _simples_cyclic_twisted(C)
    return _simples_induced(C)


def _theta_value(C: PointedCategory, g: int, sigma_gg: Cyclotomic) -> Cyclotomic:
    return Cyclotomic.from_root_of_unity(C.pivotal_scalar(g).inverse()) * sigma_gg


def _simples_abelian(C: PointedCategory) -> list[Simple]:
    G = C.group
    out = []
    for g in G.elements():
        for i, chi in enumerate(character_group(G)):
            obj = line_object(C, g, {h: chi(h) for h in G.elements()}, check=False)
            char = GradedCharacter(
                G, {(g, h): Cyclotomic.from_root_of_unity(chi(h)) for h in G.elements()}
            )
            theta = _theta_value(C, g, Cyclotomic.from_root_of_unity(chi(g)))
            out.append(
                Simple(
                    label=f"g{G.names[g]}|x{i}",
                    dim=1,
                    invertible=True,
                    grade_support=(g,),
                    obj=obj,
                    char=char,
                    theta=theta,
                )
            )
    return out


def _simples_cyclic_twisted(C: PointedCategory) -> list[Simple]:
    G = C.group
    n = G.order
    gen = next(a for a in G.elements() if G.element_order(a) == n)
    lam = C.cocycle

    def law_factor(g: int, h: int, hp: int) -> RootOfUnity:
        return (
            lam(h, hp, g).inverse() * lam(h, g, hp) * lam(g, h, hp).inverse()
        )

    out = []
    for g in G.elements():
        # accumulate sigma(gen^k) = prefactor_k * z^k; closing at k = n pins z^n
        prefactor = RootOfUnity.one()
        x = gen
        for _ in range(n - 1):
            prefactor = prefactor * law_factor(g, x, gen)
            x = G.mul(x, gen)
        # sigma(gen^n) = prefactor * z^n = 1
        c = prefactor.inverse()
        m = c.order
        base = c.exponent
        for k in range(n):
            z = RootOfUnity(m * n, base + m * k)
            vals = {G.identity: RootOfUnity.one()}
            acc, x = z, gen
            for _ in range(n - 1):
                vals[x] = acc
                acc = acc * law_factor(g, x, gen) * z
                x = G.mul(x, gen)
            obj = line_object(C, g, vals, check=True)
            theta = _theta_value(C, g, obj.s(g, g)[0][0])
            out.append(
                Simple(
                    label=f"g{G.names[g]}|z{m * n}^{(base + m * k) % (m * n)}",
                    dim=1,
                    invertible=True,
                    grade_support=(g,),
                    obj=obj,
                    char=None,
                    theta=theta,
                )
            )
    return out


def _simples_induced(C: PointedCategory) -> list[Simple]:
    G = C.group
    out = []
    for rep, members in conjugacy_classes(G):
        cent = centralizer(G, rep)
        H = cent.group
        table = CharacterTable(H)
        rep_in_H = cent.inclusion.index(rep)
        # least-index transversal: x_a with x_a rep x_a^-1 = a
        transversal = {}
        for a in members:
            transversal[a] = next(
                x for x in G.elements() if G.mul(G.mul(x, rep), G.inv(x)) == a
            )
        for k in range(len(table)):
            deg = table.degrees[k]
            dim = len(members) * deg
            theta_num = table.value(k, rep_in_H)
            theta = (
                Cyclotomic.from_root_of_unity(C.pivotal_scalar(rep).inverse())
                * theta_num
                / Cyclotomic.from_rational(deg)
            )
            obj = None
            if deg == 1:
                obj = _induced_line_object(C, cent, table, k, members, transversal)
            char = _induced_character(C, cent, table, k, members, transversal)
            out.append(
                Simple(
                    label=f"c{G.names[rep]}|r{k}",
                    dim=dim,
                    invertible=(dim == 1),
                    grade_support=tuple(members),
                    obj=obj,
                    char=char,
                    theta=theta,
                )
            )
    return out


def _induced_line_object(C, cent, table, k, members, transversal) -> CenterObject:
    G = C.group
    dims = {a: 1 for a in members}
    sigma = {}
    for a in members:
        xa = transversal[a]
        for h in G.elements():
            b = G.conj(a, h)
            xb = transversal[b]
            c = G.mul(G.mul(G.inv(xa), h), xb)
            c_in_H = cent.inclusion.index(c)
            sigma[(a, h)] = [[table.value(k, c_in_H)]]
    obj = CenterObject(C, dims, sigma, check=True)
    return obj


def _induced_character(C, cent, table, k, members, transversal) -> GradedCharacter:
    G = C.group
    vals = {}
    for a in members:
        xa = transversal[a]
        for h in G.elements():
            if G.conj(a, h) != a:
                continue
            c = G.mul(G.mul(G.inv(xa), h), xa)
            v = table.value(k, cent.inclusion.index(c))
            if not v.is_zero():
                vals[(a, h)] = v
    return GradedCharacter(G, vals)


def simples_count(C: PointedCategory) -> int:
    family = supported_family(C)
    if family in ("abelian-trivial", "cyclic-twisted"):
        return C.group.order ** 2
    total = 0
    for rep, _ in conjugacy_classes(C.group):
        total += len(conjugacy_classes(centralizer(C.group, rep).group))
    return total


def find_simple(sims: list[Simple], obj_or_char) -> Simple | None:
    """Match a line object (by grade and sigma values) or a graded character."""
    if isinstance(obj_or_char, GradedCharacter):
        for s in sims:
            if s.char is not None and s.char == obj_or_char:
                return s
        return None
    V = obj_or_char
    if not V.is_line():
        return None
    g = V.line_grade()
    for s in sims:
        if s.obj is None or not s.obj.is_line():
            continue
        if s.obj.line_grade() != g:
            continue
        G = V.category.group
        if all(s.obj.line_value(h) == V.line_value(h) for h in G.elements()):
            return s
    return None
