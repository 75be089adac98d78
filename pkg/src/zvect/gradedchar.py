"""Characters of center objects on commuting pairs.

For a center object V and a commuting pair (g, h), the character value is
the trace of sigma^g_h on V_g (zero when h does not centralize g or V_g
vanishes).  For trivial associator these class functions are orthonormal on
simples and compute fusion multiplicities by inner products; that is the
engine used for nonabelian inputs where explicit matrices are not
materialized.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .groups import FiniteGroup
from .scalars import Cyclotomic


class GradedCharacter:
    """Sparse map over commuting pairs (g, h) -> Cyclotomic."""

    def __init__(self, group: FiniteGroup, values: dict):
        self.group = group
        self.values = {k: v for k, v in values.items() if not v.is_zero()}

    def __call__(self, g: int, h: int) -> Cyclotomic:
        return self.values.get((g, h), Cyclotomic.zero())

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, Cyclotomic.zero()) + v
        return GradedCharacter(self.group, out)

    def __mul__(self, other: GradedCharacter) -> GradedCharacter:
        """Tensor-product character: convolution over the grade argument."""
        G = self.group
        out: dict = {}
        for (g1, h), v1 in self.values.items():
            for g2 in G.elements():
                v2 = other.values.get((g2, h))
                if v2 is None:
                    continue
                g = G.mul(g1, g2)
                if G.mul(g, h) != G.mul(h, g):
                    continue
                key = (g, h)
                cur = out.get(key, Cyclotomic.zero())
                out[key] = cur + v1 * v2
        return GradedCharacter(self.group, out)

    def dual(self) -> GradedCharacter:
        G = self.group
        return GradedCharacter(
            self.group, {(G.inv(g), h): v.conjugate() for (g, h), v in self.values.items()}
        )

    def inner(self, other: GradedCharacter) -> Fraction:
        """(1/|G|) sum over commuting pairs of self * conj(other); must be rational."""
        G = self.group
        total = Cyclotomic.zero()
        for key, v in self.values.items():
            w = other.values.get(key)
            if w is not None:
                total = total + v * w.conjugate()
        q = (total * Fraction(1, G.order)).as_rational()
        if q is None:
            raise ArithmeticError("character inner product is not rational")
        return q

    def inner_int(self, other: GradedCharacter) -> int:
        q = self.inner(other)
        if q.denominator != 1:
            raise ArithmeticError(f"character inner product {q} is not an integer")
        return int(q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self(g, h) == other(g, h) for (g, h) in keys)

    def dimension(self) -> Cyclotomic:
        G = self.group
        total = Cyclotomic.zero()
        for g in G.elements():
            total = total + self(g, G.identity)
        return total


def character_of_object(V) -> GradedCharacter:
    """Trace character of an explicit center object."""
    G = V.category.group
    vals = {}
    for g in V.grades():
        for h in G.elements():
            if G.conj(g, h) != g:
                continue
            t = linalg.trace(V.s(g, h))
            if not t.is_zero():
                vals[(g, h)] = t
    return GradedCharacter(G, vals)


def unit_character(G: FiniteGroup) -> GradedCharacter:
    return GradedCharacter(G, {(G.identity, h): Cyclotomic.one() for h in G.elements()})
