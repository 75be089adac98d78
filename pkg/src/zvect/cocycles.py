"""Normalized 3-cocycles on a finite group, with exhaustive verification.

A table lambda: G^3 -> roots of unity is accepted only after checking
normalization (any identity argument gives 1) and the full cocycle identity

    l(g2,g3,g4) l(g1,g2*g3,g4) l(g1,g2,g3) = l(g1*g2,g3,g4) l(g1,g2,g3*g4)

over all |G|^4 quadruples.  This is the pentagon constraint for the skeletal
associator of twisted graded vector spaces.
"""

from __future__ import annotations

from .groups import FiniteGroup, cyclic_group
from .scalars import RootOfUnity


class CocycleError(ValueError):
    """Carries the first violating datum for machine-readable reports."""

    def __init__(self, message: str, kind: str, where: tuple):
        super().__init__(message)
        self.kind = kind
        self.where = where


class ThreeCocycle:
    """A verified normalized 3-cocycle; index with cocycle(a, b, c)."""

    def __init__(self, group: FiniteGroup, table, _verified: bool = False):
        self.group = group
        n = group.order
        self.table = tuple(
            tuple(tuple(table[a][b][c] for c in range(n)) for b in range(n)) for a in range(n)
        )
        if not _verified:
            _check_cocycle(group, self.table)

    def __call__(self, a: int, b: int, c: int) -> RootOfUnity:
        return self.table[a][b][c]

    def is_trivial(self) -> bool:
        return all(v.is_one() for plane in self.table for row in plane for v in row)

    def pointwise_product(self, other: ThreeCocycle) -> ThreeCocycle:
        if other.group is not self.group and other.group.table != self.group.table:
            raise CocycleError("cocycles live on different groups", "group-mismatch", ())
        n = self.group.order
        table = [
            [[self(a, b, c) * other(a, b, c) for c in range(n)] for b in range(n)]
            for a in range(n)
        ]
        return verify_three_cocycle(self.group, table)


def _check_cocycle(G: FiniteGroup, table) -> None:
    n = G.order
    e = G.identity
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if (a == e or b == e or c == e) and not table[a][b][c].is_one():
                    raise CocycleError(
                        f"normalization fails at ({G.names[a]},{G.names[b]},{G.names[c]})",
                        "normalization",
                        (a, b, c),
                    )
    mul = G.mul
    for g1 in range(n):
        for g2 in range(n):
            g12 = mul(g1, g2)
            for g3 in range(n):
                g23 = mul(g2, g3)
                l123 = table[g1][g2][g3]
                row_g12 = table[g12][g3]
                for g4 in range(n):
                    lhs = table[g2][g3][g4] * table[g1][g23][g4] * l123
                    rhs = row_g12[g4] * table[g1][g2][mul(g3, g4)]
                    if lhs != rhs:
                        raise CocycleError(
                            "cocycle identity fails at quadruple "
                            f"({G.names[g1]},{G.names[g2]},{G.names[g3]},{G.names[g4]})",
                            "cocycle-identity",
                            (g1, g2, g3, g4),
                        )


def verify_three_cocycle(G: FiniteGroup, table) -> ThreeCocycle:
    """Validate a fully populated G^3 table of roots of unity."""
    n = G.order
    if len(table) != n or any(len(p) != n or any(len(r) != n for r in p) for p in table):
        raise CocycleError("table shape must be |G| x |G| x |G|", "shape", ())
    _check_cocycle(G, table)
    return ThreeCocycle(G, table, _verified=True)


def trivial_cocycle(G: FiniteGroup) -> ThreeCocycle:
    one = RootOfUnity.one()
    n = G.order
    return ThreeCocycle(G, [[[one] * n] * n] * n, _verified=True)


def cyclic_cocycle(n: int, q: int) -> ThreeCocycle:
    """The standard representative on Z_n: l(a,b,c) = zeta_n^(q*a*floor((b+c)/n))."""
    if n < 1:
        raise CocycleError("cyclic cocycle needs n >= 1", "parameter", ())
    G = cyclic_group(n)
    q %= n
    table = [
        [[RootOfUnity(n, q * a * ((b + c) // n)) for c in range(n)] for b in range(n)]
        for a in range(n)
    ]
    return verify_three_cocycle(G, table)


def cocycle_from_config(G: FiniteGroup, cfg: dict) -> ThreeCocycle:
    kind = cfg.get("type", "trivial")
    if kind == "trivial":
        return trivial_cocycle(G)
    if kind == "cyclic":
        coc = cyclic_cocycle(G.order, int(cfg["q"]))
        if G.table != coc.group.table:
            raise CocycleError("cyclic cocycle requires the cyclic group", "group-mismatch", ())
        return ThreeCocycle(G, coc.table, _verified=True)
    if kind == "table":
        n = G.order
        entries = cfg["entries"]
        if len(entries) != n**3:
            raise CocycleError(f"need {n ** 3} entries, got {len(entries)}", "shape", ())
        it = iter(entries)
        table = [
            [[RootOfUnity.from_json(next(it)) for _ in range(n)] for _ in range(n)]
            for _ in range(n)
        ]
        return verify_three_cocycle(G, table)
    raise CocycleError(f"unknown cocycle config type {kind!r}", "config", ())
