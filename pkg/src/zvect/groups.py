"""Finite group engine on explicit Cayley tables.

Groups are materialized as full multiplication tables of element indices
(desk scale, default cap 512).  Element ordering is the insertion order of
the construction, so every downstream report is reproducible bit for bit.
"""

from __future__ import annotations

import itertools

import numpy as np

from .scalars import RootOfUnity, lcm

DEFAULT_ORDER_CAP = 512


class GroupError(ValueError):
    pass


class CapExceededError(GroupError):
    pass


class FiniteGroup:
    """Immutable finite group given by a Cayley table of element indices."""

    def __init__(self, table: list[list[int]], names: list[str] | None = None, check: bool = True):
        n = len(table)
        self.order = n
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise GroupError("names length does not match order")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("table has no identity element")
        self.identity = ident
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == ident and self.table[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError(f"element {self.names[a]} has no inverse")
        self.inverse_table = tuple(inv)
        if check:
            self._check_associative()
        self._orders: tuple[int, ...] | None = None

    def _check_associative(self) -> None:
        t = np.array(self.table, dtype=np.int64)
        for a in range(self.order):
            # (a*b)*c vs a*(b*c), vectorized per row
            if not np.array_equal(t[t[a]], t[a][t]):
                raise GroupError("table is not associative")

    # -- queries -----------------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def conj(self, a: int, h: int) -> int:
        """h^-1 a h."""
        return self.mul(self.mul(self.inv(h), a), h)

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(self.element_order(a) for a in self.elements())
        return self._orders

    def exponent(self) -> int:
        e = 1
        for o in self.element_orders():
            e = lcm(e, o)
        return e

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        x = self.identity
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


class GroupHom:
    """Group homomorphism G -> mu_N, stored by its value on every element."""

    def __init__(self, source: FiniteGroup, values: list[RootOfUnity]):
        if len(values) != source.order:
            raise GroupError("homomorphism needs one value per element")
        self.source = source
        self.values = tuple(values)
        if not self.values[source.identity].is_one():
            raise GroupError("homomorphism must send the identity to 1")
        for a in source.elements():
            for b in source.elements():
                if self(source.mul(a, b)) != self(a) * self(b):
                    raise GroupError(
                        f"not multiplicative at ({source.names[a]}, {source.names[b]})"
                    )

    def __call__(self, a: int) -> RootOfUnity:
        return self.values[a]

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def __mul__(self, other: GroupHom) -> GroupHom:
        return GroupHom(self.source, [x * y for x, y in zip(self.values, other.values)])

    def square(self) -> GroupHom:
        return GroupHom(self.source, [v * v for v in self.values])

    def inverse(self) -> GroupHom:
        return GroupHom(self.source, [v.inverse() for v in self.values])

    def __pow__(self, k: int) -> GroupHom:
        return GroupHom(self.source, [v**k for v in self.values])

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupHom) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)


def trivial_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, [RootOfUnity.one()] * G.order)


# -- constructors -----------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, names=[str(a) for a in range(n)], check=False)


def product_group(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    n = G.order * H.order
    if n > cap:
        raise CapExceededError(f"product order {n} exceeds cap {cap}")
    pairs = [(a, b) for a in G.elements() for b in H.elements()]
    index = {p: i for i, p in enumerate(pairs)}
    table = [
        [index[(G.mul(a1, a2), H.mul(b1, b2))] for (a2, b2) in pairs] for (a1, b1) in pairs
    ]
    names = [f"({G.names[a]},{H.names[b]})" for a, b in pairs]
    return FiniteGroup(table, names=names, check=False)


def _perm_name(p: tuple[int, ...]) -> str:
    # disjoint cycle notation on moved points; 'e' for the identity
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) if cycles else "e"


def group_from_generators(
    degree: int, generators: list[list[int]], cap: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """Closure of permutation generators on {0..degree-1}, insertion-ordered."""
    gens = []
    for g in generators:
        t = tuple(int(x) for x in g)
        if sorted(t) != list(range(degree)):
            raise GroupError(f"generator {g} is not a bijection on 0..{degree - 1}")
        gens.append(t)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))  # q = g then p
                if q not in index:
                    if len(elems) >= cap:
                        raise CapExceededError(f"closure exceeds order cap {cap}")
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            r = tuple(p[q[k]] for k in range(degree))
            table[i][j] = index[r]
    return FiniteGroup(table, names=[_perm_name(p) for p in elems], check=False)


def group_from_config(cfg: dict, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from the JSON config schema."""
    kind = cfg.get("type")
    if kind == "cyclic":
        n = int(cfg["n"])
        if n > cap:
            raise CapExceededError(f"order {n} exceeds cap {cap}")
        return cyclic_group(n)
    if kind == "product":
        factors = [group_from_config(f, cap=cap) for f in cfg["factors"]]
        if not factors:
            raise GroupError("product needs at least one factor")
        G = factors[0]
        for H in factors[1:]:
            G = product_group(G, H, cap=cap)
        return G
    if kind == "perm":
        return group_from_generators(int(cfg["degree"]), cfg["generators"], cap=cap)
    if kind == "cayley":
        table = cfg["table"]
        if len(table) > cap:
            raise CapExceededError(f"order {len(table)} exceeds cap {cap}")
        return FiniteGroup(table, names=cfg.get("names"))
    raise GroupError(f"unknown group config type {kind!r}")


# -- conjugation machinery ---------------------------------------------------

def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, tuple[int, ...]]]:
    """Partition into conjugacy classes as (least representative, members)."""
    seen = [False] * G.order
    classes = []
    for a in G.elements():
        if seen[a]:
            continue
        orbit = sorted({G.conj(a, h) for h in G.elements()})
        for x in orbit:
            seen[x] = True
        classes.append((orbit[0], tuple(orbit)))
    return classes


def class_of(G: FiniteGroup, a: int) -> tuple[int, ...]:
    return tuple(sorted({G.conj(a, h) for h in G.elements()}))


class Subgroup:
    """A subgroup with its own Cayley table and the inclusion into the parent."""

    def __init__(self, parent: FiniteGroup, members: list[int]):
        members = sorted(set(members))
        index = {m: i for i, m in enumerate(members)}
        table = []
        for a in members:
            row = []
            for b in members:
                c = parent.mul(a, b)
                if c not in index:
                    raise GroupError("subset is not closed under multiplication")
                row.append(index[c])
            table.append(row)
        self.group = FiniteGroup(table, names=[parent.names[m] for m in members], check=False)
        self.inclusion = tuple(members)
        self.parent = parent

    def include(self, i: int) -> int:
        return self.inclusion[i]


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    members = [h for h in G.elements() if G.mul(h, g) == G.mul(g, h)]
    return Subgroup(G, members)


# -- abelian structure -------------------------------------------------------

def _prime_factors(n: int) -> list[int]:
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def _span(G: FiniteGroup, basis: list[int]) -> dict[int, tuple[int, ...]]:
    """All products of basis powers -> exponent tuple (abelian, direct)."""
    reps = {G.identity: tuple(0 for _ in basis)}
    for i, b in enumerate(basis):
        ob = G.element_order(b)
        new = {}
        for x, ex in reps.items():
            y = x
            for k in range(ob):
                exk = list(ex)
                exk[i] = k
                if y in new:
                    raise GroupError("basis is not independent")
                new[y] = tuple(exk)
                y = G.mul(y, b)
        reps = new
    return reps


def abelian_basis(G: FiniteGroup) -> list[int]:
    """Elements b_1, b_2, ... with G the internal direct product of <b_i>.

    Works Sylow-by-Sylow with the classical adjustment step: a new maximal-
    order element g with g^r in the current span is divided by an r-th root
    taken inside the span.
    """
    if not G.is_abelian():
        raise GroupError("abelian_basis requires an abelian group")
    basis: list[int] = []
    for p in _prime_factors(G.order):
        part = [a for a in G.elements() if _is_p_power(G.element_order(a), p)]
        pbasis: list[int] = []
        spanned = _span(G, pbasis)
        for g in sorted(part, key=lambda a: (-G.element_order(a), a)):
            if g in spanned:
                continue
            r = 1
            x = g
            while x not in spanned:
                x = G.power(x, p)
                r *= p
            # adjust g by a span element s with s^r = (g^r)^-1
            target = G.inv(x)
            adjust = None
            for s, ex in spanned.items():
                if G.power(s, r) == target:
                    adjust = s
                    break
            if adjust is None:
                raise GroupError("abelian basis adjustment failed")
            g2 = G.mul(g, adjust)
            if g2 == G.identity:
                continue
            pbasis.append(g2)
            spanned = _span(G, pbasis)
        basis.extend(pbasis)
    # sanity: the span is everything
    if len(_span(G, basis)) != G.order:
        raise GroupError("abelian basis does not span")
    return basis


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def invariant_factor_basis(G: FiniteGroup) -> list[int]:
    """Basis realizing the invariant-factor decomposition d_1 | d_2 | ... read
    from largest factor first: orders (d_k, d_{k-1}, ..., d_1) with d_k = exp(G)."""
    basis = abelian_basis(G)
    per_prime: dict[int, list[int]] = {}
    for b in basis:
        o = G.element_order(b)
        p = _prime_factors(o)[0]
        per_prime.setdefault(p, []).append(b)
    for p in per_prime:
        per_prime[p].sort(key=lambda b: -G.element_order(b))
    depth = max((len(v) for v in per_prime.values()), default=0)
    combined = []
    for i in range(depth):
        c = G.identity
        for p in sorted(per_prime):
            if i < len(per_prime[p]):
                c = G.mul(c, per_prime[p][i])
        combined.append(c)
    if combined and len(_span(G, combined)) != G.order:
        raise GroupError("invariant factor combination failed")
    return combined


def invariant_factors(G: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_k (ascending divisibility)."""
    basis = invariant_factor_basis(G)
    return tuple(sorted(G.element_order(b) for b in basis))


def character_group(G: FiniteGroup) -> list[GroupHom]:
    """All |G| homomorphisms G -> mu_exp(G), enumerated deterministically
    over the invariant-factor basis."""
    if not G.is_abelian():
        raise GroupError("character_group requires an abelian group")
    basis = invariant_factor_basis(G)
    if not basis:
        return [trivial_hom(G)]
    orders = [G.element_order(b) for b in basis]
    reps = _span(G, basis)
    chars = []
    for ks in itertools.product(*(range(o) for o in orders)):
        values: list[RootOfUnity] = [RootOfUnity.one()] * G.order
        for x, ex in reps.items():
            v = RootOfUnity.one()
            for k, e, o in zip(ks, ex, orders):
                v = v * RootOfUnity(o, k * e)
            values[x] = v
        chars.append(GroupHom(G, values))
    return chars


def hom_from_generator_values(
    G: FiniteGroup, gen_values: list[tuple[int, RootOfUnity]]
) -> GroupHom:
    """Extend values on generators to a homomorphism; raises if inconsistent."""
    values: dict[int, RootOfUnity] = {G.identity: RootOfUnity.one()}
    for g, v in gen_values:
        if g in values and values[g] != v:
            raise GroupError("inconsistent generator values")
        values[g] = v
    frontier = list(values)
    while frontier:
        nxt = []
        for x in frontier:
            for g, v in list(gen_values) + [(G.identity, RootOfUnity.one())]:
                y = G.mul(x, g)
                w = values[x] * v
                if y in values:
                    if values[y] != w:
                        raise GroupError("generator values do not define a homomorphism")
                else:
                    values[y] = w
                    nxt.append(y)
        frontier = nxt
    if len(values) != G.order:
        raise GroupError("generators do not generate the group")
    return GroupHom(G, [values[a] for a in G.elements()])
