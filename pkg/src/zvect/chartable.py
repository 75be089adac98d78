"""Exact irreducible character tables of finite groups.

Characters are computed by the classical class-algebra method: the class
sums act on a splitting field F_p (p = 1 mod exp(G)), common eigenvectors
give the central characters, and the character values are lifted exactly to
sums of roots of unity through the power map and a discrete Fourier
inversion mod p.  Only character values are ever produced, never
representation matrices.
"""

from __future__ import annotations

from .groups import FiniteGroup, character_group, conjugacy_classes
from .scalars import Cyclotomic


class CharacterTable:
    """Irreducible characters of G as exact cyclotomic class functions."""

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.classes = conjugacy_classes(G)
        self.class_index = {}
        for i, (_, members) in enumerate(self.classes):
            for m in members:
                self.class_index[m] = i
        if G.is_abelian():
            chars = []
            for hom in character_group(G):
                chars.append((1, tuple(Cyclotomic.from_root_of_unity(hom(a)) for a in G.elements())))
            self._set_sorted(chars)
        else:
            self._dixon()

    def _set_sorted(self, chars: list[tuple[int, tuple[Cyclotomic, ...]]]) -> None:
        def key(entry):
            deg, values = entry
            sig = tuple(
                (c.conductor,) + tuple((f.numerator, f.denominator) for f in c.coeffs)
                for c in values
            )
            trivial = all(c.is_one() for c in values)
            return (deg, not trivial, sig)

        self.entries = sorted(chars, key=key)

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.entries]

    def value(self, chi: int, element: int) -> Cyclotomic:
        return self.entries[chi][1][element]

    def __len__(self) -> int:
        return len(self.entries)

    # -- Dixon lifting -------------------------------------------------------
    def _dixon(self) -> None:
        G = self.group
        classes = self.classes
        c = len(classes)
        e = G.exponent()
        p = _splitting_prime(e, G.order)
        z = _primitive_root_of_unity(p, e)

        # class multiplication coefficients a[i][j][k]
        reps = [r for r, _ in classes]
        sizes = [len(m) for _, m in classes]
        a = [[[0] * c for _ in range(c)] for _ in range(c)]
        for i in range(c):
            for j in range(c):
                for x in classes[i][1]:
                    for y in classes[j][1]:
                        a[i][j][self.class_index[G.mul(x, y)]] += 1
                for k in range(c):
                    # a_ijk counts solutions of x*y = z_k for one fixed z_k
                    a[i][j][k] //= sizes[k]
        # common eigenvectors of the matrices M_i = (a[i][j][k])_{jk} over F_p
        spaces = [[_unit_vec(c, j, p) for j in range(c)]]
        for i in range(c):
            Mi = [[a[i][j][k] % p for k in range(c)] for j in range(c)]
            MiT = [[Mi[j][k] for j in range(c)] for k in range(c)]  # act on column vectors
            new_spaces = []
            for basis in spaces:
                if len(basis) == 1:
                    new_spaces.append(basis)
                    continue
                new_spaces.extend(_split_invariant_space(MiT, basis, p))
            spaces = new_spaces
            if all(len(b) == 1 for b in spaces):
                break
        if not all(len(b) == 1 for b in spaces):
            raise ArithmeticError("class algebra failed to split; no splitting prime?")

        inv_class = [self.class_index[G.inv(reps[i])] for i in range(c)]
        action = []
        for i in range(c):
            action.append([[a[i][j][k] % p for j in range(c)] for k in range(c)])
        chars = []
        for basis in spaces:
            v = basis[0]
            j0 = next(j for j in range(c) if v[j] % p)
            inv_v0 = pow(v[j0], p - 2, p)
            omega = []
            for i in range(c):
                img = sum(action[i][j0][j] * v[j] for j in range(c)) % p
                omega.append((img * inv_v0) % p)
            s = 0
            for i in range(c):
                s = (s + omega[i] * omega[inv_class[i]] * pow(sizes[i], p - 2, p)) % p
            d2 = (G.order * pow(s, p - 2, p)) % p
            deg = _sqrt_mod(d2, p)
            if deg is None:
                raise ArithmeticError("character degree is not a square mod p")
            if deg > p - deg:
                deg = p - deg
            chi_mod = [(deg * omega[i] * pow(sizes[i], p - 2, p)) % p for i in range(c)]
            values = self._lift(chi_mod, p, z, e)
            chars.append((deg, values))
        self._set_sorted(chars)
        if sum(d * d for d, _ in self.entries) != G.order:
            raise ArithmeticError("character degrees do not sum to |G|")

    def _lift(self, chi_mod: list[int], p: int, z: int, e: int) -> tuple[Cyclotomic, ...]:
        """Lift mod-p class-function values to exact cyclotomic numbers."""
        G = self.group
        values: list[Cyclotomic] = [Cyclotomic.zero(e)] * G.order
        for cls_idx, (rep, members) in enumerate(self.classes):
            n = G.element_order(rep)
            ze = pow(z, e // n, p)  # primitive n-th root mod p
            # multiplicities of zeta_n^j among eigenvalues, via DFT inversion
            powers = [chi_mod[self.class_index[G.power(rep, i)]] for i in range(n)]
            inv_n = pow(n, p - 2, p)
            val = Cyclotomic.zero(e)
            for j in range(n):
                m = 0
                for i in range(n):
                    m = (m + powers[i] * pow(ze, (-i * j) % n, p)) % p
                m = (m * inv_n) % p
                if m:
                    if m > G.order:
                        raise ArithmeticError("eigenvalue multiplicity lift out of range")
                    val = val + m * Cyclotomic.root(e, (j * (e // n)) % e)
            for mem in members:
                values[mem] = val
        return tuple(values)


def _unit_vec(n: int, j: int, p: int) -> list[int]:
    v = [0] * n
    v[j] = 1 % p
    return v


def _splitting_prime(e: int, order: int) -> int:
    p = max(2 * order, e) + 1
    p += (1 - p) % e  # p = 1 mod e
    while True:
        if p > 2 and _is_prime(p) and p % e == 1:
            return p
        p += e


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _primitive_root_of_unity(p: int, e: int) -> int:
    for g in range(2, p):
        z = pow(g, (p - 1) // e, p)
        ok = all(pow(z, e // q, p) != 1 for q in _prime_divisors(e))
        if ok and pow(z, e, p) == 1:
            return z
    raise ArithmeticError("no primitive root found")


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    for x in range(p):
        if (x * x) % p == a:
            return x
    return None


def _split_invariant_space(MT: list[list[int]], basis: list[list[int]], p: int) -> list[list[list[int]]]:
    """Split an M-invariant space (column vectors) into eigenspaces of M over F_p."""
    k = len(basis)
    n = len(MT)
    # images of basis vectors
    images = []
    for v in basis:
        images.append([sum(MT[i][j] * v[j] for j in range(n)) % p for i in range(n)])
    # coordinates of images in the basis: solve basis-matrix * x = image
    A = [[basis[j][i] for j in range(k)] for i in range(n)]
    coords = []
    for img in images:
        x = _solve_mod(A, img, p)
        if x is None:
            raise ArithmeticError("space is not invariant")
        coords.append(x)
    # restriction matrix R (columns are coords): R[i][j] = coords[j][i]
    R = [[coords[j][i] for j in range(k)] for i in range(k)]
    eigenvalues = _eigenvalues_mod(R, p)
    out = []
    for mu in eigenvalues:
        Rm = [[(R[i][j] - (mu if i == j else 0)) % p for j in range(k)] for i in range(k)]
        for w in _nullspace_mod(Rm, p):
            vec = [sum(w[j] * basis[j][i] for j in range(k)) % p for i in range(n)]
            out.append(vec)
    if len(out) != k:
        raise ArithmeticError("eigenspace split lost dimensions")
    # group nullspace vectors per eigenvalue
    grouped: list[list[list[int]]] = []
    idx = 0
    for mu in eigenvalues:
        Rm = [[(R[i][j] - (mu if i == j else 0)) % p for j in range(k)] for i in range(k)]
        dim = len(_nullspace_mod(Rm, p))
        grouped.append(out[idx : idx + dim])
        idx += dim
    return grouped


def _eigenvalues_mod(R: list[list[int]], p: int) -> list[int]:
    k = len(R)
    evs = []
    for mu in range(p):
        Rm = [[(R[i][j] - (mu if i == j else 0)) % p for j in range(k)] for i in range(k)]
        if _rank_mod(Rm, p) < k:
            evs.append(mu)
    return evs


def _rank_mod(A: list[list[int]], p: int) -> int:
    m = [row[:] for row in A]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _nullspace_mod(A: list[list[int]], p: int) -> list[list[int]]:
    m = [row[:] for row in A]
    rows, cols = len(m), len(m[0]) if m else 0
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(cols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = (-m[i][fc]) % p
        basis.append(v)
    return basis


def _solve_mod(A: list[list[int]], b: list[int], p: int) -> list[int] | None:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [[A[i][j] % p for j in range(cols)] + [b[i] % p] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [0] * cols
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][cols]
    return x
