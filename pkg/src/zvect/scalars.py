"""Exact arithmetic in the cyclotomic closure of Q.

Two scalar types cover everything the rest of the package produces:

* :class:`RootOfUnity` -- an element of some finite cyclic group mu_N,
  stored as an exponent modulo its (primitive) order.  All structure
  constants (cocycle values, pivotal scalars, half-braiding entries of
  invertible objects, twists) are of this kind.
* :class:`Cyclotomic` -- an element of Q(zeta_N), stored as the canonical
  residue modulo the N-th cyclotomic polynomial with Fraction coefficients.
  Hom-space linear algebra and character sums live here.

No floating point is used anywhere; equality and zero tests are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def _gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial.

    Computed by exact division: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; remainder is known to vanish.
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    out = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[dd + k]
        if c % den[dd] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dd]
        out[k] = q
        for i, dc in enumerate(den):
            num[i + k] -= q * dc
    if any(num):
        raise ArithmeticError("nonzero remainder in cyclotomic division")
    return out


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[int, tuple[tuple[Fraction, ...], ...]]:
    """Degree of Phi_n and the residues of x^k mod Phi_n for k >= deg.

    Covers k up to max(2*deg - 2, n - 1), enough for products of reduced
    residues and for folding exponents modulo n.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    count = max(2 * deg - 1 - deg, n - deg)
    # monic: residue of x^deg is -(lower part); propagate upward
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(-c) for c in phi[:deg]]
    rows.append(tuple(cur))
    for _ in range(count - 1):
        nxt = [Fraction(0)] + cur[:-1]
        top = cur[-1]
        if top:
            lead = rows[0]
            nxt = [nxt[i] + top * lead[i] for i in range(deg)]
        cur = nxt
        rows.append(tuple(cur))
    return deg, tuple(rows)


def _reduce_coeffs(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient vector in powers of zeta_n modulo Phi_n."""
    deg, rows = _reduction_table(n)
    if len(coeffs) > 2 * deg:
        # fold exponents mod n first, then the tabulated range suffices
        folded = [Fraction(0)] * n
        for k, c in enumerate(coeffs):
            folded[k % n] += c
        coeffs = folded
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < deg:
            out[k] += c
        else:
            row = rows[k - deg]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


class RootOfUnity:
    """zeta_order^exponent, canonicalized so that the order is primitive.

    Values of different declared orders compare equal exactly when they agree
    after embedding into the lcm order; canonicalization makes that a tuple
    comparison.
    """

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int):
        if order < 1:
            raise ValueError("order must be positive")
        e = exponent % order
        g = _gcd(e, order)
        if e == 0:
            order, e = 1, 0
        elif g > 1:
            order, e = order // g, e // g
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exponent", e)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("RootOfUnity is immutable")

    @staticmethod
    def one() -> RootOfUnity:
        return RootOfUnity(1, 0)

    def is_one(self) -> bool:
        return self.order == 1

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        n = lcm(self.order, other.order)
        return RootOfUnity(n, self.exponent * (n // self.order) + other.exponent * (n // other.order))

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.order, self.exponent * k)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.order, -self.exponent)

    def conjugate(self) -> RootOfUnity:
        return self.inverse()

    def multiplicative_order(self) -> int:
        return self.order

    def embed_exponent(self, order: int) -> int:
        """Exponent of this value written in mu_order; order must be a multiple."""
        if order % self.order:
            raise ValueError(f"cannot embed mu_{self.order} value into mu_{order}")
        return self.exponent * (order // self.order)

    def __eq__(self, other) -> bool:
        if isinstance(other, RootOfUnity):
            return self.order == other.order and self.exponent == other.exponent
        if isinstance(other, int):
            if other == 1:
                return self.is_one()
            if other == -1:
                return self.order == 2
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.exponent))

    def __repr__(self) -> str:
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        return f"zeta{self.order}^{self.exponent}" if self.exponent != 1 else f"zeta{self.order}"

    def to_json(self) -> dict:
        return {"order": self.order, "exponent": self.exponent}

    @staticmethod
    def from_json(obj) -> RootOfUnity:
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return RootOfUnity(int(obj[0]), int(obj[1]))
        return RootOfUnity(int(obj["order"]), int(obj["exponent"]))


def rou_combine(a: RootOfUnity, b: RootOfUnity, power: int = 1) -> RootOfUnity:
    """a * b**power, computed in mu_lcm(order(a), order(b))."""
    return a * (b**power)


class Cyclotomic:
    """Canonical residue in Q(zeta_conductor) = Q[x]/Phi_conductor(x)."""

    __slots__ = ("conductor", "coeffs")
    __hash__ = None  # canonical form is per-conductor; use RootOfUnity for keys

    def __init__(self, conductor: int, coeffs):
        deg = phi_degree(conductor)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(_reduce_coeffs(conductor, cs))
        else:
            cs = cs + [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(conductor: int = 1) -> Cyclotomic:
        return Cyclotomic(conductor, [])

    @staticmethod
    def one(conductor: int = 1) -> Cyclotomic:
        return Cyclotomic(conductor, [Fraction(1)])

    @staticmethod
    def from_rational(q, conductor: int = 1) -> Cyclotomic:
        return Cyclotomic(conductor, [Fraction(q)])

    @staticmethod
    def root(conductor: int, exponent: int = 1) -> Cyclotomic:
        """zeta_conductor^exponent as a canonical residue."""
        e = exponent % conductor
        v = [Fraction(0)] * (e + 1)
        v[e] = Fraction(1)
        return Cyclotomic(conductor, v)

    @staticmethod
    def from_root_of_unity(r: RootOfUnity, conductor: int | None = None) -> Cyclotomic:
        n = r.order if conductor is None else conductor
        return Cyclotomic(n, []) + Cyclotomic.root(n, r.embed_exponent(n))

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def embed(self, conductor: int) -> Cyclotomic:
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("embedding target must be a multiple of the conductor")
        step = conductor // self.conductor
        v = [Fraction(0)] * conductor
        for k, c in enumerate(self.coeffs):
            if c:
                v[(k * step) % conductor] += c
        return Cyclotomic(conductor, v)

    def restrict(self, conductor: int) -> Cyclotomic:
        """Inverse of :meth:`embed` on its image; raises if not in the subfield."""
        if conductor == self.conductor:
            return self
        if self.conductor % conductor:
            raise ValueError("restriction target must divide the conductor")
        deg_small = phi_degree(conductor)
        basis = [Cyclotomic.root(conductor, j).embed(self.conductor) for j in range(deg_small)]
        sol = _solve_rational([list(b.coeffs) for b in basis], list(self.coeffs))
        if sol is None:
            raise ValueError("value does not lie in the requested subfield")
        return Cyclotomic(conductor, sol)

    @staticmethod
    def _common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        n = lcm(a.conductor, b.conductor)
        return a.embed(n), b.embed(n)

    @staticmethod
    def _coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, RootOfUnity):
            return Cyclotomic.from_root_of_unity(x)
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> Cyclotomic:
        a, b = Cyclotomic._common(self, Cyclotomic._coerce(other))
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other) -> Cyclotomic:
        return self + (-Cyclotomic._coerce(other))

    def __rsub__(self, other) -> Cyclotomic:
        return Cyclotomic._coerce(other) - self

    def __mul__(self, other) -> Cyclotomic:
        a, b = Cyclotomic._common(self, Cyclotomic._coerce(other))
        deg = len(a.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic(a.conductor, prod)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = _leading(r0)
        inv = [x / c for x in s0]
        return Cyclotomic(self.conductor, inv)

    def __truediv__(self, other) -> Cyclotomic:
        return self * Cyclotomic._coerce(other).inverse()

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation, zeta -> zeta^(N-1)."""
        n = self.conductor
        v = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                v[(-k) % n] += c
        return Cyclotomic(n, v)

    def __eq__(self, other) -> bool:
        try:
            a, b = Cyclotomic._common(self, Cyclotomic._coerce(other))
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.conductor}^{k}")
        return " + ".join(terms) if terms else "0"

    def as_root_of_unity(self) -> RootOfUnity | None:
        """Recognize the value as a root of unity; None if it is not one.

        The roots of unity inside Q(zeta_N) are the +-zeta_N^e (all of
        mu_N for even N, mu_2N for odd N)."""
        n = self.conductor
        minus_one = Cyclotomic.from_rational(-1)
        for e in range(n):
            z = Cyclotomic.root(n, e)
            if self == z:
                return RootOfUnity(n, e)
            if self == minus_one * z:
                return RootOfUnity(2, 1) * RootOfUnity(n, e)
        return None

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj) -> Cyclotomic:
        return Cyclotomic(int(obj["conductor"]), [Fraction(n, d) for n, d in obj["coeffs"]])


def cyclotomic_reduce(conductor: int, coeffs) -> Cyclotomic:
    """Canonical residue of a raw polynomial in zeta_conductor (any length)."""
    return Cyclotomic(conductor, [Fraction(c) for c in coeffs])


@lru_cache(maxsize=None)
def phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# -- small exact polynomial / linear helpers -------------------------------

def _leading(p: list[Fraction]) -> Fraction:
    for c in reversed(p):
        if c:
            return c
    raise ZeroDivisionError("zero polynomial")


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i in range(len(b)):
            a[i + k] -= c * b[i]
        a = _poly_trim(a)
        if len(a) == 1 and not a[0]:
            break
    return _poly_trim(q), a


def _solve_rational(cols: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum x_j * cols[j] = target over Q; None if inconsistent."""
    m = len(target)
    k = len(cols)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][k]:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][k]
    return sol
