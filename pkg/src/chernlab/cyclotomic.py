"""Exact arithmetic in Z[zeta_e] = Z[x]/Phi_e(x).

Elements are int tuples of length phi(e) in the power basis 1, zeta, ...,
zeta^{phi(e)-1}.  Conjugation is zeta -> zeta^{-1}; rational elements are
recognized exactly (unique coordinates in the power basis).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InexactDivision, ValidationError


def _poly_divmod_z(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (den monic), low degree first."""
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    d = len(den) - 1
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        lead = num[-1]
        shift = len(num) - 1 - d
        q[shift] = lead
        for i, c in enumerate(den):
            num[shift + i] -= lead * c
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Phi_e as an integer coefficient tuple, low degree first."""
    if e == 1:
        return (-1, 1)
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    den = [1]
    for d in range(1, e):
        if e % d == 0:
            phi_d = list(cyclotomic_polynomial(d))
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    q, r = _poly_divmod_z(num, den)
    if r:
        raise ValidationError("cyclotomic polynomial division left a remainder")
    while q and q[-1] == 0:
        q.pop()
    return tuple(q)


class CyclotomicRing:
    """Z[zeta_e]; shared per conductor via Cyclo(e)."""

    def __init__(self, e: int):
        self.e = e
        self.phi_poly = cyclotomic_polynomial(e)
        self.degree = len(self.phi_poly) - 1
        # reduction table: zeta^k for 0 <= k < e as basis vectors
        self._root_powers: list[tuple[int, ...]] = []
        vec = [0] * self.degree
        vec[0] = 1
        for k in range(e):
            self._root_powers.append(tuple(vec))
            # multiply by zeta
            carry = vec[-1]
            vec = [0] + vec[:-1]
            if carry:
                for i in range(self.degree):
                    vec[i] -= carry * self.phi_poly[i]
        self.zero = (0,) * self.degree
        self.one = self._root_powers[0]

    def root_power(self, k: int) -> tuple[int, ...]:
        return self._root_powers[k % self.e]

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n,) + (0,) * (self.degree - 1)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, n: int, a):
        return tuple(n * x for x in a)

    def mul(self, a, b):
        deg = self.degree
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for k in range(deg, len(conv)):
            c = conv[k]
            if c:
                red = self._reduce_power(k)
                for i in range(deg):
                    out[i] += c * red[i]
        return tuple(out)

    @lru_cache(maxsize=None)
    def _reduce_power(self, k: int) -> tuple[int, ...]:
        """x^k mod Phi_e for k >= degree."""
        if k < self.degree:
            vec = [0] * self.degree
            vec[k] = 1
            return tuple(vec)
        prev = self._reduce_power(k - 1)
        carry = prev[-1]
        vec = [0] + list(prev[:-1])
        if carry:
            for i in range(self.degree):
                vec[i] -= carry * self.phi_poly[i]
        return tuple(vec)

    def conjugate(self, a):
        """Complex conjugation zeta -> zeta^{-1}."""
        out = self.zero
        for k, c in enumerate(a):
            if c:
                out = self.add(out, self.scale(c, self.root_power((-k) % self.e)))
        return out

    def is_rational(self, a) -> bool:
        return all(x == 0 for x in a[1:])

    def rational_value(self, a) -> int:
        if not self.is_rational(a):
            raise InexactDivision(f"{a} is not a rational integer")
        return a[0]

    def divide_exact(self, a, n: int):
        out = []
        for x in a:
            q, r = divmod(x, n)
            if r:
                raise InexactDivision(f"{x} not divisible by {n}")
            out.append(q)
        return tuple(out)

    def embed_from(self, other: "CyclotomicRing", a):
        """Image of a in this ring; requires other.e | self.e."""
        if self.e % other.e:
            raise ValidationError(f"no embedding Q(zeta_{other.e}) -> Q(zeta_{self.e})")
        step = self.e // other.e
        out = self.zero
        for k, c in enumerate(a):
            if c:
                out = self.add(out, self.scale(c, self.root_power(k * step)))
        return out

    def text(self, a) -> str:
        if self.is_rational(a):
            return str(a[0])
        parts = []
        for k, c in enumerate(a):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                parts.append(z if c == 1 else ("-" + z if c == -1 else f"{c}*{z}"))
        return "+".join(parts).replace("+-", "-") if parts else "0"

    def __repr__(self):
        return f"CyclotomicRing(e={self.e})"


@lru_cache(maxsize=None)
def Cyclo(e: int) -> CyclotomicRing:
    return CyclotomicRing(e)
