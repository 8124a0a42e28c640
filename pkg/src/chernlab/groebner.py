"""Buchberger Groebner bases, normal forms, quotient rings and socles."""

from __future__ import annotations

import os

from .errors import (
    IncompatibleRing,
    InfiniteDimensional,
    NotFiniteDimensional,
    NotLocal,
    ResourceLimit,
)
from .poly import MonomialOrder, Poly, PolyRing


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _pair_ceiling() -> int:
    return int(os.environ.get("CHERNLAB_CEILING", "200000"))


class GroebnerBasis:
    """A reduced Groebner basis together with its order.

    Basis members are monic and sorted by descending leading term, so the
    reduced basis of an ideal is a canonical object.
    """

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys: list[Poly]):
        self.ring = ring
        self.order = order
        self.polys = polys
        self.leading_terms = [p.leading(order)[0] for p in polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return f"GroebnerBasis({[p.text(self.order) for p in self.polys]})"


def normal_form(p: Poly, basis: GroebnerBasis) -> Poly:
    """Full reduction: no monomial of the result is divisible by a leading term."""
    if p.ring != basis.ring:
        raise IncompatibleRing("polynomial not in the basis ring")
    order = basis.order
    fld = p.ring.field
    remainder: dict = {}
    work = dict(p.terms)
    lts = basis.leading_terms
    polys = basis.polys
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        for lt, g in zip(lts, polys):
            if _divides(lt, e):
                shift = tuple(x - y for x, y in zip(e, lt))
                # subtract c * x^shift * g; g is monic
                for ge, gc in g.terms.items():
                    if ge == lt:
                        continue
                    me = tuple(x + y for x, y in zip(ge, shift))
                    s = fld.sub(work.get(me, 0), fld.mul(c, gc))
                    if s:
                        work[me] = s
                    else:
                        work.pop(me, None)
                break
        else:
            remainder[e] = c
    return Poly(p.ring, remainder)


def _spoly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = _lcm(ef, eg)
    fld = f.ring.field
    mf = f.ring.monomial(tuple(l - a for l, a in zip(lcm, ef)), fld.inv(cf))
    mg = f.ring.monomial(tuple(l - a for l, a in zip(lcm, eg)), fld.inv(cg))
    return mf * f - mg * g


def buchberger(generators: list[Poly], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis; normal pair strategy, deterministic output.

    Pairs whose leading terms are coprime are skipped (product criterion).
    Raises ResourceLimit when the processed-pair count exceeds the
    CHERNLAB_CEILING environment override (default 200000).
    """
    gens = [g for g in generators if g]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise IncompatibleRing("generators in mixed rings")
    basis: list[Poly] = []
    for g in gens:
        basis.append(g.monic(order))
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(ij):
        i, j = ij
        lcm = _lcm(basis[i].leading(order)[0], basis[j].leading(order)[0])
        return (sum(lcm), order.key(lcm), i, j)

    ceiling = _pair_ceiling()
    processed = 0
    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        processed += 1
        if processed > ceiling:
            raise ResourceLimit(f"Buchberger pair ceiling {ceiling} exceeded")
        i, j = ij
        ei = basis[i].leading(order)[0]
        ej = basis[j].leading(order)[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms
        s = _spoly(basis[i], basis[j], order)
        r = normal_form(s, GroebnerBasis(ring, order, basis))
        if r:
            r = r.monic(order)
            k = len(basis)
            basis.append(r)
            pairs.update((m, k) for m in range(k))
    result = _interreduce(ring, order, basis)
    if os.environ.get("CHERNLAB_VERIFY_GB"):
        assert_groebner(result)
    return result


def _interreduce(ring: PolyRing, order: MonomialOrder, basis: list[Poly]) -> GroebnerBasis:
    # minimalize: drop members whose leading term another member divides
    lts = [g.leading(order)[0] for g in basis]
    keep = []
    for i, lt in enumerate(lts):
        if any(
            j != i and _divides(lts[j], lt) and (lts[j] != lt or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(basis[i])
    # reduce tails against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        if others:
            g = normal_form(g, GroebnerBasis(ring, order, others))
        reduced.append(g.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return GroebnerBasis(ring, order, reduced)


def assert_groebner(basis: GroebnerBasis) -> None:
    """Check that every S-polynomial of the basis reduces to zero."""
    for i in range(len(basis.polys)):
        for j in range(i + 1, len(basis.polys)):
            s = _spoly(basis.polys[i], basis.polys[j], basis.order)
            if normal_form(s, basis):
                raise AssertionError(f"S-polynomial of members {i},{j} does not reduce to 0")


def standard_monomials(basis: GroebnerBasis, cap: int | None = None) -> list[tuple[int, ...]]:
    """Monomials not divisible by any leading term, sorted ascending.

    When some variable has no pure-power leading-term bound the complement is
    infinite: raises InfiniteDimensional unless ``cap`` bounds every exponent.
    """
    ring = basis.ring
    n = ring.nvars
    bounds = []
    for i in range(n):
        bound = None
        for lt in basis.leading_terms:
            if all(e == 0 for k, e in enumerate(lt) if k != i) and lt[i] > 0:
                bound = lt[i] if bound is None else min(bound, lt[i])
        if bound is None:
            if cap is None:
                raise InfiniteDimensional(
                    f"no pure power of {ring.variables[i]!r} among leading terms"
                )
            bound = cap
        elif cap is not None:
            bound = min(bound, cap)
        bounds.append(bound)
    out = []
    stack = [(0, ())]
    while stack:
        i, prefix = stack.pop()
        if i == n:
            if not any(_divides(lt, prefix) for lt in basis.leading_terms):
                out.append(prefix)
            continue
        for e in range(bounds[i]):
            stack.append((i + 1, prefix + (e,)))
    out.sort(key=basis.order.key)
    return out


class QuotientRing:
    """F_q[x..]/I presented by a reduced Groebner basis.

    Elements are normal-form Poly values of the ambient ring; ``mul``/``add``
    keep results in normal form.  The standard-monomial basis is cached when
    the quotient is finite dimensional.
    """

    def __init__(self, basis: GroebnerBasis):
        self.basis = basis
        self.ring = basis.ring
        self.order = basis.order
        self._std: list[tuple[int, ...]] | None = None

    @property
    def field(self):
        return self.ring.field

    def reduce(self, p: Poly) -> Poly:
        return normal_form(p, self.basis)

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def pow(self, a: Poly, n: int) -> Poly:
        result = self.ring.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            if n > 1:
                base = self.mul(base, base)
            n >>= 1
        return result

    def gen(self, name: str) -> Poly:
        return self.reduce(self.ring.gen(name))

    def std_monomials(self) -> list[tuple[int, ...]]:
        if self._std is None:
            self._std = standard_monomials(self.basis)
        return self._std

    def dimension(self) -> int:
        return len(self.std_monomials())

    def coordinates(self, p: Poly) -> dict[tuple[int, ...], int]:
        p = self.reduce(p)
        return dict(p.terms)

    def is_unit(self, p: Poly) -> bool:
        """Valid for local quotients: unit iff the constant term is nonzero."""
        return self.reduce(p).constant_term() != 0

    def invert(self, p: Poly) -> Poly:
        """Inverse of a unit c + n with c nonzero and n nilpotent.

        Uses the geometric series (c+n)^-1 = c^-1 sum_k (-n/c)^k, which
        terminates in a local Artinian quotient.
        """
        p = self.reduce(p)
        c = p.constant_term()
        if not c:
            raise NotFiniteDimensional("inverse of a non-unit")
        fld = self.field
        cinv = fld.inv(c)
        n = p - self.ring.const(c)
        result = self.ring.zero()
        term = self.ring.const(cinv)
        steps = 0
        while term:
            result = result + term
            term = self.mul(term, n).scale(fld.neg(cinv))
            steps += 1
            if steps > 4096:
                raise ResourceLimit("unit inversion did not terminate")
        if self.mul(result, p) != self.ring.one():
            raise NotFiniteDimensional("element is not invertible in this quotient")
        return result

    # -- local-ring analysis -------------------------------------------------
    def verify_local(self) -> None:
        """Check the span of non-constant standard monomials is the unique
        maximal ideal: each variable is nilpotent and products with basis
        monomials have no constant term."""
        std = self.std_monomials()
        n = self.ring.nvars
        dim = len(std)
        for i in range(n):
            x = self.ring.gen(self.ring.variables[i])
            power = self.reduce(x)
            steps = 0
            while power:
                power = self.mul(power, x)
                steps += 1
                if steps > dim + 1:
                    raise NotLocal(f"variable {self.ring.variables[i]!r} is not nilpotent")
            for m in std:
                prod = self.mul(self.ring.monomial(m), x)
                if prod.constant_term():
                    raise NotLocal("maximal-ideal span is not an ideal")

    def socle(self) -> list[Poly]:
        """Basis of the annihilator of the maximal ideal, by exact linear algebra.

        Requires a finite-dimensional local quotient; the returned normal
        forms are sorted and normalized.  The ring is Gorenstein iff the
        result has length one.
        """
        try:
            std = self.std_monomials()
        except InfiniteDimensional as exc:
            raise NotFiniteDimensional(str(exc)) from exc
        self.verify_local()
        fld = self.field
        dim = len(std)
        index = {m: k for k, m in enumerate(std)}
        rows: list[list[int]] = []
        for vname in self.ring.variables:
            x = self.ring.gen(vname)
            cols = []
            for m in std:
                prod = self.mul(self.ring.monomial(m), x)
                col = [0] * dim
                for e, c in prod.terms.items():
                    col[index[e]] = c
                cols.append(col)
            for r in range(dim):
                rows.append([cols[c][r] for c in range(dim)])
        kernel = _field_kernel(rows, dim, fld)
        out = []
        for vec in kernel:
            terms = {std[k]: c for k, c in enumerate(vec) if c}
            out.append(Poly(self.ring, terms).monic(self.order))
        out.sort(key=lambda p: self.order.key(p.leading(self.order)[0]))
        return out

    def is_gorenstein(self) -> bool:
        return len(self.socle()) == 1

    def __repr__(self):
        return f"QuotientRing({self.ring!r}, {len(self.basis)} relations)"


def _field_kernel(rows: list[list[int]], ncols: int, fld) -> list[list[int]]:
    """Kernel basis of the matrix over the finite field (row-reduced echelon)."""
    mat = [row[:] for row in rows if any(row)]
    pivots: dict[int, list[int]] = {}
    for row in mat:
        for col, piv in pivots.items():
            c = row[col]
            if c:
                for k in range(ncols):
                    row[k] = fld.sub(row[k], fld.mul(c, piv[k]))
        lead = next((k for k in range(ncols) if row[k]), None)
        if lead is None:
            continue
        inv = fld.inv(row[lead])
        row = [fld.mul(inv, x) for x in row]
        for piv in pivots.values():
            c = piv[lead]
            if c:
                for k in range(ncols):
                    piv[k] = fld.sub(piv[k], fld.mul(c, row[k]))
        pivots[lead] = row
    free = [k for k in range(ncols) if k not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for col, piv in pivots.items():
            vec[col] = fld.neg(piv[f])
        basis.append(vec)
    return basis
