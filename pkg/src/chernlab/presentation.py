"""Presentations of the Chern-class ring by generators and coefficient relations.

Generators c_{i,k} (one per nontrivial irreducible i and 1 <= k <= d_i) with
relations equating the coefficients of the divisor product / exterior-power
polynomials against the tensor / lambda decompositions of the representation
ring, plus nilpotence truncations.  The truncation exponent is p^{n*v(G)}
with v(G) the p-part of the group exponent, which the finiteness theory
makes harmless; raising v cannot change the presented quotient.
"""

from __future__ import annotations

from math import comb

from .divisor import DivisorPoly, divisor_lambda, divisor_mul
from .errors import DegreeCeiling, ValidationError
from .fgl import FGL
from .field import GF, FiniteField
from .groebner import GroebnerBasis, QuotientRing, buchberger
from .poly import Poly, PolyRing, lex_order
from .repring import RepRing
from .omega import p_part_exponent


class Presentation:
    def __init__(self, rep, law, v, truncation, ambient_q, generators, relations, killed):
        self.rep = rep
        self.law = law
        self.v = v
        self.truncation = truncation
        self.qring = ambient_q
        self.generators = generators
        self.relations = relations
        self.killed = killed

    def dimension(self) -> int:
        return self.qring.dimension()

    def std_monomial_texts(self) -> list[str]:
        ring = self.qring.ring
        return [
            Poly(ring, {m: 1}).text(self.qring.order) for m in self.qring.std_monomials()
        ]

    def elimination_summary(self):
        """Split the reduced basis into variable substitutions and core
        relations; a single core variable with a single pure-power relation
        exhibits the quotient as F_q[y]/(y^m)."""
        subs = {}
        core_rels = []
        ring = self.qring.ring
        for g in self.qring.basis.polys:
            lt, _ = g.leading(self.qring.order)
            if sum(lt) == 1:
                var = ring.variables[lt.index(1)]
                subs[var] = g - ring.gen(var)  # var = -(tail)
            else:
                core_rels.append(g)
        core_vars = [v for v in ring.variables if v not in subs]
        iso = None
        if len(core_vars) == 1 and len(core_rels) == 1:
            rel = core_rels[0]
            lt, _ = rel.leading(self.qring.order)
            if len(rel.terms) == 1:
                m = max(lt)
                iso = (self.qring.field.q, core_vars[0], m)
        return subs, core_vars, core_rels, iso


def _product_coeffs(ambient_q: QuotientRing, divisors, mults) -> list[Poly]:
    """Coefficients of prod_k f_k(t)^{m_k}, descending in t, monic."""
    coeffs = [ambient_q.ring.one()]
    for div, m in zip(divisors, mults):
        for _ in range(m):
            f = div.poly_coeffs()
            new = [ambient_q.ring.zero()] * (len(coeffs) + len(f) - 1)
            for i, a in enumerate(coeffs):
                if not a:
                    continue
                for j, b in enumerate(f):
                    if b:
                        new[i + j] = ambient_q.reduce(new[i + j] + a * b)
            coeffs = new
    return coeffs


def _unit_times_variable(poly: Poly, qring: QuotientRing):
    """If poly = x * u with u a unit of the local quotient, return x's name."""
    ring = poly.ring
    for i, name in enumerate(ring.variables):
        if all(e[i] >= 1 for e in poly.terms):
            quotient = Poly(
                ring,
                {tuple(x - (1 if k == i else 0) for k, x in enumerate(e)): c
                 for e, c in poly.terms.items()},
            )
            if qring.reduce(quotient).constant_term():
                return name
    return None


def build_presentation(
    rep: RepRing,
    law: FGL,
    v: int | None = None,
    base_field: FiniteField | None = None,
) -> Presentation:
    """Generators, relations and the Groebner-reduced quotient of the
    Chern-class ring of a representation ring over a finite field."""
    p = law.p
    table = rep.table
    v_g = p_part_exponent(table.exponent, p)
    if v is None:
        v = v_g
    if v < v_g:
        raise ValidationError(f"v={v} is below the p-part {v_g} of the exponent")
    field = base_field or GF(p)
    if field.p != p:
        raise ValidationError("base field characteristic differs from the law")
    trunc = p ** (law.n * v_g)

    h = rep.h
    dims = rep.dims
    if max(d * d for d in dims) > 9 and max(dims) > 3:
        raise DegreeCeiling("irreducible dimension too large for the presentation")
    var_names = []
    var_of = {}
    for i in range(1, h):
        for k in range(1, dims[i] + 1):
            name = f"c{i+1}_{k}"
            var_of[(i, k)] = name
            var_names.append(name)
    ambient = PolyRing(field, var_names)
    order = lex_order(ambient.nvars)

    killed: set[str] = set()

    def make_quotient():
        gens = [ambient.gen(nm) ** trunc for nm in var_names if nm not in killed]
        gens += [ambient.gen(nm) for nm in killed]
        if not gens:
            return QuotientRing(GroebnerBasis(ambient, order, []))
        return QuotientRing(buchberger(gens, order))

    def tautological(q: QuotientRing):
        divs = [DivisorPoly(q, law, [q.ring.zero()])]  # trivial representation
        for i in range(1, h):
            coeffs = [q.gen(var_of[(i, k)]) for k in range(1, dims[i] + 1)]
            divs.append(DivisorPoly(q, law, coeffs))
        return divs

    def relations_for(q, divs, pairs, lambda_targets):
        rels = []
        for i, j in pairs:
            lhs = divisor_mul(divs[i], divs[j])
            rhs = _product_coeffs(q, divs, rep.mijk[i][j])
            for k in range(1, lhs.degree + 1):
                diff = q.reduce(lhs.coeffs[k - 1] - rhs[k])
                if diff:
                    rels.append(diff)
        for i, r in lambda_targets:
            lhs = divisor_lambda(divs[i], r)
            rhs = _product_coeffs(q, divs, rep.lam_irreducible(i, r).coeffs)
            for k in range(1, lhs.degree + 1):
                diff = q.reduce(lhs.coeffs[k - 1] - rhs[k])
                if diff:
                    rels.append(diff)
        return rels

    # phase A: degree-one relations; variables forced to zero are eliminated
    # before the heavy product relations are computed.
    line_idx = [i for i in range(1, h) if dims[i] == 1]
    ambient_q = make_quotient()
    divs = tautological(ambient_q)
    pairs_a = [(i, j) for i in line_idx for j in line_idx if i <= j]
    rels_a = relations_for(ambient_q, divs, pairs_a, [])
    changed = True
    while changed:
        changed = False
        for rel in rels_a:
            name = _unit_times_variable(rel, ambient_q)
            if name and name not in killed:
                killed.add(name)
                changed = True
        if changed:
            ambient_q = make_quotient()
            divs = tautological(ambient_q)
            rels_a = relations_for(ambient_q, divs, pairs_a, [])

    # phase B: every product and lambda relation
    pairs = [(i, j) for i in range(1, h) for j in range(i, h)]
    lambda_targets = [(i, r) for i in range(1, h) for r in range(2, dims[i] + 1)]
    for i, j in pairs:
        if dims[i] * dims[j] > 9:
            raise DegreeCeiling(f"product degree {dims[i]*dims[j]} exceeds ceiling")
    for i, r in lambda_targets:
        if comb(dims[i], r) > 9:
            raise DegreeCeiling("lambda degree exceeds ceiling")
    rels = relations_for(ambient_q, divs, pairs, lambda_targets)

    all_gens = [ambient.gen(nm) ** trunc for nm in var_names]
    all_gens += [ambient.gen(nm) for nm in killed]
    all_gens += rels
    if all_gens:
        final_q = QuotientRing(buchberger(all_gens, order))
    else:
        final_q = QuotientRing(GroebnerBasis(ambient, order, []))
    final_q.std_monomials()
    return Presentation(
        rep, law, v, trunc, final_q, var_names, rels, sorted(killed)
    )
