"""Finite models of generalized character data.

Omega(G): conjugacy classes of n-tuples of commuting p-power-order elements
(images of the standard topological generators).  Omega'(G) quotients by
pointwise conjugacy; Omega''(G) is the set of Z-equivariant maps from the
dual lattice to p-power conjugacy classes; OmegaCh(G) is enumerated by
constraint search over lattice divisors.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import (
    NoMatchingClass,
    NonIntegralMultiplicity,
    ResourceLimit,
    ValidationError,
)
from .groups import GroupModel
from .lattice import LatticeDivisor, Theta
from .repring import CharacterTable, RepRing, RestrictionResult

OMEGA_GROUP_CEILING = 10000


def p_part_exponent(order_like: int, p: int) -> int:
    v = 0
    while order_like % p == 0:
        order_like //= p
        v += 1
    return v


def group_p_valuation(model: GroupModel, p: int) -> int:
    return p_part_exponent(model.exponent(), p)


# -- Hom enumeration -----------------------------------------------------------

def commuting_tuples(model: GroupModel, p: int, n: int) -> list[tuple[int, ...]]:
    if model.size > OMEGA_GROUP_CEILING:
        raise ResourceLimit(f"group of order {model.size} exceeds the ceiling")
    pelems = model.p_power_elements(p)
    table = model.table
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]):
        if len(prefix) == n:
            out.append(prefix)
            return
        for x in pelems:
            if all(table[x][y] == table[y][x] for y in prefix):
                extend(prefix + (x,))

    extend(())
    return out


def _conj_tables(model: GroupModel) -> list[list[int]]:
    return [
        [model.conj(g, x) for x in range(model.size)] for g in range(model.size)
    ]


class OmegaSet:
    """Conjugacy-orbit representatives of commuting tuples."""

    def __init__(self, model: GroupModel, p: int, n: int, reps: list[tuple[int, ...]]):
        self.model = model
        self.p = p
        self.n = n
        self.reps = reps

    def __len__(self):
        return len(self.reps)


def enumerate_omega(model: GroupModel, p: int, n: int) -> OmegaSet:
    """Omega(G): canonical (lexicographically least) orbit representatives."""
    tuples = commuting_tuples(model, p, n)
    ctabs = _conj_tables(model)
    seen: set[tuple[int, ...]] = set()
    reps: list[tuple[int, ...]] = []
    for t in tuples:
        if t in seen:
            continue
        orbit = {tuple(ct[x] for x in t) for ct in ctabs}
        seen.update(orbit)
        reps.append(min(orbit))
    reps.sort()
    return OmegaSet(model, p, n, reps)


def hom_image(model: GroupModel, hom: tuple[int, ...], a: tuple[int, ...]) -> int:
    """u(a) = prod_i u_i^{a_i} (images commute)."""
    g = model.identity
    for ui, ai in zip(hom, a):
        g = model.table[g][model.power(ui, ai)]
    return g


def pointwise_signature(
    model: GroupModel, hom: tuple[int, ...], theta_star: list[tuple[int, ...]]
) -> tuple[int, ...]:
    return tuple(model.class_of(hom_image(model, hom, a)) for a in theta_star)


def theta_star_points(p: int, w: int, n: int) -> list[tuple[int, ...]]:
    return Theta(p, w, n).points()


def enumerate_omega_prime(model: GroupModel, p: int, n: int, w: int | None = None):
    """Omega'(G) as distinct pointwise-class signatures, plus the projection
    from Omega(G) as an index map."""
    if w is None:
        w = group_p_valuation(model, p)
    om = enumerate_omega(model, p, n)
    pts = theta_star_points(p, w, n)
    sig_index: dict[tuple[int, ...], int] = {}
    projection = []
    sigs = []
    for rep in om.reps:
        sig = pointwise_signature(model, rep, pts)
        if sig not in sig_index:
            sig_index[sig] = len(sigs)
            sigs.append(sig)
        projection.append(sig_index[sig])
    return om, sigs, projection


def enumerate_omega_dprime(model: GroupModel, p: int, n: int, w: int | None = None):
    """Omega''(G): Z-equivariant maps Theta(w)* -> p-power classes.

    Returned as tuples of class indices over the sorted point list; DFS with
    propagation f(k a) = f(a)^k.
    """
    if w is None:
        w = group_p_valuation(model, p)
    pts = theta_star_points(p, w, n)
    pt_index = {a: i for i, a in enumerate(pts)}
    theta = Theta(p, w, n)
    classes = model.p_power_class_indices(p)
    class_orders = {c: model.element_order(model.conjugacy_classes()[c][0]) for c in classes}
    modulus = p ** w

    def point_order(a):
        o = 1
        while any(theta.scale(o, a)):
            o *= p
        return o

    orders = [point_order(a) for a in pts]
    # process points in decreasing order so multiples propagate
    seq = sorted(range(len(pts)), key=lambda i: -orders[i])
    results: list[tuple[int, ...]] = []

    def assign(state: dict[int, int], i: int, cls: int) -> dict[int, int] | None:
        new = dict(state)
        a = pts[i]
        for k in range(modulus):
            j = pt_index[theta.scale(k, a)]
            target = model.class_power(cls, k)
            if j in new and new[j] != target:
                return None
            new[j] = target
        return new

    def dfs(state: dict[int, int], pos: int):
        while pos < len(seq) and seq[pos] in state:
            pos += 1
        if pos == len(seq):
            results.append(tuple(state[i] for i in range(len(pts))))
            return
        i = seq[pos]
        for cls in classes:
            if orders[i] % class_orders[cls]:
                continue
            new = assign(state, i, cls)
            if new is not None:
                dfs(new, pos + 1)

    dfs({}, 0)
    results.sort()
    return pts, results


def count_omega_dprime(model: GroupModel, p: int, n: int, w: int | None = None) -> int:
    """|Omega''(G)| without enumeration when the group has exponent p."""
    if w is None:
        w = group_p_valuation(model, p)
    if w == 1:
        nlines = (p ** n - 1) // (p - 1)
        nclasses = len(model.p_power_class_indices(p))
        return nclasses ** nlines
    return len(enumerate_omega_dprime(model, p, n, w)[1])


def omega_to_dprime(model: GroupModel, hom, p: int, n: int, w: int | None = None):
    if w is None:
        w = group_p_valuation(model, p)
    return pointwise_signature(model, hom, theta_star_points(p, w, n))


# -- OmegaCh: Lambda-semiring homomorphisms into the lattice model --------------

class OmegaChElem:
    """One divisor of dimension d_i per irreducible; hashable and canonical."""

    __slots__ = ("divisors",)

    def __init__(self, divisors):
        self.divisors = tuple(divisors)

    def __eq__(self, other):
        return isinstance(other, OmegaChElem) and self.divisors == other.divisors

    def __hash__(self):
        return hash(self.divisors)

    def __lt__(self, other):
        return [d.pairs for d in self.divisors] < [d.pairs for d in other.divisors]

    def text(self) -> str:
        return "; ".join(d.text() for d in self.divisors)

    def __repr__(self):
        return f"<OmegaCh {self.text()}>"


def kappa(
    table: CharacterTable,
    model: GroupModel,
    hom: tuple[int, ...],
    p: int,
    n: int,
    v: int | None = None,
) -> OmegaChElem:
    """Decompose each restricted character by exact finite Fourier inversion.

    mult(x) = p^{-vn} sum_a chi(u(a)) zeta^{-<a,x>}; every multiplicity must
    be a nonnegative integer.
    """
    if v is None:
        v = p_part_exponent(table.exponent, p)
    modulus = p ** v
    for ui in hom:
        o = model.element_order(ui)
        if modulus % o:
            raise ValidationError(f"p^{v} does not annihilate an image of order {o}")
    theta = Theta(p, v, n)
    pts = theta.points()
    cy = table.cyclo
    e = table.exponent
    if e % modulus:
        raise ValidationError("group exponent not divisible by p^v")
    step = e // modulus
    class_at: dict[tuple[int, ...], int] = {
        a: model.class_of(hom_image(model, hom, a)) for a in pts
    }
    divisors = []
    total = modulus ** n
    for i in range(len(table.rows)):
        counts: dict[tuple[int, ...], int] = {}
        row = table.rows[i]
        for x in pts:
            acc = cy.zero
            for a in pts:
                pairing = sum(ai * xi for ai, xi in zip(a, x)) % modulus
                zeta = cy.root_power((-pairing * step) % e)
                acc = cy.add(acc, cy.mul(row[class_at[a]], zeta))
            try:
                mult = cy.rational_value(cy.divide_exact(acc, total))
            except Exception as exc:
                raise NonIntegralMultiplicity(str(exc)) from exc
            if mult < 0:
                raise NonIntegralMultiplicity(f"negative multiplicity {mult}")
            if mult:
                counts[x] = mult
        divisors.append(LatticeDivisor.from_counts(theta, counts))
    return OmegaChElem(divisors)


def _linear_rules(ring: RepRing, restriction: RestrictionResult):
    """Forced assignments D_j = sum a_i D_i from Sylow-kernel vectors with a
    single +1 coefficient (after normalization) and nonpositive others."""
    rules = []
    for vec in restriction.kernel_basis:
        coeffs = list(vec.coeffs)
        for sign in (1, -1):
            cs = [sign * c for c in coeffs]
            plus = [i for i, c in enumerate(cs) if c > 0]
            if len(plus) == 1 and cs[plus[0]] == 1:
                j = plus[0]
                rhs = {i: -c for i, c in enumerate(cs) if c < 0}
                rules.append((j, rhs))
                break
    return rules


def enumerate_omega_ch(
    ring: RepRing,
    p: int,
    n: int,
    v: int | None = None,
    sylow_restriction: RestrictionResult | None = None,
) -> list[OmegaChElem]:
    """All Lambda-semiring homomorphisms into N[Theta(v)], by depth-first
    assignment in increasing dimension order with constraint propagation.

    A relation with a single unassigned divisor forces its value (multiset
    subtraction and exact division); every relation is re-checked once all
    its participants are assigned.
    """
    table = ring.table
    if v is None:
        v = p_part_exponent(table.exponent, p)
    theta = Theta(p, v, n)
    points = theta.points()
    h = ring.h
    dims = ring.dims
    order = sorted(range(1, h), key=lambda i: (dims[i], i))

    product_relations = []
    for i in range(1, h):
        for j in range(i, h):
            product_relations.append((i, j, ring.mijk[i][j]))
    lambda_relations = []
    for i in range(1, h):
        for r in range(2, dims[i] + 1):
            lambda_relations.append((i, r, ring.lam_irreducible(i, r).coeffs))
    rules = _linear_rules(ring, sylow_restriction) if sylow_restriction else []

    zero_div = LatticeDivisor(theta, [theta.zero()])

    def divisor_of_vec(assign, coeffs):
        """sum of c_k * D_k for an assigned nonnegative vector, or None."""
        counts: dict = {}
        for k, c in enumerate(coeffs):
            if not c:
                continue
            if k not in assign:
                return None
            for pt, m in assign[k].pairs:
                counts[pt] = counts.get(pt, 0) + c * m
        return LatticeDivisor.from_counts(theta, counts)

    def check_or_solve(assign, lhs_div, coeffs):
        """Compare lhs with sum c_k D_k; if exactly one D_k missing, solve it.

        Returns (ok, forced) where forced is None or (k, divisor)."""
        missing = [k for k, c in enumerate(coeffs) if c and k not in assign]
        if not missing:
            rhs = divisor_of_vec(assign, coeffs)
            return (rhs == lhs_div), None
        if len(missing) > 1:
            return True, None
        k = missing[0]
        m = coeffs[k]
        counts = lhs_div.counts()
        for k2, c in enumerate(coeffs):
            if not c or k2 == k:
                continue
            for pt, mm in assign[k2].pairs:
                counts[pt] = counts.get(pt, 0) - c * mm
                if counts[pt] < 0:
                    return False, None
        solved: dict = {}
        for pt, c in counts.items():
            if c % m:
                return False, None
            if c // m:
                solved[pt] = c // m
        div = LatticeDivisor.from_counts(theta, solved)
        if div.dim() != dims[k]:
            return False, None
        return True, (k, div)

    def propagate(assign):
        changed = True
        while changed:
            changed = False
            for i, j, coeffs in product_relations:
                if i in assign and j in assign:
                    lhs = assign[i] * assign[j]
                    ok, forced = check_or_solve(assign, lhs, coeffs)
                    if not ok:
                        return None
                    if forced and forced[0] not in assign:
                        assign[forced[0]] = forced[1]
                        changed = True
            for i, r, coeffs in lambda_relations:
                if i in assign:
                    lhs = assign[i].lam(r)
                    ok, forced = check_or_solve(assign, lhs, coeffs)
                    if not ok:
                        return None
                    if forced and forced[0] not in assign:
                        assign[forced[0]] = forced[1]
                        changed = True
            for j, rhs in rules:
                if j not in assign and all(k in assign for k in rhs):
                    div = divisor_of_vec(assign, [rhs.get(k, 0) for k in range(h)])
                    if div.dim() != dims[j]:
                        return None
                    assign[j] = div
                    changed = True
        return assign

    results: list[OmegaChElem] = []

    def full_check(assign) -> bool:
        for i, j, coeffs in product_relations:
            if (assign[i] * assign[j]) != divisor_of_vec(assign, coeffs):
                return False
        for i, r, coeffs in lambda_relations:
            if assign[i].lam(r) != divisor_of_vec(assign, coeffs):
                return False
        return True

    def dfs(assign):
        assign = propagate(dict(assign))
        if assign is None:
            return
        todo = [i for i in order if i not in assign]
        if not todo:
            if full_check(assign):
                results.append(OmegaChElem([assign[i] for i in range(h)]))
            return
        k = todo[0]
        for combo in combinations_with_replacement(points, dims[k]):
            child = dict(assign)
            child[k] = LatticeDivisor(theta, combo)
            dfs(child)

    dfs({0: zero_div})
    uniq = sorted(set(results))
    return uniq


def xi_class_map(
    f: OmegaChElem, table: CharacterTable, model: GroupModel, p: int, n: int
) -> tuple[int, ...]:
    """The class-valued map a -> [h] with chi_V(h) = sum_x mult(x) zeta^{<a,x>}.

    Uniqueness of h and Z-equivariance of the result are asserted.
    """
    theta = f.divisors[0].theta
    v = theta.v
    modulus = theta.modulus
    pts = theta.points()
    cy = table.cyclo
    e = table.exponent
    step = e // modulus
    pclasses = model.p_power_class_indices(p)
    out = []
    for a in pts:
        target = []
        for i in range(len(table.rows)):
            acc = cy.zero
            for x, m in f.divisors[i].pairs:
                pairing = sum(ai * xi for ai, xi in zip(a, x)) % modulus
                acc = cy.add(acc, cy.scale(m, cy.root_power(pairing * step % e)))
            target.append(acc)
        matches = [
            c for c in pclasses
            if all(table.rows[i][c] == target[i] for i in range(len(table.rows)))
        ]
        if len(matches) != 1:
            raise NoMatchingClass(f"{len(matches)} classes match at {a}")
        out.append(matches[0])
    result = tuple(out)
    pt_index = {a: i for i, a in enumerate(pts)}
    for i, a in enumerate(pts):
        for k in range(modulus):
            j = pt_index[theta.scale(k, a)]
            if result[j] != model.class_power(result[i], k):
                raise NoMatchingClass("xi image is not Z-equivariant")
    return result
