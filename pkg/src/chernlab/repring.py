"""Representation rings of finite groups from exact character tables.

Tables store cyclotomic-valued rows over Q(zeta_e) with e the group exponent,
class data (size, element order, power maps) and usually an explicit
GroupModel whose canonical class order the rows follow.  All structure
constants are computed by exact cyclotomic inner products.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import Cyclo
from .errors import (
    InconsistentFusion,
    InexactDivision,
    NegativeStructureConstant,
    NotACharacterTable,
    UnknownGroup,
    ValidationError,
)
from .groups import (
    GroupModel,
    model_cyclic,
    model_cyclic_product,
    model_dihedral8,
    model_extraspecial,
    model_symmetric,
    model_trivial,
)
from .lattice import newton_psi_to_lambda


class CharacterTable:
    def __init__(
        self,
        name: str,
        order: int,
        exponent: int,
        class_sizes: list[int],
        class_orders: list[int],
        power_maps: dict[int, list[int]],
        rows: list[list[tuple]],
        model: GroupModel | None = None,
        char_names: list[str] | None = None,
    ):
        self.name = name
        self.order = order
        self.exponent = exponent
        self.class_sizes = list(class_sizes)
        self.class_orders = list(class_orders)
        self.nclasses = len(class_sizes)
        self.cyclo = Cyclo(exponent)
        self.rows = [list(r) for r in rows]
        self.model = model
        self.char_names = char_names or [f"V{i+1}" for i in range(len(rows))]
        self.power_maps = {k % exponent: list(v) for k, v in power_maps.items()}
        self.power_maps[0] = [self.identity_class()] * self.nclasses
        self.power_maps.setdefault(1, list(range(self.nclasses)))
        self.dims = [self.cyclo.rational_value(r[self.identity_class()]) for r in rows]
        self.validate()

    def identity_class(self) -> int:
        return next(i for i, o in enumerate(self.class_orders) if o == 1)

    def power_map(self, k: int) -> list[int]:
        k %= self.exponent
        if k not in self.power_maps:
            raise NotACharacterTable(f"missing power map for k={k}")
        return self.power_maps[k]

    # -- exact inner products -------------------------------------------------
    def _conj_rows(self):
        if not hasattr(self, "_conj_rows_cache"):
            cy = self.cyclo
            self._conj_rows_cache = [
                [cy.conjugate(v) for v in row] for row in self.rows
            ]
        return self._conj_rows_cache

    def _row_index(self):
        if not hasattr(self, "_row_index_cache"):
            self._row_index_cache = {
                tuple(row): i for i, row in enumerate(self.rows)
            }
        return self._row_index_cache

    def inner(self, row_a: list[tuple], row_b: list[tuple]) -> int:
        cy = self.cyclo
        zero = cy.zero
        total = zero
        conj = cy.conjugate
        for c in range(self.nclasses):
            a = row_a[c]
            if a == zero:
                continue
            b = row_b[c]
            if b == zero:
                continue
            term = cy.mul(a, conj(b))
            total = cy.add(total, cy.scale(self.class_sizes[c], term))
        try:
            return cy.rational_value(cy.divide_exact(total, self.order))
        except InexactDivision as exc:
            raise NotACharacterTable(f"non-integral inner product: {exc}") from exc

    def _inner_conj(self, values, conj_row) -> int:
        cy = self.cyclo
        zero = cy.zero
        total = zero
        for c in range(self.nclasses):
            a = values[c]
            if a == zero:
                continue
            b = conj_row[c]
            if b == zero:
                continue
            total = cy.add(total, cy.scale(self.class_sizes[c], cy.mul(a, b)))
        try:
            return cy.rational_value(cy.divide_exact(total, self.order))
        except InexactDivision as exc:
            raise NotACharacterTable(f"non-integral inner product: {exc}") from exc

    def decompose(self, values: list[tuple]) -> list[int]:
        # exact-row fast path (products of abelian characters, Adams images)
        hit = self._row_index().get(tuple(values))
        if hit is not None:
            return [1 if i == hit else 0 for i in range(len(self.rows))]
        return [self._inner_conj(values, cr) for cr in self._conj_rows()]

    def validate(self) -> None:
        if sum(self.class_sizes) != self.order:
            raise NotACharacterTable("class sizes do not sum to the group order")
        if len(self.rows) != self.nclasses:
            raise NotACharacterTable("need as many irreducibles as classes")
        if sum(d * d for d in self.dims) != self.order:
            raise NotACharacterTable("sum of squared dimensions != group order")
        if self.dims[0] != 1 or any(
            not self.cyclo.is_rational(v) or self.cyclo.rational_value(v) != 1
            for v in self.rows[0]
        ):
            raise NotACharacterTable("first irreducible must be the trivial character")
        for i in range(len(self.rows)):
            for j in range(i, len(self.rows)):
                expected = 1 if i == j else 0
                if self.inner(self.rows[i], self.rows[j]) != expected:
                    raise NotACharacterTable(
                        f"row orthogonality fails at ({i},{j})"
                    )
        # column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = |G|/|class| delta
        cy = self.cyclo
        for c in range(self.nclasses):
            for c2 in range(c, self.nclasses):
                total = cy.zero
                for row in self.rows:
                    total = cy.add(total, cy.mul(row[c], cy.conjugate(row[c2])))
                if c == c2:
                    expected = cy.from_int(self.order // self.class_sizes[c])
                else:
                    expected = cy.zero
                if total != expected:
                    raise NotACharacterTable(f"column orthogonality fails at ({c},{c2})")
        # power-map consistency
        for k, pm in self.power_maps.items():
            if len(pm) != self.nclasses:
                raise NotACharacterTable(f"power map {k} has wrong length")
            for c in range(self.nclasses):
                if self.class_orders[c] and k % self.class_orders[c] == 0:
                    if pm[c] != self.identity_class():
                        raise NotACharacterTable(
                            f"power map {k} wrong on class {c} of order {self.class_orders[c]}"
                        )
        for k in list(self.power_maps):
            for l in list(self.power_maps):
                kl = (k * l) % self.exponent
                if kl in self.power_maps:
                    composed = [self.power_maps[k][c] for c in self.power_maps[l]]
                    if composed != self.power_maps[kl]:
                        raise NotACharacterTable(f"power maps {k}*{l} inconsistent")
        if self.model is not None:
            self._validate_against_model()

    def _validate_against_model(self) -> None:
        m = self.model
        classes = m.conjugacy_classes()
        if len(classes) != self.nclasses or m.size != self.order:
            raise NotACharacterTable("model class data does not match the table")
        for ci, cls in enumerate(classes):
            if len(cls) != self.class_sizes[ci]:
                raise NotACharacterTable(f"class {ci} size mismatch with model")
            if m.element_order(cls[0]) != self.class_orders[ci]:
                raise NotACharacterTable(f"class {ci} element order mismatch")
        for k in range(self.exponent):
            expected = [m.class_power(ci, k) for ci in range(self.nclasses)]
            if self.power_map(k) != expected:
                raise NotACharacterTable(f"power map {k} disagrees with the model")

    def psi_row(self, i: int, k: int) -> list[tuple]:
        pm = self.power_map(k)
        return [self.rows[i][pm[c]] for c in range(self.nclasses)]

    def __repr__(self):
        return f"CharacterTable({self.name}, {self.nclasses} classes)"


class VirtualRep:
    """Integer vector over the irreducibles of a RepRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "RepRing", coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def dim(self) -> int:
        return sum(c * d for c, d in zip(self.coeffs, self.ring.dims))

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, VirtualRep)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __add__(self, other):
        self.ring._check(other)
        return VirtualRep(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self.ring._check(other)
        return VirtualRep(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return VirtualRep(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualRep(self.ring, [other * a for a in self.coeffs])
        self.ring._check(other)
        return self.ring.product(self, other)

    __rmul__ = __mul__

    def divide_exact(self, k: int) -> "VirtualRep":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise InexactDivision(f"coefficient {c} not divisible by {k}")
            out.append(q)
        return VirtualRep(self.ring, out)

    def text(self) -> str:
        names = self.ring.table.char_names
        parts = []
        for c, name in zip(self.coeffs, names):
            if not c:
                continue
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"<rep {self.text()}>"


class RepRing:
    """Structure constants, Adams and lambda operations of R(G)."""

    def __init__(self, table: CharacterTable):
        self.table = table
        self.h = len(table.rows)
        self.dims = list(table.dims)
        cy = table.cyclo
        self.mijk = [[None] * self.h for _ in range(self.h)]
        for i in range(self.h):
            for j in range(i, self.h):
                prod = [cy.mul(a, b) for a, b in zip(table.rows[i], table.rows[j])]
                coeffs = table.decompose(prod)
                if any(c < 0 for c in coeffs):
                    raise NegativeStructureConstant(
                        f"V{i+1} x V{j+1} decomposes with a negative multiplicity"
                    )
                if sum(c * d for c, d in zip(coeffs, self.dims)) != self.dims[i] * self.dims[j]:
                    raise NotACharacterTable("product dimensions inconsistent")
                self.mijk[i][j] = coeffs
                self.mijk[j][i] = coeffs
        self._psi_cache: dict[int, list[list[int]]] = {}
        self.lam_tables = [self._lambda_table(i) for i in range(self.h)]

    def _check(self, other):
        if not isinstance(other, VirtualRep) or other.ring is not self:
            raise ValidationError("virtual representation from a different ring")

    # -- basic elements --------------------------------------------------------
    def zero(self) -> VirtualRep:
        return VirtualRep(self, [0] * self.h)

    def one(self) -> VirtualRep:
        return self.irreducible(0)

    def irreducible(self, i: int) -> VirtualRep:
        return VirtualRep(self, [1 if j == i else 0 for j in range(self.h)])

    def by_name(self, name: str) -> VirtualRep:
        return self.irreducible(self.table.char_names.index(name))

    def from_coeffs(self, coeffs) -> VirtualRep:
        return VirtualRep(self, coeffs)

    def product(self, a: VirtualRep, b: VirtualRep) -> VirtualRep:
        out = [0] * self.h
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                if not cb:
                    continue
                for k, m in enumerate(self.mijk[i][j]):
                    out[k] += ca * cb * m
        return VirtualRep(self, out)

    # -- Adams operations -------------------------------------------------------
    def psi_matrix(self, k: int) -> list[list[int]]:
        k %= self.table.exponent
        if k not in self._psi_cache:
            mat = []
            for i in range(self.h):
                mat.append(self.table.decompose(self.table.psi_row(i, k)))
            self._psi_cache[k] = mat
        return self._psi_cache[k]

    def adams(self, v: VirtualRep, k: int) -> VirtualRep:
        self._check(v)
        mat = self.psi_matrix(k)
        out = [0] * self.h
        for i, c in enumerate(v.coeffs):
            if c:
                for j in range(self.h):
                    out[j] += c * mat[i][j]
        return VirtualRep(self, out)

    # -- lambda operations -------------------------------------------------------
    def _lambda_table(self, i: int) -> list[VirtualRep]:
        d = self.dims[i]
        v = self.irreducible(i)
        psis = [self.adams(v, k) for k in range(1, d + 2)]
        lams = newton_psi_to_lambda(
            psis, d + 1, divide=lambda x, k: x.divide_exact(k)
        )
        for r, lam in enumerate(lams, start=1):
            if r <= d:
                if not lam.is_positive():
                    raise NegativeStructureConstant(
                        f"lambda^{r} of irreducible {i} has a negative coefficient"
                    )
                if lam.dim() != comb(d, r):
                    raise NotACharacterTable(
                        f"lambda^{r} of irreducible {i} has wrong dimension"
                    )
            elif lam.coeffs != (0,) * self.h:
                raise NotACharacterTable(f"lambda^{r} of a {d}-dim irreducible is nonzero")
        return [self.one()] + [lams[r - 1] for r in range(1, d + 1)]

    def lam_irreducible(self, i: int, r: int) -> VirtualRep:
        if r > self.dims[i]:
            return self.zero()
        return self.lam_tables[i][r]

    def lambda_series(self, v: VirtualRep) -> list[VirtualRep]:
        """lambda^0..lambda^dim of a positive representation, via the
        addition law lambda_t(V+W) = lambda_t(V) lambda_t(W)."""
        self._check(v)
        if not v.is_positive():
            raise ValidationError("lambda series of a non-positive element")
        series = [self.one()]
        for i, c in enumerate(v.coeffs):
            for _ in range(c):
                factor = self.lam_tables[i]
                new_len = len(series) + self.dims[i]
                new = [self.zero() for _ in range(new_len)]
                for a, sa in enumerate(series):
                    for b, fb in enumerate(factor):
                        new[a + b] = new[a + b] + sa * fb
                series = new
        return series

    def lam(self, v: VirtualRep, r: int) -> VirtualRep:
        series = self.lambda_series(v)
        return series[r] if r < len(series) else self.zero()

    def character_values(self, v: VirtualRep) -> list[tuple]:
        cy = self.table.cyclo
        out = []
        for c in range(self.table.nclasses):
            val = cy.zero
            for i, coef in enumerate(v.coeffs):
                if coef:
                    val = cy.add(val, cy.scale(coef, self.table.rows[i][c]))
            out.append(val)
        return out

    def __repr__(self):
        return f"RepRing({self.table.name})"


def repring_from_table(table: CharacterTable) -> RepRing:
    return RepRing(table)


# -- restriction kernels -------------------------------------------------------

class RestrictionResult:
    def __init__(self, ring_g: RepRing, kernel: list[VirtualRep], matrix: list[list[int]]):
        self.ring_g = ring_g
        self.kernel_basis = kernel
        self.matrix = matrix
        self.rank = ring_g.h - len(kernel)

    def contains(self, v: VirtualRep) -> bool:
        """Exact membership of v in the kernel lattice."""
        if not self.kernel_basis:
            return all(c == 0 for c in v.coeffs)
        rows = [list(b.coeffs) for b in self.kernel_basis]
        target = list(v.coeffs)
        sol = _solve_integer_combination(rows, target)
        return sol is not None

    def quotient_psi(self, k: int, basis_indices: list[int]) -> list[list[int]]:
        """Matrix of psi^k on R(G)/I in the basis of the given irreducibles."""
        ring = self.ring_g
        out = []
        for i in basis_indices:
            target = ring.adams(ring.irreducible(i), k)
            sol = self._express(target, basis_indices)
            if sol is None:
                raise ValidationError("chosen irreducibles do not span R(G)/I")
            out.append(sol)
        return out

    def _express(self, v: VirtualRep, basis_indices: list[int]):
        """Write v mod I as an integer combination of the chosen irreducibles."""
        ring = self.ring_g
        rows = [list(ring.irreducible(i).coeffs) for i in basis_indices]
        rows += [list(b.coeffs) for b in self.kernel_basis]
        sol = _solve_integer_combination(rows, list(v.coeffs))
        if sol is None:
            return None
        return sol[: len(basis_indices)]


def _solve_integer_combination(rows: list[list[int]], target: list[int]):
    """Integer solution x of x . rows = target, or None (exact, Fraction-based
    elimination plus integrality check)."""
    nrows, ncols = len(rows), len(target)
    mat = [[Fraction(rows[r][c]) for r in range(nrows)] for c in range(ncols)]
    rhs = [Fraction(t) for t in target]
    piv_cols: list[tuple[int, int]] = []
    row = 0
    for col in range(nrows):
        piv = next((r for r in range(row, ncols) if mat[r][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        rhs[row], rhs[piv] = rhs[piv], rhs[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        rhs[row] = rhs[row] * inv
        for r in range(ncols):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
                rhs[r] = rhs[r] - f * rhs[row]
        piv_cols.append((row, col))
        row += 1
    for r in range(row, ncols):
        if rhs[r]:
            return None
    sol = [Fraction(0)] * nrows
    for r, col in piv_cols:
        sol[col] = rhs[r]
    if any(s.denominator != 1 for s in sol):
        return None
    return [int(s) for s in sol]


def _integer_kernel(matrix: list[list[int]]) -> list[list[int]]:
    """Basis of {x in Z^n : x.M = 0} via unimodular row reduction of [M | I]."""
    n = len(matrix)
    m = len(matrix[0]) if matrix else 0
    aug = [list(matrix[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    row = 0
    for col in range(m):
        while True:
            nz = [r for r in range(row, n) if aug[r][col]]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(aug[r][col]))
            aug[row], aug[piv] = aug[piv], aug[row]
            done = True
            for r in range(row + 1, n):
                if aug[r][col]:
                    q = aug[r][col] // aug[row][col]
                    if q:
                        aug[r] = [a - q * b for a, b in zip(aug[r], aug[row])]
                    if aug[r][col]:
                        done = False
            if done:
                row += 1
                break
    return [r[m:] for r in aug[row:]]


def restriction_kernel(
    ring_g: RepRing, ring_h: RepRing, fusion: list[int]
) -> RestrictionResult:
    """Kernel of restriction R(G) -> R(H) along a class-fusion map.

    ``fusion[hc]`` is the G-class containing the H-class hc.  Consistency with
    element orders and power maps is checked; the restricted characters are
    decomposed exactly in R(H).
    """
    tg, th = ring_g.table, ring_h.table
    if len(fusion) != th.nclasses:
        raise InconsistentFusion("fusion map has wrong length")
    for hc, gc in enumerate(fusion):
        if th.class_orders[hc] != tg.class_orders[gc]:
            raise InconsistentFusion(f"class {hc}: element order changes under fusion")
    for k in range(th.exponent):
        for hc in range(th.nclasses):
            if fusion[th.power_map(k)[hc]] != tg.power_map(k)[fusion[hc]]:
                raise InconsistentFusion(f"fusion does not commute with power map {k}")
    # compute H-decompositions inside one cyclotomic ring large enough for both
    from math import lcm

    ebig = lcm(tg.exponent, th.exponent)
    cy = Cyclo(ebig)
    hrows = [[cy.embed_from(th.cyclo, v) for v in row] for row in th.rows]

    def h_decompose(values):
        out = []
        for row in hrows:
            total = cy.zero
            for c in range(th.nclasses):
                term = cy.mul(values[c], cy.conjugate(row[c]))
                total = cy.add(total, cy.scale(th.class_sizes[c], term))
            try:
                out.append(cy.rational_value(cy.divide_exact(total, th.order)))
            except InexactDivision as exc:
                raise InconsistentFusion(f"restriction is not a character: {exc}") from exc
        return out

    matrix = []
    for i in range(ring_g.h):
        restricted = [
            cy.embed_from(tg.cyclo, tg.rows[i][fusion[hc]]) for hc in range(th.nclasses)
        ]
        coeffs = h_decompose(restricted)
        if sum(c * d for c, d in zip(coeffs, ring_h.dims)) != ring_g.dims[i]:
            raise InconsistentFusion(f"restriction of irreducible {i} loses dimension")
        matrix.append(coeffs)
    kernel_rows = _integer_kernel(matrix)
    kernel = [VirtualRep(ring_g, row) for row in kernel_rows]
    return RestrictionResult(ring_g, kernel, matrix)


# -- builtin tables -------------------------------------------------------------

def _table_from_model(
    name: str,
    model: GroupModel,
    rows,
    char_names=None,
    exponent: int | None = None,
) -> CharacterTable:
    classes = model.conjugacy_classes()
    e = exponent or model.exponent()
    cy = Cyclo(e)
    sizes = [len(c) for c in classes]
    orders = [model.element_order(c[0]) for c in classes]
    pms = {k: [model.class_power(ci, k) for ci in range(len(classes))] for k in range(e)}
    crows = []
    for r in rows:
        crows.append([v if isinstance(v, tuple) else cy.from_int(v) for v in r])
    return CharacterTable(name, model.size, e, sizes, orders, pms, crows, model, char_names)


@lru_cache(maxsize=None)
def table_trivial() -> CharacterTable:
    return _table_from_model("trivial", model_trivial(), [[1]], ["1"])


@lru_cache(maxsize=None)
def table_cyclic(m: int) -> CharacterTable:
    model = model_cyclic(m)
    classes = model.conjugacy_classes()
    cy = Cyclo(m) if m > 1 else Cyclo(1)
    rows = []
    for j in range(m):
        rows.append([cy.root_power(j * model.elements[c[0]]) for c in classes])
    names = ["1"] + [f"chi{j}" for j in range(1, m)]
    return _table_from_model(f"c{m}", model, rows, names, exponent=max(m, 1))


@lru_cache(maxsize=None)
def table_cyclic_product(m: int, k: int) -> CharacterTable:
    from math import lcm

    model = model_cyclic_product(m, k)
    e = lcm(m, k)
    cy = Cyclo(e)
    classes = model.conjugacy_classes()
    rows = []
    names = []
    for j1 in range(m):
        for j2 in range(k):
            row = []
            for c in classes:
                a, b = model.elements[c[0]]
                row.append(cy.root_power((j1 * a * (e // m) + j2 * b * (e // k)) % e))
            rows.append(row)
            names.append("1" if (j1, j2) == (0, 0) else f"chi{j1}_{j2}")
    return _table_from_model(f"c{m}xc{k}", model, rows, names, exponent=e)


@lru_cache(maxsize=None)
def table_sigma3() -> CharacterTable:
    rows = [
        [1, 1, 1],
        [1, -1, 1],
        [2, 0, -1],
    ]
    return _table_from_model("sigma3", model_symmetric(3), rows, ["1", "eps", "sigma"])


@lru_cache(maxsize=None)
def table_sigma4() -> CharacterTable:
    # canonical class order: 1^4, 2^2(size 3), 1^2 2(size 6), 1 3, 4
    rows = [
        [1, 1, 1, 1, 1],
        [1, 1, -1, 1, -1],
        [2, 2, 0, -1, 0],
        [3, -1, 1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return _table_from_model(
        "sigma4", model_symmetric(4), rows, ["1", "eps", "sigma", "rho", "eps_rho"]
    )


@lru_cache(maxsize=None)
def table_dihedral8() -> CharacterTable:
    # canonical class order: e, r^2, transpositions, double transpositions, 4-cycles
    rows = [
        [1, 1, 1, 1, 1],
        [1, 1, -1, -1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, 1, -1],
        [2, -2, 0, 0, 0],
    ]
    return _table_from_model(
        "d8", model_dihedral8(), rows, ["1", "ls", "lr", "lrs", "tau"]
    )


@lru_cache(maxsize=None)
def table_extraspecial(p: int, d: int) -> CharacterTable:
    model = model_extraspecial(p, d)
    classes = model.conjugacy_classes()
    cy = Cyclo(p)
    rows = []
    names = []
    # linear characters, indexed by the dual of V = F_p^{2d}
    duals = [()]
    for _ in range(2 * d):
        duals = [w + (x,) for w in duals for x in range(p)]
    duals.sort()
    for w in duals:
        row = []
        for c in classes:
            rep = model.elements[c[0]]
            u = rep[1:]
            row.append(cy.root_power(sum(a * b for a, b in zip(w, u)) % p))
        rows.append(row)
        names.append("1" if all(x == 0 for x in w) else "l" + "".join(map(str, w)))
    # the p-1 characters of degree p^d supported on the centre
    for j in range(1, p):
        row = []
        for c in classes:
            rep = model.elements[c[0]]
            if any(rep[1:]):
                row.append(cy.zero)
            else:
                row.append(cy.scale(p ** d, cy.root_power((j * rep[0]) % p)))
        rows.append(row)
        names.append(f"phi{j}")
    return _table_from_model(f"extraspecial({p},{d})", model, rows, names)


def builtin_group(name: str) -> CharacterTable:
    """Builtin validated character tables by name.

    sigma6 intentionally ships as a permutation GroupModel only (see
    groups.builtin_model); request it here and you get a pointer.
    """
    key = name.strip().lower()
    if key == "trivial":
        return table_trivial()
    if key == "sigma3":
        return table_sigma3()
    if key == "sigma4":
        return table_sigma4()
    if key == "sigma6":
        raise UnknownGroup(
            "sigma6 has no builtin character table; use groups.builtin_model('sigma6')"
        )
    if key == "d8":
        return table_dihedral8()
    m = re.fullmatch(r"c(\d+)", key)
    if m:
        return table_cyclic(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)xc(\d+)", key)
    if m:
        return table_cyclic_product(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"extraspecial\((\d+),(\d+)\)", key.replace(" ", ""))
    if m:
        return table_extraspecial(int(m.group(1)), int(m.group(2)))
    raise UnknownGroup(f"no builtin character table for {name!r}")


def builtin_fusion(g_name: str, h_name: str) -> list[int]:
    """Class fusion for the builtin subgroup pairs, computed from the models."""
    g_key, h_key = g_name.strip().lower(), h_name.strip().lower()
    if (g_key, h_key) == ("sigma4", "d8"):
        return model_dihedral8().fusion_into(model_symmetric(4))
    if (g_key, h_key) == ("sigma3", "c3"):
        s3 = model_symmetric(3)
        c3 = model_cyclic(3)
        cyc = s3.index[(1, 2, 0)]
        out = []
        for cls in c3.conjugacy_classes():
            k = c3.elements[cls[0]]
            out.append(s3.class_of(s3.power(cyc, k)))
        return out
    mg = re.fullmatch(r"extraspecial\((\d+),(\d+)\)", g_key.replace(" ", ""))
    mh = re.fullmatch(r"c(\d+)", h_key)
    if mg and mh and int(mh.group(1)) == int(mg.group(1)):
        p, d = int(mg.group(1)), int(mg.group(2))
        model = model_extraspecial(p, d)
        cm = model_cyclic(p)
        out = []
        for cls in cm.conjugacy_classes():
            x = cm.elements[cls[0]]
            elem = (x,) + (0,) * (2 * d)
            out.append(model.class_of(model.index[elem]))
        return out
    raise UnknownGroup(f"no builtin fusion for {h_name} <= {g_name}")


# -- the cyclic-group lambda computation used by the extraspecial checks --------

def lambda_rho_brute(p: int, d: int, k: int) -> tuple[int, int]:
    """lambda^k(p^{d-1} rho_C) in Z[chi]/(chi^p - 1), C cyclic of order p.

    Returns (n, m) with value n + m*rho_C; computed by expanding
    prod_j (1 + chi^j t)^{p^{d-1}} in the group ring.
    """
    copies = p ** (d - 1)
    # series over Z[Z/p]: list of length-p vectors per t-degree
    series = [[0] * p for _ in range(p * copies + 1)]
    series[0][0] = 1
    for _ in range(copies):
        for j in range(p):
            # multiply by (1 + chi^j t)
            for deg in range(len(series) - 1, 0, -1):
                prev = series[deg - 1]
                cur = series[deg]
                for r in range(p):
                    if prev[r]:
                        cur[(r + j) % p] += prev[r]
    vec = series[k] if k < len(series) else [0] * p
    # express as n + m*rho: rho has all-ones vector
    m = vec[1]
    if any(v != m for v in vec[1:]):
        raise ValidationError("value is not in Z{1, rho}")
    return vec[0] - m, m


def lambda_rho_closed_form(p: int, d: int, k: int) -> tuple[int, int]:
    """The binomial closed form for lambda^k(p^{d-1} rho_C), as (n, m)."""
    if k % p == 0:
        n = comb(p ** (d - 1), k // p)
        m, r = divmod(comb(p ** d, k) - n, p)
        if r:
            raise InexactDivision("closed form is not integral")
        return n, m
    m, r = divmod(comb(p ** d, k), p)
    if r:
        raise InexactDivision("closed form is not integral")
    return 0, m
