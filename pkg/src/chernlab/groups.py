"""Explicit finite group models: element tables, conjugacy, power maps.

Elements are hashable encodings (ints for cyclic groups, tuples for
permutations and extraspecial groups).  Multiplication tables are
precomputed, so enumeration loops run on plain list lookups.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import UnknownGroup, ValidationError


class GroupModel:
    def __init__(self, name: str, elements: list, mult_fn):
        self.name = name
        self.elements = sorted(elements)
        self.size = len(self.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = self.size
        self.table = [[0] * n for _ in range(n)]
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                self.table[i][j] = self.index[mult_fn(a, b)]
        self.identity = next(
            i for i in range(n) if all(self.table[i][j] == j for j in range(n))
        )
        self.inverse = [0] * n
        for i in range(n):
            self.inverse[i] = next(j for j in range(n) if self.table[i][j] == self.identity)
        self._orders: list[int] | None = None
        self._classes: list[list[int]] | None = None
        self._class_of: list[int] | None = None

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[i], -k)
        r = self.identity
        b = i
        while k:
            if k & 1:
                r = self.table[r][b]
            b = self.table[b][b]
            k >>= 1
        return r

    def element_order(self, i: int) -> int:
        return self.orders()[i]

    def orders(self) -> list[int]:
        if self._orders is None:
            out = []
            for i in range(self.size):
                k, g = 1, i
                while g != self.identity:
                    g = self.table[g][i]
                    k += 1
                out.append(k)
            self._orders = out
        return self._orders

    def exponent(self) -> int:
        from math import lcm

        return lcm(*self.orders())

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes sorted by (element order, size, least member); members sorted."""
        if self._classes is None:
            seen = [False] * self.size
            classes = []
            for i in range(self.size):
                if seen[i]:
                    continue
                orbit = sorted({self.conj(g, i) for g in range(self.size)})
                for x in orbit:
                    seen[x] = True
                classes.append(orbit)
            orders = self.orders()
            classes.sort(key=lambda c: (orders[c[0]], len(c), self.elements[c[0]]))
            self._classes = classes
            self._class_of = [0] * self.size
            for ci, cls in enumerate(classes):
                for x in cls:
                    self._class_of[x] = ci
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    def class_power(self, ci: int, k: int) -> int:
        rep = self.conjugacy_classes()[ci][0]
        return self.class_of(self.power(rep, k))

    def p_power_class_indices(self, p: int) -> list[int]:
        out = []
        for ci, cls in enumerate(self.conjugacy_classes()):
            o = self.element_order(cls[0])
            while o % p == 0:
                o //= p
            if o == 1:
                out.append(ci)
        return out

    def p_power_elements(self, p: int) -> list[int]:
        orders = self.orders()
        out = []
        for i in range(self.size):
            o = orders[i]
            while o % p == 0:
                o //= p
            if o == 1:
                out.append(i)
        return out

    def subgroup(self, generator_elems: list, name: str) -> "GroupModel":
        """Closure of the generators, as a standalone model."""
        gens = [self.index[e] for e in generator_elems]
        closure = {self.identity}
        frontier = list(gens)
        while frontier:
            nxt = []
            for g in frontier:
                for h in list(closure):
                    for prod in (self.table[g][h], self.table[h][g]):
                        if prod not in closure:
                            closure.add(prod)
                            nxt.append(prod)
                if g not in closure:
                    closure.add(g)
                    nxt.append(g)
            frontier = nxt
        elems = [self.elements[i] for i in sorted(closure)]

        def mult(a, b):
            return self.elements[self.table[self.index[a]][self.index[b]]]

        return GroupModel(name, elems, mult)

    def fusion_into(self, parent: "GroupModel") -> list[int]:
        """Class fusion map (self classes -> parent classes) for a subgroup
        whose elements are encoded identically in the parent."""
        out = []
        for cls in self.conjugacy_classes():
            rep = self.elements[cls[0]]
            out.append(parent.class_of(parent.index[rep]))
        return out

    def __repr__(self):
        return f"GroupModel({self.name}, order {self.size})"


# -- builtin models -----------------------------------------------------------

def _perm_mult(a: tuple, b: tuple) -> tuple:
    # (a*b)(x) = a(b(x))
    return tuple(a[b[i]] for i in range(len(a)))


@lru_cache(maxsize=None)
def model_symmetric(k: int) -> GroupModel:
    if k > 7:
        raise ValidationError("symmetric-group model capped at degree 7")
    return GroupModel(f"sigma{k}", list(permutations(range(k))), _perm_mult)


@lru_cache(maxsize=None)
def model_trivial() -> GroupModel:
    return GroupModel("trivial", [0], lambda a, b: 0)


@lru_cache(maxsize=None)
def model_cyclic(m: int) -> GroupModel:
    return GroupModel(f"c{m}", list(range(m)), lambda a, b: (a + b) % m)


@lru_cache(maxsize=None)
def model_cyclic_product(m: int, k: int) -> GroupModel:
    elems = [(a, b) for a in range(m) for b in range(k)]
    return GroupModel(
        f"c{m}xc{k}", elems, lambda x, y: ((x[0] + y[0]) % m, (x[1] + y[1]) % k)
    )


@lru_cache(maxsize=None)
def model_dihedral8() -> GroupModel:
    s4 = model_symmetric(4)
    r = (1, 2, 3, 0)  # the 4-cycle (0123)
    s = (2, 1, 0, 3)  # the transposition (02)
    return s4.subgroup([r, s], "d8")


def symplectic_form(d: int):
    """Gram data of the standard alternating form on F_p^{2d}: hyperbolic
    pairs (e_i, f_i)."""

    def b(u: tuple, v: tuple, p: int) -> int:
        total = 0
        for i in range(d):
            total += u[i] * v[d + i] - u[d + i] * v[i]
        return total % p

    return b


@lru_cache(maxsize=None)
def model_extraspecial(p: int, d: int) -> GroupModel:
    """Order p^{2d+1}, exponent p: F_p x F_p^{2d} with multiplication twisted
    by the standard symplectic form."""
    if p == 2:
        raise ValidationError("extraspecial model requires an odd prime")
    if p ** (2 * d + 1) > 100000:
        raise ValidationError("extraspecial model too large")
    b = symplectic_form(d)
    vecs = [()]
    for _ in range(2 * d):
        vecs = [v + (x,) for v in vecs for x in range(p)]
    elems = [(x,) + v for x in range(p) for v in vecs]

    def mult(g, h):
        x, u = g[0], g[1:]
        y, v = h[0], h[1:]
        return ((x + y + b(u, v, p)) % p,) + tuple((a + c) % p for a, c in zip(u, v))

    return GroupModel(f"extraspecial({p},{d})", elems, mult)


def builtin_model(name: str) -> GroupModel:
    import re

    name = name.strip().lower()
    if name == "trivial":
        return model_trivial()
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        return model_cyclic(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)xc(\d+)", name)
    if m:
        return model_cyclic_product(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"sigma(\d)", name)
    if m:
        return model_symmetric(int(m.group(1)))
    if name == "d8":
        return model_dihedral8()
    m = re.fullmatch(r"extraspecial\((\d+),(\d+)\)", name.replace(" ", ""))
    if m:
        return model_extraspecial(int(m.group(1)), int(m.group(2)))
    raise UnknownGroup(f"no builtin group model {name!r}")
