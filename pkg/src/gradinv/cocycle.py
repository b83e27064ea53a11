"""Factor sets on finite abelian groups and twisted group algebras.

A 2-cocycle sigma: T x T -> F^x satisfies sigma(u,v)sigma(uv,w) =
sigma(u,vw)sigma(v,w); it twists the group algebra product into
X_u X_v = sigma(u,v) X_{uv}.  For a symplectically shaped T we keep sigma in
the normal form

    sigma(a1^i1 b1^j1 ..., a1^i1' b1^j1' ...) = prod_k eps_k^(-j_k * i_k'),

which is multiplicative in each argument; explicit tables only appear for
coboundaries and perturbation tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .abgroup import Elem, FinAbGroup, SymplecticShape, parse_group
from .cyclotomic import RootOfUnity


@dataclass(frozen=True)
class StandardCocycle:
    """The normal-form factor set attached to a symplectic shape."""

    shape: SymplecticShape

    @property
    def group(self) -> FinAbGroup:
        return self.shape.group

    def __call__(self, u: Elem, v: Elem) -> RootOfUnity:
        acc = RootOfUnity.one()
        for k, eps in enumerate(self.shape.eps):
            j = u[2 * k + 1]
            ip = v[2 * k]
            if j and ip:
                acc = acc * eps ** (-j * ip)
        return acc

    def exponent_table(self, M: int) -> list[list[int]]:
        """sigma as exponents of zeta_M, indexed by element index; M must be
        divisible by every pair order."""
        els = self.group.elements()
        return [[self(u, v).as_exponent(M) for v in els] for u in els]

    def as_table(self) -> "TableCocycle":
        els = self.group.elements()
        return TableCocycle(self.group, tuple(tuple(self(u, v) for v in els) for u in els))


@dataclass(frozen=True)
class TableCocycle:
    """Explicit |T| x |T| table of values, row/column indexed by element index."""

    group: FinAbGroup
    table: tuple[tuple[RootOfUnity, ...], ...]

    def __post_init__(self):
        n = self.group.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("table must be |T| x |T|")

    def __call__(self, u: Elem, v: Elem) -> RootOfUnity:
        return self.table[self.group.index(u)][self.group.index(v)]

    def perturbed(self, u: Elem, v: Elem, factor: RootOfUnity) -> "TableCocycle":
        """Copy with one entry multiplied by factor (for cocycle-identity tests)."""
        iu, iv = self.group.index(u), self.group.index(v)
        rows = [list(r) for r in self.table]
        rows[iu][iv] = rows[iu][iv] * factor
        return TableCocycle(self.group, tuple(tuple(r) for r in rows))

    def to_json(self) -> dict:
        return {
            "group": self.group.descriptor(),
            "entries": [[x.to_json() for x in row] for row in self.table],
        }

    @staticmethod
    def from_json(doc: dict) -> "TableCocycle":
        T = parse_group(doc["group"])
        rows = tuple(
            tuple(RootOfUnity.from_json(x) for x in row) for row in doc["entries"]
        )
        return TableCocycle(T, rows)


Cocycle = StandardCocycle | TableCocycle


def standard_sigma(shape: SymplecticShape, u: Elem, v: Elem) -> RootOfUnity:
    """Normal-form factor set value on a pair of elements of the shaped group."""
    T = shape.group
    if len(u) != T.rank or len(v) != T.rank:
        raise ValueError("element does not match the shape")
    return StandardCocycle(shape)(u, v)


def is_cocycle(sigma: Cocycle) -> bool:
    """Exhaustively test the cocycle identity on all |T|^3 triples."""
    T = sigma.group
    els = T.elements()
    for u in els:
        for v in els:
            uv = T.add(u, v)
            s_uv = sigma(u, v)
            for w in els:
                if s_uv * sigma(uv, w) != sigma(u, T.add(v, w)) * sigma(v, w):
                    return False
    return True


def coboundary(T: FinAbGroup, lam: Mapping[Elem, RootOfUnity] | Callable[[Elem], RootOfUnity]) -> TableCocycle:
    """The factor set (u,v) -> lam(u)lam(v)/lam(u+v)."""
    get = lam.__getitem__ if isinstance(lam, Mapping) else lam
    els = T.elements()
    vals = {g: get(g) for g in els}
    rows = tuple(
        tuple(vals[u] * vals[v] / vals[T.add(u, v)] for v in els) for u in els
    )
    return TableCocycle(T, rows)


@dataclass(frozen=True)
class Bicharacter:
    """An alternating bicharacter as a value table on T x T."""

    group: FinAbGroup
    table: tuple[tuple[RootOfUnity, ...], ...]

    def __call__(self, u: Elem, v: Elem) -> RootOfUnity:
        return self.table[self.group.index(u)][self.group.index(v)]


def bicharacter_beta(sigma: Cocycle) -> Bicharacter:
    """beta_sigma(u, v) = sigma(u, v) / sigma(v, u)."""
    T = sigma.group
    els = T.elements()
    rows = tuple(tuple(sigma(u, v) / sigma(v, u) for v in els) for u in els)
    return Bicharacter(T, rows)


def is_nondegenerate(beta: Bicharacter) -> bool:
    """No nonzero t pairs trivially with all of T (exhaustive)."""
    T = beta.group
    els = T.elements()
    zero = T.identity()
    for t in els:
        if t == zero:
            continue
        if all(beta(u, t).is_one for u in els):
            return False
    return True


Term = tuple[Elem, RootOfUnity]


def twisted_product(sigma: Cocycle, term1: Term, term2: Term) -> Term:
    """(c1 X_u)(c2 X_v) = c1 c2 sigma(u,v) X_{u+v} in the twisted group algebra."""
    (u, c1), (v, c2) = term1, term2
    T = sigma.group
    return T.add(u, v), c1 * c2 * sigma(u, v)
