"""Finite abelian groups, their maps, characters, and prime-component splitting.

Groups are direct products of cyclic groups given by an order tuple; elements
are canonical residue tuples (plain tuples of ints, reduced componentwise).
Maps are integer matrices whose column j is the image of generator j.  A
``SymplecticShape`` refines a group of the form prod (Z_l)^2 x ... by pairing
generators (a_k, b_k) and fixing the bicharacter value eps_k = beta(a_k, b_k).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from math import gcd, lcm, prod

from .cyclotomic import RootOfUnity

Elem = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """Direct product of cyclic groups of the given orders, written additively."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if any(o < 1 for o in self.orders):
            raise ValueError("orders must be positive")
        object.__setattr__(self, "orders", tuple(int(o) for o in self.orders))

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def identity(self) -> Elem:
        return (0,) * len(self.orders)

    def element(self, residues) -> Elem:
        if len(residues) != len(self.orders):
            raise ValueError("wrong number of residues")
        return tuple(int(r) % o for r, o in zip(residues, self.orders))

    def generator(self, j: int) -> Elem:
        return tuple(1 if i == j else 0 for i in range(len(self.orders)))

    def add(self, g: Elem, h: Elem) -> Elem:
        return tuple((a + b) % o for a, b, o in zip(g, h, self.orders))

    def neg(self, g: Elem) -> Elem:
        return tuple((-a) % o for a, o in zip(g, self.orders))

    def sub(self, g: Elem, h: Elem) -> Elem:
        return tuple((a - b) % o for a, b, o in zip(g, h, self.orders))

    def scale(self, k: int, g: Elem) -> Elem:
        return tuple((k * a) % o for a, o in zip(g, self.orders))

    def elements(self) -> list[Elem]:
        """All elements in lexicographic order (last coordinate fastest)."""
        return list(iproduct(*(range(o) for o in self.orders)))

    def index(self, g: Elem) -> int:
        i = 0
        for r, o in zip(g, self.orders):
            i = i * o + r
        return i

    def element_order(self, g: Elem) -> int:
        """Least k >= 1 with k*g = 0."""
        return lcm(*(o // gcd(o, r) for r, o in zip(g, self.orders))) if g else 1

    def exponent(self) -> int:
        return lcm(*self.orders)

    def descriptor(self) -> str:
        parts = []
        i = 0
        while i < len(self.orders):
            j = i
            while j < len(self.orders) and self.orders[j] == self.orders[i]:
                j += 1
            power = j - i
            parts.append(f"Z{self.orders[i]}" + (f"^{power}" if power > 1 else ""))
            i = j
        return "x".join(parts) if parts else "Z1"


_DESC_PART = re.compile(r"^Z(\d+)(?:\^(\d+))?$")


def parse_group(descriptor: str) -> FinAbGroup:
    """Parse a group descriptor like "Z4^2" or "Z2^2xZ3^2"."""
    orders: list[int] = []
    for part in descriptor.strip().split("x"):
        m = _DESC_PART.match(part.strip())
        if not m:
            raise ValueError(f"bad group descriptor part: {part!r}")
        o, p = int(m.group(1)), int(m.group(2) or 1)
        if o < 1 or p < 1:
            raise ValueError(f"bad group descriptor part: {part!r}")
        orders.extend([o] * p)
    return FinAbGroup(tuple(orders))


@dataclass(frozen=True)
class GroupMap:
    """Homomorphism between abelian groups; matrix column j = image of generator j."""

    domain: FinAbGroup
    codomain: FinAbGroup
    matrix: tuple[tuple[int, ...], ...]  # matrix[i][j], reduced mod codomain.orders[i]

    def __post_init__(self):
        co = self.codomain.orders
        if len(self.matrix) != len(co):
            raise ValueError("matrix row count must match codomain rank")
        rows = []
        for i, row in enumerate(self.matrix):
            if len(row) != len(self.domain.orders):
                raise ValueError("matrix column count must match domain rank")
            rows.append(tuple(int(x) % co[i] for x in row))
        object.__setattr__(self, "matrix", tuple(rows))

    @staticmethod
    def from_columns(domain: FinAbGroup, codomain: FinAbGroup, cols) -> "GroupMap":
        rows = tuple(tuple(col[i] for col in cols) for i in range(codomain.rank))
        return GroupMap(domain, codomain, rows)

    @staticmethod
    def identity(T: FinAbGroup) -> "GroupMap":
        n = T.rank
        return GroupMap(T, T, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def negation(T: FinAbGroup) -> "GroupMap":
        n = T.rank
        return GroupMap(T, T, tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n)))

    def column(self, j: int) -> Elem:
        return self.codomain.element(tuple(self.matrix[i][j] for i in range(self.codomain.rank)))

    def apply(self, g: Elem) -> Elem:
        co = self.codomain.orders
        return tuple(
            sum(self.matrix[i][j] * g[j] for j in range(len(g))) % co[i]
            for i in range(len(co))
        )

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        if other.codomain != self.domain:
            raise ValueError("maps not composable")
        cols = [self.apply(other.column(j)) for j in range(other.domain.rank)]
        return GroupMap.from_columns(other.domain, self.codomain, cols)

    def is_well_defined(self) -> bool:
        for j, o in enumerate(self.domain.orders):
            if o % self.codomain.element_order(self.column(j)) != 0:
                return False
        return True

    def det(self) -> int:
        """Determinant; only meaningful for square maps on uniform orders."""
        n = self.domain.rank
        if n != self.codomain.rank:
            raise ValueError("determinant needs a square matrix")
        m = [list(row) for row in self.matrix]
        # integer cofactor expansion; ranks here are tiny
        def _det(rows):
            k = len(rows)
            if k == 1:
                return rows[0][0]
            total = 0
            for j in range(k):
                minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
                total += (-1) ** j * rows[0][j] * _det(minor)
            return total

        return _det(m)

    def trace(self) -> int:
        return sum(self.matrix[i][i] for i in range(self.domain.rank))

    def is_endo(self) -> bool:
        return self.domain == self.codomain

    def __eq__(self, other):
        return (
            isinstance(other, GroupMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))


BIJECTIVITY_BRUTE_CAP = 10_000


def is_automorphism(T: FinAbGroup, A: GroupMap) -> bool:
    """Whether A is a well-defined bijective endomorphism of T.

    Uniform-order groups use the unit-determinant test; otherwise the image is
    enumerated outright (the group sizes here make that self-evidently right).
    """
    if A.domain != T or A.codomain != T:
        raise ValueError("map is not an endomorphism of T")
    if not A.is_well_defined():
        return False
    if len(set(T.orders)) == 1:
        return gcd(A.det() % T.orders[0], T.orders[0]) == 1 if T.orders[0] > 1 else True
    if T.order > BIJECTIVITY_BRUTE_CAP:
        raise ValueError("group too large for brute-force bijectivity check")
    return len({A.apply(g) for g in T.elements()}) == T.order


ENUMERATION_CAP = 4096


def enumerate_automorphisms(
    T: FinAbGroup,
    det: int | None = None,
    trace: int | None = None,
    cap: int = ENUMERATION_CAP,
) -> list[GroupMap]:
    """All automorphisms of T, lexicographically ordered by matrix entries.

    Optional det/trace constraints are residues modulo the uniform generator
    order (they require uniform orders).  Exhaustive by design; the cap guards
    against accidental blowups.
    """
    if T.order > cap:
        raise ValueError("group too large")
    k = T.rank
    if (det is not None or trace is not None) and len(set(T.orders)) != 1:
        raise ValueError("det/trace constraints need uniform generator orders")
    n_mod = T.orders[0] if T.orders else 1
    entry_ranges = [range(T.orders[i]) for i in range(k) for _ in range(k)]
    if prod(r.stop for r in entry_ranges) > 2**22:
        raise ValueError("group too large")
    out = []
    for flat in iproduct(*entry_ranges):
        rows = tuple(tuple(flat[i * k : (i + 1) * k]) for i in range(k))
        A = GroupMap(T, T, rows)
        if det is not None and (A.det() - det) % n_mod != 0:
            continue
        if trace is not None and (A.trace() - trace) % n_mod != 0:
            continue
        if is_automorphism(T, A):
            out.append(A)
    return out


@dataclass(frozen=True)
class Character:
    """Multiplicative character of T, given by its values on the generators."""

    group: FinAbGroup
    values: tuple[RootOfUnity, ...]

    def __post_init__(self):
        for v, o in zip(self.values, self.group.orders):
            if o % v.order:
                raise ValueError("character value order must divide generator order")

    def __call__(self, g: Elem) -> RootOfUnity:
        acc = RootOfUnity.one()
        for v, r in zip(self.values, g):
            if r:
                acc = acc * v**r
        return acc


def characters(T: FinAbGroup) -> list[Character]:
    """All |T| characters, ordered lexicographically in generator-value exponents."""
    ranges = [range(o) for o in T.orders]
    out = []
    for exps in iproduct(*ranges):
        out.append(Character(T, tuple(RootOfUnity(o, e) for o, e in zip(T.orders, exps))))
    return out


def _prime_factors(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class PrimeComponent:
    """One p-primary factor of a (T, tau) pair under the CRT decomposition.

    Component generator k is multipliers[k] times original generator
    gen_indices[k]; tau restricts to the component in those coordinates.
    """

    prime: int
    group: FinAbGroup
    tau: GroupMap
    gen_indices: tuple[int, ...]
    multipliers: tuple[int, ...]

    def project(self, T: FinAbGroup, g: Elem) -> Elem:
        """Component coordinates of the p-part of g."""
        out = []
        for gi, m, q in zip(self.gen_indices, self.multipliers, self.group.orders):
            t = pow(m, -1, q)
            out.append((t * g[gi]) % q)
        return tuple(out)

    def lift(self, T: FinAbGroup, g_comp: Elem) -> Elem:
        """The T-element with these component coordinates (other parts zero)."""
        acc = T.identity()
        for gi, m, r in zip(self.gen_indices, self.multipliers, g_comp):
            acc = T.add(acc, T.scale(m * r, T.generator(gi)))
        return acc


def split_by_primes(T: FinAbGroup, tau: GroupMap) -> list[PrimeComponent]:
    """CRT decomposition of (T, tau) into prime-power components.

    tau must be an automorphism of T; it preserves each p-primary part, and
    the component map is tau in component coordinates.
    """
    if not is_automorphism(T, tau):
        raise ValueError("map is not an automorphism")
    primes = sorted({p for o in T.orders for p, _ in _prime_factors(o)})
    comps = []
    for p in primes:
        idxs, mults, qs = [], [], []
        for j, o in enumerate(T.orders):
            q = 1
            while o % p == 0:
                o //= p
                q *= p
            if q > 1:
                idxs.append(j)
                mults.append(T.orders[j] // q)
                qs.append(q)
        Tp = FinAbGroup(tuple(qs))
        rows = []
        for r, (gi, qi) in enumerate(zip(idxs, qs)):
            row = []
            for c, (gj, _) in enumerate(zip(idxs, qs)):
                # image of component gen c expressed on component gen r
                x = tau.matrix[gi][gj] * mults[c] * pow(mults[r], -1, qi)
                row.append(x % qi)
            rows.append(tuple(row))
        comps.append(
            PrimeComponent(p, Tp, GroupMap(Tp, Tp, tuple(rows)), tuple(idxs), tuple(mults))
        )
    return comps


def crt_reassemble(T: FinAbGroup, comps: list[PrimeComponent]) -> GroupMap:
    """Rebuild the endomorphism of T from its prime components.

    Each generator decomposes into its p-parts; tau of the generator is the
    sum over components of tau_p applied to that part.
    """
    cols = []
    for j in range(T.rank):
        acc = T.identity()
        g = T.generator(j)
        for comp in comps:
            if j in comp.gen_indices:
                img = comp.tau.apply(comp.project(T, g))
                acc = T.add(acc, comp.lift(T, img))
        cols.append(acc)
    return GroupMap.from_columns(T, T, cols)


@dataclass(frozen=True)
class SymplecticShape:
    """Generators paired as (a_k, b_k) with beta(a_k, b_k) = eps_k.

    pair_orders lists the common order of each pair; the underlying group has
    generator 2k = a_k and 2k+1 = b_k.  The default eps_k is the canonical
    primitive root zeta_{l_k}; CRT components of a shape may carry a different
    primitive root, which is why eps is explicit.
    """

    pair_orders: tuple[int, ...]
    eps: tuple[RootOfUnity, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "pair_orders", tuple(int(x) for x in self.pair_orders))
        if any(o < 1 for o in self.pair_orders):
            raise ValueError("pair orders must be positive")
        if not self.eps:
            object.__setattr__(
                self, "eps", tuple(RootOfUnity(o, 1) for o in self.pair_orders)
            )
        if len(self.eps) != len(self.pair_orders):
            raise ValueError("one eps per pair")
        for e, o in zip(self.eps, self.pair_orders):
            if e.order != o:
                raise ValueError("eps_k must be a primitive root of the pair order")

    @staticmethod
    def pauli(n: int) -> "SymplecticShape":
        return SymplecticShape((n,))

    @staticmethod
    def from_group(T: FinAbGroup) -> "SymplecticShape":
        """Pair up consecutive equal orders of T."""
        if T.rank % 2:
            raise ValueError("group rank must be even for a symplectic shape")
        pairs = []
        for k in range(0, T.rank, 2):
            if T.orders[k] != T.orders[k + 1]:
                raise ValueError("generators must pair up with equal orders")
            pairs.append(T.orders[k])
        return SymplecticShape(tuple(pairs))

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup(tuple(o for o in self.pair_orders for _ in range(2)))

    @property
    def num_pairs(self) -> int:
        return len(self.pair_orders)

    def a_index(self, k: int) -> int:
        return 2 * k

    def b_index(self, k: int) -> int:
        return 2 * k + 1

    def generators(self) -> list[Elem]:
        T = self.group
        return [T.generator(j) for j in range(T.rank)]

    def generator_names(self) -> list[str]:
        if self.num_pairs == 1:
            return ["a", "b"]
        return [f"{c}{k+1}" for k in range(self.num_pairs) for c in ("a", "b")]

    def ambient_order(self) -> int:
        """Default order M of the root-of-unity search space mu_M."""
        e = lcm(*self.pair_orders)
        return 2 * e * e

    def p_group_data(self) -> tuple[int, int] | None:
        """(p, n) when all pair orders are powers of one prime p, else None."""
        facs = [_prime_factors(o) for o in self.pair_orders]
        if any(len(f) != 1 for f in facs):
            return None
        ps = {f[0][0] for f in facs}
        if len(ps) != 1:
            return None
        p = ps.pop()
        n = max(f[0][1] for f in facs)
        return p, n

    def prime_components(self) -> list[tuple[int, "SymplecticShape", tuple[int, ...]]]:
        """CRT split into p-group shapes.

        Returns (p, component shape, multipliers) triples; component pair k is
        generated by multipliers[k] * a_k, multipliers[k] * b_k, and the
        restricted cocycle is standard for eps_k^(multiplier^2).
        """
        primes = sorted({p for o in self.pair_orders for p, _ in _prime_factors(o)})
        out = []
        for p in primes:
            orders, eps, mults = [], [], []
            for o, e in zip(self.pair_orders, self.eps):
                q = 1
                oo = o
                while oo % p == 0:
                    oo //= p
                    q *= p
                if q > 1:
                    m = o // q
                    orders.append(q)
                    eps.append(e ** (m * m))
                    mults.append(m)
            out.append((p, SymplecticShape(tuple(orders), tuple(eps)), tuple(mults)))
        return out
