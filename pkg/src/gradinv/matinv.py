"""Involutions on matrix algebras over a graded-division algebra.

The grading on M_N(D) induced by a degree sequence gamma assigns
deg(e_ij (x) d) = gamma_i + deg d - gamma_j (ambient group written
additively).  An involution datum packages the data of the construction of a
homogeneous involution psi(X) = Phi^-1 psi0(X^t) Phi: a group involution tau,
a fixed element g0 = tau(g0), an involution psi0 of D whose support map is
tau restricted to T, a degree sequence split into self-dual and dual-pair
parts, and the degrees t_i of the diagonal form values.

Naming note: the construction uses one sequence for the basis degrees and a
second, different sequence for the diagonal form degrees; here they are kept
apart as ``gamma`` and ``t_seq``.  The swap block of the orthogonal form is
sized by the number of dual pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abgroup import Elem, FinAbGroup, GroupMap, SymplecticShape, is_automorphism
from .cocycle import StandardCocycle
from .cyclotomic import CycNum, RootOfUnity, embed_root
from .homog import HomMapData, check_homogeneous_map, check_involution, lambda_extend
from .realize import CycMatrix, RealizedAlgebra, realize_division_algebra

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


def trivial_algebra() -> RealizedAlgebra:
    """The trivially graded division algebra F (support the zero group)."""
    return realize_division_algebra(SymplecticShape(()))


def trivial_psi0() -> HomMapData:
    shape = SymplecticShape(())
    T = shape.group
    return HomMapData(shape, GroupMap.identity(T), (), "anti")


@dataclass(frozen=True)
class Gamma:
    """Degree sequence (g_1..g_m, g'_{m+1}..g'_s, g''_{m+1}..g''_s)."""

    self_dual: tuple[Elem, ...]
    dual_first: tuple[Elem, ...]
    dual_second: tuple[Elem, ...]

    def __post_init__(self):
        if len(self.dual_first) != len(self.dual_second):
            raise ValueError("dual-pair degree lists must have equal length")
        if not self.self_dual and not self.dual_first:
            raise ValueError("degree sequence must be nonempty")

    @property
    def m(self) -> int:
        return len(self.self_dual)

    @property
    def num_dual(self) -> int:
        return len(self.dual_first)

    @property
    def size(self) -> int:
        return self.m + 2 * self.num_dual

    def degrees(self) -> tuple[Elem, ...]:
        return self.self_dual + self.dual_first + self.dual_second


@dataclass(frozen=True)
class GradedMatrixAlgebra:
    """M_N(D) with the grading induced by a degree sequence."""

    G: FinAbGroup
    D: RealizedAlgebra
    embed: GroupMap  # support of D -> G, injective
    gamma: Gamma

    def __post_init__(self):
        T = self.D.shape.group
        if self.embed.domain != T or self.embed.codomain != self.G:
            raise ValueError("embedding must map the support of D into G")
        image = {self.embed.apply(t) for t in T.elements()}
        if len(image) != T.order:
            raise ValueError("support embedding must be injective")
        for g in self.gamma.degrees():
            if len(g) != self.G.rank:
                raise ValueError("degree sequence entries must be elements of G")

    @property
    def size(self) -> int:
        return self.gamma.size

    def cell_degree(self, i: int, j: int, t: Elem) -> Elem:
        degs = self.gamma.degrees()
        return self.G.add(self.G.sub(degs[i], degs[j]), self.embed.apply(t))

    def support(self) -> set[Elem]:
        T = self.D.shape.group
        N = self.size
        return {
            self.cell_degree(i, j, t)
            for i in range(N)
            for j in range(N)
            for t in T.elements()
        }


def build_grading(
    G: FinAbGroup,
    D: RealizedAlgebra | None,
    gamma: Gamma,
    embed: GroupMap | None = None,
) -> GradedMatrixAlgebra:
    """Assemble the graded matrix algebra, defaulting D to the trivial algebra
    and the embedding to the zero map of the trivial support."""
    if D is None:
        D = trivial_algebra()
    if embed is None:
        T = D.shape.group
        if T.rank == 0:
            embed = GroupMap(T, G, tuple(() for _ in range(G.rank)))
        elif T.orders == G.orders:
            embed = GroupMap.identity(G)
        else:
            raise ValueError("an explicit support embedding is required")
    return GradedMatrixAlgebra(G, D, embed, gamma)


@dataclass(frozen=True)
class InvolutionDatum:
    """Everything that pins down psi = Phi^-1 psi0(X^t) Phi on M_N(D)."""

    G: FinAbGroup
    tau: GroupMap
    g0: Elem
    D: RealizedAlgebra
    psi0: HomMapData
    embed: GroupMap
    gamma: Gamma
    t_seq: tuple[Elem, ...]  # elements of the support of D
    kind: str

    def grading(self) -> GradedMatrixAlgebra:
        return GradedMatrixAlgebra(self.G, self.D, self.embed, self.gamma)


def datum_violations(dat: InvolutionDatum) -> list[str]:
    """All reasons the datum fails validation; empty list means valid."""
    out = []
    G = dat.G
    T = dat.D.shape.group
    if dat.kind not in (ORTHOGONAL, SYMPLECTIC):
        return [f"unknown kind {dat.kind!r}"]
    if not is_automorphism(G, dat.tau):
        return ["tau is not an automorphism of G"]
    if dat.tau.compose(dat.tau) != GroupMap.identity(G):
        out.append("tau is not an involution of G")
    if dat.tau.apply(dat.g0) != G.element(dat.g0):
        out.append("g0 is not fixed by tau")
    # embedding sanity and the degree law for psi0: tau restricted to the
    # support must be the support map of psi0 (abelian ambient group)
    image = {dat.embed.apply(t) for t in T.elements()}
    if len(image) != T.order:
        out.append("support embedding is not injective")
    else:
        for j in range(T.rank):
            t = T.generator(j)
            if dat.tau.apply(dat.embed.apply(t)) != dat.embed.apply(dat.psi0.tau.apply(t)):
                out.append("psi0 degree law fails: tau does not extend the support map")
                break
    sigma = StandardCocycle(dat.D.shape)
    try:
        if not check_homogeneous_map(sigma, dat.psi0) or not check_involution(sigma, dat.psi0):
            out.append("psi0 is not an involution of D")
    except ValueError:
        out.append("psi0 is not an involution of D")
    gamma = dat.gamma
    if len(dat.t_seq) != gamma.m:
        out.append("t_seq length must equal the number of self-dual degrees")
    else:
        for i, g_i in enumerate(gamma.self_dual):
            want = G.add(dat.tau.apply(dat.g0), G.add(dat.tau.apply(g_i), G.element(g_i)))
            if dat.embed.apply(dat.t_seq[i]) != want:
                out.append(f"t_seq[{i}] violates t_i = tau(g0) + tau(g_i) + g_i")
    for j, (gp, gpp) in enumerate(zip(gamma.dual_first, gamma.dual_second)):
        want = G.sub(G.neg(dat.tau.apply(gp)), G.element(dat.g0))
        if G.element(gpp) != want:
            out.append(f"dual pair {j} violates g''_j = -tau(g'_j) - g0")
    if dat.kind == SYMPLECTIC and gamma.m != 0:
        out.append("symplectic kind forces m = 0")
    if dat.kind == ORTHOGONAL and not out:
        # each diagonal form value X_{t_i} must be psi0-symmetric
        for i, t in enumerate(dat.t_seq):
            lam = lambda_extend(sigma, dat.psi0, T.element(t))
            if dat.psi0.tau.apply(T.element(t)) != T.element(t) or not lam.is_one:
                out.append(f"X_t for t_seq[{i}] is not psi0-symmetric")
    return out


def validate_datum(dat: InvolutionDatum) -> bool:
    return not datum_violations(dat)


def _big_cell(M: int, N: int, r: int, i: int, j: int, block: CycMatrix) -> CycMatrix:
    rows = [[CycNum.zero(M)] * (N * r) for _ in range(N * r)]
    for bi in range(r):
        for bj in range(r):
            rows[i * r + bi][j * r + bj] = block.rows[bi][bj]
    return CycMatrix(M, rows)


def build_Phi(dat: InvolutionDatum) -> CycMatrix:
    """The form matrix: diagonal X_{t_i} blocks followed by the dual-pair swap
    block (orthogonal) or the antisymmetric pairing block (symplectic)."""
    bad = datum_violations(dat)
    if bad:
        raise ValueError("invalid datum: " + "; ".join(bad))
    D = dat.D
    M = D.ambient_order
    r = D.dim
    N = dat.gamma.size
    m = dat.gamma.m
    s_minus_m = dat.gamma.num_dual
    T = D.shape.group
    acc = [[CycNum.zero(M)] * (N * r) for _ in range(N * r)]

    def put(i, j, block, sign=1):
        for bi in range(r):
            for bj in range(r):
                v = block.rows[bi][bj]
                acc[i * r + bi][j * r + bj] = -v if sign < 0 else v

    ident = D.basis[T.identity()]
    for i, t in enumerate(dat.t_seq):
        put(i, i, D.basis[T.element(t)])
    for j in range(s_minus_m):
        if dat.kind == ORTHOGONAL:
            put(m + j, m + s_minus_m + j, ident)
            put(m + s_minus_m + j, m + j, ident)
        else:
            put(m + j, m + s_minus_m + j, ident)
            put(m + s_minus_m + j, m + j, ident, sign=-1)
    return CycMatrix(M, acc)


@dataclass
class MatrixInvolution:
    """psi(X) = Phi^-1 psi0(X^t) Phi, with psi0 applied to the D-entries and
    the transpose taken blockwise."""

    datum: InvolutionDatum
    Phi: CycMatrix
    Phi_inv: CycMatrix
    psi0_images: dict  # support elem -> CycMatrix of psi0(X_t)
    basis_inverses: dict  # support elem -> CycMatrix of X_t^-1

    @property
    def D(self) -> RealizedAlgebra:
        return self.datum.D

    @property
    def r(self) -> int:
        return self.D.dim

    @property
    def N(self) -> int:
        return self.datum.gamma.size

    def cell(self, i: int, j: int, t: Elem) -> CycMatrix:
        return _big_cell(self.D.ambient_order, self.N, self.r, i, j, self.D.basis[t])

    def _psi0_block(self, block: CycMatrix) -> CycMatrix:
        """psi0 extended linearly to an arbitrary element of D, via exact
        trace-form coefficient extraction against the basis."""
        D = self.D
        M = D.ambient_order
        r = self.r
        out = CycMatrix.zeros(M, r)
        for t in D.shape.group.elements():
            coeff = (self.basis_inverses[t] * block).trace().scale(Fraction(1, r))
            if not coeff.is_zero:
                out = out + self.psi0_images[t].scale(coeff)
        return out

    def apply(self, big: CycMatrix) -> CycMatrix:
        N, r = self.N, self.r
        M = self.D.ambient_order
        rows = [[CycNum.zero(M)] * (N * r) for _ in range(N * r)]
        for i in range(N):
            for j in range(N):
                block = CycMatrix(
                    M,
                    [
                        [big.rows[j * r + bi][i * r + bj] for bj in range(r)]
                        for bi in range(r)
                    ],
                )
                if block.is_zero:
                    continue
                im = self._psi0_block(block)
                for bi in range(r):
                    for bj in range(r):
                        rows[i * r + bi][j * r + bj] = im.rows[bi][bj]
        return self.Phi_inv * CycMatrix(M, rows) * self.Phi

    def decompose(self, big: CycMatrix) -> dict:
        """Write a matrix as a combination of basis cells: (i, j, t) -> CycNum."""
        N, r = self.N, self.r
        M = self.D.ambient_order
        out = {}
        for i in range(N):
            for j in range(N):
                block = CycMatrix(
                    M,
                    [
                        [big.rows[i * r + bi][j * r + bj] for bj in range(r)]
                        for bi in range(r)
                    ],
                )
                if block.is_zero:
                    continue
                for t in self.D.shape.group.elements():
                    coeff = (self.basis_inverses[t] * block).trace()
                    coeff = coeff.scale(Fraction(1, r))
                    if not coeff.is_zero:
                        out[(i, j, t)] = coeff
        return out


def psi_from_phi(dat: InvolutionDatum) -> MatrixInvolution:
    """Construct the matrix involution from a validated datum."""
    Phi = build_Phi(dat)
    D = dat.D
    sigma = StandardCocycle(D.shape)
    T = D.shape.group
    psi0_images = {}
    basis_inverses = {}
    for t in T.elements():
        lam = lambda_extend(sigma, dat.psi0, t)
        image = D.basis[dat.psi0.tau.apply(t)].scale(embed_root(lam, D.ambient_order))
        psi0_images[t] = image
        basis_inverses[t] = D.basis[t].inverse()
    return MatrixInvolution(dat, Phi, Phi.inverse(), psi0_images, basis_inverses)


def form_epsilon(inv: MatrixInvolution) -> int:
    """The sign eps with psi0-blockwise-transpose(Phi) = eps * Phi.

    +1 classifies the involution as orthogonal, -1 as symplectic; anything
    else means the (Phi, psi0) pair is not a valid form and raises.
    """
    Phi = inv.Phi
    N, r = inv.N, inv.r
    M = inv.D.ambient_order
    rows = [[CycNum.zero(M)] * (N * r) for _ in range(N * r)]
    for i in range(N):
        for j in range(N):
            block = CycMatrix(
                M,
                [[Phi.rows[j * r + bi][i * r + bj] for bj in range(r)] for bi in range(r)],
            )
            if block.is_zero:
                continue
            im = inv._psi0_block(block)
            for bi in range(r):
                for bj in range(r):
                    rows[i * r + bi][j * r + bj] = im.rows[bi][bj]
    flipped = CycMatrix(M, rows)
    if flipped == Phi:
        return 1
    if flipped == -Phi:
        return -1
    raise ValueError("form is not +-symmetric under psi0")


def verify_psi(inv: MatrixInvolution, tau: GroupMap | None = None) -> bool:
    """Exhaustive verification on basis cells: psi^2 = id, anti-multiplicative
    on all cell pairs, and each homogeneous component maps onto the tau-image
    component."""
    dat = inv.datum
    grading = dat.grading()
    tau = dat.tau if tau is None else tau
    T = inv.D.shape.group
    N = inv.N
    cells = [(i, j, t) for i in range(N) for j in range(N) for t in T.elements()]
    mats = {c: inv.cell(*c) for c in cells}
    images = {c: inv.apply(mats[c]) for c in cells}
    # involutive
    for c in cells:
        if inv.apply(images[c]) != mats[c]:
            return False
    # homogeneous of the right degree
    for c in cells:
        want = tau.apply(grading.cell_degree(*c))
        for (k, l, u), coeff in inv.decompose(images[c]).items():
            if grading.cell_degree(k, l, u) != want:
                return False
    # anti-multiplicative, psi applied to products by linearity
    for c1 in cells:
        for c2 in cells:
            prod = mats[c1] * mats[c2]
            parts = inv.decompose(prod)
            M = inv.D.ambient_order
            lhs = CycMatrix.zeros(M, N * inv.r)
            for cell, coeff in parts.items():
                lhs = lhs + images[cell].scale(coeff)
            rhs = images[c2] * images[c1]
            if lhs != rhs:
                return False
    return True
