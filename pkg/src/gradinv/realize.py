"""Concrete matrix realization of twisted group algebras via generalized Pauli
matrices, and brute-force verification of (tau, lambda) maps against it.

The basis matrix of X_g is the ordered product of clock/shift generator powers
(a-powers before b-powers, pairs in index order); with that convention the
realized products reproduce the normal-form cocycle on the nose, which a test
asserts rather than assumes.  Basis matrices are stored densely over the
cyclotomic field; since every one of them is monomial, the exhaustive pair
checks run on an extracted permutation-with-roots view whose agreement with
dense multiplication is itself asserted by tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abgroup import Elem, SymplecticShape
from .cocycle import StandardCocycle
from .cyclotomic import CycNum, RootOfUnity, embed_root, root_exponent
from .homog import HomMapData, check_homogeneous_map, lambda_extend


class CycMatrix:
    """Dense matrix over a fixed cyclotomic field, exact arithmetic throughout."""

    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows):
        self.order = order
        self.rows = tuple(tuple(rows[i][j] for j in range(len(rows[i]))) for i in range(len(rows)))
        w = len(self.rows[0]) if self.rows else 0
        if any(len(r) != w for r in self.rows):
            raise ValueError("ragged rows")
        for r in self.rows:
            for x in r:
                if not isinstance(x, CycNum) or x.order != order:
                    raise ValueError("entries must be CycNum of the matrix order")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @staticmethod
    def from_scalars(order: int, rows) -> "CycMatrix":
        return CycMatrix(
            order,
            [[x if isinstance(x, CycNum) else CycNum.from_rational(order, x) for x in row] for row in rows],
        )

    @staticmethod
    def identity(order: int, n: int) -> "CycMatrix":
        z, o = CycNum.zero(order), CycNum.one(order)
        return CycMatrix(order, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(order: int, n: int, m: int | None = None) -> "CycMatrix":
        m = n if m is None else m
        z = CycNum.zero(order)
        return CycMatrix(order, [[z] * m for _ in range(n)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycMatrix)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.order, self.rows))

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            self.order,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            self.order,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.order, [[-a for a in r] for r in self.rows])

    def __mul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        zero = CycNum.zero(self.order)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    if a.is_zero:
                        continue
                    b = other.rows[k][j]
                    if b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return CycMatrix(self.order, out)

    def scale(self, c: CycNum) -> "CycMatrix":
        return CycMatrix(self.order, [[c * a for a in r] for r in self.rows])

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.order, list(zip(*self.rows)))

    def trace(self) -> CycNum:
        acc = CycNum.zero(self.order)
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for r in self.rows for x in r)

    def kron(self, other: "CycMatrix") -> "CycMatrix":
        out = []
        for i in range(self.nrows):
            for k in range(other.nrows):
                row = []
                for j in range(self.ncols):
                    a = self.rows[i][j]
                    row.extend(a * b for b in other.rows[k])
                out.append(row)
        return CycMatrix(self.order, out)

    def inverse(self) -> "CycMatrix":
        """Gauss-Jordan over the field; raises on singular input."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse needs a square matrix")
        aug = [list(self.rows[i]) + list(CycMatrix.identity(self.order, n).rows[i]) for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col].is_zero), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return CycMatrix(self.order, [row[n:] for row in aug])

    def to_json(self) -> dict:
        return {
            "M": self.order,
            "rows": [[x.to_json()["coeffs"] for x in r] for r in self.rows],
        }

    def __repr__(self):
        return f"CycMatrix({self.nrows}x{self.ncols}, Q(zeta_{self.order}))"


@dataclass(frozen=True)
class MonomialMatrix:
    """Matrix with exactly one root-of-unity entry per row and column.

    Row i carries value roots[i] in column cols[i].  Multiplication is genuine
    matrix multiplication specialized to this support pattern.
    """

    size: int
    cols: tuple[int, ...]
    roots: tuple[RootOfUnity, ...]

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        cols = tuple(other.cols[c] for c in self.cols)
        roots = tuple(r * other.roots[c] for r, c in zip(self.roots, self.cols))
        return MonomialMatrix(self.size, cols, roots)

    def scale(self, c: RootOfUnity) -> "MonomialMatrix":
        return MonomialMatrix(self.size, self.cols, tuple(c * r for r in self.roots))

    def to_dense(self, M: int) -> CycMatrix:
        z = CycNum.zero(M)
        rows = [[z] * self.size for _ in range(self.size)]
        for i, (c, r) in enumerate(zip(self.cols, self.roots)):
            rows[i][c] = embed_root(r, M)
        return CycMatrix(M, rows)

    @staticmethod
    def from_dense(mat: CycMatrix) -> "MonomialMatrix":
        """Extract the monomial view; raises if the matrix is not monomial with
        root-of-unity entries."""
        n = mat.nrows
        cols, roots = [], []
        for i in range(n):
            nz = [j for j in range(n) if not mat.rows[i][j].is_zero]
            if len(nz) != 1:
                raise ValueError("matrix is not monomial")
            e = root_exponent(mat.rows[i][nz[0]])
            if e is None:
                raise ValueError("entry is not a root of unity")
            cols.append(nz[0])
            roots.append(RootOfUnity(mat.order, e))
        if sorted(cols) != list(range(n)):
            raise ValueError("matrix is not monomial")
        return MonomialMatrix(n, tuple(cols), tuple(roots))


def pauli_generators(ell: int, eps: RootOfUnity, M: int) -> tuple[CycMatrix, CycMatrix]:
    """Clock and shift matrices: X = diag(eps^(l-1), ..., eps, 1), Y the cyclic
    shift with ones on the first superdiagonal and the lower-left corner."""
    if eps.order != ell:
        raise ValueError("eps must have order equal to the block size")
    z, o = CycNum.zero(M), CycNum.one(M)
    X = [[z] * ell for _ in range(ell)]
    for i in range(ell):
        X[i][i] = embed_root(eps ** (ell - 1 - i), M)
    Y = [[z] * ell for _ in range(ell)]
    for i in range(ell - 1):
        Y[i][i + 1] = o
    Y[ell - 1][0] = o
    return CycMatrix(M, X), CycMatrix(M, Y)


@dataclass(frozen=True)
class RealizedAlgebra:
    """The twisted group algebra realized by matrices: one monomial basis
    matrix per support element, with X_u X_v = sigma(u, v) X_{u+v}."""

    shape: SymplecticShape
    ambient_order: int
    basis: dict  # Elem -> CycMatrix
    mono: dict  # Elem -> MonomialMatrix
    dim: int

    def identify(self, m: MonomialMatrix) -> tuple[RootOfUnity, Elem]:
        """Write a monomial matrix as coeff * X_g; raises if impossible."""
        for g, bm in self.mono.items():
            if bm.cols == m.cols:
                c = m.roots[0] / bm.roots[0]
                if all(m.roots[i] == c * bm.roots[i] for i in range(m.size)):
                    return c, g
        raise ValueError("matrix is not a scalar multiple of a basis matrix")

    def to_json(self) -> dict:
        els = self.shape.group.elements()
        return {
            "group": self.shape.group.descriptor(),
            "ambient_order": self.ambient_order,
            "basis": [
                {"element": list(g), "matrix": self.basis[g].to_json()} for g in els
            ],
        }


def realize_division_algebra(shape: SymplecticShape, M: int | None = None) -> RealizedAlgebra:
    """Basis matrices for every support element under the ordered-product
    convention X_g = prod_k X_{a_k}^{alpha_k} X_{b_k}^{beta_k}."""
    M = shape.ambient_order() if M is None else M
    gens = []
    for ell, eps in zip(shape.pair_orders, shape.eps):
        gens.append(pauli_generators(ell, eps, M))
    T = shape.group
    basis = {}
    mono = {}
    for g in T.elements():
        blocks = []
        for k, (X, Y) in enumerate(gens):
            alpha, beta = g[2 * k], g[2 * k + 1]
            blk = CycMatrix.identity(M, X.nrows)
            for _ in range(alpha):
                blk = blk * X
            for _ in range(beta):
                blk = blk * Y
            blocks.append(blk)
        mat = blocks[0] if blocks else CycMatrix.identity(M, 1)
        for blk in blocks[1:]:
            mat = mat.kron(blk)
        basis[g] = mat
        mono[g] = MonomialMatrix.from_dense(mat)
    dim = basis[T.identity()].nrows
    return RealizedAlgebra(shape, M, basis, mono, dim)


@dataclass(frozen=True)
class RealizedMap:
    """A linear map on the realized algebra given by its basis images
    X_g -> coeff_g * X_{image_g}."""

    algebra: RealizedAlgebra
    images: dict  # Elem -> (RootOfUnity, Elem)

    def image_mono(self, g: Elem) -> MonomialMatrix:
        c, h = self.images[g]
        return self.algebra.mono[h].scale(c)

    def image_dense(self, g: Elem) -> CycMatrix:
        c, h = self.images[g]
        return self.algebra.basis[h].scale(embed_root(c, self.algebra.ambient_order))


def realize_hom_map(R: RealizedAlgebra, m: HomMapData, validate: bool = True) -> RealizedMap:
    """Realize (tau, lambda) data as a linear map via X_g -> lambda_g X_{tau(g)}.

    With validate=True the data must pass check_homogeneous_map; the oracle
    tests construct maps from rejected data with validate=False on purpose.
    """
    sigma = StandardCocycle(R.shape)
    if validate and not check_homogeneous_map(sigma, m):
        raise ValueError("data does not define a homogeneous map")
    T = R.shape.group
    images = {}
    for g in T.elements():
        images[g] = (lambda_extend(sigma, m, g), m.tau.apply(g))
    return RealizedMap(R, images)


def verify_map_properties(R: RealizedAlgebra, rmap: RealizedMap, tau, mode: str) -> bool:
    """Exhaustive check that the realized map is (anti-)multiplicative on all
    basis pairs and sends each homogeneous component onto the tau-image one.

    All products are genuine matrix products of the realized basis matrices;
    the cocycle is never consulted.
    """
    T = R.shape.group
    els = T.elements()
    for g in els:
        c, h = rmap.images[g]
        if h != tau.apply(g):
            return False
    for u in els:
        mu = R.mono[u]
        psi_u = rmap.image_mono(u)
        for v in els:
            prod = mu * R.mono[v]
            coeff, w = R.identify(prod)
            lhs = rmap.image_mono(w).scale(coeff)
            if mode == "anti":
                rhs = rmap.image_mono(v) * psi_u
            else:
                rhs = psi_u * rmap.image_mono(v)
            if lhs != rhs:
                return False
    return True


def realized_is_involution(R: RealizedAlgebra, rmap: RealizedMap) -> bool:
    """Whether the realized map squares to the identity on every basis element."""
    for g in R.shape.group.elements():
        c1, h = rmap.images[g]
        c2, k = rmap.images[h]
        if k != g or not (c1 * c2).is_one:
            return False
    return True


def involution_form(R: RealizedAlgebra, rmap: RealizedMap) -> tuple[CycMatrix, int]:
    """The matrix Phi with psi(X) = Phi^-1 X^t Phi, and the sign of Phi^t = +-Phi.

    Phi is the unique-up-to-scalar intertwiner X_c^t Phi = Phi psi(X_c) over
    the algebra generators; its symmetry sign classifies the involution as
    orthogonal (+1) or symplectic (-1).
    """
    M = R.ambient_order
    d = R.dim
    T = R.shape.group
    gens = [T.generator(j) for j in range(T.rank)]
    # unknowns: Phi entries, row-major; equations: X_c^t Phi - Phi psi(X_c) = 0
    rows = []
    for c in gens:
        A = R.basis[c].transpose()
        B = rmap.image_dense(c)
        for i in range(d):
            for j in range(d):
                row = [CycNum.zero(M)] * (d * d)
                for k in range(d):
                    row[k * d + j] = row[k * d + j] + A.rows[i][k]
                    row[i * d + k] = row[i * d + k] - B.rows[k][j]
                rows.append(row)
    null = _nullspace(rows, d * d, M)
    if len(null) != 1:
        raise ValueError("intertwiner space is not one-dimensional")
    sol = null[0]
    Phi = CycMatrix(M, [[sol[i * d + j] for j in range(d)] for i in range(d)])
    if Phi.transpose() == Phi:
        return Phi, 1
    if Phi.transpose() == -Phi:
        return Phi, -1
    raise ValueError("intertwiner is neither symmetric nor antisymmetric")


def _nullspace(rows, width, M):
    # Gaussian elimination over Q(zeta_M); returns a basis of the kernel
    mat = [list(r) for r in rows]
    pivots = {}
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [CycNum.zero(M)] * width
        vec[f] = CycNum.one(M)
        for c, pr in pivots.items():
            vec[c] = -mat[pr][f]
        basis.append(vec)
    return basis
