import pytest

from gradinv.abgroup import SymplecticShape, parse_group
from gradinv.cocycle import (
    StandardCocycle,
    TableCocycle,
    bicharacter_beta,
    coboundary,
    is_cocycle,
    is_nondegenerate,
    standard_sigma,
    twisted_product,
)
from gradinv.cyclotomic import RootOfUnity

ONE = RootOfUnity.one()

TEST_SHAPES = [
    SymplecticShape.pauli(n) for n in range(2, 7)
] + [SymplecticShape((2, 2)), SymplecticShape((4, 2))]


class TestStandardSigma:
    def test_generator_values(self):
        for n in (2, 3, 4):
            sh = SymplecticShape.pauli(n)
            a, b = (1, 0), (0, 1)
            assert standard_sigma(sh, a, b).is_one
            assert standard_sigma(sh, b, a) == RootOfUnity(n, 1).inverse()

    def test_right_identity(self):
        sh = SymplecticShape.pauli(5)
        T = sh.group
        zero = T.identity()
        for g in T.elements():
            assert standard_sigma(sh, g, zero).is_one
            assert standard_sigma(sh, zero, g).is_one

    def test_shape_mismatch(self):
        sh = SymplecticShape.pauli(3)
        with pytest.raises(ValueError):
            standard_sigma(sh, (1, 0, 0, 0), (0, 1, 0, 0))

    def test_multiplicative_in_each_argument(self):
        for sh in (SymplecticShape.pauli(3), SymplecticShape((2, 2))):
            sig = StandardCocycle(sh)
            T = sh.group
            els = T.elements()
            for u in els:
                for v in els:
                    for w in els:
                        assert sig(T.add(u, v), w) == sig(u, w) * sig(v, w)
                        assert sig(w, T.add(u, v)) == sig(w, u) * sig(w, v)
            break  # one shape exhaustively is enough here; others below


class TestCocycleIdentity:
    @pytest.mark.parametrize("shape", TEST_SHAPES, ids=lambda s: str(s.pair_orders))
    def test_standard_sigma_is_cocycle(self, shape):
        assert is_cocycle(StandardCocycle(shape))

    def test_coboundary_is_cocycle(self):
        T = parse_group("Z2^2")
        lam = {g: RootOfUnity(4, sum(g)) for g in T.elements()}
        assert is_cocycle(coboundary(T, lam))

    def test_perturbed_table_fails(self):
        sh = SymplecticShape.pauli(3)
        table = StandardCocycle(sh).as_table()
        bad = table.perturbed((1, 0), (0, 1), RootOfUnity(3, 1))
        assert not is_cocycle(bad)

    def test_table_json_roundtrip(self):
        sh = SymplecticShape.pauli(2)
        table = StandardCocycle(sh).as_table()
        doc = table.to_json()
        back = TableCocycle.from_json(doc)
        assert back.group == table.group and back.table == table.table


class TestCoboundary:
    def test_trivial_lambda(self):
        T = parse_group("Z2^2")
        cb = coboundary(T, {g: ONE for g in T.elements()})
        assert all(cb(u, v).is_one for u in T.elements() for v in T.elements())

    def test_value_at_zero(self):
        T = parse_group("Z3^2")
        lam = {g: RootOfUnity(9, T.index(g)) for g in T.elements()}
        cb = coboundary(T, lam)
        zero = T.identity()
        for u in T.elements():
            assert cb(u, zero) == lam[zero]

    def test_multiplicativity_in_lambda(self):
        T = parse_group("Z2^2")
        l1 = {g: RootOfUnity(4, T.index(g)) for g in T.elements()}
        l2 = {g: RootOfUnity(8, 3 * T.index(g)) for g in T.elements()}
        l12 = {g: l1[g] * l2[g] for g in T.elements()}
        c1, c2, c12 = coboundary(T, l1), coboundary(T, l2), coboundary(T, l12)
        for u in T.elements():
            for v in T.elements():
                assert c12(u, v) == c1(u, v) * c2(u, v)

    def test_beta_of_coboundary_is_trivial(self):
        T = parse_group("Z2^2")
        lam = {g: RootOfUnity(8, 5 * T.index(g)) for g in T.elements()}
        beta = bicharacter_beta(coboundary(T, lam))
        assert all(beta(u, v).is_one for u in T.elements() for v in T.elements())


class TestBicharacter:
    def test_pairing_values(self):
        sh = SymplecticShape((4, 2))
        beta = bicharacter_beta(StandardCocycle(sh))
        a1, b1 = (1, 0, 0, 0), (0, 1, 0, 0)
        a2, b2 = (0, 0, 1, 0), (0, 0, 0, 1)
        assert beta(a1, b1) == RootOfUnity(4, 1)
        assert beta(a2, b2) == RootOfUnity(2, 1)
        assert beta(a1, b2).is_one

    def test_alternating(self):
        for sh in TEST_SHAPES[:4]:
            beta = bicharacter_beta(StandardCocycle(sh))
            for u in sh.group.elements():
                assert beta(u, u).is_one

    def test_beta_b_a_is_inverse_eps(self):
        sh = SymplecticShape.pauli(4)
        beta = bicharacter_beta(StandardCocycle(sh))
        assert beta((0, 1), (1, 0)) == RootOfUnity(4, 1).inverse()

    def test_bimultiplicative(self):
        sh = SymplecticShape.pauli(4)
        beta = bicharacter_beta(StandardCocycle(sh))
        T = sh.group
        els = T.elements()
        for u in els:
            for v in els:
                for w in els:
                    assert beta(T.add(u, v), w) == beta(u, w) * beta(v, w)
                    assert beta(u, T.add(v, w)) == beta(u, v) * beta(u, w)

    def test_nondegenerate_standard(self):
        for n in (2, 3, 4, 5):
            beta = bicharacter_beta(StandardCocycle(SymplecticShape.pauli(n)))
            assert is_nondegenerate(beta)

    def test_degenerate_cases(self):
        T = parse_group("Z2^2")
        sh = SymplecticShape.from_group(T)
        trivial = coboundary(T, {g: ONE for g in T.elements()})
        assert not is_nondegenerate(bicharacter_beta(trivial))
        # Z2^4 pairing only the first pair: radical contains the second pair
        sh4 = SymplecticShape((2, 2))
        sig = StandardCocycle(sh4)
        T4 = sh4.group
        rows = []
        for u in T4.elements():
            row = []
            for v in T4.elements():
                u1 = (u[0], u[1], 0, 0)
                v1 = (v[0], v[1], 0, 0)
                row.append(sig(u1, v1) / sig(v1, u1))
            rows.append(tuple(row))
        from gradinv.cocycle import Bicharacter

        partial = Bicharacter(T4, tuple(rows))
        assert not is_nondegenerate(partial)


class TestTwistedProduct:
    def test_examples(self):
        sh = SymplecticShape.pauli(3)
        sig = StandardCocycle(sh)
        a, b = (1, 0), (0, 1)
        assert twisted_product(sig, (a, ONE), (b, ONE)) == ((1, 1), ONE)
        assert twisted_product(sig, (b, ONE), (a, ONE)) == (
            (1, 1),
            RootOfUnity(3, 1).inverse(),
        )
        zero = sh.group.identity()
        for g in sh.group.elements():
            assert twisted_product(sig, (zero, ONE), (g, ONE)) == (g, ONE)

    @pytest.mark.parametrize(
        "shape", [SymplecticShape.pauli(n) for n in (2, 3, 4)] + [SymplecticShape((2, 2))],
        ids=lambda s: str(s.pair_orders),
    )
    def test_associativity(self, shape):
        sig = StandardCocycle(shape)
        els = shape.group.elements()
        for u in els:
            for v in els:
                uv = twisted_product(sig, (u, ONE), (v, ONE))
                for w in els:
                    left = twisted_product(sig, uv, (w, ONE))
                    vw = twisted_product(sig, (v, ONE), (w, ONE))
                    right = twisted_product(sig, (u, ONE), vw)
                    assert left == right
