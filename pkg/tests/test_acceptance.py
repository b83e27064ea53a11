"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every check is exact (integer/rational arithmetic); the stated runtime budgets
are asserted too.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import json
import random
import time

import pytest

from conftest import MINUS, ONE, hom, pauli_setup

from gradinv.abgroup import GroupMap, SymplecticShape, parse_group
from gradinv.classify import classify_pauli
from gradinv.cli import main as cli_main
from gradinv.cocycle import StandardCocycle, coboundary, is_cocycle, twisted_product
from gradinv.cyclotomic import CycNum, RootOfUnity
from gradinv.abgroup import characters, is_automorphism
from gradinv.homog import (
    HomMapData,
    check_homogeneous_map,
    check_involution,
    exists_fixed_or_inverting,
)
from gradinv.matinv import (
    Gamma,
    InvolutionDatum,
    datum_violations,
    form_epsilon,
    psi_from_phi,
    trivial_algebra,
    trivial_psi0,
    validate_datum,
    verify_psi,
)
from gradinv.orbits import (
    canonical_forms,
    conjugate,
    locus,
    mat_det,
    orbit_reduce,
    verify_conjugator_table,
    verify_pairwise_nonconjugate,
)
from gradinv.realize import (
    realize_division_algebra,
    realize_hom_map,
    realized_is_involution,
    verify_map_properties,
)


def report(num, text, t0, budget):
    elapsed = time.time() - t0
    print(f"PASS criterion {num}: {text} ({elapsed:.2f}s, budget {budget}s)")
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget"


def run_cli_json(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def rep_triple(entry):
    return (
        entry["orbit"],
        RootOfUnity.from_json(entry["lambda_a"]),
        RootOfUnity.from_json(entry["lambda_b"]),
    )


def test_criterion_1_odd_levels(capsys):
    t0 = time.time()
    for n in (3, 5):
        t_level = time.time()
        code, doc = run_cli_json(capsys, "classify", "--n", str(n))
        assert code == 0
        counts = doc["result"]["counts"]
        assert counts["equivalence_classes"] == 1
        assert counts["isomorphism_classes_per_orbit"] == {"theta1": 1}
        reps = [rep_triple(c["representative"]) for c in doc["result"]["equivalence_classes"]]
        assert reps == [("theta1", ONE, ONE)]
        assert doc["match"] is True
        assert time.time() - t_level < 10
    with capsys.disabled():
        report(1, "odd levels 3 and 5 classify to the single class (theta1,1,1)", t0, 20)


def test_criterion_2_level_two(capsys):
    t0 = time.time()
    code, doc = run_cli_json(capsys, "classify", "--n", "2")
    assert code == 0
    eps = RootOfUnity(2, 1)
    reps = [rep_triple(c["representative"]) for c in doc["result"]["equivalence_classes"]]
    assert reps == [("theta1", ONE, ONE), ("theta1", MINUS, eps), ("theta2", ONE, ONE)]
    counts = doc["result"]["counts"]
    assert counts["isomorphism_classes_per_orbit"] == {"theta1": 4, "theta2": 1}
    # theta1 iso classes are exactly the sign pairs {(+-1, 1), (+-1, eps)}
    orbit1 = doc["result"]["orbits"][0]
    iso_reps = {
        (
            RootOfUnity.from_json(c["representative"]["lambda_a"]),
            RootOfUnity.from_json(c["representative"]["lambda_b"]),
        )
        for c in orbit1["isomorphism_classes"]
    }
    assert iso_reps == {(ONE, ONE), (ONE, eps), (MINUS, ONE), (MINUS, eps)}
    # merged class holds (1,1), (-1,1), (1,eps); (-1,eps) stays alone
    classes = doc["result"]["equivalence_classes"]
    principal = classes[0]["members"]
    assert len(principal) == 3 and len(classes[1]["members"]) == 1
    lone_iso = classes[1]["members"][0]["iso_class"]
    lone_rep = orbit1["isomorphism_classes"][lone_iso]["representative"]
    assert RootOfUnity.from_json(lone_rep["lambda_a"]) == MINUS
    assert RootOfUnity.from_json(lone_rep["lambda_b"]) == eps
    assert doc["match"] is True
    with capsys.disabled():
        report(2, "level 2 classes {(t1,1,1),(t1,-1,eps),(t2,1,1)} with 4/1 iso", t0, 10)


def test_criterion_3_level_four(capsys):
    t0 = time.time()
    code, doc = run_cli_json(capsys, "classify", "--n", "4")
    assert code == 0
    eps = RootOfUnity(4, 1)
    reps = [rep_triple(c["representative"]) for c in doc["result"]["equivalence_classes"]]
    assert reps == [
        ("theta1", ONE, ONE),
        ("theta1", ONE, eps),
        ("theta1", MINUS, eps),
        ("theta2", ONE, ONE),
        ("theta3", eps, eps),  # eps^(n/4) = eps at n = 4
    ]
    assert doc["result"]["counts"]["isomorphism_classes_per_orbit"] == {
        "theta1": 4,
        "theta2": 1,
        "theta3": 1,
    }
    assert doc["match"] is True
    with capsys.disabled():
        report(3, "level 4 gives the five expected classes with 4/1/1 iso", t0, 60)


def test_criterion_4_composite_level(capsys):
    t0 = time.time()
    code, doc = run_cli_json(capsys, "classify", "--n", "6")
    assert code == 0
    counts = doc["result"]["counts"]
    assert counts["equivalence_classes"] == 3
    assert counts["isomorphism_classes_per_orbit"] == {"theta1": 4, "theta2": 1}
    assert doc["match"] is True
    with capsys.disabled():
        report(4, "composite level 6 matches the 2-mod-4 counts through the prime split", t0, 300)


def test_criterion_5_orbit_lemma_exhaustive():
    t0 = time.time()
    for n in range(2, 9):
        t_mod = time.time()
        reached = set()
        for A in locus(n):
            theta, P = orbit_reduce(A, n)
            assert mat_det(P, n) == 1 % n
            assert conjugate(P, A, n) == theta
            reached.add(theta)
        expected = 1 + (n % 2 == 0) + (n % 4 == 0)
        assert len(reached) == expected, n
        assert verify_pairwise_nonconjugate(n), n
        assert time.time() - t_mod < 30
    report(5, "full det -1 trace 0 scan certifies |O_n| classes for n = 2..8", t0, 240)


def test_criterion_6_conjugator_table_replay():
    t0 = time.time()
    for i in (2, 3, 4):
        assert verify_conjugator_table(2**i), i
    report(6, "conjugator table rows and closed-form second cases replay exactly", t0, 5)


def _lambda_solutions(sig, shape, tau, M):
    from gradinv.homog import _solve_power

    T = shape.group
    n = shape.pair_orders[0]
    out = []
    for j in (0, 1):
        tc = tau.apply(T.generator(j))
        rhs = sig(tc, tc) ** (-(n * (n - 1)) // 2)
        out.append([RootOfUnity(M, e) for e in sorted(_solve_power(n, rhs.as_exponent(M), M))])
    return out


def test_criterion_7_soundness_oracle():
    t0 = time.time()
    for n in (2, 3, 4):
        sh, sig, T = pauli_setup(n)
        R = realize_division_algebra(sh)
        M = sh.ambient_order()
        accepted = 0
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for d in range(n):
                        tau = GroupMap(T, T, ((a, b), (c, d)))
                        las, lbs = _lambda_solutions(sig, sh, tau, M)
                        for la in las:
                            for lb in lbs:
                                m = hom(sh, tau, la, lb)
                                if check_homogeneous_map(sig, m):
                                    accepted += 1
                                    rm = realize_hom_map(R, m)
                                    assert verify_map_properties(R, rm, tau, "anti")
                                    assert check_involution(sig, m) == realized_is_involution(R, rm)
        assert accepted > 0
        rng = random.Random(n)
        rejected = 0
        while rejected < 30:
            tau = GroupMap(
                T, T, tuple(tuple(rng.randrange(n) for _ in range(2)) for _ in range(2))
            )
            m = hom(sh, tau, RootOfUnity(M, rng.randrange(M)), RootOfUnity(M, rng.randrange(M)))
            if check_homogeneous_map(sig, m) or not is_automorphism(T, tau):
                continue
            rm = realize_hom_map(R, m, validate=False)
            assert not verify_map_properties(R, rm, tau, "anti")
            rejected += 1
    report(7, "accepted maps verify and rejected samples fail on the realized algebra", t0, 120)


def test_criterion_8_elementary_two_group():
    t0 = time.time()
    expectations = [
        ("Z2^2", True),
        ("Z2^2xZ2^2", True),
        ("Z3^2", False),
        ("Z4^2", False),
        ("Z4^2xZ2^2", False),
    ]
    for desc, expect in expectations:
        shape = SymplecticShape.from_group(parse_group(desc))
        for variant in ("preserving", "inverting"):
            assert exists_fixed_or_inverting(shape, variant) == expect, (desc, variant)
    report(8, "degree-preserving/inverting maps exist exactly for elementary 2-groups", t0, 60)


def _sec3_suite():
    G4 = parse_group("Z4")
    Dtriv = trivial_algebra()
    p0 = trivial_psi0()
    Ttriv = Dtriv.shape.group
    embt = GroupMap(Ttriv, G4, tuple(() for _ in range(G4.rank)))
    G22 = parse_group("Z2^2")
    embt22 = GroupMap(Ttriv, G22, tuple(() for _ in range(G22.rank)))
    sh2 = SymplecticShape.pauli(2)
    D2 = realize_division_algebra(sh2)
    T2 = sh2.group
    th1 = GroupMap(T2, T2, ((1, 0), (0, 1)))
    psi0 = HomMapData(sh2, th1, (ONE, ONE), "anti")
    emb22 = GroupMap.identity(G22)
    G42 = parse_group("Z4xZ2")
    emb42 = GroupMap.from_columns(T2, G42, [(2, 0), (0, 1)])
    tau42 = GroupMap(G42, G42, ((3, 0), (0, 1)))
    psi0_id = HomMapData(sh2, GroupMap.identity(T2), (ONE, ONE), "anti")
    data = [
        # transpose on an elementary grading of M_2 over Z4
        InvolutionDatum(G4, GroupMap.negation(G4), (0,), Dtriv, p0, embt,
                        Gamma(((0,), (1,)), (), ()), ((), ()), "orthogonal"),
        # hyperbolic orthogonal pair over Z4
        InvolutionDatum(G4, GroupMap.identity(G4), (0,), Dtriv, p0, embt,
                        Gamma((), ((1,),), ((3,),)), (), "orthogonal"),
        # symplectic pair over Z4
        InvolutionDatum(G4, GroupMap.identity(G4), (0,), Dtriv, p0, embt,
                        Gamma((), ((1,),), ((3,),)), (), "symplectic"),
        # size 3: one self-dual vector plus a dual pair over Z4
        InvolutionDatum(G4, GroupMap.negation(G4), (0,), Dtriv, p0, embt,
                        Gamma(((1,),), ((2,),), ((2,),)), ((),), "orthogonal"),
        # trivial D over Z2^2 with a symplectic 4x4 block
        InvolutionDatum(G22, GroupMap.identity(G22), (0, 0), Dtriv, p0, embt22,
                        Gamma((), ((1, 0), (0, 1)), ((1, 0), (0, 1))), (), "symplectic"),
        # one Pauli block, psi = psi0
        InvolutionDatum(G22, th1, (0, 0), D2, psi0, emb22,
                        Gamma(((0, 0),), (), ()), ((0, 0),), "orthogonal"),
        # dual pair of Pauli blocks, orthogonal and symplectic
        InvolutionDatum(G22, th1, (0, 0), D2, psi0, emb22,
                        Gamma((), ((1, 0),), ((1, 0),)), (), "orthogonal"),
        InvolutionDatum(G22, th1, (0, 0), D2, psi0, emb22,
                        Gamma((), ((1, 0),), ((1, 0),)), (), "symplectic"),
        # ambient Z4xZ2 with the support embedded off the coordinate axes
        InvolutionDatum(G42, tau42, (0, 1), D2, psi0_id, emb42,
                        Gamma(((0, 0),), (), ()), ((0, 1),), "orthogonal"),
    ]
    violating = [
        # wrong dual partner degree
        InvolutionDatum(G4, GroupMap.identity(G4), (0,), Dtriv, p0, embt,
                        Gamma((), ((1,),), ((1,),)), (), "orthogonal"),
        # wrong t value
        InvolutionDatum(G42, tau42, (0, 1), D2, psi0_id, emb42,
                        Gamma(((0, 0),), (), ()), ((1, 0),), "orthogonal"),
        # symplectic with a self-dual vector
        InvolutionDatum(G4, GroupMap.negation(G4), (0,), Dtriv, p0, embt,
                        Gamma(((0,),), ((1,),), ((3,),)), ((),), "symplectic"),
        # g0 moved by tau
        InvolutionDatum(G4, GroupMap.negation(G4), (1,), Dtriv, p0, embt,
                        Gamma((), ((1,),), ((2,),)), (), "orthogonal"),
    ]
    return data, violating


def test_criterion_9_matrix_involutions():
    t0 = time.time()
    data, violating = _sec3_suite()
    assert len(data) >= 6
    kinds = {"orthogonal": 0, "symplectic": 0}
    for dat in data:
        assert validate_datum(dat), datum_violations(dat)
        inv = psi_from_phi(dat)
        assert verify_psi(inv)
        eps = form_epsilon(inv)
        assert eps == (1 if dat.kind == "orthogonal" else -1)
        kinds[dat.kind] += 1
    assert kinds["orthogonal"] >= 2 and kinds["symplectic"] >= 2
    for dat in violating:
        assert not validate_datum(dat)
    report(9, f"{len(data)} validated data verify with the right form sign; "
              f"{len(violating)} malformed data rejected", t0, 30)


def test_criterion_10_foundations():
    t0 = time.time()
    shapes = [SymplecticShape.pauli(n) for n in range(2, 7)]
    shapes += [SymplecticShape((2, 2)), SymplecticShape((4, 2))]
    for sh in shapes:
        assert is_cocycle(StandardCocycle(sh)), sh.pair_orders
    # twisted-product associativity on all basis triples for the small shapes
    for sh in (SymplecticShape.pauli(2), SymplecticShape.pauli(3), SymplecticShape((2, 2))):
        sig = StandardCocycle(sh)
        els = sh.group.elements()
        for u in els:
            for v in els:
                uv = twisted_product(sig, (u, ONE), (v, ONE))
                for w in els:
                    assert twisted_product(sig, uv, (w, ONE)) == twisted_product(
                        sig, (u, ONE), twisted_product(sig, (v, ONE), (w, ONE))
                    )
    # coboundaries are cocycles
    T = parse_group("Z2^2")
    lam = {g: RootOfUnity(8, 3 * T.index(g)) for g in T.elements()}
    assert is_cocycle(coboundary(T, lam))
    # character separation
    for desc in ("Z2^2", "Z3^2", "Z4^2", "Z2xZ4"):
        T = parse_group(desc)
        chis = characters(T)
        for g in T.elements():
            if g != T.identity():
                assert any(not chi(g).is_one for chi in chis)
    # cyclotomic field axioms: mul/inv roundtrip over assorted elements
    rng = random.Random(5)
    from fractions import Fraction

    for M in (4, 8, 12):
        from gradinv.cyclotomic import totient

        phi = totient(M)
        for _ in range(25):
            coeffs = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(phi))
            x = CycNum(M, coeffs)
            if not x.is_zero:
                assert x * x.inverse() == CycNum.one(M)
    report(10, "cocycle identity, associativity, characters, field axioms all exact", t0, 30)
