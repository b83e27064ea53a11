"""Classification driver for homogeneous involutions on the Pauli grading.

For each canonical orbit representative theta in O_n the driver enumerates all
(theta, lambda_a, lambda_b) involutions with lambda values in mu_M, M = 2n^2,
groups them into isomorphism classes by exhaustive character search, then
computes the equivalence classes across all orbits; composite n routes the
equivalence decisions through the prime components.  Reports carry the
expected values of the known classification alongside the computed ones, with
a match flag, and every merge is backed by a stored witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .abgroup import GroupMap, SymplecticShape
from .cocycle import StandardCocycle
from .cyclotomic import RootOfUnity
from .homog import (
    HomMapData,
    WitnessData,
    _solve_power,
    are_equivalent,
    are_isomorphic,
    check_homogeneous_map,
    check_involution,
    lambda_extend,
    restrict_hom_map,
)
from .orbits import canonical_forms, theta_label
from .realize import involution_form, realize_division_algebra, realize_hom_map

DEFAULT_MAX_LEVEL = 12


def pauli_involutions(
    sigma: StandardCocycle, tau: GroupMap
) -> list[tuple[RootOfUnity, RootOfUnity]]:
    """All (lambda_a, lambda_b) with (tau, lambda_a, lambda_b) an involution,
    lambda values in mu_M, sorted by exponent pairs."""
    shape = sigma.shape
    T = shape.group
    n = shape.pair_orders[0]
    M = shape.ambient_order()
    cands = []
    for j in (0, 1):
        tc = tau.apply(T.generator(j))
        rhs = sigma(tc, tc) ** (-(n * (n - 1)) // 2)
        t = rhs.as_exponent(M)
        cands.append([RootOfUnity(M, e) for e in sorted(_solve_power(n, t, M))])
    out = []
    for la in cands[0]:
        for lb in cands[1]:
            m = HomMapData(shape, tau, (la, lb), "anti")
            if not check_homogeneous_map(sigma, m):
                continue
            ok = True
            for j in (0, 1):
                c = T.generator(j)
                if not (m.lambdas[j] * lambda_extend(sigma, m, tau.apply(c))).is_one:
                    ok = False
                    break
            if ok and check_involution(sigma, m):
                out.append((la, lb))
    out.sort(key=lambda p: (p[0].as_exponent(M), p[1].as_exponent(M)))
    return out


@dataclass
class IsoClass:
    representative: tuple[RootOfUnity, RootOfUnity]
    members: list[tuple[RootOfUnity, RootOfUnity]]
    witnesses: list[WitnessData | None]  # aligned with members; None for the rep


@dataclass
class OrbitClassification:
    label: str
    theta: tuple[int, int, int, int]
    tau: GroupMap
    involutions: list[tuple[RootOfUnity, RootOfUnity]]
    iso_classes: list[IsoClass]


@dataclass
class EquivClass:
    representative: tuple[str, RootOfUnity, RootOfUnity]
    members: list[tuple[str, int]]  # (orbit label, iso class index)
    kind: str
    witnesses: dict  # (orbit label, iso index) -> WitnessData for merge with rep


@dataclass
class ClassificationReport:
    n: int
    ambient_order: int
    orbits: list[OrbitClassification]
    equivalence_classes: list[EquivClass]
    expected: dict
    match: bool

    def counts(self) -> dict:
        return {
            "equivalence_classes": len(self.equivalence_classes),
            "isomorphism_classes_per_orbit": {
                o.label: len(o.iso_classes) for o in self.orbits
            },
        }

    def to_json(self) -> dict:
        def root(r: RootOfUnity) -> dict:
            return r.to_json()

        orbits = []
        for o in self.orbits:
            iso = []
            for k, cls in enumerate(o.iso_classes):
                members = []
                for (la, lb), w in zip(cls.members, cls.witnesses):
                    entry = {"lambda_a": root(la), "lambda_b": root(lb)}
                    if w is not None:
                        entry["chi_on_generators"] = [
                            root(w.chi[self.group_generator(o, 0)]),
                            root(w.chi[self.group_generator(o, 1)]),
                        ]
                    members.append(entry)
                iso.append(
                    {
                        "representative": {
                            "lambda_a": root(cls.representative[0]),
                            "lambda_b": root(cls.representative[1]),
                        },
                        "members": members,
                    }
                )
            orbits.append(
                {
                    "label": o.label,
                    "matrix": [list(o.theta[:2]), list(o.theta[2:])],
                    "involution_count": len(o.involutions),
                    "isomorphism_classes": iso,
                }
            )
        eq = []
        for c in self.equivalence_classes:
            label, la, lb = c.representative
            eq.append(
                {
                    "representative": {
                        "orbit": label,
                        "lambda_a": root(la),
                        "lambda_b": root(lb),
                    },
                    "members": [{"orbit": m[0], "iso_class": m[1]} for m in c.members],
                    "kind": c.kind,
                }
            )
        return {
            "n": self.n,
            "ambient_order": self.ambient_order,
            "orbits": orbits,
            "equivalence_classes": eq,
            "counts": self.counts(),
        }

    def group_generator(self, orbit: OrbitClassification, j: int):
        T = orbit.tau.domain
        return T.generator(j)

    def to_csv(self) -> str:
        lines = [
            "orbit,lambda_a_order,lambda_a_exp,lambda_b_order,lambda_b_exp,iso_class,equiv_class"
        ]
        eq_of = {}
        for ei, c in enumerate(self.equivalence_classes):
            for mem in c.members:
                eq_of[mem] = ei
        for o in self.orbits:
            iso_of = {}
            for k, cls in enumerate(o.iso_classes):
                for mem in cls.members:
                    iso_of[mem] = k
            for la, lb in o.involutions:
                k = iso_of[(la, lb)]
                lines.append(
                    f"{o.label},{la.order},{la.exp},{lb.order},{lb.exp},{k},{eq_of[(o.label, k)]}"
                )
        return "\n".join(lines) + "\n"


def expected_classification(n: int) -> dict:
    """Reference values for the homogeneous-involution classification of the
    Pauli grading at level n, keyed by n mod 4."""
    one = RootOfUnity.one().to_json()
    minus = RootOfUnity.minus_one().to_json()
    eps = RootOfUnity(n, 1).to_json()
    if n % 2 == 1:
        reps = [("theta1", one, one)]
        iso = {"theta1": 1}
    elif n % 4 == 2:
        reps = [("theta1", one, one), ("theta1", minus, eps), ("theta2", one, one)]
        iso = {"theta1": 4, "theta2": 1}
    else:
        quarter = RootOfUnity(n, n // 4).to_json()
        reps = [
            ("theta1", one, one),
            ("theta1", one, eps),
            ("theta1", minus, eps),
            ("theta2", one, one),
            ("theta3", quarter, eps),
        ]
        iso = {"theta1": 4, "theta2": 1, "theta3": 1}
    return {
        "equivalence_classes": len(reps),
        "equivalence_representatives": [
            {"orbit": r[0], "lambda_a": r[1], "lambda_b": r[2]} for r in reps
        ],
        "isomorphism_classes_per_orbit": iso,
    }


def _involution_kind(sigma: StandardCocycle, m: HomMapData) -> str:
    """Orthogonal or symplectic, read off the realized matrix form.

    The sign is computed per prime component (the form of a tensor product is
    the product of the component forms) so composite levels never need the
    full-size realization.
    """
    sign = 1
    for _, comp_shape, mults in m.shape.prime_components():
        comp_sigma = StandardCocycle(comp_shape)
        comp_m = restrict_hom_map(sigma, m, comp_shape, mults)
        R = realize_division_algebra(comp_shape)
        _, s = involution_form(R, realize_hom_map(R, comp_m))
        sign *= s
    return "orthogonal" if sign == 1 else "symplectic"


def classify_pauli(n: int, max_level: int = DEFAULT_MAX_LEVEL) -> ClassificationReport:
    """Full classification report for the Pauli grading of level n."""
    if not 2 <= n <= max_level:
        raise ValueError(f"level must satisfy 2 <= n <= {max_level}")
    shape = SymplecticShape.pauli(n)
    sigma = StandardCocycle(shape)
    T = shape.group
    M = shape.ambient_order()
    orbits = []
    for theta in canonical_forms(n):
        tau = GroupMap(T, T, (theta[:2], theta[2:]))
        invs = pauli_involutions(sigma, tau)
        iso_classes: list[IsoClass] = []
        for pair in invs:
            m = HomMapData(shape, tau, pair, "anti")
            placed = False
            for cls in iso_classes:
                rep_m = HomMapData(shape, tau, cls.representative, "anti")
                ok, w = are_isomorphic(sigma, rep_m, m)
                if ok:
                    cls.members.append(pair)
                    cls.witnesses.append(w)
                    placed = True
                    break
            if not placed:
                iso_classes.append(IsoClass(pair, [pair], [None]))
        orbits.append(
            OrbitClassification(theta_label(theta, n), theta, tau, invs, iso_classes)
        )

    # union-find over (orbit, iso class) items under equivalence
    items = [(o.label, k) for o in orbits for k in range(len(o.iso_classes))]
    maps = {
        (o.label, k): HomMapData(shape, o.tau, o.iso_classes[k].representative, "anti")
        for o in orbits
        for k in range(len(o.iso_classes))
    }
    parent = {it: it for it in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merge_witness = {}
    for i, it1 in enumerate(items):
        for it2 in items[i + 1 :]:
            if find(it1) == find(it2):
                continue
            eq, w = are_equivalent(sigma, maps[it1], maps[it2])
            if eq:
                parent[find(it2)] = find(it1)
                merge_witness[(it1, it2)] = w

    groups: dict = {}
    for it in items:
        groups.setdefault(find(it), []).append(it)

    orbit_index = {o.label: i for i, o in enumerate(orbits)}
    orbit_by_label = {o.label: o for o in orbits}
    eq_classes = []
    for root_item, members in groups.items():
        def key(it):
            o = orbit_by_label[it[0]]
            rep = o.iso_classes[it[1]].representative
            return (orbit_index[it[0]], rep[0].as_exponent(M), rep[1].as_exponent(M))

        members.sort(key=key)
        best = members[0]
        rep_pair = orbit_by_label[best[0]].iso_classes[best[1]].representative
        witnesses = {}
        for mem in members[1:]:
            eq, w = are_equivalent(sigma, maps[best], maps[mem])
            assert eq
            witnesses[mem] = w
        kind = _involution_kind(sigma, maps[best])
        eq_classes.append(
            EquivClass((best[0], rep_pair[0], rep_pair[1]), members, kind, witnesses)
        )
    eq_classes.sort(
        key=lambda c: (
            orbit_index[c.representative[0]],
            c.representative[1].as_exponent(M),
            c.representative[2].as_exponent(M),
        )
    )

    expected = expected_classification(n)
    computed_reps = [
        {
            "orbit": c.representative[0],
            "lambda_a": c.representative[1].to_json(),
            "lambda_b": c.representative[2].to_json(),
        }
        for c in eq_classes
    ]
    report = ClassificationReport(n, M, orbits, eq_classes, expected, False)
    match = (
        report.counts()["equivalence_classes"] == expected["equivalence_classes"]
        and report.counts()["isomorphism_classes_per_orbit"]
        == expected["isomorphism_classes_per_orbit"]
        and computed_reps == expected["equivalence_representatives"]
    )
    report.match = match
    return report
