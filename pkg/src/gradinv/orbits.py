"""Canonical forms for 2x2 matrices over Z_n with det = -1, tr = 0 under
SL_2(Z_n)-conjugation.

Matrices are row-major 4-tuples (a, b, c, d) for [[a, b], [c, d]] with entries
reduced mod n.  The canonical set O_n holds theta1 = diag(1, -1); theta2 =
antidiag(1, 1) when n is even; theta3 = [[1, 2], [n/2, -1]] when 4 | n.
Reduction is a breadth-first search over conjugation by the two elementary
transvections, so every answer comes with a determinant-one witness that can
be checked by direct multiplication.
"""

from __future__ import annotations

from collections import deque

Mat2 = tuple[int, int, int, int]


def mat(a, b, c, d, n: int) -> Mat2:
    return (a % n, b % n, c % n, d % n)


def mat_mul(x: Mat2, y: Mat2, n: int) -> Mat2:
    return (
        (x[0] * y[0] + x[1] * y[2]) % n,
        (x[0] * y[1] + x[1] * y[3]) % n,
        (x[2] * y[0] + x[3] * y[2]) % n,
        (x[2] * y[1] + x[3] * y[3]) % n,
    )


def mat_det(x: Mat2, n: int) -> int:
    return (x[0] * x[3] - x[1] * x[2]) % n


def mat_trace(x: Mat2, n: int) -> int:
    return (x[0] + x[3]) % n


def mat_inv(x: Mat2, n: int) -> Mat2:
    d = mat_det(x, n)
    di = pow(d, -1, n)
    return ((x[3] * di) % n, (-x[1] * di) % n, (-x[2] * di) % n, (x[0] * di) % n)


def conjugate(P: Mat2, A: Mat2, n: int) -> Mat2:
    """P^-1 A P."""
    return mat_mul(mat_mul(mat_inv(P, n), A, n), P, n)


def identity2(n: int) -> Mat2:
    return (1 % n, 0, 0, 1 % n)


def theta1(n: int) -> Mat2:
    return mat(1, 0, 0, -1, n)


def theta2(n: int) -> Mat2:
    return mat(0, 1, 1, 0, n)


def theta3(n: int) -> Mat2:
    return mat(1, 2, n // 2, -1, n)


def theta_label(theta: Mat2, n: int) -> str:
    for label, builder in (("theta1", theta1), ("theta2", theta2), ("theta3", theta3)):
        if label == "theta3" and n % 4:
            continue
        if theta == builder(n):
            return label
    raise ValueError("not a canonical form")


def canonical_forms(n: int) -> list[Mat2]:
    """The set O_n of canonical forms for det -1, trace 0 matrices mod n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    out = [theta1(n)]
    if n % 2 == 0:
        out.append(theta2(n))
    if n % 4 == 0:
        out.append(theta3(n))
    return out


def in_locus(A: Mat2, n: int) -> bool:
    return mat_det(A, n) == (-1) % n and mat_trace(A, n) == 0


def locus(n: int) -> list[Mat2]:
    """All matrices mod n with det = -1 and trace = 0, full n^4 scan."""
    out = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    A = (a, b, c, d)
                    if in_locus(A, n):
                        out.append(A)
    return out


_GEN_L = lambda n: mat(1, 1, 0, 1, n)
_GEN_R = lambda n: mat(1, 0, 1, 1, n)


def orbit_reduce(A: Mat2, n: int) -> tuple[Mat2, Mat2]:
    """Conjugate A into O_n; returns (theta, P) with det P = 1 and P^-1 A P = theta.

    BFS over conjugation by the elementary transvections [[1,1],[0,1]] and
    [[1,0],[1,1]] and their inverses; these generate SL_2(Z_n).  The witness P
    is accumulated along the path, so det P = 1 holds by construction, and the
    result is re-checked before returning.
    """
    A = tuple(x % n for x in A)
    if not in_locus(A, n):
        raise ValueError("not in the det -1, trace 0 locus")
    targets = set(canonical_forms(n))
    gens = []
    for g in (_GEN_L(n), _GEN_R(n)):
        gens.append(g)
        gens.append(mat_inv(g, n))
    start = (A, identity2(n))
    seen = {A}
    queue = deque([start])
    while queue:
        cur, P = queue.popleft()
        if cur in targets:
            assert mat_det(P, n) == 1 % n
            assert conjugate(P, A, n) == cur
            return cur, P
        for g in gens:
            nxt = conjugate(g, cur, n)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, mat_mul(P, g, n)))
    raise RuntimeError("orbit exhausted without reaching a canonical form")


def sl2_elements(n: int) -> list[Mat2]:
    return [A for A in _all_mats(n) if mat_det(A, n) == 1 % n]


def _all_mats(n: int):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    yield (a, b, c, d)


def verify_pairwise_nonconjugate(n: int) -> bool:
    """No member of O_n is SL_2(Z_n)-conjugate to another (exhaustive)."""
    forms = canonical_forms(n)
    sl2 = sl2_elements(n)
    for i, th in enumerate(forms):
        for th2 in forms[i + 1 :]:
            for P in sl2:
                if conjugate(P, th, n) == th2:
                    return False
    return True


def verify_odd_similarity(q: int) -> bool:
    """For odd q: antidiag(1,1) and [[1,2],[0,-1]] both reduce to theta1 mod q."""
    if q % 2 == 0 or q < 3:
        raise ValueError("modulus must be odd and at least 3")
    t1 = theta1(q)
    for A in (mat(0, 1, 1, 0, q), mat(1, 2, 0, -1, q)):
        th, _ = orbit_reduce(A, q)
        if th != t1:
            return False
    return True


def _first_case_rows(i: int, n: int):
    """Conjugator rows for the diagonal-type matrices mod 2^i: entries are
    (tau_prime, P, target), restricted to the rows applicable at this i."""
    h = 1 << (i - 1)  # 2^(i-1)
    q = 1 << (i - 2)  # 2^(i-2)
    rows = [
        (mat(1, 0, 0, -1, n), identity2(n), theta1(n)),
        (mat(1, h, 0, -1, n), mat(1, q, 0, 1, n), theta1(n)),
        (mat(1, 0, h, -1, n), mat(1, 0, q, 1, n), theta1(n)),
        (mat(1 + h, h, h, -1 - h, n), mat(1, 1, 0, 1, n), mat(1, 2, h, -1, n)),
    ]
    if i == 2:
        rows += [
            (mat(1, 2, 2, -1, n), identity2(n), mat(1, 2, 2, -1, n)),
            (mat(-1, 0, 0, 1, n), mat(0, 1, -1, 0, n), theta1(n)),
            (mat(-1, 2, 0, 1, n), mat(1, 1, -1, 0, n), theta1(n)),
            (mat(-1, 0, 2, 1, n), mat(0, 1, -1, 1, n), theta1(n)),
        ]
    else:
        rows += [
            (mat(1, h, h, -1, n), mat(q + 1, q, q, -q + 1, n), theta1(n)),
            (mat(1 + h, 0, 0, -1 - h, n), mat(1 + q, 1, -q, 1 - h, n), mat(1, 2, h, -1, n)),
            (mat(1 + h, h, 0, -1 - h, n), mat(1, 1, q, 1 + q, n), mat(1, 2, h, -1, n)),
            (mat(1 + h, 0, h, -1 - h, n), mat(1, 1 + q, 0, 1, n), mat(1, 2, h, -1, n)),
        ]
    return rows


def _second_case_P(i: int, n: int, q1: int, q2: int) -> Mat2:
    if i == 2:
        return mat(1 - q2, q2 + 2 * q1 * q2, 2 * q1 - q2, 1 - q2 + 2 * q1 * q2, n)
    if i == 3:
        return mat(1, 2 * q2, 4 * q1 + 2 * q2, 1 + 4 * q2, n)
    h = 1 << (i - 1)
    q = 1 << (i - 2)
    return mat(q * q2 - 1, 0, h * q1, -q * q2 - 1, n)


def verify_conjugator_table(n: int) -> bool:
    """Replay the inductive conjugator table at modulus n = 2^i, i >= 2.

    Checks det P = 1 and P^-1 tau' P = target for every applicable first-case
    row, and that the closed-form second-case P conjugates
    [[2^(i-1) q1, 1 + 2^(i-1) q2], [1 - 2^(i-1) q2, -2^(i-1) q1]] to theta2
    for all (q1, q2) in {0, 1}^2.
    """
    i = n.bit_length() - 1
    if n != 1 << i or i < 2:
        raise ValueError("modulus must be 2^i with i >= 2")
    for tau_p, P, target in _first_case_rows(i, n):
        if mat_det(P, n) != 1 % n or conjugate(P, tau_p, n) != target:
            return False
    h = 1 << (i - 1)
    for q1 in (0, 1):
        for q2 in (0, 1):
            tau_p = mat(h * q1, 1 + h * q2, 1 - h * q2, -h * q1, n)
            P = _second_case_P(i, n, q1, q2)
            if mat_det(P, n) != 1 % n or conjugate(P, tau_p, n) != theta2(n):
                return False
    return True
