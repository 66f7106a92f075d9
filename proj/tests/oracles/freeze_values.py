"""Independent numpy oracle for values frozen in the C++ tests.

Groups are rebuilt here with the same element numbering as the C++
builders, irreducible representations are written down by hand, and phi
is computed through the module embedding (projection onto the range of
the wavelet transform, pull-back to l2(lattice) (x) l2(B), averaging).
The result is cross-checked against conj(trace pi(gamma)) / |lattice|.

Run: python3 tests/oracles/freeze_values.py
"""
import itertools

import numpy as np


def symmetric3():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(x[y[i]] for i in range(3))] for y in perms] for x in perms]
    mats = []
    basis = np.array([[1, -1, 0], [1, 1, -2]], dtype=float).T
    basis /= np.linalg.norm(basis, axis=0)
    for p in perms:
        m = np.zeros((3, 3))
        for i in range(3):
            m[p[i], i] = 1
        mats.append(basis.T @ m @ basis)
    return np.array(table), [m.astype(complex) for m in mats]


def dihedral4():
    n = 4
    table = np.zeros((2 * n, 2 * n), dtype=int)
    for x in range(2 * n):
        for y in range(2 * n):
            fx, kx, fy, ky = x // n, x % n, y // n, y % n
            k = ((n - kx) % n if fy else kx) + ky
            table[x, y] = ((fx + fy) % 2) * n + k % n
    rot = np.array([[0, -1], [1, 0]], dtype=complex)
    flip = np.diag([1, -1]).astype(complex)
    mats = [np.linalg.matrix_power(flip, x // n) @ np.linalg.matrix_power(rot, x % n) for x in range(2 * n)]
    return table, mats


def quaternion():
    basis_tab = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    sign_tab = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]]
    table = np.zeros((8, 8), dtype=int)
    for x in range(8):
        for y in range(8):
            bx, by = x // 2, y // 2
            s = (-1 if x % 2 else 1) * (-1 if y % 2 else 1) * sign_tab[bx][by]
            table[x, y] = 2 * basis_tab[bx][by] + (1 if s < 0 else 0)
    one = np.eye(2, dtype=complex)
    i = np.array([[1j, 0], [0, -1j]])
    j = np.array([[0, 1], [-1, 0]], dtype=complex)
    k = i @ j
    units = [one, i, j, k]
    mats = []
    for x in range(8):
        mats.append(units[x // 2] * (-1 if x % 2 else 1))
    return table, mats


def check_rep(table, mats):
    for x in range(len(mats)):
        for y in range(len(mats)):
            assert np.allclose(mats[x] @ mats[y], mats[table[x, y]])


def closure(table, gens):
    elems = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = table[a, g]
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(elems)


def all_subgroups(table):
    n = len(table)
    subs = set()
    for a in range(n):
        for b in range(n):
            subs.add(tuple(closure(table, [a, b])))
    return sorted(subs, key=lambda s: (len(s), s))


def phi_embedding(table, mats, lattice, eta):
    n = len(table)
    inv = [int(np.where(table[x] == 0)[0][0]) for x in range(n)]
    dim = mats[0].shape[0]
    v = np.array([(mats[x] @ eta).conj() for x in range(n)])
    q, _ = np.linalg.qr(v)
    ptilde = q @ q.conj().T
    pos = {g: i for i, g in enumerate(lattice)}
    covered, reps = set(), []
    for x in range(n):
        if x in covered:
            continue
        reps.append(x)
        covered.update(table[h, x] for h in lattice)
    k = len(lattice)
    total = np.zeros((k, k), dtype=complex)
    for b in reps:
        idx = [table[g, b] for g in lattice]
        total += ptilde[np.ix_(idx, idx)]
    # right regular representation of the lattice, trivial cocycle
    rho = []
    for x in lattice:
        m = np.zeros((k, k))
        for y in lattice:
            m[pos[y], pos[table[y, x]]] = 1
        rho.append(m)
    center = sum(r.T @ total @ r for r in rho) / k
    e = pos[0]
    return np.array([(rho[g] @ center)[e, e] for g in range(k)]), dim


def main():
    rng = np.random.default_rng(7)
    for name, (table, mats) in {"S3": symmetric3(), "D4": dihedral4(), "Q8": quaternion()}.items():
        check_rep(table, mats)
        print(f"{name}: {len(all_subgroups(table))} subgroups")
        for lattice in all_subgroups(table):
            lattice = [int(g) for g in lattice]
            eta = rng.normal(size=2) + 1j * rng.normal(size=2)
            eta /= np.linalg.norm(eta)
            values, dim = phi_embedding(table, mats, lattice, eta)
            char = np.array([np.trace(mats[g]).conjugate() for g in lattice]) / len(lattice)
            assert np.allclose(values, char, atol=1e-12), (name, lattice)
            shown = ", ".join(f"{v.real:+.12f}" for v in values)
            print(f"  lattice {lattice}: phi = [{shown}]")


if __name__ == "__main__":
    main()
