"""Independent numpy oracles for the frozen expected values in the C++ tests.

Run: python3 tests/oracles/compute_oracles.py
Nothing here imports the library; every value is recomputed from definitions.
"""
import itertools
import math

import numpy as np
from scipy.linalg import expm


def kron(*ops):
    out = np.array([[1.0 + 0j]])
    for o in ops:
        out = np.kron(out, o)
    return out


X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def axes_split(n, part):
    """Reshape helper: permute qubit axes so `part` comes first."""
    rest = [q for q in range(n) if q not in part]
    return list(part) + rest, len(part)


def reducible_residual(h, n, part):
    order, k = axes_split(n, part)
    d1, d2 = 2 ** k, 2 ** (n - k)
    t = h.reshape([2] * (2 * n))
    t = t.transpose(order + [n + q for q in order]).reshape(d1, d2, d1, d2)
    tr = np.trace(h)
    h1 = np.einsum("abcb->ac", t) / d2 - tr / (2 * d1 * d2) * np.eye(d1)
    h2 = np.einsum("abad->bd", t) / d1 - tr / (2 * d1 * d2) * np.eye(d2)
    rec = np.kron(h1, np.eye(d2)) + np.kron(np.eye(d1), h2)
    return np.abs(rec - t.reshape(d1 * d2, d1 * d2)).max()


def state_rank1(psi, n, part, tol=1e-9):
    order, k = axes_split(n, part)
    m = psi.reshape([2] * n).transpose(order).reshape(2 ** k, -1)
    s = np.linalg.svd(m, compute_uv=False)
    return s[1] <= tol * s[0]


def naive_nu_state(psi, n, tol=1e-9):
    """Brute force: smallest proper subset that factors, recursing on both sides."""
    def rec(vec, qubits):
        m = len(qubits)
        if m == 1:
            return 1
        local = list(range(m))
        for s in range(1, m // 2 + 1):
            for part in itertools.combinations(local, s):
                if state_rank1(vec, m, list(part), tol):
                    order, k = axes_split(m, list(part))
                    mat = vec.reshape([2] * m).transpose(order).reshape(2 ** k, -1)
                    u, sv, vh = np.linalg.svd(mat)
                    a = u[:, 0]
                    b = sv[0] * vh[0, :]
                    return max(rec(a, part), rec(b, [q for q in local if q not in part]))
        return m
    return rec(psi, list(range(n)))


def exhaustive_state_c(psi, n):
    best = None
    for p in itertools.permutations(range(2 ** n)):
        q = np.zeros_like(psi)
        q[list(p)] = psi
        nu = naive_nu_state(q, n)
        if best is None or nu < best[0]:
            best = (nu, p)
            if nu == 1:
                break
    return best


def gsa(n, t, target=0):
    N = 2 ** n
    v = np.full(N, math.cos(t) / math.sqrt(N - 1), dtype=complex)
    v[target] = math.sin(t)
    return v


def grover_step(v, target):
    v = v.copy()
    v[target] *= -1
    return 2 * v.mean() - v


def tc(k, nmax, omega, g, hbar=1.0):
    dim = (nmax + 1) * 2 ** k
    h = np.zeros((dim, dim))
    for n in range(nmax + 1):
        for atoms in range(2 ** k):
            col = n * 2 ** k + atoms
            h[col, col] = hbar * omega * (n + bin(atoms).count("1"))
            for a in range(k):
                bit = 1 << (k - 1 - a)
                if atoms & bit and n < nmax:
                    h[(n + 1) * 2 ** k + (atoms ^ bit), col] += g[a] * math.sqrt(n + 1)
                if not atoms & bit and n > 0:
                    h[(n - 1) * 2 ** k + (atoms | bit), col] += g[a] * math.sqrt(n)
    return h


def main():
    h4 = np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=complex)
    print("h4 residual part {0}:", reducible_residual(h4, 2, [0]))
    print("h4 residual part {1}:", reducible_residual(h4, 2, [1]))
    hq = kron(X, I2) + kron(I2, X)
    print("h_q residual part {0}:", reducible_residual(hq, 2, [0]))

    h_tc = tc(2, 1, 1.0, [0.3, 0.3])
    for part in ([0], [1], [2]):
        print("TC k=2 residual part", part, reducible_residual(h_tc, 3, part))

    for n in (2, 3):
        t0 = math.asin(2 ** (-n / 2))
        psi = gsa(n, 3 * t0)
        print(f"GSA n={n} naive nu:", naive_nu_state(psi, n))
        if n == 2:
            print("GSA n=2 exhaustive C:", exhaustive_state_c(psi, n))

    t0 = math.asin(1 / math.sqrt(8))
    print("n=3 beta=sin(3t0):", math.sin(3 * t0), "alpha=cos(3t0)/sqrt7:", math.cos(3 * t0) / math.sqrt(7))
    u = np.full(8, 1 / math.sqrt(8), dtype=complex)
    v1 = grover_step(u, 0)
    print("n=3 step amplitudes:", v1[0].real, v1[1].real)
    print("sin^2(5 t0) n=3:", math.sin(5 * t0) ** 2)

    # TC k=3 commutant: brute force over qubit permutations
    h_tc3 = tc(3, 1, 1.0, [0.4, 0.4, 0.4])
    n = 4
    order = 0
    for eta in itertools.permutations(range(n)):
        p = np.zeros((16, 16))
        for j in range(16):
            bits = [(j >> (n - 1 - q)) & 1 for q in range(n)]
            img = 0
            for q in range(n):
                if bits[q]:
                    img |= 1 << (n - 1 - eta[q])
            p[img, j] = 1
        if np.abs(h_tc3 @ p - p @ h_tc3).max() <= 1e-9:
            order += 1
    print("TC k=3 equal-g commutant order:", order)

    # column-permutation check + U_t
    u_t = expm(-1j * hq * 0.7)
    print("U_t(0.7) col1:", np.round(u_t[:, 1], 12), "col2:", np.round(u_t[:, 2], 12))

    # quantize hand trace |0>, sigma_x, eps=0.5: M0=2, nu=2 -> 4 quanta
    print("round(1/0.3)=", round(1 / 0.3), " round(0.70711/0.1)=", round((1 / math.sqrt(2)) / 0.1))

    # Grover n=10 optimal
    n = 10
    t0 = math.asin(2 ** -5)
    k = math.floor(math.pi / (4 * t0))
    print("n=10 optimal k:", k, "p:", math.sin((2 * k + 1) * t0) ** 2)
    # estimate-q breakdown
    eps = 2 ** -5
    print("estimate-q breakdown n:", next(n for n in range(2, 15) if 2 ** (-n / 2) < eps))


if __name__ == "__main__":
    main()


def naive_nu_h(h, n, tol=1e-9):
    """Blocks by recursive trace split, smallest side first."""
    def split(hm, qubits):
        m = len(qubits)
        if m == 1:
            return [1]
        for s in range(1, m // 2 + 1):
            for part in itertools.combinations(range(m), s):
                if reducible_residual(hm, m, list(part)) <= tol:
                    order, k = axes_split(m, list(part))
                    d1, d2 = 2 ** k, 2 ** (m - k)
                    t = hm.reshape([2] * (2 * m)).transpose(order + [m + q for q in order]).reshape(d1, d2, d1, d2)
                    tr = np.trace(hm)
                    h1 = np.einsum("abcb->ac", t) / d2 - tr / (2 * d1 * d2) * np.eye(d1)
                    h2 = np.einsum("abad->bd", t) / d1 - tr / (2 * d1 * d2) * np.eye(d2)
                    rest = [q for q in range(m) if q not in part]
                    return split(h1, list(part)) + split(h2, rest)
        return [m]
    return max(split(h, list(range(n))))


def extra():
    for t in (0.3, 1.0):
        print(f"GSA n=2 t={t} exhaustive C:", exhaustive_state_c(gsa(2, t), 2)[0])
    h_tc = tc(2, 1, 1.0, [0.3, 0.3])
    best = 99
    for p in itertools.permutations(range(8)):
        hp = h_tc[np.ix_(p, p)]
        best = min(best, naive_nu_h(hp, 3))
        if best == 1:
            break
    print("TC k=2 n_max=1 exhaustive C(H):", best)


if __name__ == "__main__":
    extra()
