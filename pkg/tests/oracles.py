"""Independent reference implementations used only by the tests.

They share no code with the package: complex floats, cofactor expansion,
brute-force searches.
"""

import cmath
from fractions import Fraction
from itertools import combinations, product

OMEGA = cmath.exp(1j * cmath.pi / 3)


def as_complex(x):
    return x.a + x.b * OMEGA


def from_complex(z):
    # z = a + b*w with w = 1/2 + i*sqrt(3)/2
    b = z.imag / OMEGA.imag
    a = z.real - b / 2
    ra, rb = round(a), round(b)
    assert abs(a - ra) < 1e-6 and abs(b - rb) < 1e-6, z
    return ra, rb


def mul(p, q):
    """Product of coefficient pairs via the rule w^2 = w - 1."""
    a, b = p
    c, d = q
    return (a * c - b * d, a * d + b * c + b * d)


def add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def neg(p):
    return (-p[0], -p[1])


def cofactor_det(m):
    """Laplace expansion along the first row on coefficient pairs."""
    n = len(m)
    if n == 0:
        return (1, 0)
    if n == 1:
        return m[0][0]
    total = (0, 0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = mul(m[0][j], cofactor_det(minor))
        total = add(total, term if j % 2 == 0 else neg(term))
    return total


def norm(p):
    a, b = p
    return a * a + a * b + b * b


def associates(p):
    u = (1, 0)
    out = []
    for _ in range(6):
        out.append(mul(p, u))
        u = mul(u, (0, 1))
    return out


def in_sextant(p):
    return p[0] >= 1 and p[1] >= 0


def int_snf_divisors(m):
    """Integer invariant factors via gcds of k x k minors (Fraction determinants)."""
    from math import gcd

    rows, cols = len(m), len(m[0])

    def fdet(sub):
        a = [[Fraction(x) for x in r] for r in sub]
        n = len(a)
        d = Fraction(1)
        for i in range(n):
            p = next((k for k in range(i, n) if a[k][i]), None)
            if p is None:
                return 0
            if p != i:
                a[i], a[p] = a[p], a[i]
                d = -d
            d *= a[i][i]
            for k in range(i + 1, n):
                f = a[k][i] / a[i][i]
                for j in range(i, n):
                    a[k][j] -= f * a[i][j]
        return int(d)

    ds = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, fdet([[m[i][j] for j in cs] for i in rs]))
        ds.append(g)
    out = []
    for k in range(1, len(ds)):
        out.append(ds[k] // ds[k - 1] if ds[k - 1] else 0)
    return out


def spanning_tree_count(num_vertices, edges):
    """Brute force: subsets of n-1 edges that connect every vertex."""
    count = 0
    for sub in combinations(edges, num_vertices - 1):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v in sub:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


def residues_mod(alpha, box=12):
    """Distinct classes of E modulo alpha, found by searching a coefficient box."""
    n = norm(alpha)
    reps = []
    for a, b in product(range(-box, box + 1), repeat=2):
        if all(not _divides(alpha, (a - c, b - d)) for c, d in reps):
            reps.append((a, b))
        if len(reps) > n:
            break
    return reps


def _divides(alpha, x):
    # alpha | x iff x * conj(alpha) / norm(alpha) is integral
    ca = (alpha[0] + alpha[1], -alpha[1])
    p = mul(x, ca)
    n = norm(alpha)
    return p[0] % n == 0 and p[1] % n == 0
