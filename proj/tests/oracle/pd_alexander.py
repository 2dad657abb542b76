"""Independent Alexander-polynomial fixtures for the C++ test suite.

Builds each pretzel knot as a sum of rational tangles with spherogram, reads
its PD code, and computes the Alexander polynomial from the abelianized
Wirtinger matrix of that PD code (exact integer evaluation + interpolation).
Nothing here shares code with the C++ diagram builder. Regenerate with:

    python3 tests/oracle/pd_alexander.py > tests/data/alexander_fixtures.json

Requires the `snappy` package (for spherogram).
"""
import json
import sys
from fractions import Fraction

from spherogram import RationalTangle


def pretzel(p, q, r):
    return (RationalTangle(1, p) + RationalTangle(1, q) + RationalTangle(1, r)).numerator_closure()


def int_det(rows):
    """Fraction-free integer determinant (Bareiss)."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def interpolate(xs, ys):
    """Ascending coefficients of the polynomial through the points (Newton
    divided differences over the rationals)."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [shifted[k] - xs[i] * coeffs[k] for k in range(n)]
        coeffs[0] += dd[i]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def alexander_from_pd(pd):
    n_edges = 2 * len(pd)
    parent = list(range(n_edges))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # Edges are numbered along the orientation. The two over edges at a
    # crossing belong to one arc, and edge e continues into e+1 unless e
    # enters that crossing as the under strand.
    for a, b, c, d in pd:
        parent[find(b)] = find(d)
    under_in = {a for a, b, c, d in pd}
    for e in range(n_edges):
        if e not in under_in:
            parent[find(e)] = find((e + 1) % n_edges)
    arcs = sorted({find(e) for e in range(n_edges)})
    index = {r: i for i, r in enumerate(arcs)}
    n = len(pd)
    assert len(arcs) == n, (len(arcs), n)

    # Entry (u, v) stands for u + v*t.
    m = [[(0, 0)] * n for _ in range(n)]

    def bump(r, col, u, v):
        m[r][col] = (m[r][col][0] + u, m[r][col][1] + v)

    for row, (a, b, c, d) in enumerate(pd):
        sign = -1 if (d - b) % n_edges == 1 else 1
        k, i, j = index[find(b)], index[find(a)], index[find(c)]
        # x_j = x_k^sign x_i x_k^-sign, abelianized Fox row (up to a unit).
        if sign == 1:
            bump(row, k, 1, -1)
            bump(row, i, 0, 1)
            bump(row, j, -1, 0)
        else:
            bump(row, k, -1, 1)
            bump(row, i, 1, 0)
            bump(row, j, 0, -1)

    # The minor has degree <= n - 1 in t.
    points = list(range(n))
    values = [int_det([[u + v * x for u, v in m[r][: n - 1]] for r in range(n - 1)]) for x in points]
    coeffs = {e: c for e, c in enumerate(interpolate(points, values)) if c != 0}
    lo, hi = min(coeffs), max(coeffs)
    assert (hi - lo) % 2 == 0
    shift = (hi + lo) // 2
    sgn = 1 if sum(coeffs.values()) > 0 else -1
    out = sorted((e - shift, sgn * c) for e, c in coeffs.items())
    assert sum(c for _, c in out) == 1
    assert dict(out) == {-e: c for e, c in out}
    return [[e, c] for e, c in out]


def torus(p, q):
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by long division."""

    def mul(x, y):
        z = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                z[i + j] += a * b
        return z

    def binom(k):  # t^k - 1
        return [-1] + [0] * (k - 1) + [1]

    num = mul(binom(p * q), binom(1))
    den = mul(binom(p), binom(q))
    quo = [0] * (len(num) - len(den) + 1)
    rem = num[:]
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(den) - 1] // den[-1]
        quo[i] = c
        for j, d in enumerate(den):
            rem[i + j] -= c * d
    assert not any(rem)
    deg = len(quo) - 1
    return [[e - deg // 2, c] for e, c in enumerate(quo) if c != 0]


def main():
    out = {"pretzel": [], "torus": []}
    triples = [(-2 * a, 2 * b + 1, 2 * c + 1) for a in range(1, 5) for b in range(a, 5) for c in range(b, 5)]
    triples += [(2 * a, -(2 * b + 1), 2 * c + 1) for a in range(1, 4) for b in range(1, 4) for c in range(1, 4)]
    triples += [(1, 1, 1), (-3, 5, 7), (-2, 5, 3), (4, -3, -5)]
    for tr in triples:
        link = pretzel(*tr)
        assert len(link.link_components) == 1
        out["pretzel"].append({"knot": list(tr), "alexander": alexander_from_pd(link.PD_code())})
    for p, q in [(2, 3), (3, 4), (3, 5)]:
        out["torus"].append({"pq": [p, q], "alexander": torus(p, q)})
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
