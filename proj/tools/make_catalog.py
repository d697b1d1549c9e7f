#!/usr/bin/env python3
"""Regenerate data/catalog.tsv with pinned expectations.

Expectations are computed here with plain Fraction arithmetic, independently
of the C++ library: weights by Gauss-Jordan on E q = 1, mu = prod(1/q - 1),
|G_max| = |det E|, and the expected state dimension is mu of the transpose.
"""

import json
import random
import sys
from fractions import Fraction
from pathlib import Path


def det(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return d


def solve_weights(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1)] for row in m]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][n] for i in range(n)]


def mu(m):
    out = Fraction(1)
    for q in solve_weights(m):
        out *= 1 / q - 1
    assert out.denominator == 1
    return out.numerator


def frac(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fermat(a):
    return [[a]]


def chain(a):
    # x1^a1*x2 + x2^a2*x3 + ... + xk^ak
    k = len(a)
    rows = []
    for i in range(k):
        r = [0] * k
        r[i] = a[i]
        if i + 1 < k:
            r[i + 1] = 1
        rows.append(r)
    return rows


def loop(a):
    k = len(a)
    rows = []
    for i in range(k):
        r = [0] * k
        r[i] = a[i]
        r[(i + 1) % k] = 1
        rows.append(r)
    return rows


def direct_sum(*blocks):
    n = sum(len(b) for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b:
            rows.append([0] * off + r + [0] * (n - off - len(r)))
        off += len(b)
    return rows


def to_text(rows):
    terms = []
    for r in rows:
        parts = []
        for j, e in enumerate(r):
            if e == 0:
                continue
            parts.append(f"x{j + 1}" + (f"^{e}" if e != 1 else ""))
        terms.append("*".join(parts))
    return " + ".join(terms)


def expected(rows):
    q = solve_weights(rows)
    assert all(0 < x <= Fraction(1, 2) for x in q), rows
    c_hat = sum(1 - 2 * x for x in q)
    transposed = [list(col) for col in zip(*rows)]
    return {
        "mu": mu(rows),
        "c_hat": frac(c_hat),
        "group_order": abs(int(det(rows))),
        "state_dim": mu(transposed),
    }


def named_entries():
    e = []
    for n in range(2, 11):
        e.append((f"ADE-A{n}", fermat(n + 1)))
    for n in range(4, 8):
        e.append((f"ADE-D{n}", [[2, 1], [0, n - 1]]))
    e.append(("ADE-E6", direct_sum(fermat(3), fermat(4))))
    e.append(("ADE-E7", [[3, 0], [1, 3]]))
    e.append(("ADE-E8", direct_sum(fermat(3), fermat(5))))

    e.append(("simple-elliptic-P8-fermat", direct_sum(fermat(3), fermat(3), fermat(3))))
    e.append(("simple-elliptic-P8-loop", loop([2, 2, 2])))
    e.append(("simple-elliptic-X9-chain", [[3, 1], [0, 4]]))
    e.append(("simple-elliptic-X9-fermat", direct_sum(fermat(4), fermat(4))))
    e.append(("simple-elliptic-J10", direct_sum(fermat(3), fermat(6))))

    e.append(("unimodular-E12", direct_sum(fermat(3), fermat(7))))
    e.append(("unimodular-E13", [[3, 0], [1, 5]]))
    e.append(("unimodular-E14", direct_sum(fermat(3), fermat(8))))
    e.append(("unimodular-Z11", [[3, 1], [0, 5]]))
    e.append(("unimodular-Z12", loop([3, 4])))
    e.append(("unimodular-Z13", [[3, 1], [0, 6]]))
    e.append(("unimodular-W12", direct_sum(fermat(4), fermat(5))))
    e.append(("unimodular-W13", [[4, 0], [1, 4]]))
    e.append(("unimodular-Q10", [[2, 0, 1], [0, 3, 0], [0, 0, 4]]))
    e.append(("unimodular-Q11", [[2, 0, 1], [0, 3, 0], [0, 1, 3]]))
    e.append(("unimodular-Q12", [[2, 0, 1], [0, 3, 0], [0, 0, 5]]))
    e.append(("unimodular-S11", [[2, 1, 0], [0, 2, 1], [0, 0, 4]]))
    e.append(("unimodular-S12", loop([2, 2, 3])))
    e.append(("unimodular-U12", direct_sum(fermat(3), fermat(3), fermat(4))))
    return e


def random_entries(count, seed=20260401):
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        blocks = []
        for _ in range(rng.randint(1, 3)):
            kind = rng.choice(["fermat", "chain", "loop"])
            if kind == "fermat":
                blocks.append(fermat(rng.randint(2, 6)))
            else:
                length = rng.randint(2, 3)
                a = [rng.randint(2, 5) for _ in range(length)]
                blocks.append(chain(a) if kind == "chain" else loop(a))
        rows = direct_sum(*blocks)
        if len(rows) > 5:
            continue
        d = abs(det(rows))
        if d > 200:
            continue
        key = to_text(rows)
        if key in seen:
            continue
        seen.add(key)
        out.append((f"random-{len(out) + 1:02d}", rows))
    return out


def main():
    root = Path(__file__).resolve().parent.parent
    path = Path(sys.argv[1]) if len(sys.argv) > 1 else root / "data" / "catalog.tsv"
    lines = ["# name\tpolynomial\texpected (mu, c_hat, group_order, state_dim)"]
    for name, rows in named_entries() + random_entries(16):
        lines.append(f"{name}\t{to_text(rows)}\t{json.dumps(expected(rows), separators=(',', ':'))}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} entries to {path}")


if __name__ == "__main__":
    main()
