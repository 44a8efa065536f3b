#!/usr/bin/env python3
"""Regenerate the bundled b-files.

Each sequence is computed directly from its stated definition with Python
integers: explicit product/quotient formulas, not the Pascal-table or
fibotorial code paths the library uses. That keeps these files an
independent oracle for the arithmetic. Pass --fetch to instead download
authoritative b-files from oeis.org (network required); downloaded files
replace the generated ones verbatim.

Definitions used here (index n as written in each file):
  A000045  F(n), F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2)
  A000129  P(n), P(0)=0, P(1)=1, P(n)=2P(n-1)+P(n-2)
  A001045  J(n), J(0)=0, J(1)=1, J(n)=J(n-1)+2J(n-2)
  A000225  2^n - 1
  A000027  n, from n = 1
  A001654  F(n) * F(n+1)
  A084158  P(n) * P(n+1) / 2
  A084175  J(n) * J(n+1)
  A006095  (2^n - 1)(2^(n-1) - 1)/3          (Gaussian binomial [n,2]_2)
  A001655  F(n)F(n-1)F(n-2) / 2, 0 for n < 3 (Fibonomial C(n,3))
  A099930  P(n)P(n+1)P(n+2) / 10
  A006096  (2^n-1)(2^(n-1)-1)(2^(n-2)-1)/21  (Gaussian binomial [n,3]_2)
"""

import argparse
import pathlib
import sys
import urllib.request

HERE = pathlib.Path(__file__).parent
TERMS = 40


def rec(a0, a1, c1, c0, count):
    vals = [a0, a1]
    while len(vals) < count:
        vals.append(c1 * vals[-1] + c0 * vals[-2])
    return vals


F = rec(0, 1, 1, 1, TERMS + 4)
P = rec(0, 1, 2, 1, TERMS + 4)
J = rec(0, 1, 1, 2, TERMS + 4)


def exact(num, den):
    q, r = divmod(num, den)
    assert r == 0, f"non-exact division {num}/{den}"
    return q


SEQUENCES = {
    "A000045": [(n, F[n]) for n in range(TERMS + 1)],
    "A000129": [(n, P[n]) for n in range(TERMS + 1)],
    "A001045": [(n, J[n]) for n in range(TERMS + 1)],
    "A000225": [(n, 2**n - 1) for n in range(TERMS + 1)],
    "A000027": [(n, n) for n in range(1, TERMS + 1)],
    "A001654": [(n, F[n] * F[n + 1]) for n in range(TERMS + 1)],
    "A084158": [(n, exact(P[n] * P[n + 1], 2)) for n in range(TERMS + 1)],
    "A084175": [(n, J[n] * J[n + 1]) for n in range(TERMS + 1)],
    "A006095": [(n, 0 if n == 0 else exact((2**n - 1) * (2 ** (n - 1) - 1), 3))
                for n in range(TERMS + 1)],
    "A001655": [(n, 0 if n < 3 else exact(F[n] * F[n - 1] * F[n - 2], 2))
                for n in range(TERMS + 1)],
    "A099930": [(n, exact(P[n] * P[n + 1] * P[n + 2], 10)) for n in range(TERMS + 1)],
    "A006096": [(n, 0 if n < 3 else
                 exact((2**n - 1) * (2 ** (n - 1) - 1) * (2 ** (n - 2) - 1), 21))
                for n in range(TERMS + 1)],
}


def bfile_name(ident):
    return f"b{ident[1:]}.txt"


def write_generated():
    for ident, rows in sorted(SEQUENCES.items()):
        path = HERE / bfile_name(ident)
        with open(path, "w") as f:
            for n, v in rows:
                f.write(f"{n} {v}\n")
        print(f"wrote {path.name}: {len(rows)} terms")


def fetch():
    for ident in sorted(SEQUENCES):
        url = f"https://oeis.org/{ident}/{bfile_name(ident)}"
        path = HERE / bfile_name(ident)
        with urllib.request.urlopen(url, timeout=30) as r:
            path.write_bytes(r.read())
        print(f"fetched {path.name}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fetch", action="store_true",
                    help="download authoritative b-files from oeis.org")
    ns = ap.parse_args()
    if ns.fetch:
        try:
            fetch()
        except Exception as e:  # noqa: BLE001
            print(f"fetch failed: {e}", file=sys.stderr)
            sys.exit(1)
    else:
        write_generated()
