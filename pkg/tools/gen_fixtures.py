#!/usr/bin/env python3
"""Regenerate the offline OEIS b-file fixtures.

Deliberately independent of the dynkin_tilting package: every sequence is
produced straight from its defining binomial expression, so the fixtures can
serve as an oracle for the package generators.  Network access is not
required (nor available in CI); the values of every prefix are pinned by the
published tables these sequences tabulate.

Run from the repository root:  python tools/gen_fixtures.py
"""

from __future__ import annotations

from math import comb
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "dynkin_tilting" / "fixtures"


def ballot(t: int, s: int) -> int:
    # ]t over s[ = ((t-2s+1)/(t-s+1)) C(t,s)
    num = (t - 2 * s + 1) * comb(t, s)
    assert num % (t - s + 1) == 0
    return num // (t - s + 1)


def lucas(t: int, s: int) -> int:
    # [t over s] = ((s+t)/t) C(t,s)
    num = (s + t) * comb(t, s)
    assert num % t == 0
    return num // t


def a009766(rows: int):
    # Catalan triangle: T(n,s) = ballot(n+s, s), 0 <= s <= n
    for n in range(rows):
        for s in range(n + 1):
            yield ballot(n + s, s)


def a059481(rows: int):
    # increasing Pascal: T(n,s) = C(n+s-1, s), 0 <= s <= n
    for n in range(rows):
        for s in range(n + 1):
            yield 1 if s == 0 else comb(n + s - 1, s)


def a241188(rows: int):
    # type-D table: rows n >= 2; T(n,s) = lucas(n+s-2, s) for s < n,
    # T(n,n) = lucas(2n-2, n-2)
    for n in range(2, 2 + rows):
        for s in range(n + 1):
            if s == 0:
                yield 1
            elif s < n:
                yield lucas(n + s - 2, s)
            else:
                yield lucas(2 * n - 2, n - 2)


def a008315(rows: int):
    # ballot triangle: T(n,k) = C(n,k) - C(n,k-1), 0 <= k <= n//2
    for n in range(rows):
        for k in range(n // 2 + 1):
            yield comb(n, k) - (comb(n, k - 1) if k else 0)


def a007318(rows: int):
    for n in range(rows):
        for k in range(n + 1):
            yield comb(n, k)


def a029635(rows: int):
    # Lucas (1,2)-triangle; the (0,0) corner is pinned to 2
    yield 2
    for t in range(1, rows):
        for s in range(t + 1):
            yield lucas(t, s)


def a129869(terms: int):
    # type-D main diagonal: lucas(2n-2, n-2) for n = 2, 3, ...
    for k in range(terms):
        yield lucas(2 * k + 2, k)


SEQUENCES = {
    "A009766": (a009766(16), 0, "Catalan triangle read by rows"),
    "A059481": (a059481(16), 0, "binomial(n+k-1,k) read by rows"),
    "A241188": (a241188(12), 1, "type-D support-tilting triangle, rows n>=2"),
    "A008315": (a008315(22), 0, "ballot (sheared Catalan) triangle read by rows"),
    "A007318": (a007318(16), 0, "Pascal's triangle read by rows"),
    "A029635": (a029635(14), 0, "Lucas (1,2)-triangle read by rows, corner = 2"),
    "A129869": (a129869(20), 0, "type-D tilting diagonal"),
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for sid, (gen, offset, desc) in SEQUENCES.items():
        path = OUT / f"b{sid[1:]}.txt"
        lines = [f"# {sid}: {desc}", "# regenerated offline from the defining formula"]
        for i, v in enumerate(gen, start=offset):
            lines.append(f"{i} {v}")
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(lines) - 2} terms)")


if __name__ == "__main__":
    main()
