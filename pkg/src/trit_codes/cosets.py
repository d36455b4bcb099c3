"""p-cyclotomic cosets modulo p^m - 1 (p = 3 everywhere in this package).

C_j = {j * p^i mod (p^m - 1)} drives both the minimal-polynomial degrees and
the dimension bookkeeping: gcd(e, 3^m - 1) == 2 forces |C_e| = m, which is
what makes the two-coset generator have degree 2m.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as int_gcd

from .errors import InternalError


@dataclass(frozen=True)
class CyclotomicCoset:
    p: int
    m: int
    leader: int
    members: tuple[int, ...]  # ascending

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def modulus(self) -> int:
        return self.p**self.m - 1


@lru_cache(maxsize=None)
def coset(p: int, m: int, j: int) -> CyclotomicCoset:
    if p < 2 or m < 1:
        raise ValueError("need p >= 2 and m >= 1")
    n = p**m - 1
    j %= n
    members = {j}
    k = (j * p) % n
    while k != j:
        members.add(k)
        k = (k * p) % n
    ms = tuple(sorted(members))
    return CyclotomicCoset(p, m, ms[0], ms)


def coset_of(m: int, j: int) -> CyclotomicCoset:
    return coset(3, m, j)


def lemma_zero_check(m: int, e: int) -> bool:
    """gcd(e, 3^m - 1) == 2; when it holds, |C_e| = m is asserted, not assumed."""
    n = 3**m - 1
    ok = int_gcd(e % n, n) == 2
    if ok and coset(3, m, e).size != m:
        raise InternalError(f"gcd(e, 3^{m}-1) == 2 but |C_{e}| != {m}")
    return ok


def cosets_disjoint(m: int, a: int, b: int) -> bool:
    return not set(coset(3, m, a).members) & set(coset(3, m, b).members)


@lru_cache(maxsize=None)
def all_cosets(p: int, m: int) -> tuple[CyclotomicCoset, ...]:
    """The full coset partition of Z/(p^m - 1), by ascending leader."""
    n = p**m - 1
    seen = [False] * n
    out = []
    for j in range(n):
        if seen[j]:
            continue
        c = coset(p, m, j)
        for t in c.members:
            seen[t] = True
        out.append(c)
    return tuple(out)
