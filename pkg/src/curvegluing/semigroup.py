"""Numerical semigroup arithmetic.

A semigroup is stored by its minimal generating set.  Membership and the
Apéry/Frobenius data come from a plain DP sieve; the sieve also drives the
order-filtration Hilbert oracle, which is deliberately independent of all
polynomial machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import EmptyGenerators, GcdNotOne


@dataclass(frozen=True)
class Representation:
    """Coefficients a_i of a member n = sum a_i * g_i of a semigroup."""

    coefficients: tuple[int, ...]
    value: int

    def __post_init__(self):
        if any(c < 0 for c in self.coefficients):
            raise ValueError("representation coefficients must be non-negative")

    @property
    def size(self) -> int:
        """Sum of the coefficients (number of generator summands)."""
        return sum(self.coefficients)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Numerical semigroup given by its minimal generators, gcd 1."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = self.generators
        if not gens:
            raise EmptyGenerators("no generators")
        if any(g <= 0 for g in gens):
            raise ValueError("generators must be positive")
        if list(gens) != sorted(set(gens)):
            raise ValueError("generators must be strictly increasing")
        g = 0
        for n in gens:
            g = gcd(g, n)
        if g != 1:
            raise GcdNotOne(f"gcd of {list(gens)} is {g}")
        reduced = _minimalize(gens)
        if reduced != gens:
            raise ValueError(
                f"{list(gens)} is not minimal; minimal set is {list(reduced)}")

    # ------------------------------------------------------------------

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element (= smallest generator)."""
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def contains(self, n: int) -> Representation | None:
        """A representation of n if n is a member, else None."""
        if n < 0:
            raise ValueError("membership is defined for n >= 0")
        member, parent = _member_table(self.generators, n)
        if not member[n]:
            return None
        coeffs = [0] * len(self.generators)
        s = n
        while s:
            i = parent[s]
            coeffs[i] += 1
            s -= self.generators[i]
        return Representation(tuple(coeffs), n)

    def all_representations(self, n: int) -> list[Representation]:
        """Every coefficient vector representing n, lexicographically sorted."""
        if n < 0:
            raise ValueError("n must be >= 0")
        gens = self.generators
        out: list[tuple[int, ...]] = []

        def rec(idx, rest, acc):
            if idx == len(gens) - 1:
                if rest % gens[idx] == 0:
                    out.append(tuple(acc + [rest // gens[idx]]))
                return
            g = gens[idx]
            for c in range(rest // g + 1):
                rec(idx + 1, rest - c * g, acc + [c])

        rec(0, n, [])
        out.sort()
        return [Representation(c, n) for c in out]

    def frobenius_and_apery(self) -> tuple[int, tuple[int, ...]]:
        """Frobenius number and the Apéry set w.r.t. the smallest generator."""
        return _frobenius_apery(self.generators)

    @property
    def frobenius(self) -> int:
        return self.frobenius_and_apery()[0]

    @property
    def apery(self) -> tuple[int, ...]:
        return self.frobenius_and_apery()[1]

    def is_symmetric(self) -> bool:
        """Kunz: for every 0 <= z <= F exactly one of z, F-z is a member."""
        f = self.frobenius
        if f < 0:
            return True
        member, _ = _member_table(self.generators, f)
        return all(member[z] != member[f - z] for z in range(f + 1))

    def order_filtration_hilbert(self, n_max: int) -> list[int]:
        """H(0..n_max) where H(n) counts members of maximal order exactly n.

        The order of a member is the largest coefficient sum over all of its
        representations; dynamic programming over the sieve computes it.
        Members above F + (n_max+1)*max(generators) necessarily have order
        > n_max, so the enumeration bound is safe.
        """
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        gens = self.generators
        frob = self.frobenius
        bound = max(frob, 0) + (n_max + 1) * gens[-1]
        member, _ = _member_table(gens, bound)
        order = [-1] * (bound + 1)
        order[0] = 0
        counts = [0] * (n_max + 1)
        counts[0] = 1
        for s in range(1, bound + 1):
            if not member[s]:
                continue
            best = -1
            for g in gens:
                if s >= g and member[s - g]:
                    if order[s - g] > best:
                        best = order[s - g]
            order[s] = best + 1
            if best + 1 <= n_max:
                counts[best + 1] += 1
        return counts


def minimal_generators(raw: list[int] | tuple[int, ...]) -> NumericalSemigroup:
    """Normalize arbitrary generators with gcd 1 to the minimal set."""
    if not raw:
        raise EmptyGenerators("no generators")
    if any(g <= 0 for g in raw):
        raise ValueError("generators must be positive")
    g = 0
    for n in raw:
        g = gcd(g, n)
    if g != 1:
        raise GcdNotOne(f"gcd of {list(raw)} is {g}")
    return NumericalSemigroup(_minimalize(tuple(sorted(set(raw)))))


def _minimalize(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Drop generators representable by smaller kept ones."""
    kept: list[int] = []
    for g in sorted(set(gens)):
        if not kept:
            kept.append(g)
            continue
        member = _sieve(tuple(kept), g)
        if not member[g]:
            kept.append(g)
    return tuple(kept)


def _sieve(gens: tuple[int, ...], bound: int) -> list[bool]:
    member = [False] * (bound + 1)
    member[0] = True
    for s in range(1, bound + 1):
        for g in gens:
            if s >= g and member[s - g]:
                member[s] = True
                break
    return member


@lru_cache(maxsize=None)
def _member_table(gens: tuple[int, ...], bound: int):
    """Membership sieve with generator back-pointers up to bound."""
    member = [False] * (bound + 1)
    parent = [-1] * (bound + 1)
    member[0] = True
    for s in range(1, bound + 1):
        for i, g in enumerate(gens):
            if s >= g and member[s - g]:
                member[s] = True
                parent[s] = i
                break
    return member, parent


@lru_cache(maxsize=None)
def _frobenius_apery(gens: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    m = gens[0]
    if m == 1:
        return -1, (0,)
    # grow the sieve until m consecutive members appear: from there on every
    # integer is a member (add multiples of m), so F is the gap just before
    member = [True]
    run = 1
    s = 0
    while run < m:
        s += 1
        member.append(any(s >= g and member[s - g] for g in gens))
        run = run + 1 if member[s] else 0
    frob = s - m
    # every Apéry element is at most F + m = s, and the sieve reaches s
    apery = [-1] * m
    apery[0] = 0
    found = 1
    for t in range(1, s + 1):
        r = t % m
        if member[t] and apery[r] == -1:
            apery[r] = t
            found += 1
            if found == m:
                break
    return frob, tuple(apery)
