"""Vertex weights from the averaging system and the coefficient matrix ``K``.

Each vertex weight satisfies ``x_i = (sum of neighbour weights) / (d_i + 1) + b_i``.
Multiplying row ``i`` by ``d_i + 1`` gives the integer system

    S x = (E + D) b,    S = (E + D) - M,

where ``S`` is symmetric and strictly diagonally dominant, so every leading
principal minor is positive and elimination never needs a pivot swap.
``K = A^-1 = S^-1 (E + D)``, i.e. ``k_ij = adj(S)_ij (d_j + 1) / det(S)``.

All entries share the denominator ``det(S)``, so :class:`KMatrix` keeps an
integer numerator matrix plus one denominator and equality tests between
entries reduce to integer comparisons.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .graph import Graph

#: default seed for choosing fingerprint primes; both graphs of a comparison
#: must share the primes, so the choice is deterministic
FINGERPRINT_SEED = 0x5EED
FINGERPRINT_PRIMES = 4


def integer_system(g: Graph) -> np.ndarray:
    """``S = (E + D) - M`` as an object array of Python ints."""
    s = np.zeros((g.n, g.n), dtype=object)
    for u, v in g.edges:
        s[u, v] = s[v, u] = -1
    for i, d in enumerate(g.degrees):
        s[i, i] = d + 1
    return s


def _gauss_jordan_fraction_free(aug: np.ndarray, n: int) -> tuple[np.ndarray, int]:
    """Fraction-free Gauss-Jordan on ``[S | R]`` without pivoting.

    Returns ``(adj(S) R, det S)``. Every division is exact (Bareiss).
    """
    a = aug.copy()
    width = a.shape[1]
    identity_rhs = width == 2 * n
    prev = 1
    for k in range(n):
        piv = a[k, k]
        if piv == 0:
            raise ArithmeticError("zero pivot: integer system is singular")
        # with R = I, columns outside [k, n + k] hold only one nonzero per
        # row (the running pivot), so just the band needs the full update
        hi = n + k + 1 if identity_rhs else width
        col = a[:, k].copy()
        col[k] = 0
        pivot_row = a[k, k:hi].copy()
        a[:, k:hi] = (piv * a[:, k:hi] - np.outer(col, pivot_row)) // prev
        a[k, k:hi] = pivot_row
        for i in range(k):
            a[i, i] = piv
        if identity_rhs:
            for t in range(k + 1, n):
                a[t, n + t] = piv
        prev = piv
    return a[:, n:], prev


def _gauss_jordan_mod(s: np.ndarray, p: int) -> np.ndarray:
    """Inverse of ``S`` modulo a prime ``p < 2**31`` in int64 arithmetic."""
    n = s.shape[0]
    a = np.zeros((n, 2 * n), dtype=np.int64)
    a[:, :n] = np.array(s.tolist(), dtype=np.int64) % p
    a[:, n:] = np.eye(n, dtype=np.int64)
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            raise ZeroDivisionError(f"S is singular modulo {p}")
        r = k + int(nz[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            hi = 2 * n
        else:
            # no swap so far: columns right of n + k are still untouched unit vectors
            hi = n + k + 1
        a[k, k:hi] = a[k, k:hi] * pow(int(a[k, k]), -1, p) % p
        col = a[:, k].copy()
        col[k] = 0
        a[:, k:hi] = (a[:, k:hi] - np.outer(col, a[k, k:hi]) % p) % p
    return a[:, n:]


@lru_cache(maxsize=None)
def fingerprint_primes(count: int = FINGERPRINT_PRIMES, seed: int = FINGERPRINT_SEED) -> tuple[int, ...]:
    """``count`` distinct primes in ``[2**30, 2**31)``, deterministic in ``seed``.

    Below ``2**31`` every product of two residues fits in int64.
    """
    from sympy import nextprime

    rng = random.Random(seed)
    primes: list[int] = []
    while len(primes) < count:
        p = int(nextprime(rng.randrange(2**30, 2**31 - 2**16)))
        if p not in primes:
            primes.append(p)
    return tuple(primes)


@dataclass(frozen=True, eq=False)
class KMatrix:
    """The matrix ``A^-1 = ||k_ij||`` of one graph.

    Exact mode stores ``num`` and ``den`` with ``k_ij = num[i][j] / den``.
    Fingerprint mode stores only ``fp[i][j]``, the residues of ``k_ij`` modulo
    ``primes`` packed into one integer; equal fingerprints do not prove equal
    entries, unequal fingerprints do prove inequality.
    """

    n: int
    degrees: tuple[int, ...]
    num: tuple[tuple[int, ...], ...] | None = None
    den: int | None = None
    primes: tuple[int, ...] = ()
    fp: tuple[tuple[int, ...], ...] | None = None

    @property
    def exact(self) -> bool:
        return self.num is not None

    def entry(self, i: int, j: int) -> Fraction:
        if not self.exact:
            raise ValueError("fingerprint KMatrix has no exact entries")
        return Fraction(self.num[i][j], self.den)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def column(self, j: int) -> list[Fraction]:
        return [self.entry(i, j) for i in range(self.n)]

    def comparable_rows(self, other: "KMatrix") -> tuple[list, list]:
        """Integer keys for every entry of ``self`` and ``other`` such that
        ``keys_self[i][p] == keys_other[j][q]`` iff ``k_ip == k'_jq``
        (up to fingerprint collisions in fingerprint mode)."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch {self.n} != {other.n}")
        if self.exact and other.exact:
            g = gcd(self.den, other.den)
            a, b = other.den // g, self.den // g
            if a == 1 and b == 1:
                return list(self.num), list(other.num)
            return ([[x * a for x in row] for row in self.num],
                    [[x * b for x in row] for row in other.num])
        if self.exact or other.exact:
            raise ValueError("cannot compare exact and fingerprint KMatrix")
        if self.primes != other.primes:
            raise ValueError("fingerprint KMatrices use different primes")
        return list(self.fp), list(other.fp)


def k_matrix(g: Graph, fingerprint: bool = False, primes: Sequence[int] | None = None) -> KMatrix:
    """Coefficient matrix ``A^-1`` of ``g`` (exact unless ``fingerprint``)."""
    n = g.n
    s = integer_system(g)
    scale = np.array([d + 1 for d in g.degrees], dtype=object)
    if fingerprint:
        primes = tuple(primes) if primes else fingerprint_primes()
        packed = np.zeros((n, n), dtype=object)
        for t, p in enumerate(primes):
            inv = _gauss_jordan_mod(s, p).astype(object)
            packed = packed + (((inv * scale[None, :]) % p) << (32 * t))
        return KMatrix(n, g.degrees, primes=primes,
                       fp=tuple(tuple(int(x) for x in row) for row in packed))
    aug = np.concatenate([s, np.eye(n, dtype=np.int64).astype(object)], axis=1)
    adj, det = _gauss_jordan_fraction_free(aug, n)
    num = adj * scale[None, :]
    common = gcd(det, *[int(x) for x in num.ravel()])
    return KMatrix(n, g.degrees,
                   num=tuple(tuple(int(x) // common for x in row) for row in num),
                   den=int(det) // common)


def solve_system(g: Graph, b: Sequence) -> list[Fraction]:
    """Exact solution ``X`` of the weight system for absolute terms ``b``."""
    if len(b) != g.n:
        raise ValueError(f"len(b)={len(b)} != n={g.n}")
    b = [Fraction(x) for x in b]
    lcm = 1
    for x in b:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    rhs = np.array([[int(x * lcm) * (d + 1)] for x, d in zip(b, g.degrees)], dtype=object)
    aug = np.concatenate([integer_system(g), rhs], axis=1)
    y, det = _gauss_jordan_fraction_free(aug, g.n)
    return [Fraction(int(v), det * lcm) for v in y[:, 0]]


def check_bounds(k: KMatrix) -> bool:
    """``1 < k_ii < 2`` and ``0 < k_ij < 1`` off the diagonal; ``n = 1`` needs ``k_11 = 1``."""
    if not k.exact:
        raise ValueError("bounds need an exact KMatrix")
    den = k.den
    if k.n == 1:
        return k.num[0][0] == den
    for i, row in enumerate(k.num):
        for j, x in enumerate(row):
            if i == j:
                if not den < x < 2 * den:
                    return False
            elif not 0 < x < den:
                return False
    return True


def topo_index(g: Graph) -> list[Fraction]:
    """Sorted weights for ``b = (1, ..., 1)``; invariant under relabelling."""
    return sorted(solve_system(g, [1] * g.n))


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def topo_index_json(g: Graph) -> str:
    return json.dumps([format_rational(x) for x in topo_index(g)])
