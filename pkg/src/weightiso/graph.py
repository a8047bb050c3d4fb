"""Undirected simple graphs, text formats, permutations and instance generators.

Vertices are 0-based integers ``0..n-1``. A :class:`Graph` is immutable once
built; edges are stored as ordered pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised for malformed input text or an invalid edge set."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {n}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"loop edge ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphFormatError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.neighbors)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Permutation:
    """Bijection on ``{0..n-1}``; ``map[i]`` is the image of vertex ``i``."""

    __slots__ = ("map",)

    def __init__(self, mapping: Sequence[int]):
        mapping = tuple(int(x) for x in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError("not a permutation of 0..n-1")
        self.map = mapping

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def random(cls, n: int, seed) -> "Permutation":
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        return cls(rng.permutation(n).tolist())

    def __len__(self) -> int:
        return len(self.map)

    def __getitem__(self, i: int) -> int:
        return self.map[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"Permutation({list(self.map)})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for i, j in enumerate(self.map):
            inv[j] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply ``other`` first, then ``self``."""
        return Permutation(self.map[j] for j in other.map)

    def apply(self, values: Sequence) -> list:
        """Move ``values[i]`` to position ``map[i]``."""
        out = [None] * len(self.map)
        for i, j in enumerate(self.map):
            out[j] = values[i]
        return out


# -- text formats -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Blank lines and ``#`` comments are ignored; CRLF is accepted.
    """
    lines = []
    for raw in text.replace("\r\n", "\n").split("\n"):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty edge list")
    header = lines[0].split()
    if len(header) != 2 or not all(re.fullmatch(r"\d+", t) for t in header):
        raise GraphFormatError(f"malformed header line {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for line in body:
        tok = line.split()
        if len(tok) != 2 or not all(re.fullmatch(r"-?\d+", t) for t in tok):
            raise GraphFormatError(f"malformed edge line {line!r}")
        edges.append((int(tok[0]), int(tok[1])))
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _graph6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphFormatError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(int("".join(map(str, bits[k:k + 6])), 2) + 63) for k in range(0, len(bits), 6)
    )
    return _graph6_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphFormatError("graph6 character out of printable range 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise GraphFormatError("graph6 sizes above 258047 are not supported")
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 bit stream has {len(data)} groups, expected {(nbits + 5) // 6}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- structure --------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def permute(g: Graph, p: Permutation) -> Graph:
    """Relabel vertex ``u`` as ``p[u]``; ``p`` is then an isomorphism ``g -> result``."""
    if len(p) != g.n:
        raise ValueError(f"permutation length {len(p)} != n={g.n}")
    return Graph(g.n, ((p[u], p[v]) for u, v in g.edges))


def max_clique_size(g: Graph) -> int:
    """Exact clique number by branch and bound (small graphs only)."""
    adj = g.adjacency_sets
    best = 0

    def expand(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        for v in sorted(cand):
            if size + len(cand) <= best:
                return
            expand(size + 1, cand & adj[v])
            cand = cand - {v}

    expand(0, frozenset(range(g.n)))
    return best


# -- generators -------------------------------------------------------------

def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(np.uint64(seed))


def random_connected(n: int, edge_prob: float, seed) -> Graph:
    """G(n, p) sample, with components then joined by random bridging edges."""
    if n < 1 or not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"infeasible parameters n={n}, edge_prob={edge_prob}")
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < edge_prob
    edges = set(zip(iu[keep].tolist(), ju[keep].tolist()))
    comps = components(Graph(n, edges))
    while len(comps) > 1:
        a, b = rng.choice(len(comps), size=2, replace=False)
        u = int(rng.choice(comps[a]))
        v = int(rng.choice(comps[b]))
        edges.add((min(u, v), max(u, v)))
        comps[a] = sorted(comps[a] + comps[b])
        del comps[b]
    return Graph(n, edges)


def random_regular(n: int, d: int, seed, connected: bool = True, max_tries: int = 10000) -> Graph:
    """Uniform-ish d-regular graph from the pairing model with rejection."""
    if n < 1 or d < 0 or d >= n or (n * d) % 2:
        raise ValueError(f"infeasible regular graph parameters n={n}, d={d}")
    rng = _rng(seed)
    for _ in range(max_tries):
        points = rng.permutation(np.repeat(np.arange(n), d))
        pairs = points.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        edges = {(min(u, v), max(u, v)) for u, v in pairs.tolist()}
        if len(edges) != len(pairs):
            continue
        g = Graph(n, edges)
        if connected and not is_connected(g):
            continue
        return g
    raise ValueError(f"no {d}-regular graph on {n} vertices found in {max_tries} tries")


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def k33() -> Graph:
    return Graph(6, ((a, b) for a in range(3) for b in range(3, 6)))


def prism() -> Graph:
    """Triangular prism C3 x K2."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def rook44() -> Graph:
    """4x4 rook's graph K4 x K4, strongly regular (16, 6, 2, 2)."""
    return Graph(16, ((u, v) for u, v in combinations(range(16), 2)
                      if u // 4 == v // 4 or u % 4 == v % 4))


def shrikhande() -> Graph:
    """Cayley graph of Z4 x Z4 on {+-(1,0), +-(0,1), +-(1,1)}; srg(16, 6, 2, 2)."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for u, v in combinations(range(16), 2):
        diff = ((v // 4 - u // 4) % 4, (v % 4 - u % 4) % 4)
        if diff in conn:
            edges.append((u, v))
    return Graph(16, edges)


def paley(q: int) -> Graph:
    """Paley graph on a prime ``q = 1 (mod 4)``: ``u ~ v`` iff ``u - v`` is a nonzero square."""
    if q < 5 or q % 4 != 1 or any(q % t == 0 for t in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"paley graph needs a prime q = 1 mod 4, got {q}")
    squares = {x * x % q for x in range(1, q)}
    return Graph(q, ((u, v) for u, v in combinations(range(q), 2) if (v - u) % q in squares))


_NAMED = {
    "k2": lambda: complete(2),
    "k3": lambda: complete(3),
    "petersen": petersen,
    "k33": k33,
    "prism": prism,
    "rook44": rook44,
    "shrikhande": shrikhande,
}
_SIZED = {"path": path, "cycle": cycle, "complete": complete, "paley": paley}

NAMED_GRAPHS = tuple(_NAMED) + tuple(f"{k}:N" for k in _SIZED)


def named(name: str) -> Graph:
    """Named graph: one of ``NAMED_GRAPHS``; sized families as ``path:5`` or ``path(5)``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"(path|cycle|complete|paley)(?::|\(|)(\d+)\)?", key)
    if m:
        return _SIZED[m.group(1)](int(m.group(2)))
    raise ValueError(f"unknown graph name {name!r}")


def generate(kind: str, *args, **kwargs) -> Graph:
    """Dispatch to ``random_connected``, ``random_regular`` or ``named``."""
    table = {"random_connected": random_connected, "random_regular": random_regular, "named": named}
    if kind not in table:
        raise ValueError(f"unknown generator {kind!r}")
    return table[kind](*args, **kwargs)
