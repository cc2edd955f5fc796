"""Markov triples: mutation recursion, tree, branches, companions, lambda(a)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NonDivisible, RootNotMaximal
from .exact import QuadElem


@dataclass(frozen=True)
class MarkovTriple:
    """Ordered positive solution of p1^2 + p2^2 + p3^2 = 3 p1 p2 p3."""

    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        p1, p2, p3 = self.p1, self.p2, self.p3
        if min(p1, p2, p3) < 1:
            raise ValueError(f"entries must be positive: {(p1, p2, p3)}")
        if p1 * p1 + p2 * p2 + p3 * p3 != 3 * p1 * p2 * p3:
            raise ValueError(f"{(p1, p2, p3)} does not solve the Markov equation")

    def as_tuple(self) -> tuple:
        return (self.p1, self.p2, self.p3)

    def canonical(self) -> tuple:
        return tuple(sorted(self.as_tuple()))

    def entry(self, index: int) -> int:
        return self.as_tuple()[index - 1]

    def others(self, index: int) -> tuple:
        """The other two entries in cyclic order after ``index``."""
        t = self.as_tuple()
        return (t[index % 3], t[(index + 1) % 3])

    def mutate(self, index: int) -> "MarkovTriple":
        pj, pk = self.others(index)
        new = 3 * pj * pk - self.entry(index)
        vals = list(self.as_tuple())
        vals[index - 1] = new
        return MarkovTriple(*vals)

    def __str__(self):
        return f"({self.p1},{self.p2},{self.p3})"


@dataclass(frozen=True)
class CompanionPair:
    q_plus: int
    q_minus: int

    def as_set(self) -> frozenset:
        return frozenset((self.q_plus, self.q_minus))


@dataclass(frozen=True)
class TreeNode:
    triple: MarkovTriple
    parent: Optional[int]  # index into the tree list, None for the root
    mutated_index: Optional[int]  # which entry was mutated to reach this node
    generation: int


def tree(generations: int) -> list:
    """Breadth-first Markov tree with duplicate suppression at the roots.

    Children are ordered by mutated index; a child equal (as a set) to an
    already-emitted triple is skipped, which prunes exactly the repeated
    triples under (1,1,1) and (1,2,1).
    """
    if generations < 1:
        raise ValueError("generations must be >= 1")
    root = MarkovTriple(1, 1, 1)
    nodes = [TreeNode(root, None, None, 1)]
    seen = {root.canonical()}
    frontier = [0]
    for gen in range(2, generations + 1):
        next_frontier = []
        for idx in frontier:
            for index in (1, 2, 3):
                child = nodes[idx].triple.mutate(index)
                if child.canonical() in seen:
                    continue
                seen.add(child.canonical())
                nodes.append(TreeNode(child, idx, index, gen))
                next_frontier.append(len(nodes) - 1)
        frontier = next_frontier
    return nodes


def tree_to_json(nodes: list) -> dict:
    return {
        "nodes": [
            {
                "triple": list(n.triple.as_tuple()),
                "parent": n.parent,
                "mutated_index": n.mutated_index,
                "generation": n.generation,
            }
            for n in nodes
        ]
    }


def parse_triple(s: str) -> MarkovTriple:
    parts = s.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'p1,p2,p3', got {s!r}")
    return MarkovTriple(*(int(p.strip()) for p in parts))


def _root_parts(root: MarkovTriple):
    """Split a branch root into (a, b0, c0) with a the largest entry."""
    vals = root.as_tuple()
    a = max(vals)
    rest = [v for v in vals if v != a]
    if len(rest) < 2:
        # the maximum appears twice: only (1,1,1)
        rest = [v for i, v in enumerate(vals) if vals.index(a) != i]
    if max(rest) > a:
        raise RootNotMaximal(f"{root} has no strict maximum at {a}")
    return a, rest[0], rest[1]


def branch_walk(root: MarkovTriple, side: str, steps: int) -> list:
    """Triples (a, c_n, b_n) along one branch below ``root``.

    The branch recursion is b_{n+1} = c_n, c_{n+1} = 3*a*c_n - b_n, so c_n
    leads and b_n lags by one step.  Side "c" reads the root's two non-a
    entries as (b_0, c_0) in positional order; side "b" swaps the letters.
    Each returned triple lists the leading entry second, matching how the
    branch triples appear in the tree.
    """
    if side not in ("b", "c"):
        raise ValueError(f"side must be 'b' or 'c', got {side!r}")
    a, u, v = _root_parts(root)
    b, c = (u, v) if side == "c" else (v, u)
    out = [MarkovTriple(a, c, b)]
    for _ in range(steps):
        b, c = c, 3 * a * c - b
        out.append(MarkovTriple(a, c, b))
    return out


def companions(t: MarkovTriple, index: int) -> CompanionPair:
    """Least nonnegative residues +/- 3 p3 p2^{-1} mod p_index."""
    p = t.entry(index)
    pj, pk = t.others(index)
    q_plus = (3 * pk * pow(pj, -1, p)) % p
    return CompanionPair(q_plus, (-q_plus) % p)


def is_companion(t: MarkovTriple, index: int, q: int) -> bool:
    p = t.entry(index)
    pair = companions(t, index)
    return q % p in pair.as_set()


def derived_companion_q2(t: MarkovTriple, q1: int) -> int:
    """(q1*p2 - 3*p3) / p1, exact; q1 must be a companion lift of p1."""
    p1, p2, p3 = t.as_tuple()
    num = q1 * p2 - 3 * p3
    if num % p1 != 0:
        raise NonDivisible(f"p1={p1} does not divide q1*p2 - 3*p3 = {num}")
    return num // p1


def lagrange_number(a: int) -> QuadElem:
    """(3a + sqrt(9a^2 - 4)) / (2a) over d = 9a^2 - 4."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    d = 9 * a * a - 4
    return QuadElem(Fraction(3, 2), Fraction(1, 2 * a), d)


def fibonacci(n: int) -> int:
    """Fib(1) = Fib(2) = 1; Fib(-1) = 1 is used for branch indexing."""
    if n == -1:
        return 1
    if n == 0:
        return 0
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def pell(n: int) -> int:
    """Pell(1) = 1, Pell(2) = 2; Pell(-1) = 1 is used for branch indexing."""
    if n == -1:
        return 1
    if n == 0:
        return 0
    a, b = 0, 1
    for _ in range(n - 1):
        a, b = b, 2 * b + a
    return b
