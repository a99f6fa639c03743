"""The form x^2 + y^2 + z^2 - 3xyz, Vieta moves and Markoff trees."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .fib import fib, is_fibonacci


class NotAnMTriple(ValueError):
    """Raised when an operation needs m > 0 but the triple has m <= 0."""


@dataclass(frozen=True, order=True)
class Triple:
    """Positive integers ``x <= y <= z``. The constructor sorts its input."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        vals = sorted((int(self.x), int(self.y), int(self.z)))
        if vals[0] <= 0:
            raise ValueError(f"triple entries must be positive: {vals}")
        for name, v in zip("xyz", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def strict(cls, x: int, y: int, z: int) -> Triple:
        """Build a triple, rejecting input that is not already ordered."""
        if not (0 < x <= y <= z):
            raise ValueError(f"triple not ordered as 0 < x <= y <= z: ({x}, {y}, {z})")
        return cls(x, y, z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"

    @property
    def is_fibonacci(self) -> bool:
        return all(is_fibonacci(v) for v in self)


@dataclass(frozen=True, order=True)
class FibTriple:
    """Fibonacci indices ``2 <= a <= b <= c``. The constructor sorts its input."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        vals = sorted((int(self.a), int(self.b), int(self.c)))
        if vals[0] < 2:
            raise ValueError(f"Fibonacci triple indices must be >= 2: {vals}")
        for name, v in zip("abc", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def strict(cls, a: int, b: int, c: int) -> FibTriple:
        if not (2 <= a <= b <= c):
            raise ValueError(f"indices not ordered as 2 <= a <= b <= c: ({a}, {b}, {c})")
        return cls(a, b, c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"

    def values(self) -> Triple:
        return Triple(fib(self.a), fib(self.b), fib(self.c))


def m_tilde(x: int, y: int, z: int) -> int:
    return x * x + y * y + z * z - 3 * x * y * z


def m_of(t: Triple) -> int:
    """The m with x^2 + y^2 + z^2 = 3xyz + m."""
    return m_tilde(t.x, t.y, t.z)


def fib_m(ft: FibTriple) -> int:
    """m(a, b, c) = F(a)^2 + F(b)^2 + F(c)^2 - 3 F(a) F(b) F(c)."""
    if not isinstance(ft, FibTriple):
        ft = FibTriple(*ft)
    return m_tilde(fib(ft.a), fib(ft.b), fib(ft.c))


def _require_positive_m(t: Triple) -> int:
    m = m_of(t)
    if m <= 0:
        raise NotAnMTriple(f"{t} has m = {m}; minimality needs m > 0")
    return m


def is_minimal(t: Triple) -> bool:
    _require_positive_m(t)
    return t.z >= 3 * t.x * t.y


def vieta_children(t: Triple) -> tuple[Triple, Triple]:
    """Replace x or y by the other root of its quadratic, keeping z as the new middle."""
    x, y, z = t
    return Triple(y, z, 3 * y * z - x), Triple(x, z, 3 * x * z - y)


def vieta_parent(t: Triple) -> Triple | None:
    """Flip the largest entry: ``z -> 3xy - z``. ``None`` for a minimal root."""
    _require_positive_m(t)
    x, y, z = t
    if z >= 3 * x * y:
        return None
    return Triple(x, y, 3 * x * y - z)


@dataclass
class TreeNode:
    triple: Triple
    depth: int
    parent: int | None
    children: list[int] = field(default_factory=list)


@dataclass
class MarkoffTree:
    root: Triple
    m: int
    depth: int
    nodes: list[TreeNode]

    def triples(self) -> list[Triple]:
        return [n.triple for n in self.nodes]

    def parent_of(self, t: Triple) -> Triple | None:
        for n in self.nodes:
            if n.triple == t:
                return None if n.parent is None else self.nodes[n.parent].triple
        raise KeyError(t)

    def edges(self) -> list[tuple[Triple, Triple]]:
        return [
            (self.nodes[n.parent].triple, n.triple)
            for n in self.nodes
            if n.parent is not None
        ]

    def to_dot(self) -> str:
        lines = ["digraph markoff_tree {", "  rankdir=LR;", "  node [shape=plaintext];"]
        for i, n in enumerate(self.nodes):
            attrs = f'label="{n.triple}"'
            if n.triple.is_fibonacci:
                attrs += ", style=bold"
            lines.append(f"  n{i} [{attrs}];")
        for i, n in enumerate(self.nodes):
            for j in n.children:
                lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        def build(i: int) -> dict:
            n = self.nodes[i]
            return {
                "triple": [str(v) for v in n.triple],
                "fibonacci": n.triple.is_fibonacci,
                "children": [build(j) for j in n.children],
            }

        return {"m": str(self.m), "depth": self.depth, "root": build(0)}

    def to_text(self) -> str:
        out = []

        def walk(i: int) -> None:
            n = self.nodes[i]
            mark = " *" if n.triple.is_fibonacci else ""
            out.append("  " * n.depth + str(n.triple) + mark)
            for j in n.children:
                walk(j)

        walk(0)
        return "\n".join(out) + "\n"


def generate_tree(root: Triple, depth: int) -> MarkoffTree:
    """Breadth-first Vieta descendants of a minimal root down to ``depth``."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    m = _require_positive_m(root)
    if not is_minimal(root):
        raise ValueError(f"{root} is not minimal (z < 3xy); it cannot be a tree root")
    nodes = [TreeNode(root, 0, None)]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        node = nodes[i]
        if node.depth == depth:
            continue
        seen = set()
        for child in vieta_children(node.triple):
            if child in seen:
                continue
            seen.add(child)
            nodes.append(TreeNode(child, node.depth + 1, i))
            node.children.append(len(nodes) - 1)
            queue.append(len(nodes) - 1)
    return MarkoffTree(root, m, depth, nodes)
