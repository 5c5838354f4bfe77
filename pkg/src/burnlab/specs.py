"""Symbolic graph-family descriptions and their text grammar.

Grammar (as accepted on the command line)::

    path:7   cycle:12   complete:5   kbip:4,6   spider:5,3,4,2   wheel:30
    corona(cycle:3)   join(path:2,path:3)   cart(path:4,path:3)   file:PATH
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import graph as gr
from .graph import Graph, ParseError, GraphError

SIMPLE_KINDS = ("path", "cycle", "complete", "kbip", "spider", "wheel")
COMPOSITE_KINDS = ("corona", "join", "cart")


class SpecError(GraphError):
    """A family spec violates its parameter constraints."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()
    path: str | None = None

    def __post_init__(self):
        k, p = self.kind, self.params
        if k in ("path", "complete"):
            if len(p) != 1 or p[0] < 1:
                raise SpecError(f"{k} needs one parameter n >= 1")
        elif k == "cycle":
            if len(p) != 1 or p[0] < 3:
                raise SpecError("cycle needs n >= 3")
        elif k == "wheel":
            if len(p) != 1 or p[0] < 3:
                raise SpecError("wheel needs n >= 3 rim vertices")
        elif k == "kbip":
            if len(p) != 2 or min(p) < 1:
                raise SpecError("kbip needs two part sizes m, n >= 1")
        elif k == "spider":
            if len(p) < 3:
                raise SpecError("spider needs at least 3 legs (1 or 2 legs is a path)")
            if min(p) < 1:
                raise SpecError("spider legs must have length >= 1")
        elif k == "corona":
            if len(self.parts) != 1:
                raise SpecError("corona takes exactly one inner spec")
        elif k in ("join", "cart"):
            if len(self.parts) != 2:
                raise SpecError(f"{k} takes exactly two inner specs")
        elif k == "file":
            if not self.path:
                raise SpecError("file spec needs a path")
        else:
            raise SpecError(f"unknown family kind {k!r}")

    def __str__(self) -> str:
        if self.kind == "file":
            return f"file:{self.path}"
        if self.kind in COMPOSITE_KINDS:
            return f"{self.kind}({','.join(str(q) for q in self.parts)})"
        return f"{self.kind}:{','.join(str(x) for x in self.params)}"

    @property
    def order(self) -> int:
        """Number of vertices of the generated graph."""
        k, p = self.kind, self.params
        if k in ("path", "cycle", "complete"):
            return p[0]
        if k == "kbip":
            return p[0] + p[1]
        if k == "spider":
            return sum(p) + 1
        if k == "wheel":
            return p[0] + 1
        if k == "corona":
            return 2 * self.parts[0].order
        if k == "join":
            return self.parts[0].order + self.parts[1].order
        if k == "cart":
            return self.parts[0].order * self.parts[1].order
        return generate(self).n


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def kbip(m: int, n: int) -> FamilySpec:
    return FamilySpec("kbip", (m, n))


def spider(*legs: int) -> FamilySpec:
    return FamilySpec("spider", tuple(legs))


def wheel(n: int) -> FamilySpec:
    return FamilySpec("wheel", (n,))


def corona(inner: FamilySpec) -> FamilySpec:
    return FamilySpec("corona", parts=(inner,))


def join(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec("join", parts=(a, b))


def cart(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec("cart", parts=(a, b))


def file(path: str) -> FamilySpec:
    return FamilySpec("file", path=str(path))


def generate(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        return gr.path_graph(p[0])
    if k == "cycle":
        return gr.cycle_graph(p[0])
    if k == "complete":
        return gr.complete_graph(p[0])
    if k == "kbip":
        return gr.complete_bipartite_graph(*p)
    if k == "spider":
        return gr.spider_graph(p)
    if k == "wheel":
        return gr.wheel_graph(p[0])
    if k == "corona":
        return gr.corona(generate(spec.parts[0]))
    if k == "join":
        return gr.join(generate(spec.parts[0]), generate(spec.parts[1]))
    if k == "cart":
        return gr.cartesian(generate(spec.parts[0]), generate(spec.parts[1]))
    return gr.parse_edge_list(Path(spec.path).read_text())


def _split_top(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced parentheses in {body!r}")
    parts.append("".join(cur))
    return parts


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI family grammar into a :class:`FamilySpec`."""
    s = text.strip()
    if s.startswith("file:"):
        return file(s[5:])
    for kind in COMPOSITE_KINDS:
        if s.startswith(kind + "(") and s.endswith(")"):
            inner = [parse_spec(x) for x in _split_top(s[len(kind) + 1:-1])]
            return FamilySpec(kind, parts=tuple(inner))
    kind, sep, rest = s.partition(":")
    if not sep or kind not in SIMPLE_KINDS:
        raise ParseError(f"cannot parse family spec {text!r}")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ParseError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(kind, params)
