"""A small expression language for naming graphs on the command line.

::

    expr  := K<n> | C<n> | P<n> | KB(<a>,<b>)
           | join(expr, expr)
           | cart(expr, KB(<a>,<b>))
           | cart(expr, @<path>)

``@<path>`` names a JSON file holding a bipartite graph with its sides:
``{"n": .., "edges": [[u, v], ..], "A": [..], "B": [..]}``.  Whitespace is
ignored.  ``str()`` of a parsed expression gives its canonical spelling, and
parsing that spelling returns an equal expression.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import InvalidParameter
from .graph import (
    CompleteBipartite,
    ExplicitBipartite,
    Graph,
    ProductGraph,
    build_family,
    cartesian_product,
    join,
)


class ParseError(InvalidParameter):
    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class Atom:
    kind: str  # "K", "C", "P" or "KB"
    sizes: tuple

    def __str__(self):
        if self.kind == "KB":
            return f"KB({self.sizes[0]},{self.sizes[1]})"
        return f"{self.kind}{self.sizes[0]}"

    def evaluate(self) -> Graph:
        name = {"K": "complete", "C": "cycle", "P": "path", "KB": "complete_bipartite"}[self.kind]
        return build_family(name, *self.sizes)


@dataclass(frozen=True)
class BipartiteFile:
    path: str

    def __str__(self):
        return f"@{self.path}"

    def spec(self) -> ExplicitBipartite:
        try:
            data = json.loads(Path(self.path).read_text())
            h = Graph.from_json({"n": data["n"], "edges": data["edges"], **({"labels": data["labels"]}
                                                                              if "labels" in data else {})})
            return ExplicitBipartite(h, tuple(data["A"]), tuple(data["B"]))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InvalidParameter(f"cannot read bipartite graph from {self.path}: {exc}") from None


@dataclass(frozen=True)
class Join:
    left: "GraphExpression"
    right: "GraphExpression"

    def __str__(self):
        return f"join({self.left},{self.right})"

    def evaluate(self) -> Graph:
        return join(as_graph(self.left.evaluate()), as_graph(self.right.evaluate()))


@dataclass(frozen=True)
class Cart:
    left: "GraphExpression"
    right: Union[Atom, BipartiteFile]

    def __str__(self):
        return f"cart({self.left},{self.right})"

    def evaluate(self) -> ProductGraph:
        if isinstance(self.right, Atom):
            spec = CompleteBipartite(*self.right.sizes)
        else:
            spec = self.right.spec()
        return cartesian_product(as_graph(self.left.evaluate()), spec)


GraphExpression = Union[Atom, Join, Cart]


def as_graph(value) -> Graph:
    return value.base if isinstance(value, ProductGraph) else value


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]+)|(?P<file>@[^,()\s]+)|(?P<punct>[(),]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(text, pos, "unexpected character")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(self.text, tok[2], f"expected {want!r}, found {got}")
        self.i += 1
        return tok

    def number(self) -> int:
        return int(self.take("num")[1])

    def expr(self):
        kind, value, pos = self.peek()
        if kind != "name":
            raise ParseError(self.text, pos, "expected a graph name")
        self.i += 1
        if value in ("join", "cart"):
            self.take("punct", "(")
            left = self.expr()
            self.take("punct", ",")
            if value == "join":
                right = self.expr()
            else:
                right = self.bipartite()
            self.take("punct", ")")
            return Join(left, right) if value == "join" else Cart(left, right)
        if value == "KB":
            self.take("punct", "(")
            a = self.number()
            self.take("punct", ",")
            b = self.number()
            self.take("punct", ")")
            return Atom("KB", (a, b))
        if value in ("K", "C", "P"):
            return Atom(value, (self.number(),))
        raise ParseError(self.text, pos, f"unknown graph {value!r}")

    def bipartite(self):
        kind, value, pos = self.peek()
        if kind == "file":
            self.i += 1
            return BipartiteFile(value[1:])
        if kind == "name" and value == "KB":
            return self.expr()
        raise ParseError(self.text, pos, "second factor of cart must be KB(a,b) or @file")


def parse_graph_expression(text: str) -> GraphExpression:
    parser = _Parser(text)
    tree = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(text, pos, f"unexpected {value!r} after expression")
    return tree


def evaluate(text: str):
    """Parse and build: a Graph, or a ProductGraph for ``cart(...)``."""
    return parse_graph_expression(text).evaluate()
