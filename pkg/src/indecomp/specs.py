"""The CLI group-spec grammar.

  C(n) cyclic, Q(n) generalized quaternion (order 2^n), M(m,n,r) metacyclic,
  PQ(p,a,q,b,r) semidirect, S(n) symmetric, D(n) dihedral (order 2n),
  A(f1,f2,...) abelian, X(spec,spec) direct product.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import construct
from .core import FiniteGroup


class SpecParseError(ValueError):
    """Malformed group-spec string."""


@dataclass(frozen=True)
class SpecNode:
    kind: str
    args: tuple

    def __str__(self) -> str:
        return canonical_spec(self)


_INT_ARITY = {"C": 1, "Q": 1, "S": 1, "D": 1, "M": 3, "PQ": 5}

_TOKEN = re.compile(r"\s*([A-Za-z]+|\d+|[(),])")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecParseError(f"unexpected character at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise SpecParseError("unexpected end of spec")
        self.pos += 1
        return tok

    def expect(self, what: str) -> None:
        tok = self.take()
        if tok != what:
            raise SpecParseError(f"expected {what!r}, got {tok!r}")

    def parse_int(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise SpecParseError(f"expected an integer, got {tok!r}")
        return int(tok)

    def parse_spec(self) -> SpecNode:
        kind = self.take().upper()
        self.expect("(")
        if kind == "X":
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            self.expect(")")
            return SpecNode("X", (left, right))
        if kind == "A":
            args = [self.parse_int()]
            while self.peek() == ",":
                self.take()
                args.append(self.parse_int())
            self.expect(")")
            return SpecNode("A", tuple(args))
        if kind in _INT_ARITY:
            args = [self.parse_int()]
            for _ in range(_INT_ARITY[kind] - 1):
                self.expect(",")
                args.append(self.parse_int())
            self.expect(")")
            return SpecNode(kind, tuple(args))
        raise SpecParseError(f"unknown family {kind!r}")


def parse_spec(text: str) -> SpecNode:
    parser = _Parser(_tokenize(text))
    node = parser.parse_spec()
    if parser.peek() is not None:
        raise SpecParseError(f"trailing input after spec: {parser.tokens[parser.pos:]}")
    return node


def canonical_spec(node: SpecNode) -> str:
    if node.kind == "X":
        left, right = node.args
        return f"X({canonical_spec(left)},{canonical_spec(right)})"
    return f"{node.kind}({','.join(str(a) for a in node.args)})"


def spec_order(node: SpecNode) -> int:
    """Nominal order of the group a spec denotes, without building it."""
    kind, args = node.kind, node.args
    if kind == "C":
        return args[0]
    if kind == "Q":
        return 2 ** args[0]
    if kind == "S":
        return math.factorial(args[0])
    if kind == "D":
        return 2 * args[0]
    if kind == "M":
        return args[0] * args[1]
    if kind == "PQ":
        p, a, q, b, _ = args
        return p**a * q**b
    if kind == "A":
        return math.prod(args)
    if kind == "X":
        return spec_order(args[0]) * spec_order(args[1])
    raise SpecParseError(f"unknown family {kind!r}")


def build_group(node: SpecNode) -> FiniteGroup:
    kind, args = node.kind, node.args
    if kind == "C":
        return construct.cyclic(*args)
    if kind == "Q":
        return construct.generalized_quaternion(*args)
    if kind == "S":
        return construct.symmetric(*args)
    if kind == "D":
        return construct.dihedral(*args)
    if kind == "M":
        return construct.metacyclic(*args)
    if kind == "PQ":
        return construct.semidirect_pq(*args)
    if kind == "A":
        return construct.abelian(list(args))
    if kind == "X":
        return construct.direct_product(build_group(args[0]), build_group(args[1]))
    raise SpecParseError(f"unknown family {kind!r}")
