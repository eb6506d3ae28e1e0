"""Text and JSON formats: star expressions, point literals, chains, walks.

Grammar for star expressions: rationals "p/q", basis symbol names, unary
minus, binary plus/minus, parentheses, and the suffixes "+e"/"-e" attaching
an epsilon tag to a rational atom.  Angle expressions use the same grammar
restricted to single-valued exact results.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional

from .basis import IrrationalBasis
from .circle import Point
from .errors import UsageError
from .simplices import Chain, Edge1, Simplex2, Vertex0
from .shells import Representation, Shell1, literal_representation, make_shell
from .star import (EXACT, MINUS_EPS, PLUS_EPS, RealValue, StarValue,
                   plus_star, rational, star_sort, symbol)
from .walks import ChainWalk, WalkRepresentation

_TOKEN = re.compile(r"\s*(?:(?P<eps>[+-]e\b)|(?P<num>\d+(?:/\d+)?)|"
                    r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise UsageError(f"parse error at position {pos}: {text[pos:]!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over the star-expression grammar, multivalued."""

    def __init__(self, text: str, basis: IrrationalBasis):
        self.tokens = _tokenize(text)
        self.basis = basis
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise UsageError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> frozenset[StarValue]:
        result = self.expr()
        if self.peek() is not None:
            kind, text, where = self.peek()
            raise UsageError(f"trailing input at position {where}: {text!r}")
        return result

    def expr(self) -> frozenset[StarValue]:
        acc = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok[1] not in ("+", "-"):
                return acc
            self.next()
            rhs = self.term()
            if tok[1] == "-":
                from .star import neg_star
                rhs = frozenset(neg_star(v) for v in rhs)
            acc = frozenset().union(*(plus_star(p, q) for p in acc for q in rhs))

    def term(self) -> frozenset[StarValue]:
        values = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "eps":
            self.next()
            tag = PLUS_EPS if tok[1] == "+e" else MINUS_EPS
            if len(values) != 1:
                raise UsageError("epsilon suffix needs a single-valued operand")
            (value,) = values
            if value.tag != EXACT or not value.value.is_rational():
                raise UsageError(
                    f"epsilon suffix at position {tok[2]} requires an exact rational")
            return frozenset({StarValue(value.value, tag)})
        return values

    def atom(self) -> frozenset[StarValue]:
        kind, text, where = self.next()
        if kind == "num":
            coeff = Fraction(text)
            tok = self.peek()
            if tok is not None and tok[1] == "*":
                self.next()
                kind2, name, where2 = self.next()
                if kind2 != "name":
                    raise UsageError(f"expected symbol name at position {where2}")
                return frozenset({StarValue(symbol(self.basis, name, coeff), EXACT)})
            return frozenset({StarValue(rational(self.basis, coeff), EXACT)})
        if kind == "name":
            return frozenset({StarValue(symbol(self.basis, text), EXACT)})
        if text == "(":
            inner = self.expr()
            closing = self.next()
            if closing[1] != ")":
                raise UsageError(f"expected ')' at position {closing[2]}")
            return inner
        if text == "-":
            from .star import neg_star
            return frozenset(neg_star(v) for v in self.atom())
        raise UsageError(f"unexpected token {text!r} at position {where}")


def eval_star_expr(text: str, basis: IrrationalBasis) -> frozenset[StarValue]:
    return _Parser(text, basis).parse()


def parse_real(text: str, basis: IrrationalBasis) -> RealValue:
    """Single-valued exact combination, as used in angle literals."""
    values = eval_star_expr(text, basis)
    if len(values) != 1:
        raise UsageError(f"expression {text!r} is multivalued; angles must be exact")
    (value,) = values
    if value.tag != EXACT:
        raise UsageError(f"expression {text!r} carries an epsilon tag; angles must be exact")
    return value.value


def format_fraction(q: Fraction) -> str:
    return str(q)


def format_real(value: RealValue) -> str:
    parts: list[str] = []
    if value.q0 != 0 or not value.coords:
        parts.append(format_fraction(value.q0))
    for idx, coeff in value.coords:
        name = value.basis.name_of(idx)
        if coeff == 1:
            text = name
        elif coeff == -1:
            text = f"-{name}"
        else:
            text = f"{format_fraction(coeff)}*{name}"
        if parts and not text.startswith("-"):
            parts.append(f"+ {text}")
        elif parts:
            parts.append(f"- {text[1:]}")
        else:
            parts.append(text)
    return " ".join(parts)


def format_star(value: StarValue) -> str:
    suffix = {MINUS_EPS: "-e", EXACT: "", PLUS_EPS: "+e"}[value.tag]
    return f"{format_real(value.value)}{suffix}"


def format_star_set(values) -> str:
    return "{" + ", ".join(format_star(v) for v in star_sort(values)) + "}"


def parse_star(text: str, basis: IrrationalBasis) -> StarValue:
    values = eval_star_expr(text, basis)
    if len(values) != 1:
        raise UsageError(f"expression {text!r} does not denote a single star value")
    (value,) = values
    return value


# -- points, simplices, chains ---------------------------------------------------


def point_to_json(p: Point) -> dict:
    return {"angle": format_real(p.angle), "iota": format_fraction(p.iota)}


def point_from_json(data: Any, basis: IrrationalBasis) -> Point:
    if not isinstance(data, dict) or "angle" not in data:
        raise UsageError(f"bad point literal {data!r}")
    angle = parse_real(str(data["angle"]), basis)
    try:
        iota = Fraction(str(data.get("iota", "0")))
    except ValueError as exc:
        raise UsageError(f"bad iota in point literal: {exc}") from exc
    return Point.make(angle, iota)


def edge_to_json(edge: Edge1) -> dict:
    return {
        "support": list(edge.support),
        "vertices": [point_to_json(v) for v in edge.vertices],
        "images": [point_to_json(v) for v in edge.images],
    }


def edge_from_json(data: Any, basis: IrrationalBasis) -> Edge1:
    try:
        support = tuple(int(i) for i in data["support"])
        vertices = tuple(point_from_json(v, basis) for v in data["vertices"])
        images = tuple(point_from_json(v, basis) for v in data["images"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad edge literal: {exc}") from exc
    if len(support) != 2 or len(vertices) != 2 or len(images) != 2:
        raise UsageError("edge literal needs 2 supports, 2 vertices, 2 images")
    return Edge1(support, vertices, images)


def simplex2_to_json(simplex: Simplex2) -> dict:
    faces = {}
    for (p, q), face in zip(Simplex2._FACE_POSITIONS, simplex.faces):
        key = f"{simplex.support[p]},{simplex.support[q]}"
        faces[key] = edge_to_json(face)
    return {
        "support": list(simplex.support),
        "tops": [point_to_json(t) for t in simplex.tops],
        "faces": faces,
    }


def simplex2_from_json(data: Any, basis: IrrationalBasis) -> Simplex2:
    try:
        support = tuple(int(i) for i in data["support"])
        tops = tuple(point_from_json(t, basis) for t in data["tops"])
        faces_json = data["faces"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad simplex literal: {exc}") from exc
    if len(support) != 3 or len(tops) != 3:
        raise UsageError("simplex literal needs 3 supports and 3 tops")
    faces = []
    for p, q in Simplex2._FACE_POSITIONS:
        key = f"{support[p]},{support[q]}"
        if key not in faces_json:
            raise UsageError(f"simplex literal missing face {key}")
        faces.append(edge_from_json(faces_json[key], basis))
    return Simplex2(support, tops, tuple(faces))


def vertex_to_json(v: Vertex0) -> dict:
    return {"index": v.index, "point": point_to_json(v.point)}


def chain_to_json(chain: Chain) -> dict:
    terms = []
    for simplex, coeff in sorted(chain.items(), key=_term_sort_key):
        if isinstance(simplex, Vertex0):
            body = vertex_to_json(simplex)
        elif isinstance(simplex, Edge1):
            body = edge_to_json(simplex)
        else:
            body = simplex2_to_json(simplex)
        terms.append({"coef": coeff, "simplex": body})
    return {"dim": chain.dim, "terms": terms}


def _term_sort_key(item):
    simplex, coeff = item
    if isinstance(simplex, Vertex0):
        return (simplex.index,), coeff
    return simplex.support, coeff


def chain_from_json(data: Any, basis: IrrationalBasis) -> Chain:
    try:
        dim = int(data["dim"])
        raw_terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad chain literal: {exc}") from exc
    if dim not in (1, 2):
        raise UsageError("chain dim must be 1 or 2")
    terms = []
    for entry in raw_terms:
        try:
            coeff = int(entry["coef"])
            body = entry["simplex"]
        except (KeyError, TypeError) as exc:
            raise UsageError(f"bad chain term: {exc}") from exc
        simplex = (edge_from_json(body, basis) if dim == 1
                   else simplex2_from_json(body, basis))
        terms.append((simplex, coeff))
    return Chain(dim, terms)


def representation_to_json(rep: Representation) -> list[dict]:
    return [point_to_json(p) for p in rep.points()]


def representation_from_json(data: Any, basis: IrrationalBasis) -> Representation:
    if not isinstance(data, list) or len(data) != 4:
        raise UsageError("representation literal needs exactly 4 points")
    a, b, c, a_prime = (point_from_json(p, basis) for p in data)
    return Representation(a, b, c, a_prime)


def shell_to_json(shell: Shell1) -> dict:
    """Representation-plus-support form when the stored images chain up,
    full edge form otherwise."""
    rep = literal_representation(shell)
    candidate = None
    try:
        candidate = make_shell(rep, shell.support, vertices=shell.vertex_objects)
    except UsageError:
        candidate = None
    if candidate == shell:
        return {
            "support": list(shell.support),
            "representation": representation_to_json(rep),
            "vertices": [point_to_json(v) for v in shell.vertex_objects],
        }
    return {
        "support": list(shell.support),
        "edges": {
            "e01": edge_to_json(shell.e01),
            "e12": edge_to_json(shell.e12),
            "e02": edge_to_json(shell.e02),
        },
    }


def shell_from_json(data: Any, basis: IrrationalBasis) -> Shell1:
    if not isinstance(data, dict):
        raise UsageError("shell literal must be an object")
    support = tuple(int(i) for i in data.get("support", (0, 1, 2)))
    if len(support) != 3:
        raise UsageError("shell support must be a triple")
    if "edges" in data:
        edges = data["edges"]
        return Shell1(edge_from_json(edges["e01"], basis),
                      edge_from_json(edges["e12"], basis),
                      edge_from_json(edges["e02"], basis))
    if "representation" not in data:
        raise UsageError("shell literal needs 'representation' or 'edges'")
    rep = representation_from_json(data["representation"], basis)
    vertices = None
    if "vertices" in data:
        verts = [point_from_json(v, basis) for v in data["vertices"]]
        if len(verts) != 3:
            raise UsageError("shell vertices must be a triple")
        vertices = tuple(verts)
    return make_shell(rep, support, vertices=vertices)


def walk_to_json(walk: ChainWalk) -> dict:
    return {
        "indexSeq": list(walk.index_seq),
        "terms": [{"sign": sign, "simplex": simplex2_to_json(s)}
                  for sign, s in walk.terms],
    }


def walk_from_json(data: Any, basis: IrrationalBasis) -> ChainWalk:
    try:
        index_seq = tuple(int(k) for k in data["indexSeq"])
        raw = data["terms"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad walk literal: {exc}") from exc
    terms = []
    for entry in raw:
        try:
            sign = int(entry["sign"])
            simplex = simplex2_from_json(entry["simplex"], basis)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"bad walk term: {exc}") from exc
        terms.append((sign, simplex))
    return ChainWalk(tuple(terms), index_seq)


def walk_representation_to_json(wr: WalkRepresentation) -> dict:
    return {
        "representation": representation_to_json(wr.rep),
        "apex": point_to_json(wr.apex),
        "points": [point_to_json(p) for p in wr.points],
        "pivot": wr.pivot,
        "matching": [list(pair) for pair in wr.matching],
    }
