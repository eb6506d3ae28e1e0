"""Closed independent simplices over the empty base, chains, and boundaries.

A 1-simplex stores, per support index, a vertex object (the point standing
for its enumerated closure) and an image point (where the attaching
elementary map sends the vertex generator inside the edge's closed set).
Splitting vertex from image is what lets an edge carry nontrivial holonomy
while still literally sharing faces with its neighbours.

A 2-simplex stores its three top images plus three explicit faces.  A face
need not repeat the top images; it only has to have the matching distance
type, which is exactly the condition for the attaching map to be elementary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .circle import Point, Translation, independent, sd
from .errors import PreconditionError, UsageError
from .star import EXACT, StarValue, star_compare


@dataclass(frozen=True)
class Vertex0:
    """A 0-simplex: one support index with its vertex object."""

    index: int
    point: Point


@dataclass(frozen=True)
class Edge1:
    """A 1-simplex over a two-element support."""

    support: tuple[int, int]
    vertices: tuple[Point, Point]
    images: tuple[Point, Point]

    def __post_init__(self):
        i, j = self.support
        if not 0 <= i < j:
            raise UsageError(f"edge support must be an ordered pair, got {self.support}")
        d = sd(*self.images)
        if d.tag == EXACT and d.value.is_rational():
            raise PreconditionError(
                "edge images are interalgebraic (exact rational distance); "
                "simplex vertices must be independent")

    @property
    def sd_type(self) -> StarValue:
        """Complete isomorphism invariant of the edge: sd of its image pair."""
        return sd(*self.images)

    def boundary(self) -> "Chain":
        low, high = self.support
        return Chain(0, ((Vertex0(high, self.vertices[1]), 1),
                         (Vertex0(low, self.vertices[0]), -1)))


@dataclass(frozen=True)
class Simplex2:
    """A 2-simplex over a three-element support with explicit faces.

    ``faces`` are keyed by position: faces[0] spans support positions (0,1),
    faces[1] spans (0,2), faces[2] spans (1,2).
    """

    support: tuple[int, int, int]
    tops: tuple[Point, Point, Point]
    faces: tuple[Edge1, Edge1, Edge1]

    _FACE_POSITIONS = ((0, 1), (0, 2), (1, 2))

    def __post_init__(self):
        i, j, k = self.support
        if not 0 <= i < j < k:
            raise UsageError(f"simplex support must be an ordered triple, got {self.support}")
        if not independent(list(self.tops)):
            raise PreconditionError("top images of a 2-simplex must be independent")
        for face, (p, q) in zip(self.faces, self._FACE_POSITIONS):
            expected_support = (self.support[p], self.support[q])
            if face.support != expected_support:
                raise UsageError(
                    f"face spans {face.support}, expected {expected_support}")
            if star_compare(face.sd_type, sd(self.tops[p], self.tops[q])) != 0:
                raise PreconditionError(
                    "face distance type does not match the top images; "
                    "no elementary attaching map exists")
        # incident faces must agree on vertex objects at each support index
        v_at = {}
        for face, (p, q) in zip(self.faces, self._FACE_POSITIONS):
            for pos, vert in ((p, face.vertices[0]), (q, face.vertices[1])):
                if v_at.setdefault(pos, vert) != vert:
                    raise PreconditionError(
                        f"faces disagree on the vertex object at position {pos}")

    def face(self, p: int, q: int) -> Edge1:
        return self.faces[self._FACE_POSITIONS.index((p, q))]

    def boundary(self) -> "Chain":
        return Chain(1, ((self.face(1, 2), 1),
                         (self.face(0, 2), -1),
                         (self.face(0, 1), 1)))


Simplex = Union[Vertex0, Edge1, Simplex2]


def make_simplex2(support: tuple[int, int, int],
                  tops: tuple[Point, Point, Point],
                  vertices: Optional[tuple[Point, Point, Point]] = None,
                  shared: Optional[Mapping[tuple[int, int], Edge1]] = None) -> Simplex2:
    """Build a 2-simplex, defaulting face images to the top image pairs.

    ``shared`` overrides chosen faces (keyed by support position pair) with
    pre-existing edges, which is how constructions arrange literal face
    matches between neighbouring simplices.
    """
    if vertices is None:
        vertices = tops
    shared = dict(shared or {})
    faces = []
    for p, q in Simplex2._FACE_POSITIONS:
        if (p, q) in shared:
            faces.append(shared[(p, q)])
        else:
            faces.append(Edge1((support[p], support[q]),
                               (vertices[p], vertices[q]),
                               (tops[p], tops[q])))
    return Simplex2(support, tops, tuple(faces))


class Chain:
    """Formal integer combination of same-dimension simplices.

    Terms with equal simplices cancel structurally; zero coefficients are
    dropped.  Chains are immutable and hashable.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Iterable[tuple[Simplex, int]] = ()):
        self.dim = dim
        acc: dict[Simplex, int] = {}
        for simplex, coeff in terms:
            if coeff == 0:
                continue
            new = acc.get(simplex, 0) + coeff
            if new == 0:
                acc.pop(simplex, None)
            else:
                acc[simplex] = new
        self._terms = frozenset(acc.items())

    @property
    def terms(self) -> frozenset:
        return self._terms

    def items(self) -> list[tuple[Simplex, int]]:
        return list(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise UsageError("cannot add chains of different dimensions")
        return Chain(self.dim, list(self._terms) + list(other._terms))

    def __neg__(self) -> "Chain":
        return Chain(self.dim, [(s, -c) for s, c in self._terms])

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, factor: int) -> "Chain":
        return Chain(self.dim, [(s, c * factor) for s, c in self._terms])

    def length(self) -> int:
        return sum(abs(c) for _, c in self._terms)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for simplex, _ in self._terms:
            if isinstance(simplex, Vertex0):
                out.add(simplex.index)
            else:
                out.update(simplex.support)
        return frozenset(out)

    def part(self, support: tuple[int, ...]) -> "Chain":
        """Sub-chain of terms whose support equals the given tuple."""
        wanted = tuple(sorted(support))
        kept = []
        for simplex, coeff in self._terms:
            s = (simplex.index,) if isinstance(simplex, Vertex0) else simplex.support
            if s == wanted:
                kept.append((simplex, coeff))
        return Chain(self.dim, kept)


def boundary(chain: Chain) -> Chain:
    """Alternating-sum boundary operator, linear over chains."""
    if chain.dim < 1:
        raise UsageError("boundary is defined for dimension >= 1")
    terms = []
    for simplex, coeff in chain.items():
        for face, face_coeff in simplex.boundary().items():
            terms.append((face, face_coeff * coeff))
    return Chain(chain.dim - 1, terms)


def boundary_i(simplex: Union[Edge1, Simplex2], i: int) -> Simplex:
    """The i-th restriction: drop the i-th support element."""
    if isinstance(simplex, Edge1):
        if i == 0:
            return Vertex0(simplex.support[1], simplex.vertices[1])
        if i == 1:
            return Vertex0(simplex.support[0], simplex.vertices[0])
        raise UsageError("edge restriction index must be 0 or 1")
    if isinstance(simplex, Simplex2):
        if i == 0:
            return simplex.face(1, 2)
        if i == 1:
            return simplex.face(0, 2)
        if i == 2:
            return simplex.face(0, 1)
        raise UsageError("simplex restriction index must be 0, 1, or 2")
    raise UsageError("restriction is defined for dimension >= 1")


def chain_of(simplex: Simplex, coeff: int = 1) -> Chain:
    dim = 0 if isinstance(simplex, Vertex0) else (1 if isinstance(simplex, Edge1) else 2)
    return Chain(dim, ((simplex, coeff),))


@dataclass(frozen=True)
class Shell1:
    """Compatible triple of edges forming the cycle e01 + e12 - e02.

    Naming follows positions within the sorted support triple: e01 spans the
    first two indices, e12 the last two, e02 the outer pair.
    """

    e01: Edge1
    e12: Edge1
    e02: Edge1

    def __post_init__(self):
        i, j = self.e01.support
        j2, k = self.e12.support
        i2, k2 = self.e02.support
        if not (i == i2 and j == j2 and k == k2 and i < j < k):
            raise PreconditionError(
                f"edge supports {self.e01.support}, {self.e12.support}, "
                f"{self.e02.support} do not form a shell triangle")
        if self.e01.vertices[0] != self.e02.vertices[0]:
            raise PreconditionError("shell edges disagree on the vertex object at the low index")
        if self.e01.vertices[1] != self.e12.vertices[0]:
            raise PreconditionError("shell edges disagree on the vertex object at the middle index")
        if self.e12.vertices[1] != self.e02.vertices[1]:
            raise PreconditionError("shell edges disagree on the vertex object at the high index")

    @property
    def support(self) -> tuple[int, int, int]:
        return (self.e01.support[0], self.e01.support[1], self.e12.support[1])

    @property
    def vertex_objects(self) -> tuple[Point, Point, Point]:
        return (self.e01.vertices[0], self.e01.vertices[1], self.e12.vertices[1])

    def as_chain(self) -> Chain:
        return Chain(1, ((self.e01, 1), (self.e12, 1), (self.e02, -1)))

    def sd_types(self) -> tuple[StarValue, StarValue, StarValue]:
        return (self.e01.sd_type, self.e12.sd_type, self.e02.sd_type)


def shell_from_chain(chain: Chain) -> Optional[Shell1]:
    """Parse a 1-chain as a shell, or return None if it is not one."""
    if chain.dim != 1:
        return None
    items = chain.items()
    if len(items) != 3 or any(abs(c) != 1 for _, c in items):
        return None
    signs = {c for _, c in items}
    if signs == {1} or signs == {-1}:
        return None
    flip = 1 if sum(c for _, c in items) == 1 else -1
    by_support = {s.support: (s, c * flip) for s, c in items}
    if len(by_support) != 3:
        return None
    indices = sorted({i for sup in by_support for i in sup})
    if len(indices) != 3:
        return None
    i, j, k = indices
    try:
        e01, c01 = by_support[(i, j)]
        e12, c12 = by_support[(j, k)]
        e02, c02 = by_support[(i, k)]
    except KeyError:
        return None
    if (c01, c12, c02) != (1, 1, -1):
        return None
    try:
        return Shell1(e01, e12, e02)
    except PreconditionError:
        return None


def is_shell(chain: Chain) -> bool:
    """Three unit terms whose faces satisfy the shell compatibility conditions."""
    return shell_from_chain(chain) is not None


def translate_point_tuple(t: Translation, points: tuple[Point, ...]) -> tuple[Point, ...]:
    return tuple(t(p) for p in points)


def translate_simplex(t: Translation, simplex: Simplex) -> Simplex:
    if isinstance(simplex, Vertex0):
        return Vertex0(simplex.index, t(simplex.point))
    if isinstance(simplex, Edge1):
        return Edge1(simplex.support,
                     translate_point_tuple(t, simplex.vertices),
                     translate_point_tuple(t, simplex.images))
    return Simplex2(simplex.support,
                    translate_point_tuple(t, simplex.tops),
                    tuple(translate_simplex(t, f) for f in simplex.faces))


def apply_automorphism(t: Translation, chain: Chain) -> Chain:
    """Apply a translation to every stored point; commutes with the boundary."""
    return Chain(chain.dim, [(translate_simplex(t, s), c) for s, c in chain.items()])


def translate_shell(t: Translation, shell: Shell1) -> Shell1:
    return Shell1(translate_simplex(t, shell.e01),
                  translate_simplex(t, shell.e12),
                  translate_simplex(t, shell.e02))
