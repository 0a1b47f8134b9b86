"""Shapes on the integer lattice and the geometry used by the generators.

A shape is a finite, nonempty, 4-connected set of cells. This module
provides the predicates the identification constructions require
(hole-freeness, column monotonicity, feature size), the rigid seed assembly
presenting an input shape, the padded bounding frame, the frame-minus-shape
rectangle decomposition, and the border collar that a successful
identification must fill.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .model import Assembly, Glue, Material, TileType

Pos = tuple[int, int]


class GeometryError(ValueError):
    """Base for geometry errors; ``code`` is a stable machine-readable tag."""

    code = "GEOMETRY_ERROR"


class HoleyShapeError(GeometryError):
    code = "HOLEY_SHAPE"


class UndefinedFeatureError(GeometryError):
    code = "UNDEFINED_FEATURE"


class DecompositionInvalidError(GeometryError):
    code = "DECOMPOSITION_INVALID"

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _connected4(points: frozenset) -> bool:
    it = iter(points)
    try:
        start = next(it)
    except StopIteration:
        return False
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for q in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if q in points and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(points)


@dataclass(frozen=True)
class Shape:
    """A finite, nonempty, 4-connected set of lattice cells."""

    points: frozenset

    def __post_init__(self):
        pts = frozenset((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("shape must be nonempty")
        if not _connected4(pts):
            raise ValueError("shape must be 4-connected")

    @classmethod
    def of(cls, cells: Iterable[Pos]) -> "Shape":
        return cls(frozenset(cells))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: Pos) -> bool:
        return p in self.points

    def __iter__(self):
        return iter(self.points)

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        x0, _, x1, _ = self.bounding_box()
        return x1 - x0 + 1

    @property
    def height(self) -> int:
        _, y0, _, y1 = self.bounding_box()
        return y1 - y0 + 1

    def translate(self, dx: int, dy: int) -> "Shape":
        return Shape(frozenset((x + dx, y + dy) for x, y in self.points))

    def canonical(self) -> "Shape":
        """Translated copy with min x = min y = 0."""
        x0, y0, _, _ = self.bounding_box()
        if x0 == 0 and y0 == 0:
            return self
        return self.translate(-x0, -y0)

    def same_shape(self, other: "Shape") -> bool:
        """Equality up to translation."""
        return self.canonical().points == other.canonical().points

    def column(self, x: int) -> list[int]:
        return sorted(y for (cx, y) in self.points if cx == x)


def is_hole_free(s: Shape) -> bool:
    """True iff the complement of the shape is a single connected region.

    Checked on the bounding box padded by one cell, treating everything
    outside the pad as one outer region.
    """
    x0, y0, x1, y1 = s.bounding_box()
    x0, y0, x1, y1 = x0 - 1, y0 - 1, x1 + 1, y1 + 1
    empty = {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if (x, y) not in s.points
    }
    if not empty:
        return True
    start = (x0, y0)  # pad corner: always empty, part of the outer region
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for q in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if q in empty and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(empty)


def is_x_monotone(s: Shape) -> bool:
    """True iff every column of the shape is a contiguous interval."""
    cols: dict[int, list[int]] = {}
    for x, y in s.points:
        cols.setdefault(x, []).append(y)
    for ys in cols.values():
        ys.sort()
        if ys[-1] - ys[0] + 1 != len(ys):
            return False
    return True


@dataclass(frozen=True)
class Edge:
    """A maximal straight segment of the shape outline.

    ``facing`` is the empty side (n/e/s/w); ``cells`` are the shape cells
    flush against the segment; ``endpoints`` are the outline corner points
    bounding it (used for the adjacency test).
    """

    facing: str
    cells: tuple[Pos, ...]
    endpoints: tuple[Pos, Pos]


def outline_edges(s: Shape) -> list[Edge]:
    """Maximal straight outline segments with their flush cells."""
    pts = s.points
    edges: list[Edge] = []

    # Horizontal segments: group boundary sides by the grid line y and
    # facing, then split into maximal contiguous runs in x.
    for facing, dy, line_of in (("n", 1, lambda y: y + 1), ("s", -1, lambda y: y)):
        sides: dict[int, list[int]] = {}
        for (x, y) in pts:
            if (x, y + dy) not in pts:
                sides.setdefault(line_of(y), []).append(x)
        for line, xs in sides.items():
            xs.sort()
            run: list[int] = []
            for x in xs + [None]:
                if run and (x is None or x != run[-1] + 1):
                    y_cell = line - 1 if facing == "n" else line
                    cells = tuple((rx, y_cell) for rx in run)
                    edges.append(
                        Edge(facing, cells, ((run[0], line), (run[-1] + 1, line)))
                    )
                    run = []
                if x is not None:
                    run.append(x)

    # Vertical segments, symmetric.
    for facing, dx, line_of in (("e", 1, lambda x: x + 1), ("w", -1, lambda x: x)):
        sides = {}
        for (x, y) in pts:
            if (x + dx, y) not in pts:
                sides.setdefault(line_of(x), []).append(y)
        for line, ys in sides.items():
            ys.sort()
            run = []
            for y in ys + [None]:
                if run and (y is None or y != run[-1] + 1):
                    x_cell = line - 1 if facing == "e" else line
                    cells = tuple((x_cell, ry) for ry in run)
                    edges.append(
                        Edge(facing, cells, ((line, run[0]), (line, run[-1] + 1)))
                    )
                    run = []
                if y is not None:
                    run.append(y)
    return edges


def feature_size(s: Shape) -> int:
    """Minimum Chebyshev distance between cells flush against two
    non-adjacent outline edges (edges are adjacent iff they share an
    outline corner point)."""
    edges = outline_edges(s)
    if len(edges) < 4:
        raise UndefinedFeatureError("outline has fewer than 4 edges")
    best = None
    for i in range(len(edges)):
        ei = edges[i]
        pi = set(ei.endpoints)
        for j in range(i + 1, len(edges)):
            ej = edges[j]
            if pi & set(ej.endpoints):
                continue  # adjacent edges share a corner
            for (ax, ay) in ei.cells:
                for (bx, by) in ej.cells:
                    d = max(abs(ax - bx), abs(ay - by))
                    if best is None or d < best:
                        best = d
    if best is None:
        raise UndefinedFeatureError("all edge pairs are adjacent")
    return best


def seed_assembly(s: Shape) -> Assembly:
    """The rigid presentation of an input shape.

    One unique permanent tile per cell; abutting cells share a fresh
    strength-4 glue (so the assembly is stable at any temperature <= 4 and
    internally anonymous), and every outward side carries the ("", 1) glue.
    """
    if not is_hole_free(s):
        raise HoleyShapeError("seed shapes must be hole-free")
    pts = s.points
    tiles = {}
    for (x, y) in pts:
        glues = []
        for q in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if q in pts:
                a, b = sorted([(x, y), q])
                glues.append(Glue(f"seed:{a[0]},{a[1]}-{b[0]},{b[1]}", 4))
            else:
                glues.append(Glue("", 1))
        tiles[(x, y)] = TileType(
            f"seed:{x},{y}", *glues, material=Material.DNA, group="seed"
        )
    return Assembly(tiles)


@dataclass(frozen=True)
class Rectangle:
    min_x: int
    min_y: int
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("rectangle must be at least 1x1")

    @property
    def max_x(self) -> int:
        return self.min_x + self.width - 1

    @property
    def max_y(self) -> int:
        return self.min_y + self.height - 1

    def cells(self) -> Iterable[Pos]:
        for x in range(self.min_x, self.min_x + self.width):
            for y in range(self.min_y, self.min_y + self.height):
                yield (x, y)

    def __contains__(self, p) -> bool:
        x, y = p
        return (
            self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y
        )


def frame_rectangle(s: Shape) -> Rectangle:
    """Smallest rectangle containing the shape shifted up 3 and down 3:
    the bounding box padded by 3 rows above and below."""
    x0, y0, x1, y1 = s.bounding_box()
    return Rectangle(x0, y0 - 3, x1 - x0 + 1, (y1 - y0 + 1) + 6)


@dataclass(frozen=True)
class PerimeterRectangleDecomposition:
    """Disjoint rectangles tiling frame - shape.

    ``south`` rectangles rest on the frame's south edge, ordered left to
    right; ``north`` hang from the north edge, likewise ordered.
    """

    south: tuple[Rectangle, ...]
    north: tuple[Rectangle, ...]
    frame: Rectangle


MAX_HEIGHT_REASON = "rectangle height exceeds 2^width + 3"


def decompose(s: Shape) -> PerimeterRectangleDecomposition:
    """Column rectangles above and below the shape, merged maximally.

    For each frame column, the cells below the shape form a rectangle
    resting on the frame's south edge and the cells above one hanging from
    the north edge; maximal runs of equal-height columns merge. Adjacent
    rectangles on a side therefore always differ in height. Raises
    DecompositionInvalidError if a precondition or the height bound
    h <= 2^w + 3 fails.
    """
    if not is_x_monotone(s):
        raise DecompositionInvalidError("shape is not column-monotone")
    if not is_hole_free(s):
        raise DecompositionInvalidError("shape has holes")
    frame = frame_rectangle(s)
    x0, _, x1, _ = s.bounding_box()

    south_heights = []
    north_heights = []
    for x in range(x0, x1 + 1):
        ys = s.column(x)
        if not ys:
            raise DecompositionInvalidError(f"column {x} of the shape is empty")
        south_heights.append(ys[0] - frame.min_y)
        north_heights.append(frame.max_y - ys[-1])

    def merge(heights, south_side: bool) -> tuple[Rectangle, ...]:
        rects = []
        i = 0
        while i < len(heights):
            j = i
            while j + 1 < len(heights) and heights[j + 1] == heights[i]:
                j += 1
            h = heights[i]
            w = j - i + 1
            if h > 0:
                min_y = frame.min_y if south_side else frame.max_y - h + 1
                rects.append(Rectangle(x0 + i, min_y, w, h))
            i = j + 1
        return tuple(rects)

    south = merge(south_heights, True)
    north = merge(north_heights, False)
    for r in south + north:
        if r.height > 2 ** r.width + 3:
            raise DecompositionInvalidError(
                f"{MAX_HEIGHT_REASON}: {r.width}x{r.height} at x={r.min_x}"
            )
    return PerimeterRectangleDecomposition(south=south, north=north, frame=frame)


def border_ring(s: Shape) -> frozenset:
    """The 8-neighborhood collar: cells at Chebyshev distance exactly 1."""
    if not is_hole_free(s):
        raise HoleyShapeError("border ring requires a hole-free shape")
    pts = s.points
    ring = set()
    for (x, y) in pts:
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                q = (x + dx, y + dy)
                if q not in pts:
                    ring.add(q)
    return frozenset(ring)


def square(n: int, origin: Pos = (0, 0)) -> Shape:
    ox, oy = origin
    return Shape.of((ox + i, oy + j) for i in range(n) for j in range(n))


def rectangle_shape(w: int, h: int, origin: Pos = (0, 0)) -> Shape:
    ox, oy = origin
    return Shape.of((ox + i, oy + j) for i in range(w) for j in range(h))
