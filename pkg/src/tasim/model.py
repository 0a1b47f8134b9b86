"""Core model for two-handed tile assembly on the integer lattice.

Tiles are unit squares with a glue on each side; two abutting glues interact
iff label and strength are both equal and the strength is positive. An
assembly places tiles at lattice positions (finite, nonempty, 4-connected
domain); its binding graph weights each interacting abutting pair by the glue
strength, and the assembly is stable at temperature tau iff every cut of that
graph has total crossing strength >= tau.

Assemblies are immutable and translation-invariant as values: equality and
hashing use the canonical translation (minimum x and y at 0).

Materials split tiles into a permanent class (DNA) and dissolvable classes
(RNA1, RNA2). ``dissolve`` removes one dissolvable class and decomposes the
remainder into maximal stable pieces by repeatedly splitting along minimum
cuts, with a deterministic tie-break so runs are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, NamedTuple

from . import mincut

Pos = tuple[int, int]


class Glue(NamedTuple):
    label: str
    strength: int


NULL_GLUE = Glue("", 0)


def glues_interact(a: Glue, b: Glue) -> bool:
    """True iff the two glues bind: equal label, equal positive strength."""
    return a.label == b.label and a.strength == b.strength and a.strength > 0


class Material(Enum):
    DNA = "DNA"
    RNA1 = "RNA1"
    RNA2 = "RNA2"

    @property
    def enzyme_class(self) -> int | None:
        """Dissolve stage class that removes this material; None for DNA."""
        return _ENZYME_CLASS[self]


_ENZYME_CLASS = {Material.DNA: None, Material.RNA1: 1, Material.RNA2: 2}

# Side indices and lattice offsets, in N, E, S, W order.
NORTH, EAST, SOUTH, WEST = range(4)
DELTAS: tuple[Pos, ...] = ((0, 1), (1, 0), (0, -1), (-1, 0))
OPPOSITE = (SOUTH, WEST, NORTH, EAST)
SIDE_NAMES = ("north", "east", "south", "west")


@dataclass(frozen=True)
class TileType:
    """A named unit tile: four glues, a material class, and a display group."""

    name: str
    north: Glue = NULL_GLUE
    east: Glue = NULL_GLUE
    south: Glue = NULL_GLUE
    west: Glue = NULL_GLUE
    material: Material = Material.DNA
    group: str = ""

    @property
    def glues(self) -> tuple[Glue, Glue, Glue, Glue]:
        return (self.north, self.east, self.south, self.west)

    def glue(self, side: int) -> Glue:
        return self.glues[side]


def _neighbors4(p: Pos) -> tuple[Pos, Pos, Pos, Pos]:
    x, y = p
    return ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y))


def _domain_connected(positions) -> bool:
    it = iter(positions)
    try:
        start = next(it)
    except StopIteration:
        return False
    seen = {start}
    stack = [start]
    pset = set(positions)
    while stack:
        p = stack.pop()
        for q in _neighbors4(p):
            if q in pset and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(pset)


class Assembly:
    """Immutable placement of tile types on the lattice.

    The domain must be nonempty and 4-connected. Equality and hashing treat
    translated copies as the same assembly (canonical form anchors the
    minimum x and y at 0); use ``tiles`` for exact positions.
    """

    __slots__ = ("_tiles", "_key", "_hash", "_sites")

    def __init__(self, tiles: Mapping[Pos, TileType], _validate: bool = True):
        if _validate:
            if not tiles:
                raise ValueError("assembly must be nonempty")
            if not _domain_connected(tiles.keys()):
                raise ValueError("assembly domain must be 4-connected")
        self._tiles = dict(tiles)
        self._key = None
        self._hash = None
        self._sites = None

    @classmethod
    def _unchecked(cls, tiles: Mapping[Pos, TileType]) -> "Assembly":
        return cls(tiles, _validate=False)

    @property
    def tiles(self) -> dict[Pos, TileType]:
        return dict(self._tiles)

    def items(self):
        return self._tiles.items()

    def positions(self):
        return self._tiles.keys()

    def get(self, p: Pos):
        return self._tiles.get(p)

    def __getitem__(self, p: Pos) -> TileType:
        return self._tiles[p]

    def __contains__(self, p: Pos) -> bool:
        return p in self._tiles

    def __len__(self) -> int:
        return len(self._tiles)

    def __iter__(self):
        return iter(self._tiles)

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) over the domain."""
        xs = [p[0] for p in self._tiles]
        ys = [p[1] for p in self._tiles]
        return min(xs), min(ys), max(xs), max(ys)

    def translate(self, dx: int, dy: int) -> "Assembly":
        return Assembly._unchecked(
            {(x + dx, y + dy): t for (x, y), t in self._tiles.items()}
        )

    def canonical_key(self):
        if self._key is None:
            min_x = min(p[0] for p in self._tiles)
            min_y = min(p[1] for p in self._tiles)
            self._key = tuple(
                sorted(
                    ((x - min_x, y - min_y), t.name)
                    for (x, y), t in self._tiles.items()
                )
            )
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Assembly):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.canonical_key())
        return self._hash

    def __repr__(self) -> str:
        names = sorted({t.name for t in self._tiles.values()})
        show = ",".join(names[:4]) + ("..." if len(names) > 4 else "")
        return f"Assembly({len(self._tiles)} tiles: {show})"

    def tile_names(self) -> list[str]:
        """Sorted multiset of tile names (diagnostics)."""
        return sorted(t.name for t in self._tiles.values())

    def materials(self) -> set[Material]:
        return {t.material for t in self._tiles.values()}

    def open_sites(self):
        """Positive-strength glue sites facing empty cells.

        Returns a list of (position, side, glue); cached (assemblies are
        immutable).
        """
        if self._sites is None:
            sites = []
            for p, t in self._tiles.items():
                nbrs = _neighbors4(p)
                for side in range(4):
                    g = t.glues[side]
                    if g.strength > 0 and nbrs[side] not in self._tiles:
                        sites.append((p, side, g))
            self._sites = sites
        return self._sites


def canonicalize(a: Assembly) -> Assembly:
    """Translated copy with min x = min y = 0; idempotent."""
    min_x = min(p[0] for p in a.positions())
    min_y = min(p[1] for p in a.positions())
    if min_x == 0 and min_y == 0:
        return a
    return a.translate(-min_x, -min_y)


def binding_graph(a: Assembly) -> dict[Pos, dict[Pos, int]]:
    """Adjacency mapping of the binding graph.

    Vertices are occupied positions; 4-adjacent tiles are joined iff their
    abutting glues interact, weighted by that glue strength.
    """
    return _adjacency_of(a._tiles)


def binding_edges(a: Assembly) -> list[tuple[Pos, Pos, int]]:
    """Sorted edge list (p, q, strength) with p < q; for tests and reports."""
    out = []
    for p, nbrs in binding_graph(a).items():
        for q, w in nbrs.items():
            if p < q:
                out.append((p, q, w))
    return sorted(out)


def min_cut_strength(a: Assembly):
    """Minimum total strength over all 2-partitions of the binding graph.

    0 if the binding graph is disconnected. Requires >= 2 tiles.
    """
    if len(a) < 2:
        raise ValueError("min cut needs at least two tiles")
    return mincut.min_cut_value(binding_graph(a))


def is_stable(a: Assembly, tau: int) -> bool:
    """True iff a is a single tile or every binding-graph cut is >= tau."""
    if len(a) == 1:
        return True
    adj = binding_graph(a)
    # Edges of weight >= tau never cross a sub-tau cut; contracting them
    # first keeps the check fast on assemblies with rigid interiors.
    quotient, _ = mincut.contract_edges_over(adj, tau - 1)
    if len(quotient) == 1:
        return True
    return mincut.min_cut_value(quotient, cap=tau) >= tau


def _interface_strength(
    a_tiles: Mapping[Pos, TileType],
    b_tiles: Mapping[Pos, TileType],
    dx: int,
    dy: int,
):
    """(overlaps, strength) for placing b translated by (dx, dy) against a."""
    strength = 0
    for (qx, qy), u in b_tiles.items():
        w = (qx + dx, qy + dy)
        if w in a_tiles:
            return True, 0
        wx, wy = w
        for side, n in (
            (NORTH, (wx, wy + 1)),
            (EAST, (wx + 1, wy)),
            (SOUTH, (wx, wy - 1)),
            (WEST, (wx - 1, wy)),
        ):
            t = a_tiles.get(n)
            if t is None:
                continue
            g = u.glues[side]
            if glues_interact(g, t.glues[OPPOSITE[side]]):
                strength += g.strength
    return False, strength


def combine_offsets(a: Assembly, b: Assembly, tau: int) -> list[Pos]:
    """Translations (dx, dy) of b giving a tau-stable disjoint union with a.

    Both inputs must already be tau-stable; then the union at any disjoint
    adjacent placement is tau-stable iff the a/b interface strength is
    >= tau (any other cut splits a or b internally and is >= tau already).
    Candidate translations come from aligning one matching open glue pair,
    which covers every placement with positive interface strength.
    """
    a_sites = a.open_sites()
    b_sites = b.open_sites()
    if not a_sites or not b_sites:
        return []
    b_index: dict = {}
    for q, side, g in b_sites:
        b_index.setdefault((side, g), []).append(q)
    candidates: set[Pos] = set()
    for p, side, g in a_sites:
        mates = b_index.get((OPPOSITE[side], g))
        if not mates:
            continue
        d = DELTAS[side]
        target = (p[0] + d[0], p[1] + d[1])
        for q in mates:
            candidates.add((target[0] - q[0], target[1] - q[1]))
    out = []
    a_tiles = a._tiles
    b_tiles = b._tiles
    for dx, dy in candidates:
        overlaps, strength = _interface_strength(a_tiles, b_tiles, dx, dy)
        if not overlaps and strength >= tau:
            out.append((dx, dy))
    return sorted(out)


def combine(a: Assembly, b: Assembly, tau: int) -> set[Assembly]:
    """All tau-stable unions of a with a translated copy of b, canonical.

    Preconditions: a and b individually tau-stable.
    """
    out: set[Assembly] = set()
    a_tiles = a._tiles
    for dx, dy in combine_offsets(a, b, tau):
        union = dict(a_tiles)
        for (qx, qy), u in b.items():
            union[(qx + dx, qy + dy)] = u
        out.add(canonicalize(Assembly._unchecked(union)))
    return out


def _binding_components(tiles: Mapping[Pos, TileType]) -> list[dict[Pos, TileType]]:
    """Split a placement into connected components of its binding graph."""
    remaining = set(tiles)
    comps = []
    while remaining:
        start = next(iter(remaining))
        comp = {start}
        stack = [start]
        remaining.discard(start)
        while stack:
            p = stack.pop()
            t = tiles[p]
            nbrs = _neighbors4(p)
            for side in range(4):
                q = nbrs[side]
                if q in remaining:
                    if glues_interact(t.glues[side], tiles[q].glues[OPPOSITE[side]]):
                        comp.add(q)
                        remaining.discard(q)
                        stack.append(q)
        comps.append({p: tiles[p] for p in comp})
    return comps


def _adjacency_of(tiles: Mapping[Pos, TileType]) -> dict[Pos, dict[Pos, int]]:
    adj: dict[Pos, dict[Pos, int]] = {p: {} for p in tiles}
    for p, t in tiles.items():
        x, y = p
        for side, q in ((NORTH, (x, y + 1)), (EAST, (x + 1, y))):
            u = tiles.get(q)
            if u is None:
                continue
            g = t.glues[side]
            if glues_interact(g, u.glues[OPPOSITE[side]]):
                adj[p][q] = g.strength
                adj[q][p] = g.strength
    return adj


def _split_side(tiles: Mapping[Pos, TileType], tau: int):
    """For an unstable connected placement, the side to split off.

    Among all minimum cuts, every side competes; the side whose sorted
    position list is lexicographically smallest wins, making fragmentation
    deterministic and translation-invariant.
    """
    adj = _adjacency_of(tiles)
    quotient, _ = mincut.contract_edges_over(adj, tau - 1)
    lam = mincut.min_cut_value(quotient, cap=tau)
    if lam >= tau:
        return None
    sides = mincut.enumerate_min_cut_sides(adj, int(lam))
    best = None
    best_key = None
    allpos = set(tiles)
    for side in sides:
        for cand in (side, frozenset(allpos - side)):
            key = sorted(cand)
            if best_key is None or key < best_key:
                best, best_key = cand, key
    return best


def fragment(tiles: Mapping[Pos, TileType], tau: int) -> list[dict[Pos, TileType]]:
    """Decompose a placement into maximal tau-stable pieces, in place.

    Splits binding-graph components apart, then repeatedly splits any
    sub-tau component along its deterministically chosen minimum cut.
    Positions are preserved (no canonicalization), so callers can audit
    maximality at the original offsets.
    """
    out: list[dict[Pos, TileType]] = []
    stack = _binding_components(tiles)
    while stack:
        comp = stack.pop()
        if len(comp) == 1:
            out.append(comp)
            continue
        side = _split_side(comp, tau)
        if side is None:
            out.append(comp)
            continue
        part_a = {p: comp[p] for p in side}
        part_b = {p: comp[p] for p in comp if p not in side}
        for part in (part_a, part_b):
            stack.extend(_binding_components(part))
    return out


def dissolve(a: Assembly, enzyme_class: int, tau: int) -> list[Assembly]:
    """Remove one dissolvable material class, then break up what remains.

    Every tile whose material dissolves at ``enzyme_class`` is deleted; the
    remainder is decomposed into maximal tau-stable pieces (see ``fragment``).
    Returns the multiset of canonical pieces, sorted for determinism; empty
    list if everything dissolved.
    """
    survivors = {
        p: t for p, t in a.items() if t.material.enzyme_class != enzyme_class
    }
    if not survivors:
        return []
    pieces = fragment(survivors, tau)
    out = [canonicalize(Assembly._unchecked(piece)) for piece in pieces]
    return sorted(out, key=lambda asm: asm.canonical_key())


@dataclass(frozen=True)
class TileSystem:
    """A tile set, an optional seed assembly, a temperature, and a dissolve
    schedule (ordered enzyme classes applied between growth phases)."""

    tile_set: tuple[TileType, ...]
    seed: Assembly | None = None
    temperature: int = 4
    stages: tuple[int, ...] = (1,)
    name: str = ""

    def __post_init__(self):
        names = [t.name for t in self.tile_set]
        if len(set(names)) != len(names):
            raise ValueError("tile names must be unique within a tile set")
        if self.temperature < 1:
            raise ValueError("temperature must be positive")
        if self.seed is not None:
            seed_names = {t.name for t in self.seed.tiles.values()}
            if seed_names & set(names):
                raise ValueError("seed tile types must be disjoint from the tile set")
            if not is_stable(self.seed, self.temperature):
                raise ValueError("seed assembly must be stable at the system temperature")

    def tile(self, name: str) -> TileType:
        for t in self.tile_set:
            if t.name == name:
                return t
        raise KeyError(name)

    def tiles_by_name(self) -> dict[str, TileType]:
        return {t.name: t for t in self.tile_set}
