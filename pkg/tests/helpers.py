"""Shared test builders: hand-made tiles, random assemblies, random graphs."""
from __future__ import annotations

import random

from tasim.model import (
    DELTAS,
    EAST,
    NORTH,
    NULL_GLUE,
    OPPOSITE,
    Assembly,
    Glue,
    Material,
    TileType,
)


def G(label: str, strength: int) -> Glue:
    return Glue(label, strength)


def T(name, n=None, e=None, s=None, w=None, material=Material.DNA, group=""):
    """Tile builder taking (label, strength) pairs or None per side."""

    def conv(g):
        if g is None:
            return NULL_GLUE
        if isinstance(g, Glue):
            return g
        return Glue(g[0], g[1])

    return TileType(name, conv(n), conv(e), conv(s), conv(w), material, group)


def seed_block(width: int, height: int, origin=(0, 0), prefix="seed"):
    """A rigid width x height block: unique strength-4 internal glues, all
    external sides ("", 1). Mirrors how input shapes are presented."""
    ox, oy = origin
    cells = [(ox + i, oy + j) for i in range(width) for j in range(height)]
    return rigid_cells(cells, prefix=prefix)


def rigid_cells(cells, prefix="seed", material=Material.DNA):
    """A rigid assembly over the given cells (unique strength-4 internal
    glues, ("", 1) external sides)."""
    cellset = set(cells)
    tiles = {}
    for (x, y) in cellset:
        glues = []
        for side in range(4):
            dx, dy = DELTAS[side]
            q = (x + dx, y + dy)
            if q in cellset:
                a, b = sorted([(x, y), q])
                glues.append(Glue(f"{prefix}:{a}-{b}", 4))
            else:
                glues.append(Glue("", 1))
        tiles[(x, y)] = TileType(
            f"{prefix}:{x},{y}", *glues, material=material, group=prefix
        )
    return Assembly(tiles)


def random_positions(rng: random.Random, n: int) -> set:
    pos = {(0, 0)}
    while len(pos) < n:
        p = rng.choice(sorted(pos))
        d = DELTAS[rng.randrange(4)]
        pos.add((p[0] + d[0], p[1] + d[1]))
    return pos


def random_assembly(
    rng: random.Random,
    n_tiles: int,
    strengths=(0, 1, 2, 3, 4),
    materials=(Material.DNA,),
    bond_chance=0.85,
):
    """Random connected placement with per-edge random bonds.

    Each internal edge gets either a shared glue of random strength (a bond)
    or deliberately mismatched labels (no bond), so the binding graph is
    known by construction.
    """
    pos = random_positions(rng, n_tiles)
    edge_glue = {}
    for p in sorted(pos):
        for side in (NORTH, EAST):
            dx, dy = DELTAS[side]
            q = (p[0] + dx, p[1] + dy)
            if q in pos:
                s = rng.choice(strengths)
                if s > 0 and rng.random() < bond_chance:
                    edge_glue[(p, q)] = Glue(f"e:{p}-{q}", s)
                else:
                    edge_glue[(p, q)] = None
    tiles = {}
    for p in sorted(pos):
        glues = [NULL_GLUE] * 4
        for side in range(4):
            dx, dy = DELTAS[side]
            q = (p[0] + dx, p[1] + dy)
            if q not in pos:
                continue
            key = (p, q) if side in (NORTH, EAST) else (q, p)
            g = edge_glue[key]
            if g is None:
                # Unique label per (cell, side): adjacent sides never match.
                glues[side] = Glue(f"x:{p}:{side}", 1)
            else:
                glues[side] = g
        tiles[p] = TileType(
            f"t:{p[0]},{p[1]}",
            *glues,
            material=materials[rng.randrange(len(materials))],
        )
    return Assembly(tiles)


def random_graph(rng: random.Random, n: int, density=0.4, max_w=5, connected=True):
    """Random symmetric weighted graph as an adjacency mapping."""
    adj = {u: {} for u in range(n)}

    def add(i, j, w):
        adj[i][j] = w
        adj[j][i] = w

    if connected:
        for i in range(1, n):
            add(i, rng.randrange(i), rng.randint(1, max_w))
    for i in range(n):
        for j in range(i + 1, n):
            if j not in adj[i] and rng.random() < density:
                add(i, j, rng.randint(1, max_w))
    return adj


def brute_min_st_cut(adj, s, t) -> int:
    """Oracle: minimum s-t cut by enumerating all subsets containing s, not t."""
    nodes = sorted(adj)
    rest = [u for u in nodes if u != s and u != t]
    best = None
    for mask in range(2 ** len(rest)):
        side = {s}
        for i, u in enumerate(rest):
            if mask >> i & 1:
                side.add(u)
        value = sum(
            w for u in side for v, w in adj[u].items() if v not in side
        )
        if best is None or value < best:
            best = value
    return best
