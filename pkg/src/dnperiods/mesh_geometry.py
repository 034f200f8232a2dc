"""Triangulated test surfaces with one boundary circle.

Meshes carry an intrinsic metric (one length per edge, no embedding) so the
flat torus can be represented exactly. Builders produce genus 0, 1, 2
surfaces whose boundary is a regular polygon with uniform chord spacing;
`homology_basis` extracts 2g interior cycles by a tree-cotree construction
and computes their intersection matrix from signed crossing counts.
"""
from __future__ import annotations

import heapq
import json
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import Delaunay


class InvariantError(Exception):
    """A structural invariant failed (bad mesh, broken pairing, ...)."""


def edge_key(i, j):
    return (i, j) if i < j else (j, i)


@dataclass(eq=False)
class TriMesh:
    """Oriented triangle mesh with intrinsic edge lengths.

    triangles are counterclockwise vertex triples; boundary_loop is the
    single boundary component, ordered so that each consecutive pair is a
    directed edge of exactly one triangle (the induced orientation).
    boundary_shape optionally records how the boundary was generated, which
    the DN synthesis uses to calibrate its symbol; it is not required for
    validity.
    """

    vertex_count: int
    triangles: np.ndarray
    edge_lengths: dict
    boundary_loop: np.ndarray
    genus: int
    orientation: int = 1
    boundary_shape: dict | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edge_lengths)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edge_lengths) + len(self.triangles)


@dataclass
class CycleBasis:
    cycles: list
    intersection: np.ndarray


def validate_mesh(mesh: TriMesh) -> None:
    """Check TriMesh invariants; raise InvariantError on the first failure."""
    tris = np.asarray(mesh.triangles)
    if tris.size and (tris.min() < 0 or tris.max() >= mesh.vertex_count):
        raise InvariantError("triangle vertex index out of range")
    for ti, t in enumerate(tris):
        i, j, k = int(t[0]), int(t[1]), int(t[2])
        a = mesh.edge_lengths[edge_key(j, k)]
        b = mesh.edge_lengths[edge_key(i, k)]
        c = mesh.edge_lengths[edge_key(i, j)]
        if not (a + b > c and b + c > a and c + a > b):
            raise InvariantError(f"triangle {ti} violates the triangle inequality")
    # directed-edge census: interior edges appear once per direction,
    # boundary edges exactly once in total
    directed = set()
    count = defaultdict(int)
    for t in tris:
        for a in range(3):
            i, j = int(t[a]), int(t[(a + 1) % 3])
            if (i, j) in directed:
                raise InvariantError("inconsistent triangle orientations")
            directed.add((i, j))
            count[edge_key(i, j)] += 1
    if any(c > 2 for c in count.values()):
        raise InvariantError("nonmanifold edge")
    if set(count) != set(mesh.edge_lengths):
        raise InvariantError("edge_lengths does not match the triangle edges")
    bedges = {e for e, c in count.items() if c == 1}
    loop = np.asarray(mesh.boundary_loop)
    nb = len(loop)
    if nb != len(bedges):
        raise InvariantError("boundary_loop does not cover the boundary edges")
    for t in range(nb):
        i, j = int(loop[t]), int(loop[(t + 1) % nb])
        if edge_key(i, j) not in bedges:
            raise InvariantError("boundary_loop contains a non-boundary edge")
        if (i, j) not in directed:
            raise InvariantError("boundary_loop opposes the induced orientation")
    chi = mesh.euler_characteristic
    if chi != 1 - 2 * mesh.genus:
        raise InvariantError(
            f"Euler characteristic {chi} does not match genus {mesh.genus}")


def _directed_boundary_loop(triangles):
    """Boundary loop from the edges owned by exactly one triangle, directed
    as they appear in that triangle (the induced orientation)."""
    count = defaultdict(int)
    for t in triangles:
        for a in range(3):
            i, j = int(t[a]), int(t[(a + 1) % 3])
            count[edge_key(i, j)] += 1
    if any(c > 2 for c in count.values()):
        raise InvariantError("nonmanifold edge")
    nxt = {}
    for t in triangles:
        for a in range(3):
            i, j = int(t[a]), int(t[(a + 1) % 3])
            if count[edge_key(i, j)] == 1:
                nxt[i] = j
    if not nxt:
        raise InvariantError("mesh has no boundary")
    loop = [min(nxt)]
    while True:
        v = nxt[loop[-1]]
        if v == loop[0]:
            break
        loop.append(v)
        if len(loop) > len(nxt):
            raise InvariantError("boundary is not a single loop")
    if len(loop) != len(nxt):
        raise InvariantError("more than one boundary component")
    return np.array(loop)


def _edge_lengths_from_coords(triangles, coords_per_tri):
    """Edge lengths from per-triangle displaced coordinates, with a
    consistency check across triangles sharing an edge (guards the torus
    unwrapping and the wormhole gluing)."""
    elen = {}
    for t, P in zip(triangles, coords_per_tri):
        for a in range(3):
            i, j = int(t[a]), int(t[(a + 1) % 3])
            l = float(np.linalg.norm(P[a] - P[(a + 1) % 3]))
            key = edge_key(i, j)
            old = elen.get(key)
            if old is not None and abs(old - l) > 1e-9:
                raise InvariantError(f"inconsistent edge length at {key}")
            elen[key] = l
    return elen


# ---------------------------------------------------------------------------
# genus 1: flat unit torus with a round hole


def _torus_hole_points(R, r, center, boundary_factor):
    cx, cy = center
    g = np.arange(R) / R
    gx, gy = np.meshgrid(g, g, indexing="ij")
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    s_g = 1.0 / R
    m = int(round(2 * np.pi * r / (s_g / boundary_factor)))
    m -= m % 2
    th = np.pi / m + 2 * np.pi * np.arange(m) / m
    poly = np.column_stack([cx + r * np.cos(th), cy + r * np.sin(th)])
    # graded rings from the boundary spacing out to the bulk grid spacing
    rings = []
    rad, s = r, 2 * np.pi * r / m
    while True:
        rad = rad + 0.9 * s
        s = min(1.5 * s, s_g)
        if s >= 0.95 * s_g or rad > 0.5 - s_g:
            break
        mk = int(round(2 * np.pi * rad / s))
        thk = np.pi / mk + 2 * np.pi * np.arange(mk) / mk
        rings.append(np.column_stack([cx + rad * np.cos(thk), cy + rad * np.sin(thk)]))
    clear = rad + 0.7 * s_g
    d = np.hypot(grid[:, 0] - cx, grid[:, 1] - cy)
    grid = grid[d > clear]
    return np.vstack([poly] + rings + [grid]), m


def _tiled_delaunay(pts):
    """Delaunay triangulation of the unit torus via a 3x3 tiling; keeps
    triangles whose centroid lies in the middle tile and remembers the
    displaced coordinates for edge lengths."""
    n = len(pts)
    shifts = [(i, j) for i in range(3) for j in range(3)]
    allpts = np.vstack([pts + np.array(s, float) for s in shifts])
    tri = Delaunay(allpts)
    simp = tri.simplices
    cent = allpts[simp].mean(axis=1)
    keep = (np.floor(cent[:, 0]) == 1) & (np.floor(cent[:, 1]) == 1)
    simp = simp[keep]
    tris, coords = [], []
    for t in simp:
        tris.append(tuple(int(v % n) for v in t))
        coords.append(allpts[t])
    return tris, coords


def build_flat_torus_with_hole(resolution: int, hole_radius: float,
                               boundary_factor: float = 4.0) -> TriMesh:
    """Unit flat square with opposite sides identified and a disk removed.

    The hole boundary is a regular m-gon (m even) with chord spacing about
    boundary_factor times finer than the bulk grid; graded rings mediate
    between the two scales. Edge lengths come from the flat metric.
    """
    if resolution < 8 or resolution % 2:
        raise ValueError("resolution must be even and at least 8")
    if not 0.0 < hole_radius < 0.4:
        raise ValueError("hole_radius must lie in (0, 0.4)")
    pts, m = _torus_hole_points(resolution, hole_radius, (0.5, 0.5),
                                boundary_factor)
    tris, coords = _tiled_delaunay(pts)
    triangles = np.array(tris)
    # triangles filling the hole have all three vertices on the polygon
    mask = ~np.all(triangles < m, axis=1)
    triangles = triangles[mask]
    coords = [c for c, keep in zip(coords, mask) if keep]
    elen = _edge_lengths_from_coords(triangles, coords)
    loop = _directed_boundary_loop(triangles)
    mesh = TriMesh(
        vertex_count=len(pts),
        triangles=triangles,
        edge_lengths=elen,
        boundary_loop=loop,
        genus=1,
        boundary_shape={"kind": "hole", "radius": hole_radius,
                        "grid_spacing": 1.0 / resolution},
    )
    validate_mesh(mesh)
    return mesh


def matched_annulus(r: float, m: int, s_g: float, r_out: float):
    """Annulus whose inner rim replicates the torus-hole polygon and ring
    grading, continued at constant spacing to radius r_out. Used to
    calibrate the discrete DN symbol; the inner boundary is the first m
    vertices in angular order. Returns (vertex_count, triangles,
    edge_lengths) rather than a TriMesh because the annulus has two
    boundary circles.
    """
    ang0 = np.pi / m
    th = ang0 + 2 * np.pi * np.arange(m) / m
    poly = np.column_stack([r * np.cos(th), r * np.sin(th)])
    pts = [poly]
    rad, s = r, 2 * np.pi * r / m
    while True:
        rad = rad + 0.9 * s
        s = min(1.5 * s, s_g)
        if s >= 0.95 * s_g or rad > 0.5 - s_g:
            break
        mk = int(round(2 * np.pi * rad / s))
        tk = np.pi / mk + 2 * np.pi * np.arange(mk) / mk
        pts.append(np.column_stack([rad * np.cos(tk), rad * np.sin(tk)]))
    while rad + s_g < r_out - 0.5 * s_g:
        rad += s_g
        mk = int(round(2 * np.pi * rad / s_g))
        tk = np.pi / mk + 2 * np.pi * np.arange(mk) / mk
        pts.append(np.column_stack([rad * np.cos(tk), rad * np.sin(tk)]))
    mo = int(round(2 * np.pi * r_out / s_g))
    to = np.pi / mo + 2 * np.pi * np.arange(mo) / mo
    pts.append(np.column_stack([r_out * np.cos(to), r_out * np.sin(to)]))
    P = np.vstack(pts)
    tri = Delaunay(P)
    simp = tri.simplices[~np.all(tri.simplices < m, axis=1)]
    elen = _edge_lengths_from_coords(simp, [P[t] for t in simp])
    return len(P), simp, elen


# ---------------------------------------------------------------------------
# genus 0 and genus 2: flat disk, optionally with glued wormhole handles


def _circle_ring_stack(center, r, s_g, bf=2.0, outward=True):
    """Regular polygon at radius r plus graded rings toward the bulk
    spacing s_g (outward for handle rims, inward for the disk rim)."""
    cx, cy = center
    m = int(round(2 * np.pi * r / (s_g / bf)))
    m -= m % 2
    th = np.pi / m + 2 * np.pi * np.arange(m) / m
    poly = np.column_stack([cx + r * np.cos(th), cy + r * np.sin(th)])
    rings = []
    rad, s = r, 2 * np.pi * r / m
    sgn = 1.0 if outward else -1.0
    while True:
        rad = rad + sgn * 0.9 * s
        s = min(1.5 * s, s_g)
        if s >= 0.95 * s_g or rad <= 0:
            break
        mk = int(round(2 * np.pi * rad / s))
        tk = np.pi / mk + 2 * np.pi * np.arange(mk) / mk
        rings.append(np.column_stack([cx + rad * np.cos(tk), cy + rad * np.sin(tk)]))
    return poly, rings, rad, s, m

# Handle geometry for the two-handle surface. The wormhole pairs are
# parallel and well separated from each other and from the rim; closer or
# orthogonal placements push one exceptional eigenvalue into the essential
# cluster at coarse resolutions.
GENUS2_HOLES = (((-0.22, 0.18), (0.22, 0.18), 0.08),
                ((-0.22, -0.18), (0.22, -0.18), 0.08))
GENUS2_DISK_RADIUS = 0.5


def _build_disk_points(resolution, radius, bf=2.0):
    s_g = 1.0 / resolution
    bpoly, brings, brad, _, mb = _circle_ring_stack((0, 0), radius, s_g, bf=bf,
                                                    outward=False)
    inner_clear = brad - 0.7 * s_g
    g = np.arange(-resolution, resolution + 1) * s_g
    gx, gy = np.meshgrid(g, g, indexing="ij")
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    grid = grid[np.hypot(grid[:, 0], grid[:, 1]) < inner_clear]
    return bpoly, brings, inner_clear, mb, grid


def build_disk(resolution: int, radius: float = 1.0) -> TriMesh:
    """Flat disk (genus 0); boundary is a regular polygon on the circle."""
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    if radius <= 0:
        raise ValueError("radius must be positive")
    bpoly, brings, _, mb, grid = _build_disk_points(resolution, radius)
    pts = np.vstack([bpoly] + brings + [grid])
    tri = Delaunay(pts)
    base = tri.simplices
    cent = pts[base].mean(axis=1)
    out_r = np.hypot(cent[:, 0], cent[:, 1])
    allb = np.all(base < mb, axis=1)
    # all-polygon triangles outside the polygon are hull fill, not surface
    base = base[~(allb & (out_r > radius - 1e-12))]
    elen = _edge_lengths_from_coords(base, [pts[t] for t in base])
    loop = _directed_boundary_loop(base)
    mesh = TriMesh(
        vertex_count=len(pts),
        triangles=np.asarray(base),
        edge_lengths=elen,
        boundary_loop=loop,
        genus=0,
        boundary_shape={"kind": "rim", "radius": radius,
                        "resolution": resolution},
    )
    validate_mesh(mesh)
    return mesh


def build_genus2_with_hole(resolution: int) -> TriMesh:
    """Genus-2 surface with one boundary circle: a flat disk with two
    handles, each handle a pair of circles glued rim-to-rim (a flat
    wormhole). The boundary is the disk rim.
    """
    if resolution < 12:
        raise ValueError("resolution must be at least 12")
    a = GENUS2_DISK_RADIUS
    holes = GENUS2_HOLES
    s_g = 1.0 / resolution
    bpoly, brings, brad, _, mb = _circle_ring_stack((0, 0), a, s_g, outward=False)
    inner_clear = brad - 0.7 * s_g
    wpolys, wrings, wclears, wms = [], [], [], []
    for (c1, c2, r) in holes:
        for c in (c1, c2):
            poly, rings, rad, _, m = _circle_ring_stack(c, r, s_g, outward=True)
            wpolys.append(poly)
            wrings.append(rings)
            wclears.append(rad + 0.7 * s_g)
            wms.append(m)
    centers = [c for (c1, c2, r) in holes for c in (c1, c2)]
    g = np.arange(-resolution, resolution + 1) * s_g
    gx, gy = np.meshgrid(g, g, indexing="ij")
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    keep = np.hypot(grid[:, 0], grid[:, 1]) < inner_clear
    for c, cl in zip(centers, wclears):
        keep &= np.hypot(grid[:, 0] - c[0], grid[:, 1] - c[1]) > cl
    grid = grid[keep]
    ring_all = []
    for i, rings in enumerate(wrings):
        for ring in rings:
            ok = np.hypot(ring[:, 0], ring[:, 1]) < inner_clear
            for jj, (c, cl) in enumerate(zip(centers, wclears)):
                if jj != i:
                    ok &= np.hypot(ring[:, 0] - c[0], ring[:, 1] - c[1]) > cl
            ring_all.append(ring[ok])
    for ring in brings:
        ok = np.ones(len(ring), bool)
        for c, cl in zip(centers, wclears):
            ok &= np.hypot(ring[:, 0] - c[0], ring[:, 1] - c[1]) > cl
        ring_all.append(ring[ok])
    pts = np.vstack([bpoly] + wpolys + ring_all + [grid])
    offs = np.cumsum([0, len(bpoly)] + [len(p) for p in wpolys])
    tri = Delaunay(pts)
    base = tri.simplices
    cent = pts[base].mean(axis=1)
    out_r = np.hypot(cent[:, 0], cent[:, 1])
    allb = np.all(base < offs[1], axis=1)
    drop = allb & (out_r > a - 1e-12)
    hole_radii = [h[2] for h in holes for _ in (0, 1)]
    for k in range(1, len(offs) - 1):
        lo, hi = offs[k], offs[k + 1]
        inside = np.all((base >= lo) & (base < hi), axis=1)
        c0 = centers[k - 1]
        drop |= inside & (np.hypot(cent[:, 0] - c0[0], cent[:, 1] - c0[1])
                          < hole_radii[k - 1])
    base = base[~drop]
    elen = _edge_lengths_from_coords(base, [pts[t] for t in base])
    # glue each circle pair: vertex j of the first rim to vertex (m-j) % m
    # of the second, which matches lengths because both rims are regular
    # m-gons with the same radius and angular offset
    glue = {}
    kk = 1
    for (c1, c2, r) in holes:
        m1 = wms[kk - 1]
        lo1, lo2 = offs[kk], offs[kk + 1]
        for j in range(m1):
            glue[lo2 + ((m1 - j) % m1)] = lo1 + j
        kk += 2
    base = np.array([[glue.get(int(v), int(v)) for v in t] for t in base])
    elen2 = {}
    for (i, j), l in elen.items():
        i2, j2 = glue.get(i, i), glue.get(j, j)
        key = edge_key(i2, j2)
        if key in elen2 and abs(elen2[key] - l) > 1e-9:
            raise InvariantError("glued edge length mismatch")
        elen2[key] = l
    used = np.unique(base)
    remap = -np.ones(len(pts), dtype=int)
    remap[used] = np.arange(len(used))
    base = remap[base]
    elen = {edge_key(int(remap[i]), int(remap[j])): l
            for (i, j), l in elen2.items()}
    loop = _directed_boundary_loop(base)
    mesh = TriMesh(
        vertex_count=len(used),
        triangles=base,
        edge_lengths=elen,
        boundary_loop=loop,
        genus=2,
        boundary_shape={"kind": "rim", "radius": a, "resolution": resolution},
    )
    validate_mesh(mesh)
    return mesh


# ---------------------------------------------------------------------------
# homology basis: tree-cotree cycles and their intersection matrix


def mesh_adjacency(triangles):
    edge_tris = defaultdict(list)
    for t_idx, t in enumerate(triangles):
        for a in range(3):
            i, j = int(t[a]), int(t[(a + 1) % 3])
            edge_tris[edge_key(i, j)].append(t_idx)
    return edge_tris


def rotation_system(triangles):
    """wedge[(a, b)] = (c, t): the ccw wedge at a from b to c in triangle t."""
    wedge = {}
    for t_idx, t in enumerate(triangles):
        for a in range(3):
            i, j, k = int(t[a]), int(t[(a + 1) % 3]), int(t[(a + 2) % 3])
            wedge[(i, j)] = (k, t_idx)
    return wedge


def _homology_cycles(n, triangles, boundary):
    """Tree-cotree cycle extraction.

    The dual spanning tree grows from the boundary faces and consumes
    edges touching boundary vertices first; the primal spanning tree on
    the uncrossed edges grows interior-first. Both use a heap keyed by
    (priority, insertion counter), so the construction is deterministic
    and the leftover cycles avoid the boundary.
    """
    edge_tris = mesh_adjacency(triangles)
    bset = set(int(v) for v in boundary)
    crossed = set()
    visited_tri = set()
    cnt = 0
    pq = []
    for e, ts in edge_tris.items():
        if len(ts) == 1:
            pq.append((0, cnt, e, ts[0]))
            cnt += 1
    heapq.heapify(pq)
    while pq:
        _, _, e, t = heapq.heappop(pq)
        if t in visited_tri:
            continue
        visited_tri.add(t)
        crossed.add(e)
        tri = triangles[t]
        for a in range(3):
            i, j = int(tri[a]), int(tri[(a + 1) % 3])
            e2 = edge_key(i, j)
            for t2 in edge_tris[e2]:
                if t2 != t and t2 not in visited_tri:
                    pri2 = 0 if (i in bset or j in bset) else 1
                    heapq.heappush(pq, (pri2, cnt, e2, t2))
                    cnt += 1
    if len(visited_tri) != len(triangles):
        raise InvariantError("dual tree did not reach every triangle")
    avail = defaultdict(list)
    for e in edge_tris:
        if e not in crossed:
            avail[e[0]].append(e[1])
            avail[e[1]].append(e[0])
    interior = [v for v in range(n) if v not in bset]
    root = interior[0]
    parent = {root: None}
    pq = [(0, 0, root)]
    cnt = 0
    while pq:
        _, _, v = heapq.heappop(pq)
        for w in avail[v]:
            if w not in parent:
                parent[w] = v
                cnt += 1
                heapq.heappush(pq, (1 if w in bset else 0, cnt, w))
    if len(parent) != n:
        raise InvariantError("primal forest disconnected")
    tree_edges = set(edge_key(v, p) for v, p in parent.items() if p is not None)
    leftover = [e for e in edge_tris if e not in crossed and e not in tree_edges]
    cycles = []
    for (u, v) in leftover:
        pu, pv = [u], [v]
        while parent[pu[-1]] is not None:
            pu.append(parent[pu[-1]])
        while parent[pv[-1]] is not None:
            pv.append(parent[pv[-1]])
        sv = set(pv)
        lca = next(x for x in pu if x in sv)
        cyc = pu[:pu.index(lca)] + [lca] + pv[:pv.index(lca)][::-1]
        cycles.append(cyc)
    return cycles


def _simplify_cycle(cyc):
    """Remove backtracking spurs (v, w, v) until none remain."""
    cyc = list(cyc)
    changed = True
    while changed:
        changed = False
        m = len(cyc)
        for t in range(m):
            if cyc[t] == cyc[(t + 2) % m]:
                for d in sorted([(t + 1) % m, (t + 2) % m], reverse=True):
                    cyc.pop(d)
                changed = True
                break
    return cyc


def left_fans(triangles, cyc, wedge):
    """Per cycle vertex: the set of triangles strictly left of the
    directed cycle, found by walking ccw wedges from the outgoing to the
    incoming cycle edge."""
    m = len(cyc)
    fans = []
    for t in range(m):
        p, v, q = cyc[(t - 1) % m], cyc[t], cyc[(t + 1) % m]
        fan = set()
        cur = q
        guard = 0
        while True:
            if (v, cur) not in wedge:
                raise InvariantError("cycle fan walk reached the boundary")
            nxt, tri = wedge[(v, cur)]
            if cur == p:
                break
            fan.add(tri)
            cur = nxt
            guard += 1
            if guard > 4 * len(triangles):
                raise InvariantError("cycle fan walk did not close")
        fans.append(fan)
    return fans


def _crossing_chi(triangles, cyc, wedge, edge_tris):
    """chi(a, b) = signed jump of the cycle's cut function along the
    directed edge (a, b): +-1 when the edge ends on the cycle from the
    left side. An edge at a cycle vertex counts as left only when both
    its flanking triangles lie in the left fan."""
    on = {v: t for t, v in enumerate(cyc)}
    m = len(cyc)
    ce = set(edge_key(cyc[t], cyc[(t + 1) % m]) for t in range(m))
    fans = left_fans(triangles, cyc, wedge)

    def side_left(v, w):
        ts = edge_tris[edge_key(v, w)]
        return all(t in fans[on[v]] for t in ts)

    def chi(a, b):
        if edge_key(a, b) in ce:
            return 0.0
        c = 0.0
        if b in on:
            c += 1.0 if side_left(b, a) else 0.0
        if a in on:
            c -= 1.0 if side_left(a, b) else 0.0
        return c

    return chi


def intersection_matrix(triangles, cycles):
    """J[i, j] = signed count of cycle j crossing cycle i."""
    wedge = rotation_system(triangles)
    edge_tris = mesh_adjacency(triangles)
    k = len(cycles)
    J = np.zeros((k, k), dtype=np.int64)
    for i, ci in enumerate(cycles):
        chi = _crossing_chi(triangles, ci, wedge, edge_tris)
        for j, cj in enumerate(cycles):
            mj = len(cj)
            J[i, j] = round(sum(chi(cj[t], cj[(t + 1) % mj]) for t in range(mj)))
    return J


def homology_basis(mesh: TriMesh) -> CycleBasis:
    """2g independent interior cycles plus their intersection matrix."""
    chi = mesh.euler_characteristic
    if chi != 1 - 2 * mesh.genus:
        raise InvariantError(
            f"Euler characteristic {chi} does not match genus {mesh.genus}")
    cycles = _homology_cycles(mesh.vertex_count, mesh.triangles,
                              mesh.boundary_loop)
    cycles = [_simplify_cycle(c) for c in cycles]
    if len(cycles) != 2 * mesh.genus:
        raise InvariantError(
            f"tree-cotree produced {len(cycles)} cycles, expected {2 * mesh.genus}")
    bset = set(int(v) for v in mesh.boundary_loop)
    for c in cycles:
        if any(v in bset for v in c):
            raise InvariantError("homology cycle touches the boundary")
    J = intersection_matrix(mesh.triangles, cycles)
    if not np.array_equal(J, -J.T):
        raise InvariantError("intersection matrix is not alternating")
    if cycles and abs(round(np.linalg.det(J))) != 1:
        raise InvariantError("intersection matrix is not unimodular")
    return CycleBasis(cycles=cycles, intersection=J)


# ---------------------------------------------------------------------------
# JSON I/O


def save_mesh(path: str, mesh: TriMesh) -> None:
    doc = {
        "vertices": int(mesh.vertex_count),
        "triangles": [[int(v) for v in t] for t in mesh.triangles],
        "edge_lengths": [[int(i), int(j), float(l)]
                         for (i, j), l in sorted(mesh.edge_lengths.items())],
        "boundary_loop": [int(v) for v in mesh.boundary_loop],
        "genus": int(mesh.genus),
        "orientation": int(mesh.orientation),
    }
    if mesh.boundary_shape is not None:
        doc["boundary_shape"] = mesh.boundary_shape
    with open(path, "w") as f:
        json.dump(doc, f)


def load_mesh(path: str) -> TriMesh:
    with open(path) as f:
        doc = json.load(f)
    for key in ("vertices", "triangles", "edge_lengths", "boundary_loop", "genus"):
        if key not in doc:
            raise ValueError(f"mesh file missing field '{key}'")
    elen = {}
    for entry in doc["edge_lengths"]:
        i, j, l = int(entry[0]), int(entry[1]), float(entry[2])
        if l <= 0:
            raise ValueError(f"nonpositive edge length at ({i}, {j})")
        elen[edge_key(i, j)] = l
    mesh = TriMesh(
        vertex_count=int(doc["vertices"]),
        triangles=np.array(doc["triangles"], dtype=int),
        edge_lengths=elen,
        boundary_loop=np.array(doc["boundary_loop"], dtype=int),
        genus=int(doc["genus"]),
        orientation=int(doc.get("orientation", 1)),
        boundary_shape=doc.get("boundary_shape"),
    )
    validate_mesh(mesh)
    return mesh
