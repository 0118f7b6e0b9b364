"""Brute-force perfect matchings of the Aztec graph.

Coordinates are doubled so everything stays integral: a vertex (x, y) with
half-integer x, y is stored as (2x, 2y) (both odd), and a face (k, l) as
(2k, 2l).  Helper functions convert back where callers expect faces in
integer coordinates.
"""
import os
from fractions import Fraction

DEFAULT_CAP = 5


def brute_cap():
    return int(os.environ.get("AZTEC_BRUTE_CAP", DEFAULT_CAP))


class CapExceeded(ValueError):
    pass


class BijectionError(RuntimeError):
    pass


class AztecGraph:
    def __init__(self, n):
        self.n = n
        verts = []
        for X in range(-2 * n + 1, 2 * n, 2):
            for Y in range(-2 * n + 1, 2 * n, 2):
                if abs(X) + abs(Y) <= 2 * n:
                    verts.append((X, Y))
        self.vertices = verts
        vset = set(verts)
        edges = []
        for (X, Y) in verts:
            if (X + 2, Y) in vset:
                edges.append(((X, Y), (X + 2, Y)))
            if (X, Y + 2) in vset:
                edges.append(((X, Y), (X, Y + 2)))
        self.edges = edges
        self.faces = [(k, l) for k in range(-n, n + 1) for l in range(-n, n + 1)
                      if abs(k) + abs(l) <= n]
        self.edge_faces = [self._faces_of(e) for e in edges]
        self.face_edges = {f: [] for f in self.faces}
        for idx, fs in enumerate(self.edge_faces):
            for f in fs:
                self.face_edges[f].append(idx)
        self.adj = {v: [] for v in verts}
        for idx, (p, q) in enumerate(edges):
            self.adj[p].append((idx, q))
            self.adj[q].append((idx, p))

    def _faces_of(self, e):
        (X1, Y1), (X2, Y2) = e
        if Y1 == Y2:
            cx = (X1 + X2) // 2
            cand = [(cx, Y1 - 1), (cx, Y1 + 1)]
        else:
            cy = (Y1 + Y2) // 2
            cand = [(X1 - 1, cy), (X1 + 1, cy)]
        out = []
        for (FX, FY) in cand:
            k, l = FX // 2, FY // 2
            if abs(k) + abs(l) <= self.n:
                out.append((k, l))
        return out

    def is_vertical(self, idx):
        (X1, _), (X2, _) = self.edges[idx]
        return X1 == X2

    def nw_faces(self):
        n = self.n
        return [(j - n, j) for j in range(n + 1)]

    def ne_faces(self):
        n = self.n
        return [(n - j, j) for j in range(n + 1)]


def enumerate_matchings(g, cap=None):
    """Yield each perfect matching once, as a sorted tuple of edge indices."""
    cap = brute_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceeded("order %d exceeds brute-force cap %d" % (g.n, cap))
    order = sorted(g.vertices, key=lambda v: (v[1], v[0]))
    covered = set()
    chosen = []

    def rec(pos):
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            yield tuple(sorted(chosen))
            return
        v = order[pos]
        covered.add(v)
        for idx, w in g.adj[v]:
            if w not in covered:
                covered.add(w)
                chosen.append(idx)
                yield from rec(pos + 1)
                chosen.pop()
                covered.discard(w)
        covered.discard(v)

    yield from rec(0)


def face_counts(g, m):
    """N_f for every face f: number of matching edges around it."""
    N = {f: 0 for f in g.faces}
    for idx in m:
        for f in g.edge_faces[idx]:
            N[f] += 1
    return N


def octahedral_weight(g, m, grid):
    N = face_counts(g, m)
    w = Fraction(1)
    for f in g.faces:
        e = 1 - N[f]
        if e:
            w *= grid(*f) ** e
    return w


def conventional_weight(g, m, grid):
    N = face_counts(g, m)
    w = Fraction(1)
    for (k, l) in g.faces:
        if abs(k) + abs(l) < g.n and N[(k, l)]:
            w *= grid(k, l) ** N[(k, l)]
    return w


def edge_weight(g, m, weights):
    """Product of per-edge weights; ``weights`` maps edge index -> value."""
    w = Fraction(1)
    for idx in m:
        w *= weights.get(idx, 1)
    return w


def weighted_sum(g, grid, measure="octahedral", cap=None):
    fn = octahedral_weight if measure == "octahedral" else conventional_weight
    return sum((fn(g, m, grid) for m in enumerate_matchings(g, cap)), Fraction(0))


def boundary_indices(g, m):
    """(k, l): positions of the untouched NW and NE boundary faces.

    Also checks that k equals the number of vertical edges on NW boundary
    faces, which pins the orientation of the labels.
    """
    N = face_counts(g, m)
    nw = [j for j, f in enumerate(g.nw_faces()) if N[f] == 0]
    ne = [j for j, f in enumerate(g.ne_faces()) if N[f] == 0]
    if len(nw) != 1 or len(ne) != 1:
        raise BijectionError("expected one untouched face per boundary, got %r %r" % (nw, ne))
    nw_set = set(g.nw_faces())
    vert = sum(1 for idx in m if g.is_vertical(idx)
               and any(f in nw_set for f in g.edge_faces[idx]))
    if vert != nw[0]:
        raise BijectionError("NW label %d disagrees with %d vertical edges" % (nw[0], vert))
    return nw[0], ne[0]


def refined_counts(g, grid, measure="octahedral", cap=None):
    """Table {(k, l): weighted sum} split by NW / NE boundary labels."""
    fn = octahedral_weight if measure == "octahedral" else conventional_weight
    table = {}
    for m in enumerate_matchings(g, cap):
        key = boundary_indices(g, m)
        table[key] = table.get(key, 0) + fn(g, m, grid)
    return table


def nw_marginal(table, n):
    out = [Fraction(0)] * (n + 1)
    for (k, _), v in table.items():
        out[k] += v
    return out


# --- tilings to non-intersecting Schroeder paths ------------------------------
#
# Each edge keeps the endpoint (x, y) with x + y = n mod 2.  Horizontal edges
# kept on the left give a flat step, kept on the right give nothing; vertical
# edges kept at the bottom give an up step, kept at the top a down step.  Path
# coordinates are (P, Q) = (x - 1/2, y + n + 1/2) in units of lattice steps,
# stored here as integers.

def _path_steps(g, m):
    n = g.n
    steps = []
    for idx in m:
        (X1, Y1), (X2, Y2) = g.edges[idx]
        keep_first = ((X1 + Y1) // 2 - n) % 2 == 0
        X, Y = (X1, Y1) if keep_first else (X2, Y2)
        P = (X - 1) // 2
        Q = (Y - 1) // 2 + n + 1
        if Y1 == Y2:
            if keep_first:
                steps.append(((P, Q), (P + 2, Q), "flat"))
        else:
            if keep_first:
                steps.append(((P, Q), (P + 1, Q + 1), "up"))
            else:
                steps.append(((P, Q), (P + 1, Q - 1), "down"))
    return steps


def tiling_to_paths(g, m):
    """Split a matching into its n non-intersecting paths, top path first.

    Path with index i (i = n .. 1) runs from (-i, i) to (i, i).
    """
    n = g.n
    by_start = {}
    for s, e, kind in _path_steps(g, m):
        if s in by_start:
            raise BijectionError("two steps leave %r" % (s,))
        by_start[s] = (e, kind)
    paths = []
    used = 0
    for i in range(n, 0, -1):
        pt = (-i, i)
        path = [pt]
        kinds = []
        while pt != (i, i):
            if pt not in by_start:
                raise BijectionError("path %d broken at %r" % (i, pt))
            pt, kind = by_start[pt]
            path.append(pt)
            kinds.append(kind)
            used += 1
            if pt[0] > i:
                raise BijectionError("path %d overshoots" % i)
        paths.append((path, kinds))
    if used != len(by_start):
        raise BijectionError("unused steps left over")
    return paths


def step_weight(kind, column, a, b):
    even = column % 2 == 0
    if kind == "up":
        return b if even else a
    if kind == "flat":
        return b * b if even else a * a
    return a if even else b


def path_weight(paths, a, b):
    w = Fraction(1)
    for pts, kinds in paths:
        for (P, _), kind in zip(pts, kinds):
            w *= step_weight(kind, P, a, b)
    return w
