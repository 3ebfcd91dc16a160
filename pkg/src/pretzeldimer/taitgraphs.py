"""Checkerboard graphs of a pretzel diagram and their balanced overlay.

Checkerboard-color the diagram complement with the two decks (above and
below the twist columns) and the column bigons black, the unbounded region
and the inter-column strips white.  Around every crossing the north/south
corners are black and the east/west corners are white.

* The Tait graph G has the black regions as vertices and one signed edge
  per crossing (sign = column sign).  For P(n1,...,nk) it is k parallel
  deck-to-deck paths with |ni| edges each.
* The dual graph G* lives on the white regions: a necklace through
  outer, strip 1, ..., strip k-1 with |ni| parallel edges per gap.
* Deleting the upper deck and the unbounded region (they share the outer
  top band arc) and overlaying what is left of G and G* gives the balanced
  bipartite incidence graph: crossings on one side, surviving regions on
  the other.  Its bounded faces are quadrilaterals, one per arc not
  touching a deleted region, and a Kasteleyn edge signing makes signed
  perfect-matching counts honest determinants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import build_diagram

TOP = ("deck", "top")
BOT = ("deck", "bot")
OUT = ("outer",)


def bigon(i, p):
    """Bigon region between positions p and p+1 of column i (1-based)."""
    return ("bigon", i, p)


def strip(i):
    """White strip between columns i and i+1."""
    return ("strip", i)


def region_name(r):
    if r == TOP:
        return "T"
    if r == BOT:
        return "B"
    if r == OUT:
        return "O"
    if r[0] == "bigon":
        return "b%d_%d" % (r[1], r[2])
    if r[0] == "grown":
        return "g%d" % (r[1],)
    return "s%d" % (r[1],)


def _column_layout(spec):
    """[(column index, [labels top->bottom]), ...] reusing diagram labelling."""
    return build_diagram(spec).columns


def corner_regions(spec):
    """For each crossing the regions at its N, S, W, E corners."""
    spec = tuple(spec)
    k = len(spec)
    out = {}
    for ci, labels in enumerate(_column_layout(spec), start=1):
        m = len(labels)
        west = OUT if ci == 1 else strip(ci - 1)
        east = OUT if ci == k else strip(ci)
        for p, label in enumerate(labels, start=1):
            out[label] = {
                "N": TOP if p == 1 else bigon(ci, p - 1),
                "S": BOT if p == m else bigon(ci, p),
                "W": west,
                "E": east,
            }
    return out


@dataclass
class TaitEdge:
    label: int
    u: tuple
    v: tuple
    sign: int


@dataclass
class TaitGraph:
    vertices: list
    edges: dict                 # label -> TaitEdge
    corners: dict               # label -> {"N","S","W","E"} -> region
    is_dual: bool = False

    @property
    def n(self):
        return len(self.edges)

    def endpoints(self, label):
        e = self.edges[label]
        return e.u, e.v


def build_tait(spec):
    """Signed Tait graph on the black regions (one edge per crossing)."""
    spec = tuple(spec)
    corners = corner_regions(spec)
    vertices = [TOP, BOT]
    for ci, v in enumerate(spec, start=1):
        for p in range(1, abs(v)):
            vertices.append(bigon(ci, p))
    edges = {}
    for ci, (labels, v) in enumerate(
            zip(_column_layout(spec), spec), start=1):
        s = 1 if v > 0 else -1
        for label in labels:
            edges[label] = TaitEdge(label, corners[label]["N"],
                                    corners[label]["S"], s)
    return TaitGraph(vertices=vertices, edges=edges, corners=corners)


def dual_graph(g):
    """Planar dual with matching edge labels and flipped signs.

    A graph's own endpoints sit in the N/S corner slots and the dual pair
    in W/E, so dualizing just swaps the two pairs; applying dual_graph
    twice returns the original graph exactly.
    """
    seen = []
    for label in sorted(g.corners):
        for c in ("W", "E"):
            r = g.corners[label][c]
            if r not in seen:
                seen.append(r)
    edges = {label: TaitEdge(label, g.corners[label]["W"],
                             g.corners[label]["E"], -g.edges[label].sign)
             for label in g.edges}
    corners = {label: {"N": cc["W"], "S": cc["E"], "W": cc["N"], "E": cc["S"]}
               for label, cc in g.corners.items()}
    return TaitGraph(vertices=seen, edges=edges, corners=corners,
                     is_dual=not g.is_dual)


@dataclass
class Overlay:
    """Balanced bipartite incidence graph after deleting TOP and OUT.

    set1 = crossings, set2 = surviving black regions (bottom deck and
    bigons), set3 = surviving white regions (strips).  Balance:
    |set1| = |set2| + |set3|.
    """
    spec: tuple
    crossings: list
    set2: list
    set3: list
    edges: list                  # (crossing label, region), deterministic order
    corners: dict
    crossing_signs: dict = field(default_factory=dict)
    edge_signs: dict | None = None
    faces: list = field(default_factory=list)   # bounded quads as edge lists

    @property
    def edge_set(self):
        return set(self.edges)

    def incident_regions(self, label):
        return [r for r in (self.corners[label][c] for c in "NSWE")
                if r not in (TOP, OUT)]

    def incident_crossings(self, region):
        return sorted(label for label in self.crossings
                      if region in self.incident_regions(label))


def build_overlay(spec):
    spec = tuple(spec)
    k = len(spec)
    corners = corner_regions(spec)
    layout = _column_layout(spec)
    crossings = sorted(corners)

    set2 = [BOT]
    for ci, v in enumerate(spec, start=1):
        for p in range(1, abs(v)):
            set2.append(bigon(ci, p))
    set3 = [strip(i) for i in range(1, k)]

    edges = []
    for label in crossings:
        for c in "NSWE":
            r = corners[label][c]
            if r not in (TOP, OUT):
                edges.append((label, r))

    # bounded faces: one quadrilateral per arc whose two flanking regions
    # both survive the deletion
    faces = []

    def quad(c1, c2, r1, r2):
        faces.append([(c1, r1), (c2, r1), (c2, r2), (c1, r2)])

    for ci, labels in enumerate(layout, start=1):
        for p in range(1, len(labels)):
            a, b = labels[p - 1], labels[p]
            if ci >= 2:                      # west side arc of the bigon
                quad(a, b, bigon(ci, p), strip(ci - 1))
            if ci <= k - 1:                  # east side arc
                quad(a, b, bigon(ci, p), strip(ci))
    bots = [labels[-1] for labels in layout]
    for i in range(1, k):                    # bottom band arcs
        quad(bots[i - 1], bots[i], BOT, strip(i))

    signs = {}
    for labels, v in zip(layout, spec):
        for label in labels:
            signs[label] = 1 if v > 0 else -1

    ov = Overlay(spec=spec, crossings=crossings, set2=set2, set3=set3,
                 edges=edges, corners=corners, crossing_signs=signs,
                 faces=faces)
    assert len(ov.crossings) == len(ov.set2) + len(ov.set3)
    return ov


def solve_kasteleyn(overlay):
    """Kasteleyn signs via a spanning tree of the face-adjacency graph.

    Every edge not chosen as a tree link gets +1; then each bounded face is
    solved leaf-to-root for its single remaining unknown so that the face
    parity rule holds (a face of length l needs an odd number of negative
    edges iff l = 0 mod 4).
    """
    faces = overlay.faces
    by_edge = {}
    for fi, f in enumerate(faces):
        for e in f:
            by_edge.setdefault(e, []).append(fi)

    # face adjacency, with the unbounded face as BFS root (index -1)
    adj = {fi: [] for fi in range(len(faces))}
    adj[-1] = []
    for e, fs in sorted(by_edge.items()):
        if len(fs) == 2:
            adj[fs[0]].append((fs[1], e))
            adj[fs[1]].append((fs[0], e))
        else:
            adj[-1].append((fs[0], e))
            adj[fs[0]].append((-1, e))

    parent_link = {}
    order = []
    seenf = {-1}
    queue = [-1]
    while queue:
        node = queue.pop(0)
        for nxt, e in adj[node]:
            if nxt not in seenf:
                seenf.add(nxt)
                parent_link[nxt] = e
                order.append(nxt)
                queue.append(nxt)
    if len(seenf) != len(faces) + 1:
        raise RuntimeError("face-adjacency graph is not connected")

    signs = {e: 1 for e in overlay.edges}
    for fi in reversed(order):
        f = faces[fi]
        unknown = parent_link[fi]
        neg = sum(1 for e in f if e != unknown and signs[e] == -1)
        want_odd = (len(f) % 4 == 0)
        signs[unknown] = -1 if (neg % 2 == 0) == want_odd else 1
    return signs


def verify_kasteleyn(faces, signs):
    """Check the face parity rule for every face in the list."""
    for f in faces:
        neg = sum(1 for e in f if signs[e] == -1)
        want_odd = (len(f) % 4 == 0)
        if (neg % 2 == 1) != want_odd:
            return False
    return True


def delete_edge_from_faces(faces, e):
    """Face list after deleting edge e (merges the two faces along e).

    If e lies on only one bounded face, that face merges with the unbounded
    one and simply drops out.  Used to check that valid signings stay valid
    under edge deletion.
    """
    containing = [i for i, f in enumerate(faces) if e in f]
    if len(containing) == 0:
        return [list(f) for f in faces]
    if len(containing) == 1:
        return [list(f) for i, f in enumerate(faces) if i != containing[0]]
    i1, i2 = containing
    merged = [x for x in faces[i1] if x != e] + [x for x in faces[i2] if x != e]
    out = [list(f) for i, f in enumerate(faces) if i not in (i1, i2)]
    out.append(merged)
    return out


def tait_to_dot(g, name="tait"):
    lines = ["graph %s {" % name]
    for v in g.vertices:
        lines.append('  "%s";' % region_name(v))
    for label in sorted(g.edges):
        e = g.edges[label]
        style = ", style=bold" if e.sign < 0 else ""
        lines.append('  "%s" -- "%s" [label="%d"%s];'
                     % (region_name(e.u), region_name(e.v), label, style))
    lines.append("}")
    return "\n".join(lines)


def overlay_to_dot(overlay, signs=None):
    lines = ["graph overlay {"]
    for label in overlay.crossings:
        lines.append('  x%d [shape=circle, label="%d"];' % (label, label))
    for r in overlay.set2 + overlay.set3:
        shape = "box" if r in overlay.set2 else "diamond"
        lines.append('  "%s" [shape=%s];' % (region_name(r), shape))
    for label, r in overlay.edges:
        style = ""
        if signs is not None and signs[(label, r)] < 0:
            style = " [style=bold]"
        lines.append('  x%d -- "%s"%s;' % (label, region_name(r), style))
    lines.append("}")
    return "\n".join(lines)
