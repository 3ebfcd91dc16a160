"""Independent cross-checks for the matrix pipeline.

Nothing here touches checkerboard graphs, activities, or matrices: the
state sum works straight off the diagram's port wiring, so it can referee
disagreements anywhere downstream.
"""

from __future__ import annotations

from .laurent import Laurent


def tree_expansion_bracket(g):
    """Kauffman bracket as a sum of Table-1 weights over spanning trees.

    Bypasses the matrix entirely: enumerate the trees of the signed Tait
    graph, evaluate each activity word, add up.
    """
    from .activities import tree_words
    from .evaluate import JONES_TABLE

    total = Laurent.zero()
    for _, word in tree_words(g):
        poly = Laurent.one()
        for tok in word:
            poly = poly * JONES_TABLE[tok]
        total = total + poly
    return total


def tree_expansion_jones(g, w):
    """Jones polynomial in t from the spanning-tree expansion and writhe w."""
    total = (Laurent.term(-1, -3) ** w) * tree_expansion_bracket(g)
    return total.reexpress(-4)

# smoothing port pairings, by over-strand type:
#   A-smoothing rotates the over strand counterclockwise onto the under one
_SMOOTHINGS = {
    "/": {"A": (("NW", "SW"), ("NE", "SE")), "B": (("NW", "NE"), ("SW", "SE"))},
    "\\": {"A": (("NW", "NE"), ("SW", "SE")), "B": (("NW", "SW"), ("NE", "SE"))},
}

_CORNER_IDX = {"NW": 0, "NE": 1, "SW": 2, "SE": 3}


def state_sum_bracket(diagram):
    """Kauffman bracket by brute force over all 2^n smoothings.

    <L> = sum over states A^(a-b) * delta^(loops-1), delta = -A^2 - A^-2.
    Loops are counted with union-find over the 4n ports (arcs plus chosen
    smoothing pairings form a disjoint union of cycles).
    """
    labels = sorted(diagram.crossings)
    n = len(labels)
    pos = {label: i for i, label in enumerate(labels)}

    def pid(port):
        return 4 * pos[port[0]] + _CORNER_IDX[port[1]]

    arc_pairs = [(pid(p), pid(q)) for p, q in diagram.arc_list()]
    # per crossing: (A-smoothing pairs, B-smoothing pairs) as port ids
    smooth = []
    for label in labels:
        over = diagram.crossings[label].over
        byname = _SMOOTHINGS[over]
        smooth.append(tuple(
            tuple((pid((label, a)), pid((label, b))) for a, b in byname[kind])
            for kind in ("A", "B")))

    size = 4 * n
    counts = {}   # (a_minus_b, loops) -> number of states
    for state in range(1 << n):
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        a_count = 0
        for i in range(n):
            kind = (state >> i) & 1      # 0 = A, 1 = B
            if not kind:
                a_count += 1
            for x, y in smooth[i][kind]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    merges += 1
        for x, y in arc_pairs:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
                merges += 1
        loops = size - merges
        key = (2 * a_count - n, loops)
        counts[key] = counts.get(key, 0) + 1

    delta = Laurent({2: -1, -2: -1})
    max_loops = max(l for _, l in counts)
    delta_pow = [Laurent.one()]
    for _ in range(max_loops):
        delta_pow.append(delta_pow[-1] * delta)

    total = Laurent.zero()
    for (exp, loops), mult in counts.items():
        total = total + Laurent.term(mult, exp) * delta_pow[loops - 1]
    return total
