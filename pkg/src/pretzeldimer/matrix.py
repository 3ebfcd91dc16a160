"""The activity matrix: crossings by surviving regions.

Rows are crossings 1..n, columns the surviving regions of the balanced
overlay (bigons and the bottom deck first, then the strips).  The entry in
row c, column R — present when crossing c touches region R — is an activity
letter: for a black column the lowest-numbered incident crossing is L
(live) and the rest are D; for a white column the lowest is l and the rest
d.  Rows of negative columns of the pretzel carry bars.

Expanding the permanent turns each permutation term into a word; these are
exactly the spanning-tree activity words, which is what makes the
determinant/permanent route agree with the tree expansion.  Two optional
decorations: Kasteleyn signs (det = +-perm afterwards) and per-row writhe
weights (multiplying the evaluation by (-A^-3)^writhe).

The row order matters: clean activity words come from the standard
numbering.  A documented counterexample — reversing the labels of
P(-2,3,3), i.e. ranks {1:8, 2:7, ..., 8:1} — makes the signed determinant
stop being +- the Jones polynomial; build_graph_matrix takes a ranks
mapping so that this can be demonstrated.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .activities import split_token, token
from .diagram import trace
from .laurent import Laurent
from .taitgraphs import BOT, bigon, region_name, strip

WORKERS_ENV = "PRETZELDIMER_WORKERS"


@dataclass(frozen=True)
class Entry:
    tok: str          # activity letter with optional bar mark, e.g. "D~"
    sign: int = 1     # Kasteleyn sign; only honoured when matrix.signed


@dataclass
class Column:
    kind: str         # "internal" (black region) / "external" (white region)
    region: tuple


@dataclass
class ActivityMatrix:
    rows: list                   # crossing labels in row order
    columns: list                # Column
    entries: dict                # (row index, col index) -> Entry
    signed: bool = False
    enhanced: bool = False
    row_weights: dict = None     # row index -> crossing sign (when enhanced)

    @property
    def n(self):
        return len(self.rows)

    def copy(self):
        return ActivityMatrix(
            rows=list(self.rows),
            columns=[Column(c.kind, c.region) for c in self.columns],
            entries=dict(self.entries),
            signed=self.signed,
            enhanced=self.enhanced,
            row_weights=dict(self.row_weights) if self.row_weights else None,
        )

    def row_entries(self, ri):
        return sorted((ci, e) for (r, ci), e in self.entries.items() if r == ri)

    def by_region(self):
        """(row label, column region) -> (letter, barred); order-free view."""
        out = {}
        for (ri, ci), e in self.entries.items():
            out[(self.rows[ri], self.columns[ci].region)] = split_token(e.tok)
        return out


def _column_blocks(spec):
    """[(column index, [labels top->bottom])] plus offsets, like the diagram."""
    blocks = []
    offset = 0
    for ci, v in enumerate(spec, start=1):
        m = abs(v)
        blocks.append((ci, m, offset))
        offset += m
    return blocks


def build_block_matrix(spec):
    """Activity matrix straight from the twist-column block pattern.

    Block i contributes |ni|-1 internal columns (L on the diagonal, D just
    below); the bottom-deck column takes L at the end of column 1 and D at
    the first row of every later block; strip column i takes l at the first
    row of block i and d throughout the rest of blocks i and i+1.
    """
    spec = tuple(spec)
    k = len(spec)
    blocks = _column_blocks(spec)
    n = sum(m for _, m, _ in blocks)
    rows = list(range(1, n + 1))
    barred = {}
    for (ci, m, offset), v in zip(blocks, spec):
        for label in range(offset + 1, offset + m + 1):
            barred[label] = v < 0

    columns = []
    entries = {}

    def put(label, ci, letter):
        entries[(label - 1, ci)] = Entry(token(letter, barred[label]))

    for ci, m, offset in blocks:
        for j in range(1, m):
            region = bigon(ci, j) if ci == 1 else bigon(ci, m - j)
            col = len(columns)
            columns.append(Column("internal", region))
            put(offset + j, col, "L")
            put(offset + j + 1, col, "D")

    col = len(columns)
    columns.append(Column("internal", BOT))
    first_m = blocks[0][1]
    put(first_m, col, "L")
    for ci, m, offset in blocks[1:]:
        put(offset + 1, col, "D")

    for i in range(1, k):
        col = len(columns)
        columns.append(Column("external", strip(i)))
        ci_l, m_l, off_l = blocks[i - 1]
        ci_r, m_r, off_r = blocks[i]
        put(off_l + 1, col, "l")
        for label in range(off_l + 2, off_l + m_l + 1):
            put(label, col, "d")
        for label in range(off_r + 1, off_r + m_r + 1):
            put(label, col, "d")

    return ActivityMatrix(rows=rows, columns=columns, entries=entries)


def build_graph_matrix(overlay, ranks=None):
    """Activity matrix read off the overlay's adjacency.

    Liveness = lowest-ranked incident crossing per region column.  Columns:
    internal regions sorted by their live rank, then external ones; rows
    sorted by rank.  With identity ranks this is the same matrix as
    build_block_matrix up to a column permutation.
    """
    if ranks is None:
        ranks = {c: c for c in overlay.crossings}
    rows = sorted(overlay.crossings, key=lambda c: ranks[c])
    rowpos = {c: i for i, c in enumerate(rows)}

    incident = {}
    for c, r in overlay.edges:
        incident.setdefault(r, []).append(c)

    def live_rank(region):
        return min(ranks[c] for c in incident[region])

    columns = []
    entries = {}
    for kind, regions in (("internal", overlay.set2), ("external", overlay.set3)):
        for region in sorted(regions, key=lambda r: (live_rank(r), r)):
            ci = len(columns)
            columns.append(Column(kind, region))
            lo = live_rank(region)
            for c in incident[region]:
                letter = ("L" if kind == "internal" else "l") \
                    if ranks[c] == lo else ("D" if kind == "internal" else "d")
                entries[(rowpos[c], ci)] = Entry(
                    token(letter, overlay.crossing_signs[c] < 0))
    return ActivityMatrix(rows=rows, columns=columns, entries=entries)


def sign_matrix(m, edge_signs):
    """Apply Kasteleyn edge signs (keyed by (crossing label, region))."""
    out = m.copy()
    out.entries = {
        (ri, ci): Entry(e.tok, edge_signs[(out.rows[ri], out.columns[ci].region)])
        for (ri, ci), e in out.entries.items()
    }
    out.signed = True
    return out


def enhance(m, diagram):
    """Attach per-row writhe weights from the diagram's traced orientation.

    Only defined for knots; the per-crossing signs of a link depend on
    orientation choices.
    """
    t = trace(diagram)
    if t.components != 1:
        raise ValueError("writhe weights need a knot, got a %d-component link"
                         % t.components)
    out = m.copy()
    out.enhanced = True
    out.row_weights = {ri: t.signs[label] for ri, label in enumerate(out.rows)}
    return out


@dataclass(frozen=True)
class Term:
    cols: tuple      # column index chosen for each row, in row order
    word: tuple      # activity tokens in row order
    parity: int      # sign of the permutation
    ksign: int       # product of Kasteleyn entry signs


def _row_candidates(m):
    cands = [[] for _ in range(m.n)]
    for (ri, ci), e in sorted(m.entries.items()):
        cands[ri].append((ci, e))
    return cands


def _parity(cols):
    inv = 0
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if cols[i] > cols[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _expand_range(m, first_choices):
    cands = _row_candidates(m)
    used = set()
    pick = []
    terms = []

    def rec(ri):
        if ri == m.n:
            cols = tuple(ci for ci, _ in pick)
            terms.append(Term(
                cols=cols,
                word=tuple(e.tok for _, e in pick),
                parity=_parity(cols),
                ksign=_prod_signs(pick),
            ))
            return
        for ci, e in cands[ri]:
            if ci not in used:
                used.add(ci)
                pick.append((ci, e))
                rec(ri + 1)
                pick.pop()
                used.remove(ci)

    for ci, e in first_choices:
        used.add(ci)
        pick.append((ci, e))
        rec(1)
        pick.pop()
        used.remove(ci)
    return terms


def _prod_signs(pick):
    s = 1
    for _, e in pick:
        s *= e.sign
    return s


def _shard_worker(args):
    m, choice = args
    return _expand_range(m, [choice])


def expand(m, workers=None, check_duplicates=True):
    """All nonzero permutation terms, in deterministic row-major order.

    Rows are processed top to bottom, candidate columns in ascending index
    order (so sharding by the first row's choice preserves the order).
    workers > 1 splits the first-row branches over processes; default comes
    from the PRETZELDIMER_WORKERS environment variable, else sequential.
    """
    if m.n == 0:
        return []
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    first = _row_candidates(m)[0]
    if workers > 1 and len(first) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_shard_worker,
                                   [(m, choice) for choice in first]))
        terms = [t for chunk in chunks for t in chunk]
    else:
        terms = _expand_range(m, first)

    if check_duplicates:
        seen = {}
        for t in terms:
            seen[t.word] = seen.get(t.word, 0) + 1
        dups = [w for w, c in seen.items() if c > 1]
        if dups:
            raise ValueError("duplicate expansion words: %r" % (dups[:3],))
    return terms


def word_multiset(m, workers=None):
    return sorted(t.word for t in expand(m, workers=workers))


def _writhe_factor(m):
    w = sum(m.row_weights.values())
    return Laurent.term(-1, -3) ** w


def _evaluate(m, table, mode, workers=None, check_duplicates=True):
    ring = type(next(iter(table.values())))
    total = ring.zero()
    for t in expand(m, workers=workers, check_duplicates=check_duplicates):
        poly = ring.one()
        for tok in t.word:
            poly = poly * table[tok]
        coeff = 1
        if mode == "det":
            coeff = t.parity * (t.ksign if m.signed else 1)
        if coeff != 1:
            poly = poly * ring.term(coeff)
        total = total + poly
    if m.enhanced:
        if ring is not Laurent:
            raise ValueError("writhe weights only make sense for Laurent tables")
        total = total * _writhe_factor(m)
    return total


def det_value(m, table, workers=None, check_duplicates=True):
    """Signed expansion evaluated over a letter table."""
    return _evaluate(m, table, "det", workers, check_duplicates)


def perm_value(m, table, workers=None, check_duplicates=True):
    """Permanent (all-plus) expansion evaluated over a letter table."""
    return _evaluate(m, table, "perm", workers, check_duplicates)


# ---------------------------------------------------------------------------
# presentation

def _column_group(col):
    if col.region == BOT:
        return ("deck",)
    if col.region[0] == "strip":
        return ("strip",)
    return (col.region[0], col.region[1])


def pretty(m, ascii_bars=False):
    """Plain-text layout with block separators, like the worked examples."""
    bar = "~" if ascii_bars else "̄"
    dot = "." if ascii_bars else "·"
    cells = []
    for ri in range(m.n):
        row = []
        for ci in range(len(m.columns)):
            e = m.entries.get((ri, ci))
            if e is None:
                row.append(dot)
                continue
            letter, barred = split_token(e.tok)
            if not ascii_bars and letter == "l":
                letter = "ℓ"
            text = letter + (bar if barred else "")
            if m.signed and e.sign < 0:
                text = "-" + text
            row.append(text)
        cells.append(row)

    widths = [max(len(cells[ri][ci]) for ri in range(m.n))
              for ci in range(len(m.columns))]
    lines = []
    for ri in range(m.n):
        parts = []
        prev_group = None
        for ci in range(len(m.columns)):
            group = _column_group(m.columns[ci])
            if prev_group is not None and group != prev_group:
                parts.append("|")
            prev_group = group
            parts.append(cells[ri][ci].rjust(widths[ci]))
        line = " ".join(parts)
        if m.enhanced:
            line += "   (w%+d)" % m.row_weights[ri]
        lines.append(line)
    return "\n".join(lines)


def to_json(m):
    return {
        "rows": list(m.rows),
        "columns": [{"kind": c.kind, "region": region_name(c.region)}
                    for c in m.columns],
        "entries": [
            {"row": m.rows[ri], "col": ci, "letter": e.tok, "sign": e.sign}
            for (ri, ci), e in sorted(m.entries.items())
        ],
        "signed": m.signed,
        "enhanced": m.enhanced,
        "row_weights": ({str(m.rows[ri]): w
                         for ri, w in m.row_weights.items()}
                        if m.row_weights else None),
    }


def dump_json(m):
    return json.dumps(to_json(m), indent=2, sort_keys=True)
