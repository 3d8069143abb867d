"""
Green's relations, idempotents and egg-box pictures of a finite monoid table.

R- and L-classes are the strongly connected components of the right and left
Cayley graphs over the generating set; J-classes are the components of their
union.  Because the generators generate the monoid, reachability in the right
Cayley graph is exactly containment of principal right ideals.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .diagram import Diagram, MonoidTable, rank


def _scc(num: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    graph = csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(num, num))
    _, labels = connected_components(graph, directed=True, connection="strong")
    # relabel so class ids follow the smallest member index
    first: dict[int, int] = {}
    out = np.empty(num, dtype=np.int64)
    for e, lab in enumerate(labels):
        out[e] = first.setdefault(int(lab), len(first))
    return out


def _members(labels: np.ndarray) -> list[list[int]]:
    groups: list[list[int]] = [[] for _ in range(int(labels.max()) + 1)]
    for e, lab in enumerate(labels):
        groups[lab].append(e)
    return groups


@dataclass(frozen=True)
class GreenStructure:
    r_class_of: np.ndarray
    l_class_of: np.ndarray
    j_class_of: np.ndarray
    h_class_of: np.ndarray

    @property
    def r_classes(self) -> list[list[int]]:
        return _members(self.r_class_of)

    @property
    def l_classes(self) -> list[list[int]]:
        return _members(self.l_class_of)

    @property
    def j_classes(self) -> list[list[int]]:
        return _members(self.j_class_of)

    @property
    def h_classes(self) -> list[list[int]]:
        return _members(self.h_class_of)

    def r_related(self, a: int, b: int) -> bool:
        return self.r_class_of[a] == self.r_class_of[b]

    def l_related(self, a: int, b: int) -> bool:
        return self.l_class_of[a] == self.l_class_of[b]


def green_classes(t: MonoidTable) -> GreenStructure:
    m = len(t)
    elems = np.arange(m)
    gens = list(t.generators) or [t.identity]
    right_src = np.concatenate([elems] * len(gens))
    right_dst = np.concatenate([t.table[:, g] for g in gens])
    left_dst = np.concatenate([t.table[g, :] for g in gens])
    r = _scc(m, right_src, right_dst)
    l = _scc(m, right_src, left_dst)
    j = _scc(m, np.concatenate([right_src, right_src]), np.concatenate([right_dst, left_dst]))
    pairs: dict[tuple[int, int], int] = {}
    h = np.array([pairs.setdefault((int(r[e]), int(l[e])), len(pairs)) for e in range(m)], dtype=np.int64)
    return GreenStructure(r, l, j, h)


def idempotents(t: MonoidTable) -> set[int]:
    diag = t.table[np.arange(len(t)), np.arange(len(t))]
    return {int(e) for e in np.flatnonzero(diag == np.arange(len(t)))}


def is_aperiodic(t: MonoidTable, green: GreenStructure | None = None) -> bool:
    green = green or green_classes(t)
    return len(green.h_classes) == len(t)


@dataclass(frozen=True)
class JClassBox:
    """One J-class laid out with R-classes as rows and L-classes as columns."""

    members: tuple[int, ...]
    rows: tuple[int, ...]  # R-class ids, row order
    cols: tuple[int, ...]  # L-class ids, column order
    cells: tuple[tuple[tuple[int, ...], ...], ...]  # cells[row][col] = H-class members
    idempotent_cells: tuple[tuple[int, int], ...]
    rank: int | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def r_count(self) -> int:
        return len(self.rows)

    @property
    def l_count(self) -> int:
        return len(self.cols)

    @property
    def h_size(self) -> int:
        return len(self.cells[0][0])

    @property
    def regular(self) -> bool:
        return bool(self.idempotent_cells)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "size": self.size,
            "r_classes": self.r_count,
            "l_classes": self.l_count,
            "regular": self.regular,
            "idempotent_count": len(self.idempotent_cells),
        }


@dataclass(frozen=True)
class EggBox:
    classes: tuple[JClassBox, ...]

    def to_json_obj(self) -> list[dict]:
        return [c.to_dict() for c in self.classes]

    def render(self, t: MonoidTable | None = None) -> str:
        """Text grid per J-class, ``*`` marking cells that hold an idempotent."""
        lines = []
        for k, box in enumerate(self.classes):
            head = f"J-class {k}: size {box.size}, {box.r_count} R x {box.l_count} L"
            if box.rank is not None:
                head += f", rank {box.rank}"
            head += ", regular" if box.regular else ", not regular"
            lines.append(head)
            idem = set(box.idempotent_cells)
            for i in range(box.r_count):
                row = []
                for j in range(box.l_count):
                    mark = "*" if (i, j) in idem else "."
                    if t is not None and box.h_size == 1:
                        mark += str(t.elements[box.cells[i][j][0]])
                    row.append(mark)
                lines.append("  " + " ".join(row))
        return "\n".join(lines)


def eggbox_report(t: MonoidTable, green: GreenStructure | None = None) -> EggBox:
    green = green or green_classes(t)
    idem = idempotents(t)
    T = t.table
    boxes = []
    for members in green.j_classes:
        rows = sorted({int(green.r_class_of[e]) for e in members})
        cols = sorted({int(green.l_class_of[e]) for e in members})
        grid = [[[] for _ in cols] for _ in rows]
        for e in members:
            grid[rows.index(green.r_class_of[e])][cols.index(green.l_class_of[e])].append(e)
        if any(not cell for row in grid for cell in row):
            raise AssertionError("J-class is not a full R x L grid")
        idem_cells = tuple(
            (i, j) for i, row in enumerate(grid) for j, cell in enumerate(row) if idem.intersection(cell)
        )
        e0 = members[0]
        r = rank(t.elements[e0]) if isinstance(t.elements[e0], Diagram) else None
        # size of the principal two-sided ideal, used to order classes top-down
        ideal = len(np.unique(T[T[:, e0][:, None], np.arange(len(t))[None, :]]))
        boxes.append((ideal, JClassBox(
            tuple(members), tuple(rows), tuple(cols),
            tuple(tuple(tuple(c) for c in row) for row in grid), idem_cells, r,
        )))
    boxes.sort(key=lambda ib: (-ib[0], ib[1].members[0]))
    return EggBox(tuple(b for _, b in boxes))


J5_LABELS = {5: "A1", 3: "A2", 1: "A3"}


def jclass_label_j5(d: Diagram) -> str:
    """A1, A2 or A3 by the number of through wires of a J_5 element."""
    if d.n != 5:
        raise ValueError(f"expected a J_5 diagram, got n={d.n}")
    return J5_LABELS[rank(d)]
