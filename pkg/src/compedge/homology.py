"""Exact reduced simplicial homology and graded Betti numbers of squarefree ideals.

Graded Betti numbers of S/I come from the reduced homology of induced
subcomplexes of the Stanley-Reisner complex: the multidegree-sigma Betti number
in homological position i equals dim of reduced H_(|sigma|-i-1) of the
restriction to sigma, and the table aggregates multidegrees by cardinality.
The convention that the complex {emptyset} has reduced H_(-1) = K makes the
(0,0) entry come out as 1 without special-casing.

All ranks are computed exactly: over GF(2) with bit-packed XOR elimination,
over the rationals with Fraction arithmetic. No floating point anywhere.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .ideals import SquarefreeIdeal, alexander_dual, height, squarefree_component

ORACLE_LIMIT = 14


class Field(enum.Enum):
    """Coefficient field tag for homology ranks."""

    GF2 = "gf2"
    RATIONALS = "q"


def parse_field(name: str) -> Field:
    for f in Field:
        if f.value == name:
            return f
    raise ValueError(f"unknown field {name!r}, expected one of: gf2, q")


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ground set {1..n}, faces stored as bit masks.

    The void complex (no faces at all) is distinct from the complex whose only
    face is the empty set (mask 0).
    """

    n: int
    faces: frozenset[int]

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.faces) - 1

    def face_sets(self) -> list[tuple[int, ...]]:
        from .ideals import support_of
        return sorted(tuple(sorted(support_of(f))) for f in self.faces)


def simplicial_complex(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of the given facets (always includes the empty face)."""
    from .ideals import mask_of
    faces = {0}
    for facet in facets:
        fm = mask_of(facet)
        if fm >> n:
            raise ValueError(f"facet {sorted(facet)} out of ground range 1..{n}")
        sub = fm
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    return SimplicialComplex(n, frozenset(faces))


def stanley_reisner(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Faces are the subsets of {1..n} containing no generator support."""
    if ideal.is_zero:
        raise ValueError("Stanley-Reisner complex undefined for the zero ideal")
    if ideal.n > ORACLE_LIMIT:
        raise ValueError(f"ambient size {ideal.n} exceeds the oracle limit of {ORACLE_LIMIT}")
    nonface = _nonface_table(ideal)
    return SimplicialComplex(
        ideal.n, frozenset(s for s in range(1 << ideal.n) if not nonface[s]))


def _nonface_table(ideal: SquarefreeIdeal) -> bytearray:
    n = ideal.n
    full = (1 << n) - 1
    nonface = bytearray(1 << n)
    for g in ideal.generator_masks():
        rest = full & ~g
        sub = rest
        while True:
            nonface[g | sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return nonface


def _gf2_rank(rows: list[int]) -> int:
    """Rank of a GF(2) matrix whose rows are bit masks (XOR basis)."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def _rational_rank(matrix: list[list[int]]) -> int:
    """Rank over Q by Gaussian elimination with exact fractions."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        pivot = rows[pivot_row]
        inv = 1 / pivot[col]
        for r in range(pivot_row + 1, len(rows)):
            f = rows[r][col]
            if f:
                scale = f * inv
                row = rows[r]
                for c in range(col, ncols):
                    row[c] -= scale * pivot[c]
        rank += 1
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rank


def _homology_from_faces(faces_by_size: list[list[int]], field: Field) -> list[int]:
    """Reduced homology dims of a nonvoid downward-closed face family.

    faces_by_size[s] holds the masks of cardinality s; index 0 of the result is
    dimension -1 of the reduced chain complex.
    """
    top = len(faces_by_size) - 1
    sizes = [len(fs) for fs in faces_by_size]
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        cols = faces_by_size[s]
        below = faces_by_size[s - 1]
        if not cols or not below:
            continue
        row_index = {f: i for i, f in enumerate(below)}
        if field is Field.GF2:
            rows = [0] * len(below)
            for j, f in enumerate(cols):
                bits = f
                while bits:
                    low = bits & -bits
                    bits ^= low
                    rows[row_index[f ^ low]] |= 1 << j
            ranks[s] = _gf2_rank(rows)
        else:
            mat = [[0] * len(cols) for _ in range(len(below))]
            for j, f in enumerate(cols):
                bits = f
                pos = 0
                while bits:
                    low = bits & -bits
                    bits ^= low
                    mat[row_index[f ^ low]][j] = 1 if pos % 2 == 0 else -1
                    pos += 1
            ranks[s] = _rational_rank(mat)
    return [sizes[s] - ranks[s] - ranks[s + 1] for s in range(top + 1)]


def reduced_homology_dims(complex_: SimplicialComplex, field: Field = Field.GF2) -> list[int]:
    """Dims of reduced homology, listed from dimension -1 upward.

    The void complex has no homology at all and yields the empty list; the
    complex {emptyset} yields [1].
    """
    if complex_.is_void:
        return []
    top = max(f.bit_count() for f in complex_.faces)
    faces_by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for f in sorted(complex_.faces):
        faces_by_size[f.bit_count()].append(f)
    return _homology_from_faces(faces_by_size, field)


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Graded Betti numbers beta_(i,j) of S/I, keyed by (homological index, degree)."""

    n: int
    field: Field
    entries: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_dict(n: int, field: Field, values: dict[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((ij, v) for ij, v in values.items() if v))
        return BettiTable(n, field, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def value(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.value,
            "betti": [{"i": i, "j": j, "value": v} for (i, j), v in self.entries],
        }


class Homological(NamedTuple):
    reg_s_mod_i: int
    pd_s_mod_i: int
    reg_ideal: int
    pd_ideal: int


def reg_pd(table: BettiTable) -> Homological:
    """Regularity and projective dimension of S/I and of I from one table."""
    if not table.entries:
        raise ValueError("empty Betti table")
    pd = max(i for (i, _), _ in table.entries)
    reg = max(j - i for (i, j), _ in table.entries)
    return Homological(reg, pd, reg + 1, pd - 1)


_HOMOLOGY_CACHE: dict[tuple[Field, tuple[int, ...]], list[int]] = {}


def clear_homology_cache() -> None:
    _HOMOLOGY_CACHE.clear()


def hochster_betti(ideal: SquarefreeIdeal, field: Field = Field.GF2,
                   limit: int = ORACLE_LIMIT) -> BettiTable:
    """Graded Betti numbers of S/I over the chosen field, degree by multidegree.

    Runs over all subsets of the ground set, so it is exponential in n; the
    limit guard (default 14) keeps accidental blowups out.
    """
    if ideal.is_zero:
        raise ValueError("Betti table undefined for the zero ideal")
    n = ideal.n
    if n > limit:
        raise ValueError(f"ambient size {n} exceeds the oracle limit of {limit}")
    nonface = _nonface_table(ideal)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in range(1, 1 << n):
        if not nonface[sigma]:
            # restriction to a face is a full simplex: no reduced homology
            continue
        positions = []
        bits = sigma
        while bits:
            low = bits & -bits
            positions.append(low)
            bits ^= low
        ssize = len(positions)
        compact = []
        sub = sigma
        while True:
            if not nonface[sub]:
                cf = 0
                for i, low in enumerate(positions):
                    if sub & low:
                        cf |= 1 << i
                compact.append(cf)
            if sub == 0:
                break
            sub = (sub - 1) & sigma
        compact.sort()
        key = (field, tuple(compact))
        dims = _HOMOLOGY_CACHE.get(key)
        if dims is None:
            top = max(f.bit_count() for f in compact)
            faces_by_size: list[list[int]] = [[] for _ in range(top + 1)]
            for f in compact:
                faces_by_size[f.bit_count()].append(f)
            dims = _homology_from_faces(faces_by_size, field)
            _HOMOLOGY_CACHE[key] = dims
        for k, h in enumerate(dims):
            if h:
                i = ssize - k
                entries[(i, ssize)] = entries.get((i, ssize), 0) + h
    return BettiTable.from_dict(n, field, entries)


def is_cohen_macaulay(ideal: SquarefreeIdeal, field: Field = Field.GF2) -> bool:
    """S/I is Cohen-Macaulay iff pd(S/I) equals the height of I."""
    table = hochster_betti(ideal, field)
    return reg_pd(table).pd_s_mod_i == height(ideal)


def has_linear_resolution(ideal: SquarefreeIdeal, field: Field = Field.GF2) -> bool:
    """True iff all generators share one degree d and reg(I) = d."""
    if ideal.is_zero:
        raise ValueError("linear resolution undefined for the zero ideal")
    degrees = set(len(g) for g in ideal.gens)
    if len(degrees) != 1:
        return False
    d = degrees.pop()
    table = hochster_betti(ideal, field)
    return reg_pd(table).reg_ideal == d


def is_componentwise_linear(ideal: SquarefreeIdeal, field: Field = Field.GF2) -> bool:
    """Every nonzero squarefree component has a linear resolution."""
    if ideal.is_zero:
        raise ValueError("componentwise linearity undefined for the zero ideal")
    for d in range(ideal.indeg, ideal.n + 1):
        component = squarefree_component(ideal, d)
        if component.is_zero:
            continue
        if not has_linear_resolution(component, field):
            return False
    return True


def is_sequentially_cm(ideal: SquarefreeIdeal, field: Field = Field.GF2) -> bool:
    """S/I is sequentially Cohen-Macaulay iff the Alexander dual is componentwise linear."""
    return is_componentwise_linear(alexander_dual(ideal), field)
