"""Dense GF(2) linear algebra on bit-packed rows.

A row is a Python int: bit ``j`` is the entry in column ``j``.  Echelon forms
are fully reduced with pivots on the lowest set bit, rows sorted by pivot, so
two spanning sets of the same subspace give identical echelon forms.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .algebra import Bidegree, Element, Monomial, basis, basis_index


def lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def iter_bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class Matrix:
    nrows: int
    ncols: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0 or len(self.rows) != self.nrows:
            raise ValueError("inconsistent matrix shape")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "Matrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, v in enumerate(row) if v & 1))
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def apply(self, v: int) -> int:
        """``M v`` for a column vector packed as an int; the result is packed by row index."""
        out = 0
        for i, r in enumerate(self.rows):
            if bin(r & v).count("1") & 1:
                out |= 1 << i
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        for row in self.to_lists():
            buf.write(",".join(map(str, row)) + "\n")
        return buf.getvalue()


def _echelon(rows: Iterable[int]) -> List[int]:
    """Reduced echelon rows (nonzero only), sorted by pivot."""
    pivots: dict = {}
    pivmask = 0
    for x in rows:
        for p in iter_bits(x & pivmask):
            x ^= pivots[p]
        if not x:
            continue
        p = lowbit(x)
        for q, r in pivots.items():
            if (r >> p) & 1:
                pivots[q] = r ^ x
        pivots[p] = x
        pivmask |= 1 << p
    return [pivots[p] for p in sorted(pivots)]


def rref(M: Matrix) -> Tuple[Matrix, int]:
    ech = _echelon(M.rows)
    rank = len(ech)
    return Matrix(M.nrows, M.ncols, tuple(ech) + (0,) * (M.nrows - rank)), rank


def rank(M: Matrix) -> int:
    return len(_echelon(M.rows))


def kernel(M: Matrix) -> List[int]:
    """Canonical echelon basis of ``{v : M v = 0}`` as packed coordinate vectors."""
    ech = _echelon(M.rows)
    piv = [lowbit(r) for r in ech]
    pivset = set(piv)
    vecs = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        v = 1 << f
        for p, r in zip(piv, ech):
            if (r >> f) & 1:
                v |= 1 << p
        vecs.append(v)
    return _echelon(vecs)


def transpose(M: Matrix) -> Matrix:
    cols = [0] * M.ncols
    for i, r in enumerate(M.rows):
        for j in iter_bits(r):
            cols[j] |= 1 << i
    return Matrix(M.ncols, M.nrows, tuple(cols))


def stack(Ms: Sequence[Matrix]) -> Matrix:
    if not Ms:
        raise ValueError("nothing to stack")
    ncols = Ms[0].ncols
    if any(M.ncols != ncols for M in Ms):
        raise ValueError("column counts differ")
    rows = tuple(r for M in Ms for r in M.rows)
    return Matrix(len(rows), ncols, rows)


def column_space(M: Matrix) -> List[int]:
    """Canonical echelon basis of the image of ``M``, packed by row index."""
    return _echelon(transpose(M).rows)


# -- subspaces of a bigraded piece ------------------------------------------


def coords(v: Element, ambient: Bidegree) -> int:
    index = basis_index(*ambient)
    x = 0
    for m in v.terms:
        try:
            x |= 1 << index[m]
        except KeyError:
            raise ValueError(f"{v} is not homogeneous of bidegree {ambient}") from None
    return x


def element(x: int, ambient: Bidegree) -> Element:
    mons = basis(*ambient)
    return Element._raw(frozenset(mons[j] for j in iter_bits(x)))


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of the (s, d) piece, held as its canonical echelon rows.

    Equality of two instances is equality of subspaces.
    """

    ambient: Bidegree
    rows: Tuple[int, ...]

    @classmethod
    def span(cls, ambient: Bidegree, rows: Iterable[int]) -> "SubspaceBasis":
        return cls(tuple(ambient), tuple(_echelon(rows)))

    @classmethod
    def from_elements(cls, ambient: Bidegree, vectors: Iterable[Element]) -> "SubspaceBasis":
        return cls.span(ambient, (coords(v, ambient) for v in vectors))

    @classmethod
    def whole(cls, ambient: Bidegree) -> "SubspaceBasis":
        n = len(basis(*ambient))
        return cls(tuple(ambient), tuple(1 << i for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def vectors(self) -> List[Element]:
        return [element(r, self.ambient) for r in self.rows]

    def leading_monomials(self) -> List[Monomial]:
        mons = basis(*self.ambient)
        return [mons[lowbit(r)] for r in self.rows]

    def reduce(self, x: int) -> int:
        """Normal form of a packed vector modulo this subspace."""
        for r in self.rows:
            if (x >> lowbit(r)) & 1:
                x ^= r
        return x

    def contains_coords(self, x: int) -> bool:
        return self.reduce(x) == 0

    def __contains__(self, v: Element) -> bool:
        return member(v, self)

    def __le__(self, other: "SubspaceBasis") -> bool:
        return self.ambient == other.ambient and all(other.contains_coords(r) for r in self.rows)

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        if self.ambient != other.ambient:
            raise ValueError("ambient bidegrees differ")
        return SubspaceBasis.span(self.ambient, self.rows + other.rows)


def span_dimension(vectors: Sequence[Element], ambient: Bidegree) -> int:
    return len(_echelon(coords(v, ambient) for v in vectors))


def member(v: Element, B: SubspaceBasis) -> bool:
    if not v:
        return True
    return B.contains_coords(coords(v, B.ambient))
