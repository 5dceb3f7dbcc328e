"""Finite-range freeness certificates for the partially annihilated subalgebras.

Within a box ``s <= s_max, d <= d_max`` we split each graded piece into
decomposables (sums of two-factor products of lower pieces) and a complement
whose dimension counts minimal generators.  The free algebra on those
generators has word counts ``f``; if ``f`` matches the actual dimension in
every cell, there are no relations in the box.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional

from .algebra import Bidegree, Element
from .annihilated import delta_basis
from .delta0 import HilbertTable, checked
from .gf2 import SubspaceBasis, coords

BasisProvider = Callable[[int, int, int], SubspaceBasis]


def decomposables(
    k: int,
    s: int,
    d: int,
    bases: Optional[BasisProvider] = None,
    rng: Optional[random.Random] = None,
) -> SubspaceBasis:
    """Span of ``Delta(k)_{r,a} . Delta(k)_{s-r,d-a}`` over all proper splits of (s, d).

    ``rng`` shuffles the order in which products are fed to elimination; the
    resulting echelon basis does not depend on it.
    """
    bases = bases or delta_basis
    prods: List[Element] = []
    for r in range(1, s):
        for a in range(1, d):
            left = bases(k, r, a)
            if not left.rows:
                continue
            right = bases(k, s - r, d - a)
            if not right.rows:
                continue
            rvecs = right.vectors
            for u in left.vectors:
                prods.extend(u * v for v in rvecs)
    if rng is not None:
        rng.shuffle(prods)
    return SubspaceBasis.span((s, d), (coords(p, (s, d)) for p in prods))


def complement_representatives(B: SubspaceBasis, D: SubspaceBasis) -> SubspaceBasis:
    """Canonical complement of ``D`` in ``B``: basis of ``B`` reduced modulo ``D``, re-echeloned."""
    return SubspaceBasis.span(B.ambient, (D.reduce(r) for r in B.rows))


@dataclass
class GeneratorCell:
    s: int
    d: int
    dim: int
    dec: int
    representatives: List[Element]

    @property
    def g(self) -> int:
        return len(self.representatives)


@dataclass
class GeneratorTable:
    k: int
    s_max: int
    d_max: int
    cells: Dict[Bidegree, GeneratorCell] = field(default_factory=dict)

    def counts(self) -> HilbertTable:
        return {bd: c.g for bd, c in self.cells.items()}

    def dims(self) -> HilbertTable:
        return {bd: c.dim for bd, c in self.cells.items()}


def minimal_generators(
    k: int,
    s_max: int,
    d_max: int,
    bases: Optional[BasisProvider] = None,
    rng: Optional[random.Random] = None,
) -> GeneratorTable:
    bases = bases or delta_basis
    table = GeneratorTable(k, s_max, d_max)
    for s in range(s_max + 1):
        for d in range(d_max + 1):
            B = bases(k, s, d)
            if s == 0 or d == 0:
                # the unit is never a generator; nothing else lives here
                D = B if s == 0 and d == 0 else SubspaceBasis((s, d), ())
            else:
                D = decomposables(k, s, d, bases, rng)
            reps = complement_representatives(B, D)
            table.cells[s, d] = GeneratorCell(s, d, B.dim, D.dim, reps.vectors)
    return table


def hilbert_inversion(g: HilbertTable, s_max: int, d_max: int) -> HilbertTable:
    """Word counts of the free algebra with ``g[s, d]`` generators in each bidegree."""
    if g.get((0, 0), 0) != 0:
        raise ValueError("the unit bidegree cannot carry generators")
    gens = [(bd, n) for bd, n in g.items() if n]
    for (r, a), n in gens:
        if n < 0 or r < 0 or a < 0:
            raise ValueError(f"bad generator count {n} at {(r, a)}")
    f: HilbertTable = {}
    for s in range(s_max + 1):
        for d in range(d_max + 1):
            if (s, d) == (0, 0):
                f[s, d] = 1
                continue
            total = 0
            for (r, a), n in gens:
                if r <= s and a <= d:
                    total += n * f[s - r, d - a]
            f[s, d] = checked(total, (s, d))
    return f


@dataclass
class CellRecord:
    s: int
    d: int
    dim: int
    dec: int
    g: int
    f: int

    @property
    def passed(self) -> bool:
        return self.f == self.dim


@dataclass
class FreenessReport:
    k: int
    s_max: int
    d_max: int
    cells: List[CellRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def first_failure(self) -> Optional[CellRecord]:
        return next((c for c in self.cells if not c.passed), None)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "bounds": {"s_max": self.s_max, "d_max": self.d_max},
            "cells": [dict(asdict(c), **{"pass": c.passed}) for c in self.cells],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, doc: dict) -> "FreenessReport":
        cells = [CellRecord(**{key: c[key] for key in ("s", "d", "dim", "dec", "g", "f")}) for c in doc["cells"]]
        return cls(doc["k"], doc["bounds"]["s_max"], doc["bounds"]["d_max"], cells)


def compare_counts(
    k: int,
    s_max: int,
    d_max: int,
    dims: HilbertTable,
    decs: HilbertTable,
    g: HilbertTable,
) -> FreenessReport:
    f = hilbert_inversion(g, s_max, d_max)
    report = FreenessReport(k, s_max, d_max)
    for s in range(s_max + 1):
        for d in range(d_max + 1):
            report.cells.append(CellRecord(s, d, dims[s, d], decs[s, d], g.get((s, d), 0), f[s, d]))
    return report


def certify_free(k: int, s_max: int, d_max: int, bases: Optional[BasisProvider] = None) -> FreenessReport:
    table = minimal_generators(k, s_max, d_max, bases)
    decs = {bd: c.dec for bd, c in table.cells.items()}
    return compare_counts(k, s_max, d_max, table.dims(), decs, table.counts())
