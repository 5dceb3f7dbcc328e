"""Explicit generators of the kernel of Sq^1 and their counting functions.

``sigma(m_1, ..., m_s)`` is ``[2m_1+2, ..., 2m_s+2]Sq^1``.  These elements
freely generate ker Sq^1, so its Hilbert function ``c`` is the word count of
a free algebra with ``eta(s, d)`` generators in each bidegree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from .algebra import Bidegree, Element
from .annihilated import delta_basis
from .gf2 import SubspaceBasis, span_dimension
from .steenrod import sq

HilbertTable = Dict[Bidegree, int]

INT64_MAX = (1 << 63) - 1


def checked(value: int, where) -> int:
    if value < 0 or value > INT64_MAX:
        raise OverflowError(f"value at {where} does not fit in a signed 64-bit integer")
    return value


def sigma(ms) -> Element:
    ms = tuple(ms)
    if not ms:
        raise ValueError("sigma needs at least one index")
    if any(m < 0 for m in ms):
        raise ValueError(f"sigma indices must be nonnegative: {ms}")
    return sq(Element.monomial(*(2 * m + 2 for m in ms)), 1)


def sigma_bidegree(ms) -> Bidegree:
    return (len(ms), 2 * sum(ms) + 2 * len(ms) - 1)


def _weak_compositions(total: int, parts: int):
    # lexicographic order
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_sigma(s: int, d: int) -> List[Tuple[int, ...]]:
    if s < 1:
        raise ValueError("sigma generators have length >= 1")
    if d % 2 == 0:
        return []
    total = (d + 1) // 2 - s
    if total < 0:
        return []
    return list(_weak_compositions(total, s))


def eta(s: int, d: int) -> int:
    if s < 1 or d < 0:
        raise ValueError("eta needs s >= 1 and d >= 0")
    if d % 2 == 0:
        return 0
    return comb((d - 1) // 2, s - 1)


def c_table(s_max: int, d_max: int) -> HilbertTable:
    """Dimensions of ker Sq^1 from the first-factor recurrence, for s <= s_max, d <= d_max."""
    if s_max < 0 or d_max < 0:
        raise ValueError("bounds must be nonnegative")
    c: HilbertTable = {}
    for s in range(s_max + 1):
        for d in range(d_max + 1):
            if s == 0 or d == 0:
                c[s, d] = 1 if (s, d) == (0, 0) else 0
                continue
            total = 0
            for r in range(1, s + 1):
                for a in range(1, d + 1):
                    e = eta(r, a)
                    if e:
                        total += e * c[s - r, d - a]
            c[s, d] = checked(total, (s, d))
    return c


def closed_c(s: int, d: int) -> int:
    """Closed forms of the dimension of ker Sq^1 in lengths 1, 2 and 3."""
    if s not in (1, 2, 3):
        raise ValueError(f"closed form known only for s in {{1, 2, 3}}, got {s}")
    even = d % 2 == 0
    if s == 1:
        return 0 if even else 1
    if s == 2:
        return d // 2 if even else (d - 1) // 2
    return d * (d - 2) // 4 if even else (d - 1) ** 2 // 4


def reduction_identity_holds(c: HilbertTable, s: int, d: int) -> bool:
    return c[s, d] + c[s, d + 1] == comb(d, s - 1)


@lru_cache(maxsize=None)
def sigma_words(s: int, d: int) -> Tuple[Element, ...]:
    """All products of sigma generators of total bidegree (s, d), the empty word at (0, 0).

    Words are built by choosing the first factor's bidegree and recursing on the rest.
    """
    if s == 0:
        return (Element.one(),) if d == 0 else ()
    out = []
    for r in range(1, s + 1):
        for a in range(1, d + 1):
            firsts = enumerate_sigma(r, a)
            if not firsts:
                continue
            rest = sigma_words(s - r, d - a)
            for ms in firsts:
                g = sigma(ms)
                out.extend(g * t for t in rest)
    return tuple(out)


@dataclass
class S0Cell:
    s: int
    d: int
    kernel_dim: int
    n_sigma: int
    sigma_rank: int
    eta: int
    word_span_dim: int
    sigmas_in_kernel: bool
    words_span_kernel: bool

    @property
    def passed(self) -> bool:
        return (
            self.sigmas_in_kernel
            and self.sigma_rank == self.n_sigma == self.eta
            and self.words_span_kernel
        )


@dataclass
class S0Report:
    s_max: int
    d_max: int
    cells: List[S0Cell] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def failures(self) -> List[S0Cell]:
        return [c for c in self.cells if not c.passed]


def verify_S0(s_max: int, d_max: int) -> S0Report:
    """Check that the sigma generators lie in, are independent in, and generate ker Sq^1."""
    report = S0Report(s_max, d_max)
    for s in range(0, s_max + 1):
        for d in range(0, d_max + 1):
            K = delta_basis(0, s, d)
            descs = enumerate_sigma(s, d) if s >= 1 else []
            gens = [sigma(ms) for ms in descs]
            words = SubspaceBasis.from_elements((s, d), sigma_words(s, d))
            report.cells.append(
                S0Cell(
                    s=s,
                    d=d,
                    kernel_dim=K.dim,
                    n_sigma=len(gens),
                    sigma_rank=span_dimension(gens, (s, d)),
                    eta=eta(s, d) if s >= 1 else 0,
                    word_span_dim=words.dim,
                    sigmas_in_kernel=all(g in K for g in gens),
                    words_span_kernel=words == K,
                )
            )
    return report
