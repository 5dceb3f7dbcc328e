"""Right action of the Steenrod squares on the free algebra.

On a single generator ``(g_m)Sq^k = C(m-k, k) g_{m-k}``; products expand by
the Cartan formula ``(xy)Sq^k = sum_{i+j=k} (x)Sq^i (y)Sq^j``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Tuple

from .algebra import Element, Monomial, basis, basis_index
from .gf2 import Matrix


def binom_odd(n: int, r: int) -> bool:
    """Parity of C(n, r) for n >= 0: odd iff r is a bitwise submask of n."""
    if r < 0 or r > n:
        return False
    return (r & (n - r)) == 0


def sq_generator(m: int, k: int) -> Element:
    if m < 1:
        raise ValueError(f"generator index must be positive, got {m}")
    if k < 0:
        raise ValueError(f"square index must be nonnegative, got {k}")
    if k == 0:
        return Element.monomial(m)
    if m - k >= 1 and binom_odd(m - k, k):
        return Element.monomial(m - k)
    return Element.zero()


@lru_cache(maxsize=None)
def _gen_targets(m: int) -> Tuple[Tuple[int, int], ...]:
    # (k, m - k) for every k with (g_m)Sq^k nonzero
    return tuple((k, m - k) for k in range(0, m) if k == 0 or binom_odd(m - k, k))


@lru_cache(maxsize=1 << 16)
def sq_monomial(m: Monomial, k: int) -> frozenset:
    """Terms of ``(m)Sq^k``, peeling the first generator and recursing on the rest."""
    if k == 0:
        return frozenset([m])
    if not m:
        return frozenset()
    head, tail = m[0], m[1:]
    acc: set = set()
    for j, rest in _gen_targets(head):
        if j > k:
            break
        for t in sq_monomial(tail, k - j):
            w = (rest,) + t
            if w in acc:
                acc.remove(w)
            else:
                acc.add(w)
    return frozenset(acc)


def sq(a: Element, k: int) -> Element:
    if k < 0:
        raise ValueError(f"square index must be nonnegative, got {k}")
    if k == 0:
        return a
    acc: set = set()
    for m in a.terms:
        acc ^= sq_monomial(m, k)
    return Element._raw(frozenset(acc))


@lru_cache(maxsize=4096)
def sq_matrix(s: int, d: int, k: int) -> Matrix:
    """Matrix of ``Sq^k`` from the monomial basis of bidegree (s, d) to (s, d - k).

    Rows index the target basis, columns the source basis, both in canonical order.
    """
    source = basis(s, d)
    target = basis(s, d - k) if d - k >= 0 else ()
    index = basis_index(s, d - k) if target else {}
    rows = [0] * len(target)
    for col, m in enumerate(source):
        for t in sq_monomial(m, k):
            rows[index[t]] ^= 1 << col
    return Matrix(len(target), len(source), tuple(rows))


def cohomology_transpose(m: int, k: int) -> Element:
    """``(g_m)Sq^k`` read off as the transpose of ``Sq^k x^n = C(n, k) x^(n+k)`` on F_2[x].

    Independent of :func:`sq_generator`: uses exact binomials, and scans every
    source degree ``n >= 1`` whose image lands in degree ``m``.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1, k >= 0")
    out = Element.zero()
    for n in range(1, m + 1):
        if n + k == m and math.comb(n, k) % 2 == 1:
            out = out + Element.monomial(n)
    return out


def cohomology_action_transpose(mono: Monomial, k: int) -> Element:
    """``(mono)Sq^k`` computed by dualizing the cohomology Cartan action.

    The coefficient of a target word ``t`` is the coefficient of ``x^mono`` in
    ``Sq^k(x_1^t_1 ... x_s^t_s) = sum_e prod C(t_j, e_j) x^(t+e)``.  This is a
    brute-force oracle for :func:`sq`, quadratic in the basis sizes.
    """
    s, d = len(mono), sum(mono)
    if k == 0:
        return Element([mono])
    out = []
    for t in basis(s, d - k) if d - k >= 0 else ():
        e = [mi - ti for mi, ti in zip(mono, t)]
        if any(x < 0 for x in e):
            continue
        if all(math.comb(ti, ei) % 2 for ti, ei in zip(t, e)):
            out.append(t)
    return Element(out)


def sq_composite(a: Element, ks) -> Element:
    """Apply ``Sq^k1`` then ``Sq^k2`` ... (right action: ``(a)Sq^k1 Sq^k2``)."""
    for k in ks:
        a = sq(a, k)
    return a
