"""Brute-force references that share no code path with the package internals.

Everything here works on plain sets/tuples and ``math.comb``: the Steenrod
action is the transpose of the cohomology action on polynomials, and kernels
are found by enumerating every vector of a small space.
"""

from itertools import combinations
from math import comb


def compositions(s, d, least=1):
    """Ordered tuples of ``s`` integers >= ``least`` summing to ``d``."""
    if s == 0:
        return [()] if d == 0 else []
    return [
        (first,) + rest
        for first in range(least, d - least * (s - 1) + 1)
        for rest in compositions(s - 1, d - first, least)
    ]


def coh_sq(exps, k):
    """Sq^k on x_1^e_1 ... x_s^e_s in cohomology: exponent tuples with odd coefficient."""
    out = set()
    for split in compositions(len(exps), k, least=0):
        coeff = 1
        for e, j in zip(exps, split):
            coeff *= comb(e, j)
        if coeff % 2:
            out ^= {tuple(e + j for e, j in zip(exps, split))}
    return out


_dual_tables = {}


def _dual_table(s, d, k):
    # word of bidegree (s, d) -> set of t with x^word in Sq^k x^t
    key = (s, d, k)
    if key not in _dual_tables:
        table = {}
        for t in compositions(s, d - k) if d >= k else ():
            for w in coh_sq(t, k):
                table.setdefault(w, set()).add(t)
        _dual_tables[key] = table
    return _dual_tables[key]


def hom_sq(word, k):
    """(word)Sq^k by duality: the targets t whose cohomology image Sq^k x^t hits x^word."""
    if k == 0:
        return {word}
    return set(_dual_table(len(word), sum(word), k).get(word, ()))


def hom_sq_vec(vec, k):
    out = set()
    for w in vec:
        out ^= hom_sq(w, k)
    return frozenset(out)


def all_vectors(s, d):
    mons = compositions(s, d)
    for r in range(len(mons) + 1):
        for sub in combinations(mons, r):
            yield frozenset(sub)


def brute_kernel_dim(s, d, squares):
    """dim of the common kernel of the given squares on bidegree (s, d), by enumeration."""
    count = sum(1 for v in all_vectors(s, d) if all(not hom_sq_vec(v, k) for k in squares))
    assert count & (count - 1) == 0
    return count.bit_length() - 1


def brute_image_dim(s, d, k):
    """dim of the image of Sq^k from (s, d + k) into (s, d), by enumeration of the source."""
    images = {hom_sq_vec(v, k) for v in all_vectors(s, d + k)}
    return len(images).bit_length() - 1


def brute_span(vectors):
    """All GF(2) combinations of a list of frozensets."""
    span = {frozenset()}
    for v in vectors:
        span |= {x ^ v for x in span}
    return span
