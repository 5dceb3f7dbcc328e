"""The free associative algebra F_2<g_1, g_2, ...> on generators of degree 1, 2, ....

A monomial is a tuple of positive integers ``(i_1, ..., i_s)``; it has length
``s`` and degree ``i_1 + ... + i_s``.  The empty tuple is the unit.  An
:class:`Element` is a finite set of monomials, each present with coefficient 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

Monomial = Tuple[int, ...]
Bidegree = Tuple[int, int]

UNIT: Monomial = ()


def bidegree(m: Monomial) -> Bidegree:
    return (len(m), sum(m))


def term_key(m: Monomial):
    """Sort key: bidegree first (length, then degree), lexicographic within a bidegree."""
    return (len(m), sum(m), m)


def weight(m: Monomial) -> int:
    """Number of odd indices of ``m``."""
    return sum(i & 1 for i in m)


@lru_cache(maxsize=None)
def basis(s: int, d: int) -> Tuple[Monomial, ...]:
    """All compositions of ``d`` into ``s`` positive parts, in lexicographic order.

    ``basis(0, 0)`` is ``((),)``; the result is empty when no composition exists.
    """
    if s < 0 or d < 0:
        return ()
    if s == 0:
        return ((),) if d == 0 else ()
    if d < s:
        return ()
    out: List[Monomial] = []
    for first in range(1, d - s + 2):
        for rest in basis(s - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(s: int, d: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(basis(s, d))}


class Element:
    """A mod-2 linear combination of monomials.  Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[Monomial] = ()):
        acc: set = set()
        for t in terms:
            t = tuple(t)
            if any((not isinstance(i, int)) or i < 1 for i in t):
                raise ValueError(f"monomial indices must be positive integers: {t!r}")
            acc ^= {t}
        self._terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "Element":
        # trusted constructor: terms already a validated frozenset
        e = object.__new__(cls)
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def monomial(cls, *indices: int) -> "Element":
        return cls([indices])

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw(frozenset())

    @classmethod
    def one(cls) -> "Element":
        return cls._raw(frozenset([UNIT]))

    @property
    def terms(self) -> frozenset:
        return self._terms

    def sorted_terms(self) -> List[Monomial]:
        return sorted(self._terms, key=term_key)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, m) -> bool:
        return tuple(m) in self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            if other == 0:
                return self
            return NotImplemented
        return Element._raw(self._terms ^ other._terms)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    def bidegrees(self) -> set:
        return {bidegree(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self) -> Bidegree:
        """The common bidegree of a nonzero homogeneous element."""
        degs = self.bidegrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous and nonzero: {self}")
        return next(iter(degs))


def multiply(a: Element, b: Element) -> Element:
    """Product in the free algebra: bilinear extension of concatenation."""
    acc: set = set()
    for x in a.terms:
        for y in b.terms:
            acc ^= {x + y}
    return Element._raw(frozenset(acc))


def bidegree_components(a: Element) -> Dict[Bidegree, Element]:
    parts: Dict[Bidegree, set] = {}
    for m in a.terms:
        parts.setdefault(bidegree(m), set()).add(m)
    return {bd: Element._raw(frozenset(ts)) for bd, ts in sorted(parts.items())}


def weight_component(a: Element, k: int) -> Element:
    return Element._raw(frozenset(m for m in a.terms if weight(m) == k))


def transduce(a: Element, mu: Monomial) -> Element:
    """Left cofactor of ``mu`` in ``a``.

    Writes ``a = a0 + a* . mu`` where ``mu`` is not a suffix of any term of
    ``a0`` and returns ``a*``.  ``mu`` must be nonempty.
    """
    mu = tuple(mu)
    if not mu:
        raise ValueError("transduction needs a nonempty monomial")
    n = len(mu)
    return Element._raw(
        frozenset(m[:-n] for m in a.terms if len(m) >= n and m[-n:] == mu)
    )


def resolve_relation(pairs) -> Tuple[int, Dict[int, Element]]:
    """Extract an explicit dependence from a vanishing sum ``sum(a_i * b_i) == 0``.

    Returns ``(j, d)`` with ``a_j == sum(a_i * d[i] for i != j)``.  Indices are
    0-based.  ``j`` is the position of the ``b`` of least bidegree (length
    first, then degree; the last such on ties), and ``d[i]`` is ``b_i``
    transduced by the lexicographically least term of ``b_j``.
    """
    pairs = [(a, b) for a, b in pairs]
    if not pairs:
        raise ValueError("empty relation")
    total = Element.zero()
    for i, (a, b) in enumerate(pairs):
        if not b:
            raise ValueError(f"b_{i} is zero")
        if not (a.is_homogeneous() and b.is_homogeneous()):
            raise ValueError(f"pair {i} is not homogeneous")
        total = total + a * b
    if total:
        raise ValueError(f"sum of products is nonzero: {total}")

    j = 0
    for i, (_, b) in enumerate(pairs):
        if b.bidegree() <= pairs[j][1].bidegree():
            j = i
    mu = min(pairs[j][1].terms)
    # every b_i has length >= len(mu), so (a b_i)* = a (b_i)*; b_j* is the unit
    assert transduce(pairs[j][1], mu) == Element.one()
    cofactors = {i: transduce(b, mu) for i, (_, b) in enumerate(pairs) if i != j}
    return j, cofactors


# -- textual syntax ---------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def format_monomial(m: Monomial) -> str:
    return "[" + ",".join(str(i) for i in m) + "]"


def format_element(a: Element) -> str:
    if not a:
        return "0"
    return "+".join(format_monomial(m) for m in a.sorted_terms())


def parse_element(text: str) -> Element:
    """Parse ``[1,2]+[2,1]``, ``[]`` (the unit) or ``0``; whitespace is ignored.

    Repeated monomials cancel in pairs.
    """
    # keep original positions for error messages
    chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
    pos = 0

    def here() -> int:
        return chars[pos][0] if pos < len(chars) else len(text)

    def peek():
        return chars[pos][1] if pos < len(chars) else None

    if not chars:
        raise ParseError("empty input", 0)
    if len(chars) == 1 and chars[0][1] == "0":
        return Element.zero()

    terms: List[Monomial] = []
    while True:
        if peek() != "[":
            raise ParseError(f"expected '[' but found {peek()!r}", here())
        pos += 1
        idx: List[int] = []
        if peek() == "]":
            pos += 1
        else:
            while True:
                start = here()
                digits = ""
                while peek() is not None and peek().isdigit():
                    digits += peek()
                    pos += 1
                if not digits:
                    raise ParseError(f"expected an index but found {peek()!r}", here())
                value = int(digits)
                if value < 1:
                    raise ParseError("indices must be positive", start)
                idx.append(value)
                c, c_pos = peek(), here()
                pos += 1
                if c == "]":
                    break
                if c != ",":
                    raise ParseError(f"expected ',' or ']' but found {c!r}", c_pos)
        terms.append(tuple(idx))
        if peek() is None:
            break
        if peek() != "+":
            raise ParseError(f"expected '+' but found {peek()!r}", here())
        pos += 1
    return Element(terms)
