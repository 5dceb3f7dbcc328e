"""Kernels of Steenrod squares on the bigraded pieces of the free algebra.

``delta_basis(k, s, d)`` is the subspace of bidegree (s, d) killed by
``Sq^1, Sq^2, Sq^4, ..., Sq^(2^k)``.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Dict, Optional, Tuple

from .algebra import basis, format_element, parse_element
from .gf2 import Matrix, SubspaceBasis, column_space, kernel, stack
from .steenrod import sq_matrix

log = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1
CACHE_ENV = "DELTAK_CACHE_DIR"


def enumerate_basis(s: int, d: int):
    return basis(s, d)


def _kernel_of(s: int, d: int, squares) -> SubspaceBasis:
    n = len(basis(s, d))
    mats = [sq_matrix(s, d, k) for k in squares if 2 * k <= d]
    if not mats:
        return SubspaceBasis.whole((s, d))
    if n == 0:
        return SubspaceBasis((s, d), ())
    return SubspaceBasis((s, d), tuple(kernel(stack(mats))))


class BasisCache:
    """Bidegree-keyed store of computed ``delta_basis`` results.

    Reads are lock-free dict lookups; inserts take a lock and keep the first
    value written.  With ``directory`` set, entries also persist as one JSON
    file per (k, s, d) holding the echelon basis in element syntax.
    """

    def __init__(self, directory: Optional[os.PathLike] = None):
        self.directory = Path(directory) if directory is not None else None
        self._mem: Dict[Tuple[int, int, int], SubspaceBasis] = {}
        self._lock = threading.Lock()
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)

    def path(self, k: int, s: int, d: int) -> Optional[Path]:
        if self.directory is None:
            return None
        return self.directory / f"delta_k{k}_s{s}_d{d}.json"

    def get(self, k: int, s: int, d: int) -> Optional[SubspaceBasis]:
        hit = self._mem.get((k, s, d))
        if hit is not None:
            return hit
        p = self.path(k, s, d)
        if p is None or not p.exists():
            return None
        try:
            doc = json.loads(p.read_text())
        except (OSError, ValueError):
            log.warning("unreadable cache entry %s; recomputing", p)
            return None
        if doc.get("version") != CACHE_FORMAT_VERSION or [doc.get("k"), doc.get("s"), doc.get("d")] != [k, s, d]:
            log.info("stale cache entry %s; recomputing", p)
            return None
        try:
            B = SubspaceBasis.from_elements((s, d), (parse_element(t) for t in doc["basis"]))
        except (KeyError, TypeError, ValueError):
            log.warning("malformed cache entry %s; recomputing", p)
            return None
        with self._lock:
            return self._mem.setdefault((k, s, d), B)

    def put(self, k: int, s: int, d: int, B: SubspaceBasis) -> SubspaceBasis:
        with self._lock:
            B = self._mem.setdefault((k, s, d), B)
        p = self.path(k, s, d)
        if p is not None and not p.exists():
            doc = {
                "version": CACHE_FORMAT_VERSION,
                "k": k,
                "s": s,
                "d": d,
                "basis": [format_element(v) for v in B.vectors],
            }
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh)
            os.replace(tmp, p)
        return B

    def clear(self) -> None:
        with self._lock:
            self._mem.clear()


_default_cache = BasisCache()


def default_cache() -> BasisCache:
    return _default_cache


def set_default_cache(cache: BasisCache) -> None:
    global _default_cache
    _default_cache = cache


def delta_basis(k: int, s: int, d: int, cache: Optional[BasisCache] = None) -> SubspaceBasis:
    if k < 0:
        raise ValueError(f"level must be nonnegative, got {k}")
    cache = cache if cache is not None else _default_cache
    hit = cache.get(k, s, d)
    if hit is not None:
        return hit
    B = _kernel_of(s, d, [1 << i for i in range(k + 1)])
    return cache.put(k, s, d, B)


def image_sq1_basis(s: int, d: int) -> SubspaceBasis:
    """Image of ``Sq^1`` from bidegree (s, d + 1) into (s, d)."""
    if s < 1:
        raise ValueError("image of Sq^1 is only considered for s >= 1")
    M: Matrix = sq_matrix(s, d + 1, 1)
    return SubspaceBasis((s, d), tuple(column_space(M)))


def full_annihilated_basis(s: int, d: int) -> SubspaceBasis:
    """Elements of bidegree (s, d) killed by every ``Sq^j`` with j > 0.

    Computed twice, over all ``j <= d/2`` and over powers of two only; the
    two must agree since the squares ``Sq^(2^i)`` generate the algebra.
    """
    every = _kernel_of(s, d, range(1, d // 2 + 1))
    powers = _kernel_of(s, d, [1 << i for i in range(max(d, 1).bit_length()) if 1 << i <= d // 2])
    if every != powers:
        raise ArithmeticError(f"annihilator computations disagree at {(s, d)}")
    return every
