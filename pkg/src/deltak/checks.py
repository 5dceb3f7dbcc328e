"""Named verification suites driven by ``deltak verify``.

Each suite takes the bounds ``(s_max, d_max)`` and returns a
:class:`SuiteResult`; a suite passes only if every check in it holds exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Optional

from .algebra import Element, Monomial, basis, multiply, resolve_relation, transduce
from .annihilated import delta_basis, image_sq1_basis
from .delta0 import c_table, closed_c, verify_S0
from .steenrod import cohomology_transpose, sq, sq_generator, sq_monomial


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checked} checks{tail}"


def random_monomial(rng: random.Random, s: int, d: int) -> Monomial:
    mons = basis(s, d)
    return rng.choice(mons) if mons else ()


def random_homogeneous(rng: random.Random, s: int, d: int, max_terms: int = 4) -> Element:
    mons = basis(s, d)
    if not mons:
        return Element.zero()
    n = rng.randint(1, min(max_terms, len(mons)))
    return Element(rng.sample(mons, n))


def random_bidegree(rng: random.Random, s_max: int, d_max: int, s_min: int = 0):
    s = rng.randint(s_min, s_max)
    d = rng.randint(s, max(s, d_max))
    return s, d


def _full_bases(s_max: Optional[int], d_max: int):
    for d in range(d_max + 1):
        top = d if s_max is None else min(s_max, d)
        for s in range(0, top + 1):
            yield from basis(s, d)


def suite_action_oracle(s_max: int, d_max: int) -> SuiteResult:
    m_max, k_max = max(32, d_max), max(16, d_max // 2)
    bad = [
        (m, k)
        for m in range(1, m_max + 1)
        for k in range(k_max + 1)
        if sq_generator(m, k) != cohomology_transpose(m, k)
    ]
    return SuiteResult("action-oracle", not bad, m_max * (k_max + 1), f"first mismatch {bad[0]}" if bad else "")


def suite_instability(s_max: int, d_max: int) -> SuiteResult:
    n, bad = 0, None
    for m in _full_bases(None, d_max):
        d = sum(m)
        for k in range(d // 2 + 1, d + 1):
            n += 1
            if sq_monomial(m, k):
                bad = bad or (m, k)
    return SuiteResult("instability", bad is None, n, f"{bad[0]} Sq^{bad[1]} != 0" if bad else "")


def suite_sq1_differential(s_max: int, d_max: int) -> SuiteResult:
    n, bad = 0, None
    for m in _full_bases(None, d_max):
        n += 1
        if sq(sq(Element([m]), 1), 1):
            bad = bad or m
    return SuiteResult("sq1-differential", bad is None, n, f"at {bad}" if bad else "")


def suite_ker_eq_im(s_max: int, d_max: int) -> SuiteResult:
    bad = [
        (s, d)
        for s in range(1, s_max + 1)
        for d in range(d_max + 1)
        if delta_basis(0, s, d) != image_sq1_basis(s, d)
    ]
    return SuiteResult("ker-eq-im", not bad, s_max * (d_max + 1), f"differ at {bad[0]}" if bad else "")


def suite_s0(s_max: int, d_max: int) -> SuiteResult:
    report = verify_S0(s_max, d_max)
    fails = report.failures()
    detail = f"first failure at {(fails[0].s, fails[0].d)}" if fails else ""
    return SuiteResult("S0", not fails, len(report.cells), detail)


def suite_recurrence(s_max: int, d_max: int) -> SuiteResult:
    c = c_table(s_max, d_max)
    bad = [bd for bd, v in c.items() if delta_basis(0, *bd).dim != v]
    bad += [
        (s, d)
        for s in (1, 2, 3)
        if s <= s_max
        for d in range(d_max + 1)
        if closed_c(s, d) != c[s, d]
    ]
    return SuiteResult("recurrence", not bad, len(c), f"mismatch at {bad[0]}" if bad else "")


def suite_reduction_formula(s_max: int, d_max: int) -> SuiteResult:
    c = c_table(s_max, d_max + 1)
    bad = [
        (s, d)
        for s in range(1, s_max + 1)
        for d in range(d_max + 1)
        if c[s, d] + c[s, d + 1] != comb(d, s - 1)
    ]
    return SuiteResult("reduction-formula", not bad, s_max * (d_max + 1), f"fails at {bad[0]}" if bad else "")


def suite_transduction(s_max: int, d_max: int, trials: int = 1000, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    bad = None
    for _ in range(trials):
        mu = random_monomial(rng, *random_bidegree(rng, max(1, s_max), max(1, d_max), s_min=1))
        a = Element.zero()
        for _ in range(rng.randint(0, 3)):
            a = a + random_homogeneous(rng, *random_bidegree(rng, s_max + 1, d_max + 2))
        # a sprinkle of terms that do end in mu
        if rng.random() < 0.7:
            a = a + multiply(random_homogeneous(rng, *random_bidegree(rng, 2, 4)), Element([mu]))
        star = transduce(a, mu)
        rest = a + star * Element([mu])
        if any(len(m) >= len(mu) and m[-len(mu):] == mu for m in rest.terms):
            bad = bad or ("reconstruction", a, mu)
        # multiplicativity when len(b) >= len(mu)
        x = random_homogeneous(rng, *random_bidegree(rng, 2, 5))
        ps = rng.randint(0, 2)
        pd = ps + (rng.randint(0, 4) if ps else 0)
        y = random_homogeneous(rng, ps + len(mu), pd + sum(mu))
        if rng.random() < 0.5:
            y = y + multiply(random_homogeneous(rng, ps, pd), Element([mu]))
        if transduce(x * y, mu) != x * transduce(y, mu):
            bad = bad or ("multiplicativity", x, y, mu)
    return SuiteResult("transduction", bad is None, 2 * trials, f"{bad[0]} fails for {bad[1:]}" if bad else "")


def constructed_relation(rng: random.Random, n: int):
    """A relation ``sum a_i b_i == 0`` with every ``b_i`` nonzero, all homogeneous.

    Built as ``a_n = sum_{i<n} a_i c_i`` and ``b_i = c_i e``, ``b_n = e``.
    """
    S = rng.randint(2, 4)
    D = rng.randint(S + 1, S + 5)
    e = random_homogeneous(rng, *random_bidegree(rng, 2, 4, s_min=1))
    pairs = []
    a_n = Element.zero()
    for _ in range(n - 1):
        r = rng.randint(0, S - 1)
        a_deg = rng.randint(r, r + D - S) if r else 0
        a = random_homogeneous(rng, r, a_deg)
        c = random_homogeneous(rng, S - r, D - a_deg)
        a_n = a_n + a * c
        pairs.append((a, c * e))
    pairs.append((a_n, e))
    rng.shuffle(pairs)
    return pairs


def suite_resolve(s_max: int, d_max: int, trials: int = 100, seed: int = 1) -> SuiteResult:
    rng = random.Random(seed)
    bad = None
    for _ in range(trials):
        pairs = constructed_relation(rng, rng.randint(2, 5))
        j, cof = resolve_relation(pairs)
        rhs = Element.zero()
        for i, dvec in cof.items():
            rhs = rhs + pairs[i][0] * dvec
        if rhs != pairs[j][0]:
            bad = bad or pairs
    return SuiteResult("resolve", bad is None, trials)


def suite_adem_spot(s_max: int, d_max: int) -> SuiteResult:
    n, bad = 0, None
    for m in _full_bases(None, d_max):
        x = Element([m])
        n += 1
        checks = (
            ("Sq1Sq1=0", sq(sq(x, 1), 1), Element.zero()),
            ("Sq1Sq2=Sq3", sq(sq(x, 1), 2), sq(x, 3)),
            ("Sq2Sq2=Sq3Sq1", sq(sq(x, 2), 2), sq(sq(x, 3), 1)),
        )
        for label, lhs, rhs in checks:
            if lhs != rhs:
                bad = bad or (label, m)
    return SuiteResult("adem-spot", bad is None, n, f"{bad[0]} fails on {bad[1]}" if bad else "")


SUITES: Dict[str, Callable[[int, int], SuiteResult]] = {
    "action-oracle": suite_action_oracle,
    "instability": suite_instability,
    "sq1-differential": suite_sq1_differential,
    "ker-eq-im": suite_ker_eq_im,
    "S0": suite_s0,
    "recurrence": suite_recurrence,
    "reduction-formula": suite_reduction_formula,
    "transduction": suite_transduction,
    "resolve": suite_resolve,
    "adem-spot": suite_adem_spot,
}


def run_suites(names: List[str], s_max: int, d_max: int) -> List[SuiteResult]:
    return [SUITES[name](s_max, d_max) for name in names]
