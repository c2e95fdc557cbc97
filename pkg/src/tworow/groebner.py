"""Buchberger's algorithm, normal forms, and quotient dimensions over Q.

Instance sizes in this package are tiny (at most eight variables and a
few dozen generators), so the implementation favours clarity: plain
Buchberger with the two classical pair-pruning criteria, the normal
selection strategy, and monic intermediate reducers to keep rational
coefficients small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .polynomials import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    MPoly,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic generators, no generator's monomial
    divisible by another generator's leading monomial."""

    generators: tuple[MPoly, ...]
    order: MonomialOrder
    reduced: bool = True

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]


def _reduce_full(f: MPoly, reducers: Sequence[MPoly], order: MonomialOrder) -> MPoly:
    """Remainder of f on full division by the reducers: no monomial of the
    result is divisible by any reducer's leading monomial."""
    lead = [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in reducers]
    p = f
    remainder = MPoly.zero(f.nvars)
    while p:
        lm = p.leading_monomial(order)
        lc = p.terms[lm]
        for glm, glc, g in lead:
            if monomial_divides(glm, lm):
                p = p - g.times_monomial(monomial_div(lm, glm), lc / glc)
                break
        else:
            head = MPoly.from_monomial(lm, lc)
            remainder = remainder + head
            p = p - head
    return remainder


def _s_polynomial(f: MPoly, g: MPoly, order: MonomialOrder) -> MPoly:
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    l = monomial_lcm(lf, lg)
    return f.times_monomial(monomial_div(l, lf), 1 / f.leading_coefficient(order)) - g.times_monomial(
        monomial_div(l, lg), 1 / g.leading_coefficient(order)
    )


def buchberger(
    generators: Sequence[MPoly], order: MonomialOrder = DEFAULT_ORDER
) -> GroebnerBasis:
    """Compute the reduced Groebner basis of the ideal the generators span.

    Pair selection follows the normal strategy (smallest lcm degree
    first, ties broken by the monomial order on the lcm).  A pair is
    skipped when the leading monomials are coprime, or when a third
    basis element divides the pair's lcm and both of its pairs with the
    current pair's members have already been treated.
    """
    if not generators:
        raise ValueError("empty generator list")
    nvars = generators[0].nvars
    basis = []
    for g in generators:
        if g.nvars != nvars:
            raise ValueError("generators live in different polynomial rings")
        if g:
            basis.append(g.monic(order))
    if not basis:
        # the zero ideal
        return GroebnerBasis(generators=(), order=order)

    lms = [g.leading_monomial(order) for g in basis]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(pair):
        l = monomial_lcm(lms[pair[0]], lms[pair[1]])
        return (monomial_degree(l), order.key(l))

    while pending:
        i, j = min(pending, key=pair_key)
        pending.remove((i, j))
        l = monomial_lcm(lms[i], lms[j])
        if l == monomial_mul(lms[i], lms[j]):
            continue  # coprime leading monomials
        skip = False
        for m in range(len(basis)):
            if m in (i, j) or not monomial_divides(lms[m], l):
                continue
            if (min(i, m), max(i, m)) not in pending and (min(j, m), max(j, m)) not in pending:
                skip = True
                break
        if skip:
            continue
        remainder = _reduce_full(_s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            remainder = remainder.monic(order)
            basis.append(remainder)
            lms.append(remainder.leading_monomial(order))
            new = len(basis) - 1
            pending.update((m, new) for m in range(new))

    return _interreduce(basis, order)


def _interreduce(basis: list[MPoly], order: MonomialOrder) -> GroebnerBasis:
    # minimalize: drop a generator when another one's leading monomial
    # strictly divides its own (ties broken by position)
    lms = [g.leading_monomial(order) for g in basis]
    keep = []
    for i in range(len(basis)):
        covered = any(
            j != i
            and monomial_divides(lms[j], lms[i])
            and (lms[j] != lms[i] or j < i)
            for j in range(len(basis))
        )
        if not covered:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    # tail-reduce each against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            if not others:
                continue
            reduced = _reduce_full(minimal[i], others, order)
            if reduced != minimal[i]:
                changed = True
                if reduced:
                    minimal[i] = reduced.monic(order)
                else:
                    del minimal[i]
                    break
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(generators=tuple(minimal), order=order)


def normal_form(f: MPoly, basis: GroebnerBasis) -> MPoly:
    """The unique remainder of f modulo the Groebner basis; zero exactly
    when f lies in the ideal."""
    if basis.generators and f.nvars != basis.generators[0].nvars:
        raise ValueError("variable count mismatch with the basis")
    if not basis.generators:
        return f
    return _reduce_full(f, basis.generators, basis.order)


@dataclass(frozen=True)
class IdealComparison:
    equal: bool
    witness: Optional[MPoly] = None
    witness_side: Optional[str] = None  # "left" or "right": which input owns the witness


def ideal_equal(
    gens_a: Sequence[MPoly],
    gens_b: Sequence[MPoly],
    order: MonomialOrder = DEFAULT_ORDER,
) -> IdealComparison:
    """Decide whether two generator lists span the same ideal.

    On failure the witness is a generator of one side with a nonzero
    normal form against the other side's Groebner basis.
    """
    gb_a = buchberger(gens_a, order)
    gb_b = buchberger(gens_b, order)
    for g in gens_a:
        if g and normal_form(g, gb_b):
            return IdealComparison(equal=False, witness=g, witness_side="left")
    for g in gens_b:
        if g and normal_form(g, gb_a):
            return IdealComparison(equal=False, witness=g, witness_side="right")
    return IdealComparison(equal=True)


def quotient_dimension(
    generators: Sequence[MPoly], order: MonomialOrder = DEFAULT_ORDER
) -> tuple[Optional[int], list[Monomial]]:
    """Dimension of the quotient ring as a Q-vector space, with the list
    of standard monomials (those not divisible by any leading monomial
    of the Groebner basis).  Returns (None, []) when the quotient is
    infinite-dimensional."""
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators, order)
    order = gb.order
    if not gb.generators:
        nvars = 0
    else:
        nvars = gb.generators[0].nvars
    lms = gb.leading_monomials()
    if any(sum(lm) == 0 for lm in lms):
        return 0, []  # the unit ideal
    if not gb.generators:
        return (1, [()]) if nvars == 0 else (None, [])
    # finite iff every variable appears as a pure power among the leading monomials
    bounds = []
    for v in range(nvars):
        pure = [
            lm[v]
            for lm in lms
            if lm[v] > 0 and all(e == 0 for i, e in enumerate(lm) if i != v)
        ]
        if not pure:
            return None, []
        bounds.append(min(pure))
    standard = []
    for mono in product(*(range(b) for b in bounds)):
        if not any(monomial_divides(lm, mono) for lm in lms):
            standard.append(mono)
    standard.sort(key=order.key)
    return len(standard), standard
