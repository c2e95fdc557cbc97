"""Fixed points, presentation ideals, localization, and straightening for
two-row Springer varieties.

A context (n, k) fixes the nilpotent shape: two Jordan blocks of sizes
n - k >= k.  The circle acting is the subgroup diag(g, g^2, ..., g^n) of
the diagonal torus, so restriction to a fixed point w sends the degree
generator x_i to w(i) * t and the equivariant parameter t to itself.

Three presentation ideals are constructed:

* ``equivariant_ideal``: the linear sum relation, one quadratic relation
  per consecutive variable pair, and one (k+1)-fold product relation per
  (k+1)-subset of indices; all live in Q[x1..xn, t].
* ``ordinary_ideal``: the t = 0 shadow, generated by the variable sum,
  all squares, and all squarefree (k+1)-fold products in Q[x1..xn].
* ``tanisaki_ideal``: the classical elementary-symmetric presentation of
  the same ordinary cohomology ring.

Straightening rewrites any polynomial, modulo the equivariant ideal, as
a Q[t]-combination of the squarefree monomials indexed by standard
tableaux; it is implemented twice, once by exact linear algebra against
the localized images of the basis (``straighten_by_solve``) and once by
the inductive rewriting procedure (``straighten_by_rewrite``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Mapping, Optional

from .linalg import SparseExactRREF, integer_det_bareiss, solve_rational
from .polynomials import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    MPoly,
    elementary_symmetric,
    monomial_mul,
)
from .tableaux import (
    TwoRowFilling,
    enumerate_standard_tableaux,
    filling_from_monomial,
    is_standard,
    monomial_from_filling,
)
from .tpoly import TPoly
from . import groebner

SAMPLE_SEED = 1729  # seeds the deterministic straightening spot-checks


class ConsistencyError(RuntimeError):
    """An exact computation contradicted something the theory guarantees."""


@dataclass(frozen=True)
class SpringerContext:
    """The pair (n, k) with 0 <= k <= n/2 and n >= 1."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got n={self.n}")
        if not 0 <= self.k or 2 * self.k > self.n:
            raise ValueError(f"need 0 <= k <= n/2, got n={self.n}, k={self.k}")

    @property
    def nvars(self) -> int:
        """Variables of the equivariant ring: x1..xn and t."""
        return self.n + 1

    def x(self, i: int) -> MPoly:
        """The generator x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return MPoly.variable(self.nvars, i - 1)

    def t(self) -> MPoly:
        return MPoly.variable(self.nvars, self.n)


@dataclass(frozen=True)
class FixedPoint:
    """A circle-fixed flag, recorded as the index list ell and the
    one-line permutation w it determines."""

    ell: tuple[int, ...]
    w: tuple[int, ...]

    def value(self, i: int) -> int:
        """w(i), 1-based."""
        return self.w[i - 1]


def build_fixed_point(ctx: SpringerContext, ell: Iterable[int]) -> FixedPoint:
    """The fixed point for a strictly increasing index list of length k:
    position ell_j holds n - k + j, and the remaining positions hold
    1..n-k in increasing order."""
    ell = tuple(ell)
    if len(ell) != ctx.k:
        raise ValueError(f"expected {ctx.k} indices, got {len(ell)}")
    if any(not 1 <= e <= ctx.n for e in ell):
        raise ValueError(f"indices must lie in 1..{ctx.n}")
    if any(ell[i] >= ell[i + 1] for i in range(len(ell) - 1)):
        raise ValueError("indices must be strictly increasing")
    w = [0] * ctx.n
    for j, pos in enumerate(ell, start=1):
        w[pos - 1] = ctx.n - ctx.k + j
    small = 1
    for i in range(ctx.n):
        if w[i] == 0:
            w[i] = small
            small += 1
    return FixedPoint(ell=ell, w=tuple(w))


@lru_cache(maxsize=None)
def fixed_points(ctx: SpringerContext) -> tuple[FixedPoint, ...]:
    """All C(n, k) fixed points, ordered lexicographically by ell."""
    return tuple(
        build_fixed_point(ctx, ell)
        for ell in combinations(range(1, ctx.n + 1), ctx.k)
    )


def _flag_is_invariant(w: tuple[int, ...], n: int, k: int) -> bool:
    # the nilpotent kills e_1 and e_{n-k+1} and shifts every other e_i
    # down by one; a coordinate flag survives iff each shifted vector
    # already appeared earlier in the flag
    position = {v: i for i, v in enumerate(w, start=1)}
    for i, v in enumerate(w, start=1):
        if v == 1 or v == n - k + 1:
            continue
        if position[v - 1] > i:
            return False
    return True


def fixed_points_bruteforce(ctx: SpringerContext) -> list[tuple[int, ...]]:
    """All permutations whose coordinate flag the nilpotent preserves,
    found by filtering the full symmetric group."""
    return sorted(
        w
        for w in permutations(range(1, ctx.n + 1))
        if _flag_is_invariant(w, ctx.n, ctx.k)
    )


# -- presentation ideals -----------------------------------------------------


@dataclass(frozen=True)
class IdealPresentation:
    """A named generator list; ``labels`` parallels ``generators``."""

    name: str  # "I", "J", or "tanisaki"
    context: SpringerContext
    generators: tuple[MPoly, ...]
    labels: tuple[str, ...]

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars


def _linear_relation(ctx: SpringerContext) -> MPoly:
    total = MPoly.zero(ctx.nvars)
    for i in range(1, ctx.n + 1):
        total = total + ctx.x(i)
    return total - ctx.t() * Fraction(ctx.n * (ctx.n + 1), 2)


def _pair_relation(ctx: SpringerContext, i: int) -> MPoly:
    """The quadratic relation tying x_i to x_{i-1}, expanded."""
    xi = ctx.x(i)
    xprev = ctx.x(i - 1) if i > 1 else MPoly.zero(ctx.nvars)
    t = ctx.t()
    return (xi + xprev - (ctx.n - ctx.k + i) * t) * (xi - xprev - t)


def _product_relation(ctx: SpringerContext, indices: tuple[int, ...]) -> MPoly:
    """The product of (x_{i_j} - (i_j - j) t) over the chosen indices,
    j counting from zero, expanded."""
    t = ctx.t()
    result = MPoly.one(ctx.nvars)
    for j, idx in enumerate(indices):
        result = result * (ctx.x(idx) - (idx - j) * t)
    return result


@lru_cache(maxsize=None)
def equivariant_ideal(ctx: SpringerContext) -> IdealPresentation:
    """The equivariant presentation ideal I in Q[x1..xn, t]."""
    gens = [_linear_relation(ctx)]
    labels = ["linear"]
    for i in range(1, ctx.n + 1):
        gens.append(_pair_relation(ctx, i))
        labels.append(f"quadratic i={i}")
    for subset in combinations(range(1, ctx.n + 1), ctx.k + 1):
        gens.append(_product_relation(ctx, subset))
        labels.append("product i=" + ",".join(map(str, subset)))
    return IdealPresentation(
        name="I", context=ctx, generators=tuple(gens), labels=tuple(labels)
    )


@lru_cache(maxsize=None)
def ordinary_ideal(ctx: SpringerContext) -> IdealPresentation:
    """The ordinary presentation ideal J in Q[x1..xn]."""
    n = ctx.n
    gens = [elementary_symmetric(n, 1, range(n))]
    labels = ["linear"]
    for i in range(1, n + 1):
        gens.append(MPoly.variable(n, i - 1) ** 2)
        labels.append(f"square i={i}")
    for subset in combinations(range(n), ctx.k + 1):
        gens.append(elementary_symmetric(n, ctx.k + 1, subset))
        labels.append("product i=" + ",".join(str(p + 1) for p in subset))
    return IdealPresentation(
        name="J", context=ctx, generators=tuple(gens), labels=tuple(labels)
    )


@lru_cache(maxsize=None)
def tanisaki_ideal(ctx: SpringerContext) -> IdealPresentation:
    """Tanisaki's elementary-symmetric presentation ideal for the two-row
    shape: e1 of everything, e2 of every (n-1)-subset, and e_{k+1} of
    every (k+1)-subset."""
    n = ctx.n
    gens = [elementary_symmetric(n, 1, range(n))]
    labels = ["e1"]
    for subset in combinations(range(n), n - 1):
        gens.append(elementary_symmetric(n, 2, subset))
        labels.append("e2 i=" + ",".join(str(p + 1) for p in subset))
    for subset in combinations(range(n), ctx.k + 1):
        gens.append(elementary_symmetric(n, ctx.k + 1, subset))
        labels.append(f"e{ctx.k + 1} i=" + ",".join(str(p + 1) for p in subset))
    return IdealPresentation(
        name="tanisaki", context=ctx, generators=tuple(gens), labels=tuple(labels)
    )


def ideal_by_name(ctx: SpringerContext, name: str) -> IdealPresentation:
    table = {"I": equivariant_ideal, "J": ordinary_ideal, "tanisaki": tanisaki_ideal}
    if name not in table:
        raise ValueError(f"unknown ideal {name!r}; expected I, J, or tanisaki")
    return table[name](ctx)


def specialized_ordinary_generators(ctx: SpringerContext) -> list[MPoly]:
    """The equivariant generators with t set to zero, in Q[x1..xn]."""
    return [
        g.eval_last_var_zero() for g in equivariant_ideal(ctx).generators
    ]


# -- localization ------------------------------------------------------------


def localize(f: MPoly, w: FixedPoint) -> TPoly:
    """Restrict a class to a fixed point: x_i maps to w(i) * t, t to t.
    Homogeneous degree-d input lands on a multiple of t^d."""
    n = len(w.w)
    if f.nvars != n + 1:
        raise ValueError(f"expected a polynomial in {n + 1} variables, got {f.nvars}")
    coeffs: dict[int, Fraction] = {}
    for mono, c in f.terms.items():
        weight = 1
        for i in range(n):
            e = mono[i]
            if e:
                weight *= w.w[i] ** e
        d = sum(mono)
        coeffs[d] = coeffs.get(d, Fraction(0)) + c * weight
    if not coeffs:
        return TPoly.zero()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return TPoly(out)


def localize_all(f: MPoly, ctx: SpringerContext) -> dict[FixedPoint, TPoly]:
    """The full localized class: one Q[t] value per fixed point."""
    return {w: localize(f, w) for w in fixed_points(ctx)}


@dataclass(frozen=True)
class RelationCheck:
    generators_checked: int
    fixed_points_checked: int
    failures: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_relations(ctx: SpringerContext) -> RelationCheck:
    """Every generator of the equivariant ideal must localize to zero at
    every fixed point; failures are reported, never raised."""
    ideal = equivariant_ideal(ctx)
    points = fixed_points(ctx)
    failures = []
    for label, g in zip(ideal.labels, ideal.generators):
        for w in points:
            if localize(g, w):
                failures.append((label, w.ell))
    return RelationCheck(
        generators_checked=len(ideal.generators),
        fixed_points_checked=len(points),
        failures=tuple(failures),
    )


# -- the square rewriting rule -----------------------------------------------


def square_reduction(ctx: SpringerContext, i: int) -> MPoly:
    """What x_i^2 equals modulo the ideal:
    (n-k+i+1) t x_i + t (x_1 + ... + x_{i-1}) - ((n-k+1) + ... + (n-k+i)) t^2.
    """
    if not 1 <= i <= ctx.n:
        raise ValueError(f"index {i} out of range 1..{ctx.n}")
    t = ctx.t()
    rhs = (ctx.n - ctx.k + i + 1) * (t * ctx.x(i))
    for p in range(1, i):
        rhs = rhs + t * ctx.x(p)
    total = sum(ctx.n - ctx.k + p for p in range(1, i + 1))
    return rhs - total * (t * t)


def verify_square_reduction(ctx: SpringerContext) -> bool:
    """The quadratic generators telescope: the i-th one equals
    (x_i^2 - rhs_i) - (x_{i-1}^2 - rhs_{i-1}) as an exact polynomial
    identity, with the i = 0 term zero.  This is what makes the square
    rewriting rule a consequence of the ideal."""
    previous = MPoly.zero(ctx.nvars)  # x_0^2 - rhs_0
    for i in range(1, ctx.n + 1):
        current = ctx.x(i) * ctx.x(i) - square_reduction(ctx, i)
        if _pair_relation(ctx, i) != current - previous:
            return False
        previous = current
    return True


# -- the straightening basis -------------------------------------------------


@lru_cache(maxsize=None)
def standard_monomial_basis(ctx: SpringerContext) -> tuple[TwoRowFilling, ...]:
    """Standard tableaux with bottom rows of size 0..k, ordered by bottom
    size then lexicographically; their monomials span the quotient as a
    Q[t]-module."""
    basis = []
    for ell in range(ctx.k + 1):
        basis.extend(enumerate_standard_tableaux(ctx.n, ell))
    return tuple(basis)


@dataclass(frozen=True)
class BasisMatrix:
    """Localized images of the basis monomials.

    Row w, column T holds the restriction of x_T at w, which is
    (product of w(j) over bottom entries j) * t^(size of bottom).  The
    determinant therefore factors as an integer times a power of t; a
    nonzero integer core is exactly linear independence over the
    fraction field of Q[t].
    """

    fixed_points: tuple[FixedPoint, ...]
    tableaux: tuple[TwoRowFilling, ...]
    entries: tuple[tuple[TPoly, ...], ...]
    integer_core: tuple[tuple[int, ...], ...]
    core_determinant: int
    determinant: TPoly


@lru_cache(maxsize=None)
def basis_image_matrix(ctx: SpringerContext) -> BasisMatrix:
    points = fixed_points(ctx)
    tableaux = standard_monomial_basis(ctx)
    if len(points) != len(tableaux):
        raise ConsistencyError(
            f"{len(points)} fixed points vs {len(tableaux)} basis tableaux"
        )
    core = []
    entries = []
    for w in points:
        core_row = []
        entry_row = []
        for tab in tableaux:
            weight = 1
            for j in tab.bottom:
                weight *= w.value(j)
            core_row.append(weight)
            entry_row.append(TPoly.term(weight, tab.ell))
        core.append(tuple(core_row))
        entries.append(tuple(entry_row))
    core_det = integer_det_bareiss(core)
    if core_det == 0:
        raise ConsistencyError(
            f"basis images are dependent over Q[t] for n={ctx.n}, k={ctx.k}"
        )
    power = sum(tab.ell for tab in tableaux)
    return BasisMatrix(
        fixed_points=points,
        tableaux=tableaux,
        entries=tuple(entries),
        integer_core=tuple(core),
        core_determinant=core_det,
        determinant=TPoly.term(core_det, power),
    )


# -- straightening, route one: solve against the localized basis -------------


def straighten_by_solve(
    f: MPoly, ctx: SpringerContext
) -> dict[TwoRowFilling, TPoly]:
    """Coefficients c_T in Q[t] with f = sum of c_T x_T modulo the
    equivariant ideal, found by solving the localization system.

    Each homogeneous component of degree d restricts to a multiple of
    t^d at every fixed point, so the system splits into one rational
    solve per degree against the integer core of the basis matrix.  A
    component forcing a negative t-power would mean the solution is not
    polynomial, which the presentation theory rules out; it raises
    ConsistencyError rather than returning a wrong answer.
    """
    if f.nvars != ctx.nvars:
        raise ValueError(f"expected a polynomial in {ctx.nvars} variables")
    bm = basis_image_matrix(ctx)
    result: dict[TwoRowFilling, TPoly] = {}
    for degree, component in f.homogeneous_components().items():
        values = []
        for w in bm.fixed_points:
            restricted = localize(component, w)
            values.append(restricted.coefficient(degree))
        gamma = solve_rational(bm.integer_core, values)
        if gamma is None:
            raise ConsistencyError("singular basis image matrix")
        for tab, coeff in zip(bm.tableaux, gamma):
            if not coeff:
                continue
            if degree < tab.ell:
                raise ConsistencyError(
                    "straightening produced a non-polynomial coefficient"
                )
            result[tab] = result.get(tab, TPoly.zero()) + TPoly.term(
                coeff, degree - tab.ell
            )
    return {tab: c for tab, c in result.items() if c}


# -- straightening, route two: inductive rewriting ---------------------------

_REWRITE_IN_PROGRESS = object()
_rewrite_cache: dict[tuple[SpringerContext, tuple[int, ...]], object] = {}


def _rewrite_expansion(ctx: SpringerContext, alpha: tuple[int, ...]) -> MPoly:
    """One rewriting step on the x-monomial with exponents alpha, which
    must not already be a basis monomial.  Returns a polynomial equal to
    it modulo the ideal in which every x-monomial is strictly smaller:
    lower x-degree, or the same degree with a longer strictly increasing
    column prefix.
    """
    n, k = ctx.n, ctx.k
    # a repeated variable: apply the square rule at the first one
    for pos in range(n):
        if alpha[pos] >= 2:
            rest = list(alpha)
            rest[pos] -= 2
            rest_mono = tuple(rest) + (0,)
            return square_reduction(ctx, pos + 1).times_monomial(rest_mono)
    support = tuple(i + 1 for i in range(n) if alpha[i])
    ell = len(support)
    if ell >= k + 1:
        # eliminate the product of the k+1 smallest support variables
        chosen = support[: k + 1]
        chosen_mono = [0] * ctx.nvars
        for i in chosen:
            chosen_mono[i - 1] = 1
        head = MPoly.from_monomial(tuple(chosen_mono))
        remainder_mono = [0] * ctx.nvars
        for i in support[k + 1 :]:
            remainder_mono[i - 1] = 1
        return (head - _product_relation(ctx, chosen)).times_monomial(
            tuple(remainder_mono)
        )
    # squarefree with a non-standard filling: cancel the monomial through
    # the j-th power of the linear relation, j the first bad column
    filling = filling_from_monomial(alpha + (0,), n)
    top, bottom = filling.top, filling.bottom
    j = next(r for r in range(ell) if top[r] > bottom[r]) + 1  # 1-based
    head_sum = MPoly.zero(ctx.nvars)
    for r in range(j - 1):
        head_sum = head_sum + ctx.x(top[r])
    rest_sum = -Fraction(n * (n + 1), 2) * ctx.t()
    for b in bottom:
        rest_sum = rest_sum + ctx.x(b)
    for r in range(j - 1, len(top)):
        rest_sum = rest_sum + ctx.x(top[r])
    tail_mono = [0] * ctx.nvars
    for b in bottom[j:]:
        tail_mono[b - 1] = 1
    tail = tuple(tail_mono)
    # both sides multiply the monomial of the bottom entries past column j;
    # the difference lies in the ideal because head_sum + rest_sum does
    difference = (rest_sum ** j).times_monomial(tail) - ((-head_sum) ** j).times_monomial(tail)
    target = monomial_from_filling(filling)
    coefficient = difference.coefficient(target)
    if not coefficient:
        raise ConsistencyError(
            f"vanishing coefficient while straightening {alpha} for n={n}, k={k}"
        )
    return MPoly.from_monomial(target) - difference * (1 / coefficient)


def _straighten_x_monomial(
    ctx: SpringerContext, alpha: tuple[int, ...]
) -> tuple[tuple[TwoRowFilling, TPoly], ...]:
    """Straighten a single x-monomial (exponents over x1..xn) into basis
    coordinates, memoized per context."""
    key = (ctx, alpha)
    cached = _rewrite_cache.get(key)
    if cached is _REWRITE_IN_PROGRESS:
        raise ConsistencyError(f"rewriting cycled on {alpha}")
    if cached is not None:
        return cached  # type: ignore[return-value]
    n, k = ctx.n, ctx.k
    squarefree = all(e <= 1 for e in alpha)
    if squarefree and sum(alpha) <= k:
        filling = filling_from_monomial(alpha + (0,), n)
        if is_standard(filling):
            value = ((filling, TPoly.one()),)
            _rewrite_cache[key] = value
            return value
    _rewrite_cache[key] = _REWRITE_IN_PROGRESS
    try:
        expansion = _rewrite_expansion(ctx, alpha)
        accum: dict[TwoRowFilling, TPoly] = {}
        for mono, coeff in expansion.terms.items():
            sub_alpha = mono[:n]
            t_power = mono[n]
            for tab, cpoly in _straighten_x_monomial(ctx, sub_alpha):
                contribution = cpoly * TPoly.term(coeff, t_power)
                accum[tab] = accum.get(tab, TPoly.zero()) + contribution
        value = tuple(
            (tab, c) for tab, c in accum.items() if c
        )
    except BaseException:
        del _rewrite_cache[key]
        raise
    _rewrite_cache[key] = value
    return value


def straighten_by_rewrite(
    f: MPoly, ctx: SpringerContext
) -> dict[TwoRowFilling, TPoly]:
    """Straighten by the inductive rewriting procedure.

    Repeated variables are removed with the square rule; squarefree
    monomials in more than k variables are cut down with the product
    relation on their k+1 smallest indices; squarefree monomials with a
    non-standard filling are cancelled through a power of the linear
    relation, which strictly grows the increasing column prefix.  Each
    step therefore terminates, and the result agrees with the linear
    algebra route.
    """
    if f.nvars != ctx.nvars:
        raise ValueError(f"expected a polynomial in {ctx.nvars} variables")
    result: dict[TwoRowFilling, TPoly] = {}
    for mono, coeff in f.terms.items():
        alpha = mono[: ctx.n]
        t_power = mono[ctx.n]
        for tab, cpoly in _straighten_x_monomial(ctx, alpha):
            contribution = cpoly * TPoly.term(coeff, t_power)
            result[tab] = result.get(tab, TPoly.zero()) + contribution
    return {tab: c for tab, c in result.items() if c}


def basis_combination(
    coefficients: Mapping[TwoRowFilling, TPoly], ctx: SpringerContext
) -> MPoly:
    """The polynomial sum of c_T x_T for a straightening coefficient map."""
    total = MPoly.zero(ctx.nvars)
    for tab, cpoly in coefficients.items():
        mono = list(monomial_from_filling(tab))
        for power, coeff in enumerate(cpoly.coeffs):
            if coeff:
                lifted = tuple(mono[: ctx.n]) + (power,)
                total = total + MPoly.from_monomial(lifted, coeff)
    return total


def sample_monomials(
    ctx: SpringerContext, count: int = 50, max_degree: int = 5
) -> list[Monomial]:
    """Deterministic pseudo-random monomials in x1..xn, t of total degree
    at most max_degree, for straightening spot-checks."""
    rng = random.Random(f"{SAMPLE_SEED}:{ctx.n}:{ctx.k}")
    out = []
    for _ in range(count):
        degree = rng.randint(0, max_degree)
        mono = [0] * ctx.nvars
        for _ in range(degree):
            mono[rng.randrange(ctx.nvars)] += 1
        out.append(tuple(mono))
    return out


def squarefree_monomials(ctx: SpringerContext, max_x_degree: int) -> list[Monomial]:
    """All squarefree monomials in x1..xn of x-degree up to the bound."""
    out = []
    for ell in range(min(max_x_degree, ctx.n) + 1):
        for subset in combinations(range(ctx.n), ell):
            mono = [0] * ctx.nvars
            for p in subset:
                mono[p] = 1
            out.append(tuple(mono))
    return out


# -- the degree-by-degree kernel comparison ----------------------------------


@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    kernel_dim: int
    ideal_dim: int

    @property
    def equal(self) -> bool:
        return self.kernel_dim == self.ideal_dim


@lru_cache(maxsize=None)
def kernel_ideal_comparisons(
    ctx: SpringerContext, max_degree: int
) -> tuple[DegreeComparison, ...]:
    """For each degree d up to the bound, compare the dimension of the
    degree-d slice of the equivariant ideal with the dimension of the
    kernel of localization on degree-d polynomials.

    The ideal slice is spanned by monomial multiples of the generators;
    its dimension is the exact rank of those (sparse, homogeneous) rows,
    built degree by degree: the slice in degree d is spanned by the
    variable multiples of a reduced basis of the slice in degree d - 1
    together with the generators of degree d.  The kernel dimension
    comes from the rank of the evaluation map onto the fixed points,
    where a monomial's value vector is integral and independent of its
    t-power.
    """
    n = ctx.n
    order_key = DEFAULT_ORDER.key
    gens_by_degree: dict[int, list[MPoly]] = {}
    for g in equivariant_ideal(ctx).generators:
        gens_by_degree.setdefault(g.total_degree(), []).append(g)

    units = [
        tuple(1 if i == v else 0 for i in range(ctx.nvars))
        for v in range(ctx.nvars)
    ]
    ideal_dims = []
    previous_rows: list[dict[Monomial, int]] = []
    for d in range(max_degree + 1):
        rref = SparseExactRREF(key=order_key)
        for row in previous_rows:
            for unit in units:
                rref.add_row({monomial_mul(m, unit): c for m, c in row.items()})
        for g in gens_by_degree.get(d, []):
            rref.add_row(dict(g.terms))
        ideal_dims.append(rref.rank)
        previous_rows = rref.pivot_rows()

    points = fixed_points(ctx)
    loc = SparseExactRREF()
    kernel_dims = []

    def x_monomials(degree):
        if degree == 0:
            yield (0,) * n
            return
        for mono in x_monomials(degree - 1):
            last = next((i for i in range(n - 1, -1, -1) if mono[i]), 0)
            for i in range(last, n):
                bumped = list(mono)
                bumped[i] += 1
                yield tuple(bumped)

    for d in range(max_degree + 1):
        for alpha in x_monomials(d):
            row = {}
            for idx, w in enumerate(points):
                weight = 1
                for i in range(n):
                    if alpha[i]:
                        weight *= w.w[i] ** alpha[i]
                row[idx] = weight
            loc.add_row(row)
        space_dim = comb(d + n, n)
        kernel_dims.append(space_dim - loc.rank)

    return tuple(
        DegreeComparison(degree=d, kernel_dim=kernel_dims[d], ideal_dim=ideal_dims[d])
        for d in range(max_degree + 1)
    )


def kernel_equals_ideal_in_degree(ctx: SpringerContext, degree: int) -> DegreeComparison:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return kernel_ideal_comparisons(ctx, degree)[degree]


def default_degree_bound(ctx: SpringerContext) -> int:
    """Twice the largest generator degree: covers every generator degree
    and the first syzygy-sensitive degrees while staying desk-scale."""
    return 2 * (ctx.k + 1)


# -- ordinary cohomology checks ----------------------------------------------


@dataclass(frozen=True)
class OrdinaryCheck:
    dimension: Optional[int]
    expected_dimension: int
    tanisaki_equal: bool
    specialization_equal: bool

    @property
    def ok(self) -> bool:
        return (
            self.dimension == self.expected_dimension
            and self.tanisaki_equal
            and self.specialization_equal
        )


def ordinary_presentation_check(
    ctx: SpringerContext, order: MonomialOrder = DEFAULT_ORDER
) -> OrdinaryCheck:
    """Groebner-based checks on the ordinary cohomology presentation:
    the quotient by J has dimension C(n, k), J agrees with Tanisaki's
    ideal, and J agrees with the t = 0 specialization of the equivariant
    ideal."""
    j_gens = list(ordinary_ideal(ctx).generators)
    dimension, _ = groebner.quotient_dimension(j_gens, order)
    tanisaki = groebner.ideal_equal(
        j_gens, list(tanisaki_ideal(ctx).generators), order
    )
    specialized = groebner.ideal_equal(
        j_gens, specialized_ordinary_generators(ctx), order
    )
    return OrdinaryCheck(
        dimension=dimension,
        expected_dimension=comb(ctx.n, ctx.k),
        tanisaki_equal=tanisaki.equal,
        specialization_equal=specialized.equal,
    )
