"""Rees algebras of integrally closed pure-power monomial ideals.

For a tuple lam of positive integers, the ideal at hand is the integral
closure of (x_1^lam_1, ..., x_n^lam_n): the monomials whose exponent
vector alpha satisfies omega . alpha >= L, where L = lcm(lam) and
omega_i = L / lam_i. Its Rees algebra is the semigroup ring of an
affine semigroup in Z^{n+1}, and regularity in codimension r for it
reduces to membership of a few integers in numerical semigroups
generated by complementary weights. That reduction is implemented here,
next to the generic semigroup construction it shortcuts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, lcm

from .cone import cone_from_generators
from .exactlin import DimensionMismatch, IntMat, IntVec, dot
from .semigroup import AffineSemigroup, PointedRequired, contains, new_semigroup


class BadLambda(ValueError):
    """Exponent tuples need length at least two and positive entries."""


class BadRange(ValueError):
    """The requested codimension is outside the valid range."""


class PreconditionViolated(ValueError):
    """Input outside the stated domain of the decomposition."""


@dataclass(frozen=True)
class LambdaSpec:
    """Exponent tuple with its derived data: L = lcm, weights, gcd."""

    lam: tuple[int, ...]
    L: int
    omega: tuple[int, ...]
    d: int


def lambda_spec(lam) -> LambdaSpec:
    lam = tuple(int(x) for x in lam)
    if len(lam) < 2 or any(x < 1 for x in lam):
        raise BadLambda("need at least two positive exponents")
    big = lcm(*lam)
    return LambdaSpec(lam, big, tuple(big // x for x in lam), gcd(*lam))


def minimal_elements_above(weights, threshold: int) -> IntMat:
    """Minimal points of {a in N^n : weights . a >= threshold}.

    A point is minimal for the componentwise order iff its weight lies
    in [threshold, threshold + min weight over its support). The
    enumeration walks coordinates in decreasing weight order, pruning a
    branch as soon as the partial weight leaves that window; the last
    coordinate is closed in a single step. Output is sorted.
    """
    weights = tuple(int(w) for w in weights)
    if not weights or any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    threshold = int(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    n = len(weights)
    order = sorted(range(n), key=lambda i: (-weights[i], i))
    out = []
    alpha = [0] * n
    never = threshold + max(weights) + 1  # looser than any support window

    def rec(pos, acc, cap):
        i = order[pos]
        w = weights[i]
        if pos == n - 1:
            if acc >= threshold:
                if acc < cap:
                    out.append(tuple(alpha))
            else:
                c = -((acc - threshold) // w)
                total = acc + c * w
                if total < min(cap, threshold + w):
                    alpha[i] = c
                    out.append(tuple(alpha))
                    alpha[i] = 0
            return
        c = 0
        while True:
            total = acc + c * w
            newcap = cap if c == 0 else min(cap, threshold + w)
            if total >= newcap:
                break
            alpha[i] = c
            rec(pos + 1, total, newcap)
            c += 1
        alpha[i] = 0

    rec(0, 0, never)
    return tuple(sorted(out))


def ideal_min_gens(spec: LambdaSpec) -> IntMat:
    """Minimal monomial generators of the closed power ideal."""
    return minimal_elements_above(spec.omega, spec.L)


def rees_semigroup(spec: LambdaSpec) -> AffineSemigroup:
    """The Rees algebra of the ideal as an affine semigroup in Z^{n+1}.

    Generators are the coordinate directions in degree zero plus one
    degree-one generator per minimal ideal exponent. The facet
    description is computed from the subset {(e_i, 0), (lam_i e_i, 1)},
    which spans the same cone; the semigroup constructor certifies that
    by re-checking every generator against the computed facets.
    """
    n = len(spec.lam)
    units = [tuple(1 if j == i else 0 for j in range(n)) + (0,) for i in range(n)]
    deg1 = [beta + (1,) for beta in ideal_min_gens(spec)]
    corners = [
        tuple(spec.lam[i] if j == i else 0 for j in range(n)) + (1,) for i in range(n)
    ]
    hull = cone_from_generators(tuple(units + corners))
    return new_semigroup(tuple(units + deg1), cone=hull)


class NumericalSgp:
    """Nonnegative integer combinations of a set of positive integers.

    Membership is a dynamic-programming table over [0, t], grown on
    demand and kept for later queries.
    """

    def __init__(self, gens):
        gens = tuple(sorted(set(int(g) for g in gens)))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        self.gens = gens
        self._table = [True]

    def contains(self, t: int) -> bool:
        if t < 0:
            raise ValueError("membership is asked of nonnegative integers")
        table = self._table
        gens = self.gens
        for v in range(len(table), t + 1):
            table.append(any(v >= g and table[v - g] for g in gens))
        return table[t]

    def represent(self, t: int):
        """One representation as (generator, multiplicity) pairs, or None."""
        if not self.contains(t):
            return None
        counts: dict[int, int] = {}
        v = t
        while v:
            for g in self.gens:
                if v >= g and self._table[v - g]:
                    counts[g] = counts.get(g, 0) + 1
                    v -= g
                    break
        return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def _cached_sgp(gens: tuple[int, ...]) -> NumericalSgp:
    return NumericalSgp(gens)


def numsgp_contains(t: int, gens) -> bool:
    return _cached_sgp(tuple(sorted(set(int(g) for g in gens)))).contains(t)


@dataclass(frozen=True)
class SubsetCheck:
    """Membership requirements for one choice of r-1 distinguished axes."""

    picked: tuple[int, ...]
    complement: tuple[int, ...]
    sgp_gens: tuple[int, ...]
    targets: tuple[int, ...]
    member: tuple[bool, ...]
    combos: tuple
    ok: bool


@dataclass(frozen=True)
class ReesCheck:
    r: int
    holds: bool
    subsets: tuple[SubsetCheck, ...]


def check_R_fast(spec: LambdaSpec, r: int) -> ReesCheck:
    """Decide regularity in codimension r for the Rees algebra, 2 <= r <= n.

    For every choice of r-1 axes i_1 < ... < i_{r-1}, the values
    L - omega_{i_s} and L + 1 must all be nonnegative integer
    combinations of the remaining weights. Membership is decidable, so
    the verdict is always definite; a representation is recorded for
    every passing target.
    """
    n = len(spec.lam)
    if not 2 <= r <= n:
        raise BadRange(f"r must lie in [2, {n}], got {r}")
    checks = []
    for picked in itertools.combinations(range(n), r - 1):
        comp = tuple(j for j in range(n) if j not in picked)
        sgp = _cached_sgp(tuple(sorted({spec.omega[j] for j in comp})))
        targets = tuple(spec.L - spec.omega[i] for i in picked) + (spec.L + 1,)
        member = tuple(sgp.contains(t) for t in targets)
        combos = tuple(
            sgp.represent(t) if ok else None for t, ok in zip(targets, member)
        )
        checks.append(
            SubsetCheck(picked, comp, sgp.gens, targets, member, combos, all(member))
        )
    return ReesCheck(r, all(c.ok for c in checks), tuple(checks))


def check_Rn(spec: LambdaSpec) -> bool:
    """Regularity in codimension n holds iff all exponents coincide."""
    return len(set(spec.lam)) == 1


def check_Rn_minus_1(spec: LambdaSpec) -> bool:
    """Regularity in codimension n-1, n >= 3: pairwise coprime weights."""
    if len(spec.lam) < 3:
        raise BadRange("needs at least three exponents")
    return all(
        gcd(a, b) == 1 for a, b in itertools.combinations(spec.omega, 2)
    )


def _two_coin_split(a: int, b: int, t: int) -> tuple[int, int]:
    """Nonnegative (x, y) with a*x + b*y = t, x minimal; a, b coprime.

    Exists whenever t >= (a-1)(b-1); callers guarantee that.
    """
    x = (t * pow(a, -1, b)) % b if b > 1 else 0
    y, rem = divmod(t - a * x, b)
    assert rem == 0 and y >= 0, "target below the representability bound"
    return x, y


def degree2_decompose(u: int, v: int, w: int, a: int, b: int, c: int):
    """Split (u, v, w) into two nonnegative parts of weight at least L.

    Weights are a, b, c (pairwise coprime, positive), L = abc, and the
    input must satisfy u*a + v*b + w*c >= 2L. The construction is
    case by case: peel off a coordinate that alone reaches weight L;
    otherwise pair a unit weight with its cyclic neighbor; otherwise
    rebalance around a weighted coordinate below L/2, or around the
    smallest admissible share of w when all sit at L/2 or above. Both
    returned parts are verified before being handed back.
    """
    if min(a, b, c) < 1:
        raise PreconditionViolated("weights must be positive")
    if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
        raise PreconditionViolated("weights must be pairwise coprime")
    if min(u, v, w) < 0:
        raise PreconditionViolated("coordinates must be nonnegative")
    L = a * b * c
    if u * a + v * b + w * c < 2 * L:
        raise PreconditionViolated("total weight must be at least 2L")

    if u >= b * c:
        parts = (b * c, 0, 0), (u - b * c, v, w)
    elif v >= a * c:
        parts = (0, a * c, 0), (u, v - a * c, w)
    elif w >= a * b:
        parts = (0, 0, a * b), (u, v, w - a * b)
    elif a == 1:
        u2 = u + v * b - L
        parts = (u - u2, v, 0), (u2, 0, w)
    elif b == 1:
        v2 = v + w * c - L
        parts = (0, v - v2, w), (u, v2, 0)
    elif c == 1:
        w2 = w + u * a - L
        parts = (u, 0, w - w2), (0, v, w2)
    elif 2 * w * c < L:
        u1, v1 = _two_coin_split(a, b, L - w * c)
        parts = (u1, v1, w), (u - u1, v - v1, 0)
    elif 2 * u * a < L:
        v1, w1 = _two_coin_split(b, c, L - u * a)
        parts = (u, v1, w1), (0, v - v1, w - w1)
    elif 2 * v * b < L:
        u1, w1 = _two_coin_split(a, c, L - v * b)
        parts = (u1, v, w1), (u - u1, 0, w - w1)
    else:
        w1 = -(-L // (2 * c))
        u1, v1 = _two_coin_split(a, b, L - w1 * c)
        parts = (u1, v1, w1), (u - u1, v - v1, w - w1)

    (u1, v1, w1), (u2, v2, w2) = parts
    assert min(u1, v1, w1, u2, v2, w2) >= 0
    assert (u1 + u2, v1 + v2, w1 + w2) == (u, v, w)
    assert u1 * a + v1 * b + w1 * c >= L
    assert u2 * a + v2 * b + w2 * c >= L
    return parts


def bounded_normality_scan(s: AffineSemigroup, budget: int) -> IntMat:
    """Cone lattice points with theta value up to `budget` missing from S.

    Every cone point is a nonnegative real combination of generators,
    which bounds each coordinate by budget * max(|g_j| / theta(g)); the
    resulting box is filtered exactly. An empty answer means no gap was
    found within the budget, not that the semigroup is normal.
    """
    if not s.pointed:
        raise PointedRequired("the gap scan needs a pointed semigroup")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    theta = s.theta
    ranges = []
    for j in range(s.ambient_dim):
        hi = budget * max(Fraction(max(g[j], 0), dot(theta, g)) for g in s.generators)
        lo = -budget * max(Fraction(max(-g[j], 0), dot(theta, g)) for g in s.generators)
        ranges.append(range(ceil(lo), floor(hi) + 1))
    facets = [f.coeffs for f in s.cone.facets]
    gaps = []
    for z in itertools.product(*ranges):
        if dot(theta, z) > budget:
            continue
        if any(dot(f, z) < 0 for f in facets):
            continue
        if not contains(s, z):
            gaps.append(z)
    return tuple(sorted(gaps))


@dataclass(frozen=True)
class ProbeResult:
    vector: IntVec
    in_cone: bool
    in_semigroup: bool

    @property
    def is_gap(self) -> bool:
        return self.in_cone and not self.in_semigroup


def gap_probe(s: AffineSemigroup, vector) -> ProbeResult:
    """Classify a single lattice point: cone membership and S membership."""
    vec = tuple(int(x) for x in vector)
    if len(vec) != s.ambient_dim:
        raise DimensionMismatch("probe length differs from ambient dimension")
    in_cone = all(f(vec) >= 0 for f in s.cone.facets)
    return ProbeResult(vec, in_cone, contains(s, vec))
