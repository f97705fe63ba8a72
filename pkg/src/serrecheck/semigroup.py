"""Affine semigroups with exact membership and face-group computations.

An affine semigroup here is a finitely generated subsemigroup of Z^n
whose generators span the full integer lattice. Membership testing and
the regularity checker additionally need the semigroup to be pointed,
meaning its cone contains no line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import Cone, Face, cone_from_generators
from .exactlin import (
    DimensionMismatch,
    IntMat,
    IntVec,
    LatticeBasis,
    dot,
    hnf,
)


class GroupNotFull(ValueError):
    """The generators span a proper sublattice of Z^n."""


class PointedRequired(ValueError):
    """The operation needs a pointed semigroup."""


@dataclass(frozen=True)
class AffineSemigroup:
    """Generators plus the cached cone of their nonnegative span.

    `theta` is the coordinatewise sum of the facet forms. It is strictly
    positive on the cone minus the origin exactly when the cone is
    pointed, which makes it the coefficient bound used by the membership
    search.
    """

    ambient_dim: int
    generators: IntMat
    cone: Cone
    theta: IntVec
    pointed: bool


def new_semigroup(gens: IntMat, cone: Cone | None = None) -> AffineSemigroup:
    """Validate generators and assemble the semigroup.

    The rows must generate Z^n as a group (canonical HNF equal to the
    identity). A caller who already knows a facet description for the
    positive span may pass `cone`; it is accepted only if its own
    generators all occur among `gens` and every generator of `gens`
    satisfies its facet forms, which together certify that both
    descriptions cut out the same cone.
    """
    mat = tuple(tuple(row) for row in gens)
    if not mat:
        raise ValueError("at least one generator is required")
    n = len(mat[0])
    if any(len(row) != n for row in mat):
        raise DimensionMismatch("ragged generator matrix")
    basis = hnf(mat, n)
    identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    if basis.hnf_rows != identity:
        raise GroupNotFull("generators do not generate the full lattice Z^n")
    if cone is None:
        cone = cone_from_generators(mat)
    else:
        if cone.ambient_dim != n:
            raise DimensionMismatch("cone ambient dimension differs")
        rows = set(mat)
        if any(r not in rows for r in cone.generators):
            raise ValueError("supplied cone is not generated by a subset of gens")
        if any(f(g) < 0 for f in cone.facets for g in mat):
            raise ValueError("a generator violates a facet of the supplied cone")
        incidence = tuple(
            frozenset(i for i, g in enumerate(mat) if f(g) == 0) for f in cone.facets
        )
        cone = Cone(n, mat, cone.facets, incidence)
    theta = tuple(sum(f.coeffs[j] for f in cone.facets) for j in range(n))
    pointed = bool(cone.facets) and all(dot(theta, g) > 0 for g in mat)
    return AffineSemigroup(n, mat, cone, theta, pointed)


def contains(s: AffineSemigroup, alpha) -> bool:
    """Exact membership: is alpha a nonnegative integer combination?

    Depth-first search over coefficient vectors. Generators are tried in
    descending theta order; the coefficient of each is bounded by the
    remaining theta budget, and a partial residue is discarded as soon
    as it leaves the cone (facet values only decrease while a generator
    is subtracted, so the cut is exact). Complete because any actual
    representation respects those bounds.
    """
    if not s.pointed:
        raise PointedRequired("membership search needs a pointed semigroup")
    alpha = tuple(alpha)
    if len(alpha) != s.ambient_dim:
        raise DimensionMismatch("vector length differs from ambient dimension")
    facets = [f.coeffs for f in s.cone.facets]
    if any(dot(f, alpha) < 0 for f in facets):
        return False
    theta = s.theta
    gens = sorted(set(s.generators), key=lambda g: (-dot(theta, g), g))
    tvals = [dot(theta, g) for g in gens]
    zero = (0,) * s.ambient_dim
    stack = [(0, alpha)]
    while stack:
        idx, res = stack.pop()
        if res == zero:
            return True
        if idx >= len(gens):
            continue
        g, tg = gens[idx], tvals[idx]
        stack.append((idx + 1, res))
        cur = res
        for _ in range(dot(theta, res) // tg):
            cur = tuple(x - y for x, y in zip(cur, g))
            if any(dot(f, cur) < 0 for f in facets):
                break
            stack.append((idx + 1, cur))
    return False


def generators_on_face(s: AffineSemigroup, f: Face) -> IntMat:
    """The generators lying on the face, in their original order."""
    return tuple(s.generators[j] for j in sorted(f.generator_set))


def face_group(s: AffineSemigroup, f: Face) -> LatticeBasis:
    """The group generated by the semigroup elements on the face.

    Sums of generators land on a face only when every summand does, so
    the generators on the face generate the whole intersection and
    their row lattice is the face group.
    """
    return hnf(generators_on_face(s, f), s.ambient_dim)
