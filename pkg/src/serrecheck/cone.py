"""Rational polyhedral cones from generator descriptions, exactly.

A cone is built from integer generators and carries an irredundant list
of primitive inward facet forms plus the generator/facet incidence.
Faces are identified canonically by the full set of facets containing
them. Intended scale is small (a couple of dozen generators, ambient
dimension below ten); all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exactlin import (
    DimensionMismatch,
    IntMat,
    IntVec,
    PrimitiveForm,
    dot,
    mat_rank,
    primitive,
)


class FullDimRequired(ValueError):
    """The generators do not span the ambient space over the rationals."""


class ZeroGenerator(ValueError):
    """A zero row appeared in a generator matrix."""


@dataclass(frozen=True)
class Cone:
    """Generator description together with its facet description.

    `facets[i]` is nonnegative on every generator, and `incidence[i]`
    is the set of generator indices it vanishes on.
    """

    ambient_dim: int
    generators: IntMat
    facets: tuple[PrimitiveForm, ...]
    incidence: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Face:
    """A face of a cone, keyed by all facets containing it.

    Two faces compare equal iff their facet sets do; the facet set is
    always closed, i.e. it lists every facet vanishing on the face.
    """

    cone: Cone = field(compare=False, repr=False)
    facet_set: frozenset[int] = field(compare=True)
    generator_set: frozenset[int] = field(compare=False)
    dim: int = field(compare=False)
    codim: int = field(compare=False)


def _gcd_normalize(row: list[int]) -> list[int]:
    g = 0
    for e in row:
        g = gcd(g, e)
    if g > 1:
        return [e // g for e in row]
    return row


def _substitute_equalities(eqs: list[list[int]], ineqs: list, ncoef: int) -> list:
    """Use the equalities to eliminate coefficient columns in place.

    Each equality pivots on one coefficient column and is substituted
    into every other row; inequality directions are preserved because
    pivots are made positive. With full-dimensional input every
    equality gets consumed.
    """
    eqs = [list(e) for e in eqs]
    while eqs:
        best = None
        for ei, e in enumerate(eqs):
            for col in range(ncoef):
                a = e[col]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), ei, col)
        if best is None:
            for e in eqs:
                assert not any(e), "rank-deficient generators slipped past the caller"
            break
        _, ei, col = best
        piv = eqs.pop(ei)
        if piv[col] < 0:
            piv = [-x for x in piv]
        a = piv[col]
        for i, e in enumerate(eqs):
            b = e[col]
            if b:
                eqs[i] = _gcd_normalize([a * x - b * y for x, y in zip(e, piv)])
        for i, (r, hist) in enumerate(ineqs):
            b = r[col]
            if b:
                ineqs[i] = (
                    _gcd_normalize([a * x - b * y for x, y in zip(r, piv)]),
                    hist,
                )
    return ineqs


def _fm_eliminate(rows: list, col: int, step: int) -> list:
    """One Fourier-Motzkin step on `col`.

    Keeps zero rows, combines each positive/negative pair, normalizes by
    the gcd, and drops duplicates as well as rows whose parent set
    exceeds step+1 original inequalities (such rows are always
    redundant).
    """
    limit = step + 1
    pos, neg, out = [], [], {}
    for r, hist in rows:
        c = r[col]
        if c > 0:
            pos.append((r, hist))
        elif c < 0:
            neg.append((r, hist))
        else:
            key = tuple(r)
            if key not in out or len(hist) < len(out[key]):
                out[key] = hist
    for p, hp in pos:
        a = p[col]
        for q, hq in neg:
            hist = hp | hq
            if len(hist) > limit:
                continue
            b = -q[col]
            v = _gcd_normalize([b * x + a * y for x, y in zip(p, q)])
            if not any(v):
                continue
            key = tuple(v)
            if key not in out or len(hist) < len(out[key]):
                out[key] = hist
    return [(list(k), h) for k, h in out.items()]


def cone_from_generators(gens: IntMat) -> Cone:
    """Facet description of the cone of nonnegative combinations of rows.

    The cone is the projection of {(c, x) : c >= 0, x = c.G} onto x.
    The coefficient block is eliminated exactly: equalities by integer
    Gaussian substitution, the rest by Fourier-Motzkin. Among the
    surviving valid forms, exactly those vanishing on dim-1 independent
    generators are facets.
    """
    mat = tuple(tuple(row) for row in gens)
    if not mat:
        raise ValueError("at least one generator is required")
    n = len(mat[0])
    if any(len(row) != n for row in mat):
        raise DimensionMismatch("ragged generator matrix")
    if any(not any(row) for row in mat):
        raise ZeroGenerator("generators must be nonzero")
    if mat_rank(mat) != n:
        raise FullDimRequired("generators must span the ambient space")

    m = len(mat)
    width = m + n
    ineqs = []
    for i in range(m):
        v = [0] * width
        v[i] = 1
        ineqs.append((v, frozenset([i])))
    eqs = []
    for j in range(n):
        v = [mat[i][j] for i in range(m)] + [0] * n
        v[m + j] = -1
        eqs.append(v)

    rows = _substitute_equalities(eqs, ineqs, m)
    step = 0
    while True:
        live = [c for c in range(m) if any(r[c] for r, _ in rows)]
        if not live:
            break
        step += 1

        def cost(c):
            p = sum(1 for r, _ in rows if r[c] > 0)
            q = sum(1 for r, _ in rows if r[c] < 0)
            return (p * q, c)

        col = min(live, key=cost)
        rows = _fm_eliminate(rows, col, step)

    candidates = {}
    for r, _ in rows:
        tail = r[m:]
        if any(tail):
            form = primitive(tail)
            candidates[form.coeffs] = form
    facets = []
    for coeffs in sorted(candidates):
        form = candidates[coeffs]
        vanishing = [g for g in mat if dot(coeffs, g) == 0]
        assert all(dot(coeffs, g) >= 0 for g in mat)
        if mat_rank(vanishing, n) == n - 1:
            facets.append(form)
    incidence = tuple(
        frozenset(i for i, g in enumerate(mat) if f(g) == 0) for f in facets
    )
    return Cone(n, mat, tuple(facets), incidence)


def face_intersection_of(cone: Cone, facet_indices) -> Face:
    """Canonical face cut out by the listed facets.

    The generator set is the common vanishing locus; the facet set is
    its closure and may strictly contain the input. The empty index set
    yields the whole cone.
    """
    idx = frozenset(facet_indices)
    if any(i < 0 or i >= len(cone.facets) for i in idx):
        raise IndexError("facet index out of range")
    gen_set = set(range(len(cone.generators)))
    for i in idx:
        gen_set &= cone.incidence[i]
    closure = frozenset(
        i for i, inc in enumerate(cone.incidence) if gen_set <= inc
    )
    rows = [cone.generators[j] for j in sorted(gen_set)]
    d = mat_rank(rows, cone.ambient_dim)
    return Face(cone, closure, frozenset(gen_set), d, cone.ambient_dim - d)


def faces_up_to_codim(cone: Cone, level: int) -> tuple[Face, ...]:
    """All distinct nonempty faces of codimension at most `level`.

    Faces are discovered by repeatedly intersecting known faces with one
    more facet; the face lattice of a polyhedral cone is graded, so this
    reaches every face without enumerating facet subsets. Output is
    sorted by codimension, then by facet set, and starts with the whole
    cone.
    """
    if not 0 <= level <= cone.ambient_dim:
        raise ValueError("level must lie between 0 and the ambient dimension")
    whole = face_intersection_of(cone, ())
    seen = {whole.facet_set: whole}
    queue = [whole]
    while queue:
        face = queue.pop()
        if face.codim >= level:
            continue
        for i in range(len(cone.facets)):
            if i in face.facet_set:
                continue
            nxt = face_intersection_of(cone, face.facet_set | {i})
            if nxt.facet_set not in seen:
                seen[nxt.facet_set] = nxt
                queue.append(nxt)
    faces = [f for f in seen.values() if f.codim <= level]
    faces.sort(key=lambda f: (f.codim, tuple(sorted(f.facet_set))))
    return tuple(faces)
