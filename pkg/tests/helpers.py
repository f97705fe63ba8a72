"""Independent oracles used to cross-check the library's fast paths."""

from fractions import Fraction
from itertools import combinations, product

from serrecheck.exactlin import dot


def solve_nonneg(rows, target):
    """Rational c >= 0 with sum c_i * rows[i] = target, or None.

    Plain Gaussian elimination over Fractions with free variables pinned
    to zero; exact for independent rows, which is all the cone oracle
    needs.
    """
    m, n = len(rows), len(target)
    aug = [
        [Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])]
        for j in range(n)
    ]
    pivots = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        aug[r] = [x / aug[r][c] for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                aug[i] = [x - aug[i][c] * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][m] for i in range(r, n)):
        return None
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        sol[c] = aug[i][m]
    if any(x < 0 for x in sol):
        return None
    return sol


def in_cone_rational(gens, x):
    """Membership of x in the rational cone of gens, by small subsets.

    Any cone member is a nonnegative combination of at most dim many
    linearly independent generators, so trying every subset up to that
    size with an exact solve is a complete test.
    """
    n = len(x)
    for k in range(n + 1):
        for subset in combinations(range(len(gens)), k):
            if solve_nonneg([gens[i] for i in subset], x) is not None:
                return True
    return False


def bfs_elements(s, limit):
    """All semigroup elements with theta value at most `limit`.

    Breadth-first closure under adding generators; independent of the
    membership search in the library.
    """
    zero = (0,) * s.ambient_dim
    gens = sorted(set(s.generators))
    seen = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple(a + b for a, b in zip(x, g))
            if y not in seen and dot(s.theta, y) <= limit:
                seen.add(y)
                frontier.append(y)
    return seen


def brute_minimal_above(weights, threshold, box):
    """Antichain of {a : weights . a >= threshold} by scanning a box."""
    hits = [
        a
        for a in product(*(range(b + 1) for b in box))
        if dot(weights, a) >= threshold
    ]
    out = []
    for a in hits:
        if not any(
            b != a and all(x <= y for x, y in zip(b, a)) for b in hits
        ):
            out.append(a)
    return tuple(sorted(out))


def random_unimodular(rng, n):
    """Random determinant +-1 integer matrix from elementary operations."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(8):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    if rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        u[i], u[j] = u[j], u[i]
    if rng.random() < 0.5:
        i = rng.randrange(n)
        u[i] = [-a for a in u[i]]
    return [tuple(row) for row in u]


def apply_matrix(gens, u):
    """Right-multiply each generator row by the matrix u."""
    n = len(u)
    return tuple(
        tuple(sum(g[k] * u[k][j] for k in range(n)) for j in range(n)) for g in gens
    )
