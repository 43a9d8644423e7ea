"""Exact-arithmetic helpers used as independent oracles in the tests."""

from fractions import Fraction


def solve_exact(basis, target):
    """Coefficients expressing ``target`` in ``basis`` (exact, or raise).

    ``basis`` is a list of coordinate tuples that may live in a larger
    ambient space (more coordinates than vectors); the system must be
    consistent and have a unique solution.
    """
    n = len(basis)
    dim = len(target)
    # rows: one equation per coordinate, columns per basis vector
    rows = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(target[i])]
            for i in range(dim)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if pivot is None:
            raise ValueError("basis is not independent")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, dim):
        if rows[i][n] != 0:
            raise ValueError("target is not in the span of the basis")
    return [rows[i][n] for i in range(n)]


def reflection_closure(simple_roots):
    """All roots, generated by closing the simple roots under the simple
    reflections s_i(b) = b - <b, a_i^vee> a_i.  Independent of any stored
    root table; the coroot pairing needs no normalization since the form
    scale cancels in 2 (b|a)/(a|a)."""

    def dot(v, w):
        return sum(a * b for a, b in zip(v, w))

    def reflect(beta, alpha):
        c = Fraction(2 * dot(beta, alpha), dot(alpha, alpha))
        return tuple(b - c * a for b, a in zip(beta, alpha))

    roots = set(simple_roots)
    frontier = list(simple_roots)
    while frontier:
        beta = frontier.pop()
        for alpha in simple_roots:
            image = reflect(beta, alpha)
            if image not in roots:
                roots.add(image)
                frontier.append(image)
    # closure under reflections of the simple roots gives every root except
    # possibly negatives reached already; close under negation explicitly
    for beta in list(roots):
        neg = tuple(-x for x in beta)
        roots.add(neg)
    return roots
