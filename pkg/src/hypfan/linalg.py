"""Exact linear algebra over the rationals for small dense systems."""

from fractions import Fraction


def as_fraction(x):
    """Coerce ints, Fractions, ``"p/q"`` strings and ``[p, q]`` pairs."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (list, tuple)) and len(x) == 2:
        num, den = x
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(int(num), int(den))
    raise TypeError(f"cannot read {x!r} as a rational")


def vec(xs):
    return tuple(as_fraction(x) for x in xs)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _echelon(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return m, rank


def rank(vectors):
    if not vectors:
        return 0
    return _echelon(vectors)[1]


def det(rows):
    n = len(rows)
    m = [list(map(Fraction, r)) for r in rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return sign * result


def solve_in_basis(basis, w):
    """Coordinates ``a`` with ``w = sum a_i basis[i]``; ``None`` if singular.

    ``basis`` is a list of n vectors of length n.
    """
    n = len(basis)
    # augmented matrix: columns are basis vectors, last column is w
    rows = [[basis[j][i] for j in range(n)] + [w[i]] for i in range(n)]
    m, r = _echelon(rows)
    if r < n or any(m[i][i] == 0 for i in range(n)):
        return None
    return tuple(m[i][n] / m[i][i] for i in range(n))


def positively_proportional(u, v):
    """True iff ``u = t v`` for some rational ``t > 0``."""
    if rank([u, v]) != 1:
        return False
    return dot(u, v) > 0


def in_span(vectors, w):
    return rank(list(vectors) + [w]) == rank(list(vectors))


def solve_combination(gens, w):
    """Coefficients ``a`` with ``w = sum a_i gens[i]`` or ``None``.

    ``gens`` must be linearly independent; the system may be overdetermined.
    """
    m = len(gens)
    n = len(w)
    rows = [[gens[j][i] for j in range(m)] + [w[i]] for i in range(n)]
    ech, r = _echelon(rows)
    # inconsistent iff some row is zero in the coefficient part but not in w
    for row in ech:
        if all(x == 0 for x in row[:m]) and row[m] != 0:
            return None
    coeffs = [Fraction(0)] * m
    for row in ech:
        lead = next((j for j in range(m) if row[j] != 0), None)
        if lead is not None:
            coeffs[lead] = row[m] / row[lead]
    return tuple(coeffs)
