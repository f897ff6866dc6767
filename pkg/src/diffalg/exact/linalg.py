"""
Gaussian elimination over exact fields.

Entries may be ``Fraction`` or :class:`RationalFunction`; anything with
field arithmetic and ``== 0`` works.  Pivots are chosen as the first
nonzero entry in column order.
"""

from fractions import Fraction


def _is_zero(x) -> bool:
    return x == 0


def rref(rows, ncols=None):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(M):
            break
        p = next((i for i in range(r, len(M)) if not _is_zero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c] if not isinstance(M[r][c], int) else Fraction(1, M[r][c])
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and not _is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def nullspace(rows, ncols, one=Fraction(1), zero=Fraction(0)):
    """Basis of ``{x : rows @ x == 0}``, one vector per free column."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [zero] * ncols
            v[j] = one
            basis.append(v)
        return basis
    R, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols, zero=Fraction(0)):
    """One solution of ``rows @ x == rhs`` (free variables set to zero) or ``None``."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return [zero] * ncols
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return x


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])
