"""Symmetric powers of linear differential operators."""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from ..exact import linalg
from ..exact.ratfunc import RationalFunction
from .operator import LinearDifferentialOperator

RF = RationalFunction


def _monomials(n: int, d: int):
    # exponent vectors over y, y', ..., y^(n-1) of total degree d, lex descending
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _differentiate(vec: dict, M: LinearDifferentialOperator) -> dict:
    """Derivative of ``sum c_m * m(y, ..., y^(n-1))`` modulo ``M(y) = 0``."""
    n = M.order
    out: dict = {}

    def put(e, c):
        v = out.get(e, RF(0)) + c
        if v.is_zero():
            out.pop(e, None)
        else:
            out[e] = v

    for e, c in vec.items():
        dc = c.diff(M.var)
        if not dc.is_zero():
            put(e, dc)
        for j, k in enumerate(e):
            if k == 0:
                continue
            base = list(e)
            base[j] -= 1
            if j + 1 < n:
                f = list(base)
                f[j + 1] += 1
                put(tuple(f), c * k)
            else:
                # y^(n) = -sum a_i y^(i)
                for i in range(n):
                    a = M.coefficient(i)
                    if a.is_zero():
                        continue
                    f = list(base)
                    f[i] += 1
                    put(tuple(f), -(c * k) * a)
    return out


def sym_power(L: LinearDifferentialOperator, d: int) -> LinearDifferentialOperator:
    """Minimal monic operator killing every product of ``d`` solutions of ``L``.

    Works on ``z = y^d`` for a generic solution ``y``: the derivatives of
    ``z`` live in the span of degree-``d`` monomials in ``y, ..., y^(n-1)``
    and the first linear dependence among them gives the operator.
    """
    if d < 1:
        raise ValueError("symmetric power degree must be >= 1")
    if L.order < 1:
        raise ValueError("symmetric power needs an operator of order >= 1")
    M = L.monic()
    n = M.order
    monos = _monomials(n, d)
    index = {m: i for i, m in enumerate(monos)}
    dim = comb(n + d - 1, d)
    start = [0] * n
    start[0] = d
    vecs = [{tuple(start): RF(1)}]
    while True:
        nxt = _differentiate(vecs[-1], M)
        vecs.append(nxt)
        m = len(vecs) - 1
        # columns: z, z', ..., z^(m); rows: monomials
        rows = [[RF(0)] * (m + 1) for _ in range(dim)]
        for j, v in enumerate(vecs):
            for e, c in v.items():
                rows[index[e]][j] = c
        kernel = linalg.nullspace(rows, m + 1, one=RF(1), zero=RF(0))
        if kernel:
            k = kernel[0]
            lead = k[m]
            coeffs = [c / lead for c in k]
            return LinearDifferentialOperator(coeffs, M.var)
        if m > dim:
            raise AssertionError("no dependence found within the symmetric power dimension")
