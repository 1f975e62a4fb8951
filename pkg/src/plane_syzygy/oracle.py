"""Dense linear-algebra oracle for graded dimensions, with no Groebner bases.

(J_f)_k is the span of the monomial multiples of the partials; ranks come from
sympy's DomainMatrix over QQ.  For the saturation, h in S_k lies in I_f iff
h * S_N lies in (J_f)_{k+N} once k + N is past the top degree T = 3d - 6 of
N(f); a margin of two degrees is used.
"""

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .poly import monomials_of_degree


def _qq(c):
    return QQ(int(c.numerator), int(c.denominator))


def _index(k):
    return {m: i for i, m in enumerate(monomials_of_degree(k))}


def _spanning_rows(partials, k):
    """Coefficient rows of u * f_i for monomials u of degree k - deg f_i."""
    idx = _index(k)
    rows = []
    for p in partials:
        if p.is_zero():
            continue
        for u in monomials_of_degree(k - p.degree) if k >= p.degree else []:
            row = [QQ(0)] * len(idx)
            for (a, b, c), v in p.items():
                row[idx[(a + u[0], b + u[1], c + u[2])]] = _qq(v)
            rows.append(row)
    return rows, len(idx)


def _rank(rows, ncols):
    if not rows or not ncols:
        return 0
    return DomainMatrix(rows, (len(rows), ncols), QQ).rank()


def _partials(f):
    return [f.diff(0), f.diff(1), f.diff(2)]


def jacobian_dim(f, k):
    """dim (J_f)_k."""
    rows, n = _spanning_rows(_partials(f), k)
    return _rank(rows, n)


def milnor_dim(f, k):
    """dim M(f)_k = dim S_k - dim (J_f)_k."""
    if k < 0:
        return 0
    return (k + 2) * (k + 1) // 2 - jacobian_dim(f, k)


def saturation_dim(f, k):
    """dim (I_f)_k for I_f = J_f : (x, y, z)^infinity."""
    if k < 0:
        return 0
    d = f.degree
    N = max(0, 3 * d - 4 - k)
    j = k + N
    rows, n = _spanning_rows(_partials(f), j)
    if not rows:
        return 0
    # linear forms vanishing on (J_f)_j
    null = DomainMatrix(rows, (len(rows), n), QQ).nullspace().to_list() if _rank(rows, n) < n else []
    if not null:
        return (k + 2) * (k + 1) // 2
    idx_j = _index(j)
    mons_k = monomials_of_degree(k)
    cond = []
    for u in monomials_of_degree(N):
        for w in null:
            cond.append([(w[idx_j[(a[0] + u[0], a[1] + u[1], a[2] + u[2])]]) for a in mons_k])
    return len(mons_k) - _rank(cond, len(mons_k))


def jacobian_module_dim(f, k):
    """n(f)_k = dim (I_f)_k - dim (J_f)_k."""
    if k < 0:
        return 0
    return saturation_dim(f, k) - jacobian_dim(f, k)


def tables(f, kmax=None):
    """(M table, N table) for k = 0..kmax (default 3d - 4)."""
    kmax = 3 * f.degree - 4 if kmax is None else kmax
    M = [milnor_dim(f, k) for k in range(kmax + 1)]
    N = [jacobian_module_dim(f, k) for k in range(kmax + 1)]
    return M, N
