"""Dense exact linear algebra over any field whose elements support
+, -, *, inv()/division and truthiness (zero is falsy).

Matrices are plain lists of row lists; both Fraction and ScalarFn entries
work.  Everything here is straightforward Gauss elimination with exact
pivots -- sizes in this package stay small (tens, rarely low hundreds), so
clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(n, m, zero=Fraction(0)):
    return [[zero] * m for _ in range(n)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_copy(A):
    return [row[:] for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if k else 0
    Bt = [[B[t][j] for t in range(k)] for j in range(m)]
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bt[j]
            acc = None
            for t in range(k):
                a = Ai[t]
                if a:
                    b = Bj[t]
                    if b:
                        p = a * b
                        acc = p if acc is None else acc + p
            row.append(acc if acc is not None else Ai[0] * 0)
        out.append(row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = None
        for a, x in zip(row, v):
            if a and x:
                p = a * x
                acc = p if acc is None else acc + p
        out.append(acc if acc is not None else row[0] * 0)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def kron(A, B):
    p, q = len(B), len(B[0])
    out = []
    for i in range(len(A)):
        for k in range(p):
            row = []
            for j in range(len(A[0])):
                a = A[i][j]
                row.extend(a * B[k][l] for l in range(q))
            out.append(row)
    return out


def _inv_entry(x):
    return x.inv() if hasattr(x, "inv") else Fraction(1) / x


def rref(A):
    """Reduced row echelon form (in place on a copy); returns
    (R, pivots) where pivots is the list of pivot column indices."""
    R = mat_copy(A)
    n = len(R)
    m = len(R[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        p = None
        for i in range(r, n):
            if R[i][c]:
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        s = _inv_entry(R[r][c])
        R[r] = [s * x for x in R[r]]
        for i in range(n):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots


def rank(A):
    return len(rref(A)[1]) if A else 0


def mat_inv(A):
    n = len(A)
    one = None
    for row in A:
        for x in row:
            if x:
                one = x * _inv_entry(x)
                break
        if one is not None:
            break
    if one is None:
        raise ZeroDivisionError("singular matrix")
    zero = one - one
    aug = [A[i][:] + [one if i == j else zero for j in range(n)] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def solve(A, b):
    """One solution of A x = b, or None if inconsistent (minimal-pivot
    solution: free variables set to zero)."""
    n = len(A)
    m = len(A[0]) if n else 0
    aug = [A[i][:] + [b[i]] for i in range(n)]
    R, piv = rref(aug)
    if m in piv:
        return None
    zero = b[0] * 0 if n else Fraction(0)
    x = [zero] * m
    for r, c in enumerate(piv):
        x[c] = R[r][m]
    return x


def nullspace(A):
    """Basis of the right kernel, one vector per free column."""
    n = len(A)
    m = len(A[0]) if n else 0
    R, piv = rref(A)
    one = None
    for row in A:
        for x in row:
            if x:
                one = x * _inv_entry(x)
                break
        if one is not None:
            break
    if one is None:
        one = Fraction(1)
    zero = one - one
    pivset = set(piv)
    basis = []
    for c in range(m):
        if c in pivset:
            continue
        v = [zero] * m
        v[c] = one
        for r, pc in enumerate(piv):
            v[pc] = zero - R[r][c]
        basis.append(v)
    return basis


def det(A):
    n = len(A)
    if n == 0:
        return Fraction(1)
    R = mat_copy(A)
    one = None
    for row in R:
        for x in row:
            if x:
                one = x * _inv_entry(x)
                break
        if one is not None:
            break
    if one is None:
        return A[0][0]
    acc = one
    sign = 1
    for c in range(n):
        p = None
        for i in range(c, n):
            if R[i][c]:
                p = i
                break
        if p is None:
            return R[0][0] * 0
        if p != c:
            R[c], R[p] = R[p], R[c]
            sign = -sign
        acc = acc * R[c][c]
        s = _inv_entry(R[c][c])
        for i in range(c + 1, n):
            if R[i][c]:
                f = s * R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[c])]
    return acc if sign > 0 else (R[0][0] * 0) - acc


def mat_eq(A, B):
    if len(A) != len(B):
        return False
    for ra, rb in zip(A, B):
        if len(ra) != len(rb):
            return False
        for a, b in zip(ra, rb):
            if a != b:
                return False
    return True


def is_zero_matrix(A):
    return all(not x for row in A for x in row)
