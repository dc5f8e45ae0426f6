"""Exact linear algebra over Fractions. Small dense matrices only."""
from fractions import Fraction

def mat(rows):
    return [[Fraction(x) for x in row] for row in rows]

def matmul(A, B):
    k, m = len(B), len(B[0])
    return [[sum(A[i][t]*B[t][j] for t in range(k)) for j in range(m)] for i in range(len(A))]

def matvec(A, v):
    return [sum(A[i][j]*v[j] for j in range(len(v))) for i in range(len(A))]

def transpose(A):
    return [[A[i][j] for i in range(len(A))] for j in range(len(A[0]))]

def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

def rref(A):
    """Reduced row echelon form (copy) and pivot column list."""
    R = [list(row) for row in A]
    rows, cols = len(R), len(R[0]) if R else 0
    piv = []
    r = 0
    for c in range(cols):
        p = None
        for i in range(r, rows):
            if R[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [R[i][j] - f*R[r][j] for j in range(cols)]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return R, piv

def rank(A):
    if not A:
        return 0
    return len(rref(A)[1])

def nullspace(A):
    """Basis of the right null space."""
    R, piv = rref(A)
    cols = len(A[0])
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)]*cols
        v[fc] = Fraction(1)
        for r_, pc in enumerate(piv):
            v[pc] = -R[r_][fc]
        basis.append(v)
    return basis

def solve_in_span(columns, target):
    """x with sum x_j * columns[j] = target, or None if target is outside the span."""
    m = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    R, piv = rref(aug)
    if k in piv:
        return None
    x = [Fraction(0)]*k
    for r_, pc in enumerate(piv):
        x[pc] = R[r_][k]
    return x

def inverse_matrix(A):
    n = len(A)
    aug = [[Fraction(A[i][j]) for j in range(n)]
           + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    R, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return [[R[i][n + j] for j in range(n)] for i in range(n)]

def charpoly(A):
    """Faddeev-LeVerrier. Returns [1, c1, ..., cn] with
    det(xI - A) = x^n + c1 x^(n-1) + ... + cn."""
    n = len(A)
    M = [[Fraction(0)]*n for _ in range(n)]
    c = [Fraction(1)] + [Fraction(0)]*n
    for k in range(1, n+1):
        AM = matmul(A, M)
        M = [[AM[i][j] + (c[k-1] if i == j else 0) for j in range(n)] for i in range(n)]
        AM = matmul(A, M)
        c[k] = -Fraction(sum(AM[i][i] for i in range(n)), k)
    return c

def charpoly_ascending_int(A):
    """Characteristic polynomial as ascending integer coefficients
    [c0, c1, ..., 1]; raises if any coefficient is non-integral."""
    desc = charpoly(A)
    out = []
    for x in reversed(desc):
        f = Fraction(x)
        assert f.denominator == 1, "characteristic polynomial has non-integer coefficient"
        out.append(int(f))
    return out
