"""Exact integer matrix routines: Smith form, kernels, lattice quotients.

Matrices are lists of row lists of Python ints, so everything here is
fraction free and exact at any size.
"""

from dataclasses import dataclass


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    if not mat:
        return []
    return [list(col) for col in zip(*mat)]


def mat_mul(a, b):
    if not a or not b:
        return [[] for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def columns(mat):
    return transpose(mat)


def from_columns(cols):
    return transpose(cols)


@dataclass
class SNFResult:
    """u * mat * v is diagonal with entries diag, each dividing the next."""

    diag: list
    u: list
    v: list
    u_inv: list
    v_inv: list

    @property
    def rank(self):
        return sum(1 for d in self.diag if d != 0)


def snf(mat):
    """Smith normal form with tracked unimodular transforms and inverses."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [row[:] for row in mat]
    u = identity(m)
    u_inv = identity(m)
    v = identity(n)
    v_inv = identity(n)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in u_inv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for r in u_inv:
            r[j] -= c * r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in u_inv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def col_add(i, j, c):
        # col_i += c * col_j
        for r in a:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]
        v_inv[j] = [x - c * y for x, y in zip(v_inv[j], v_inv[i])]

    def col_neg(i):
        for r in a:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        v_inv[i] = [-x for x in v_inv[i]]

    t = 0
    size = min(m, n)
    while t < size:
        best = None
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                w = abs(a[i][j])
                if w and (best is None or w < best):
                    best = w
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        while True:
            swapped = True
            while swapped:
                swapped = False
                for i in range(t + 1, m):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        if q:
                            row_add(i, t, -q)
                        if a[i][t]:
                            row_swap(t, i)
                            swapped = True
                for j in range(t + 1, n):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        if q:
                            col_add(j, t, -q)
                        if a[t][j]:
                            col_swap(t, j)
                            swapped = True
            d = a[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    diag = [a[i][i] for i in range(size)]
    return SNFResult(diag, u, v, u_inv, v_inv)


def kernel_basis(mat, ncols=None):
    """Basis columns of the integer kernel lattice {x : mat @ x = 0}.

    The returned lattice is saturated: any integer kernel vector is an
    integer combination of the basis.
    """
    if not mat:
        n = ncols or 0
        return columns(identity(n))
    res = snf(mat)
    n = len(mat[0])
    return [
        [res.v[i][j] for i in range(n)]
        for j in range(res.rank, n)
    ]


def solve(mat, rhs, res=None):
    """One integer solution x of mat @ x = rhs, or None."""
    if len(rhs) != len(mat):
        raise ValueError("rhs length %d does not match %d rows" % (len(rhs), len(mat)))
    if res is None:
        res = snf(mat)
    m = len(mat)
    n = len(mat[0]) if m else 0
    c = mat_vec(res.u, rhs)
    y = [0] * n
    for j in range(m):
        d = res.diag[j] if j < len(res.diag) else 0
        if d:
            if c[j] % d:
                return None
            y[j] = c[j] // d
        elif c[j]:
            return None
    return mat_vec(res.v, y)


def quotient_structure(basis_mat, gen_cols):
    """Structure of lattice(basis_mat columns) / lattice(gen_cols).

    basis_mat columns must be independent and every generator column
    must lie in their span.  Returns (factors, generators): invariant
    factors (0 marks a free summand) paired with ambient-coordinate
    generator columns.
    """
    k = len(basis_mat[0]) if basis_mat else 0
    res_b = snf(basis_mat)
    coords = []
    for g in gen_cols:
        x = solve(basis_mat, g, res_b)
        if x is None:
            raise ValueError("generator outside the spanned lattice")
        coords.append(x)
    if not coords:
        factors = [0] * k
        gens = columns(basis_mat)
        return factors, gens
    expr = from_columns(coords)  # k x g
    res = snf(expr)
    factors = [res.diag[i] if i < len(res.diag) else 0 for i in range(k)]
    new_basis = mat_mul(basis_mat, res.u_inv)
    gens = columns(new_basis)
    return factors, gens


def rank_mod_prime(mat, p):
    """Rank of mat over the field with p elements."""
    a = [[x % p for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    col = 0
    while rank < m and col < n:
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank
