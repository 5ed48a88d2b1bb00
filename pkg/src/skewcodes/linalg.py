"""Exact dense linear algebra over a FieldSpec.

Matrices are lists of rows.  Public helpers accept FieldElement grids and
unwrap to packed indices; the elimination kernels work on int rows so that
the distance oracle and rank sweeps stay fast.
"""

from __future__ import annotations

from .fields import FieldElement


def unwrap(rows):
    """FieldElement grid -> int grid (idempotent on int grids)."""
    return [
        [c.i if isinstance(c, FieldElement) else c for c in row] for row in rows
    ]


def wrap(rows, field):
    return [[FieldElement(field, c) for c in row] for row in rows]


def rref_i(rows, field):
    """Reduced row echelon form of an int grid; returns (rref, pivot_cols)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    mul, sub, inv = field.mul_i, field.sub_i, field.inv_i
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        c = inv(m[r][col])
        if c != 1:
            m[r] = [mul(c, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [sub(v, mul(factor, w)) for v, w in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_i(rows, field):
    return len(rref_i(rows, field)[0])


def matrix_rank(rows, field):
    return rank_i(unwrap(rows), field)


def right_kernel_i(rows, field, ncols=None):
    """Basis of {x : A x = 0} (column vectors, returned as rows)."""
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise ValueError("ncols needed for an empty matrix")
    red, pivots = rref_i(rows, field)
    free = [j for j in range(ncols) if j not in pivots]
    neg = field.neg_i
    basis = []
    for j in free:
        vec = [0] * ncols
        vec[j] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = neg(red[r][j])
        basis.append(vec)
    return basis


def in_row_space_i(vec, rows, field):
    r0 = rank_i(rows, field)
    return rank_i(list(rows) + [list(vec)], field) == r0


def row_space_equal_i(a, b, field):
    ra, _ = rref_i(a, field)
    rb, _ = rref_i(b, field)
    return ra == rb


def mat_mul_i(a, b, field):
    if not a or not b:
        return []
    mul, add = field.mul_i, field.add_i
    bt = list(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            orow.append(acc)
        out.append(orow)
    return out


def mat_transpose(rows):
    return [list(r) for r in zip(*rows)]


def is_zero_matrix_i(rows):
    return all(not c for row in rows for c in row)


def mat_mul(a, b, field):
    return wrap(mat_mul_i(unwrap(a), unwrap(b), field), field)


def row_space_equal(a, b, field):
    return row_space_equal_i(unwrap(a), unwrap(b), field)


def in_row_space(vec, rows, field):
    return in_row_space_i([c.i for c in vec], unwrap(rows), field)


def right_kernel(rows, field, ncols=None):
    return wrap(right_kernel_i(unwrap(rows), field, ncols), field)
