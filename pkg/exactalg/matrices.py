"""Exact linear algebra over a coefficient field, on sympy's ``DomainMatrix``.

Rows hold field elements; elimination runs in ``field.domain`` and results come
back as field elements. The reduced row echelon form is unique, so every
reduction is deterministic.
"""
from sympy.polys.matrices import DomainMatrix

from utils.exceptions import NotAllowed


class Matrix:
    def __init__(self, field, rows, cols=None):
        self.field = field
        self.rows = [list(row) for row in rows]
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise NotAllowed('Matrix rows have different lengths')
        if widths:
            width = widths.pop()
            if cols is not None and cols != width:
                raise NotAllowed(f'Expected {cols} columns, got {width}')
            cols = width
        self.shape = (len(self.rows), cols or 0)
        to_domain = field.to_domain
        self.dm = DomainMatrix(
            [[to_domain(field(v)) for v in row] for row in self.rows], self.shape, field.domain)

    def _from_dm(self, dm):
        from_domain = self.field.from_domain
        return [tuple(from_domain(v) for v in row) for row in dm.to_list()]

    def rref(self):
        if not all(self.shape):
            return [], ()
        reduced, pivots = self.dm.rref()
        return self._from_dm(reduced)[:len(pivots)], tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        nrows, ncols = self.shape
        if not nrows:
            zero, one = self.field.zero, self.field.one
            return [tuple(one if j == i else zero for j in range(ncols)) for i in range(ncols)]
        reduced, pivots = self.dm.rref()
        if len(pivots) == ncols:
            return []
        return self._from_dm(reduced.nullspace_from_rref(pivots))

    def apply(self, vector):
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, vector)), zero) for row in self.rows)

    def determinant(self):
        n, ncols = self.shape
        if n != ncols:
            raise NotAllowed('The determinant needs a square matrix')
        if n == 0:
            return self.field.one
        return self.field.from_domain(self.dm.det())


def row_reduce(field, rows, cols=None):
    """Canonical basis of the row space: (RREF rows, pivot columns)."""
    return Matrix(field, rows, cols).rref()


def in_row_space(basis, pivots, vector):
    return not any(reduce_vector(basis, pivots, vector))


def reduce_vector(basis, pivots, vector):
    v = list(vector)
    for row, p in zip(basis, pivots):
        factor = v[p]
        if factor != 0:
            v = [a - factor * b for a, b in zip(v, row)]
    return v


def polynomial_determinant(rows):
    """Determinant of a square matrix of Polynomials sharing one ring."""
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise NotAllowed('The determinant needs a square matrix')
    first = rows[0][0]
    for row in rows:
        for entry in row:
            first._lift(entry)
    dm = DomainMatrix([[entry.element for entry in row] for row in rows], (n, n), first.ring.to_domain())
    return first._wrap(dm.det())
