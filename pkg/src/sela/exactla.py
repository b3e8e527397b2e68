"""Exact scalar arithmetic and sparse linear algebra over QQ and prime fields.

Everything downstream (algebra quotients, ideal saturation, module slices)
reduces its questions to rank / membership / quotient-dimension problems here.
No floating point is used anywhere; rational mode works with Python ints and
fractions.Fraction, prime-field mode with residues.
"""

from fractions import Fraction

import numpy as np


def nrm(x):
    """Normalize a rational scalar: collapse integral Fractions to int."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return x


class FieldQQ:
    """The rationals. Values are ints or Fractions in lowest terms."""

    tag = "qq"

    def convert(self, x):
        if isinstance(x, (int, Fraction)):
            return nrm(x)
        raise TypeError("not an exact rational: %r" % (x,))

    def add(self, a, b):
        return nrm(a + b)

    def sub(self, a, b):
        return nrm(a - b)

    def mul(self, a, b):
        return nrm(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        return nrm(Fraction(1, 1) / a)

    def div(self, a, b):
        return nrm(Fraction(a) / b)

    one = 1
    zero = 0


class FieldFp:
    """Prime field F_p. Values are ints in [0, p)."""

    def __init__(self, p):
        if p < 3:
            raise ValueError("prime too small")
        self.p = p
        self.tag = "fp:%d" % p

    def convert(self, x):
        p = self.p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by p=%d" % p)
            return (x.numerator % p) * pow(den, -1, p) % p
        if isinstance(x, int):
            return x % p
        raise TypeError("not an exact scalar: %r" % (x,))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    one = 1
    zero = 0


QQ = FieldQQ()

# two default primes for the modular mode; both close to 2^31
DEFAULT_PRIMES = (2147483629, 2147483587)


def vec_scale(v, c, field=QQ):
    if c == 0:
        return {}
    return {k: field.mul(c, x) for k, x in v.items()}


def vec_iadd_scaled(dst, c, src, field=QQ):
    """dst += c*src in place; zero entries are removed."""
    if c == 0:
        return dst
    for k, x in src.items():
        y = field.add(dst.get(k, 0), field.mul(c, x))
        if y == 0:
            dst.pop(k, None)
        else:
            dst[k] = y
    return dst


def vec_add(u, v, field=QQ):
    out = dict(u)
    vec_iadd_scaled(out, field.one, v, field)
    return out

def vec_sub(u, v, field=QQ):
    out = dict(u)
    vec_iadd_scaled(out, field.neg(field.one), v, field)
    return out


def vec_convert(v, field):
    out = {}
    for k, x in v.items():
        y = field.convert(x)
        if y != 0:
            out[k] = y
    return out


class SparseMatrix:
    """Entries as (row, col, value) triples, row-major canonical order."""

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        seen = set()
        canon = []
        for (r, c, v) in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError("entry (%d,%d) out of range" % (r, c))
            if (r, c) in seen:
                raise ValueError("duplicate entry position (%d,%d)" % (r, c))
            seen.add((r, c))
            if v != 0:
                canon.append((r, c, v))
        canon.sort(key=lambda e: (e[0], e[1]))
        self.entries = canon

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c, v) in self.entries:
            rows[r][c] = v
        return rows


class RowReducer:
    """Incremental reduced-row-echelon accumulator.

    Pivot rows are monic and fully reduced against each other, so the stored
    basis is the (unique) RREF of the row space: deterministic by construction,
    independent of insertion order.
    """

    def __init__(self, field=QQ):
        self.field = field
        self.pivots = {}        # pivot col -> row dict (row[col] == 1)

    def reduce(self, row):
        """Return row reduced against the current pivot rows (a fresh dict)."""
        f = self.field
        row = {c: x for c, x in row.items() if x != 0}
        # pivot rows contain no other pivot columns, so one pass suffices
        for c in [c for c in row if c in self.pivots]:
            x = row.get(c, 0)
            if x != 0:
                vec_iadd_scaled(row, f.neg(x), self.pivots[c], f)
        return row

    def add(self, row):
        """Insert a row; returns its pivot column, or None if dependent."""
        f = self.field
        row = self.reduce(row)
        if not row:
            return None
        piv = min(row)
        inv = f.inv(row[piv])
        row = vec_scale(row, inv, f)
        for c, existing in self.pivots.items():
            x = existing.get(piv, 0)
            if x != 0:
                vec_iadd_scaled(existing, f.neg(x), row, f)
        self.pivots[piv] = row
        return piv

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, vec):
        return not self.reduce(vec)

    def sorted_rows(self):
        return [self.pivots[c] for c in sorted(self.pivots)]


class Subspace:
    """A row-reduced basis of a subspace of a fixed coordinate space."""

    def __init__(self, ambient_dim, rows, field=QQ, _reduced=False):
        self.ambient_dim = ambient_dim
        self.field = field
        if _reduced:
            self._red = rows            # a RowReducer
        else:
            red = RowReducer(field)
            for r in rows:
                for c in r:
                    if not (0 <= c < ambient_dim):
                        raise ValueError("coordinate %d out of ambient" % c)
                red.add(r)
            self._red = red

    @classmethod
    def from_reducer(cls, ambient_dim, red):
        return cls(ambient_dim, red, red.field, _reduced=True)

    @property
    def dim(self):
        return self._red.rank

    @property
    def pivots(self):
        return self._red.pivots

    def basis_rows(self):
        return self._red.sorted_rows()

    def contains(self, vec):
        return self._red.contains(vec)

    def reduce(self, vec):
        return self._red.reduce(vec)

    def _check_compatible(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch: %d vs %d"
                             % (self.ambient_dim, other.ambient_dim))
        if self.field.tag != other.field.tag:
            raise ValueError("field mismatch")

    def sum(self, other):
        self._check_compatible(other)
        return Subspace(self.ambient_dim,
                        self.basis_rows() + other.basis_rows(), self.field)

    def intersection(self, other):
        """Zassenhaus: reduce [u|u] and [v|0]; left-zero rows give u cap v."""
        self._check_compatible(other)
        n = self.ambient_dim
        red = RowReducer(self.field)
        for r in self.basis_rows():
            both = dict(r)
            for c, x in r.items():
                both[c + n] = x
            red.add(both)
        for r in other.basis_rows():
            red.add(dict(r))
        rows = []
        for r in red.sorted_rows():
            if all(c >= n for c in r):
                rows.append({c - n: x for c, x in r.items()})
        return Subspace(n, rows, self.field)

    def quotient_dim(self, sub=None):
        if sub is None:
            return self.ambient_dim - self.dim
        self._check_compatible(sub)
        return self.dim - self.intersection(sub).dim

    def equals(self, other):
        self._check_compatible(other)
        if self.dim != other.dim:
            return False
        return all(self.contains(r) for r in other.basis_rows())


def row_reduce(m, field=QQ):
    """Row-reduce a SparseMatrix (or list of row dicts with a cols count)."""
    if isinstance(m, SparseMatrix):
        return Subspace(m.cols, m.row_dicts(), field)
    raise TypeError("row_reduce expects a SparseMatrix")


def subspace_from_rows(rows, ambient_dim, field=QQ):
    return Subspace(ambient_dim, rows, field)


class LinearSolver:
    """Express vectors in the span of a fixed generating list.

    coords(v) returns c with v = sum c_i * gen_i, or None if v is outside
    the span. The answer is the canonical one induced by RREF elimination
    order, hence reproducible.
    """

    def __init__(self, generators, ambient_dim, field=QQ):
        self.field = field
        self.ambient_dim = ambient_dim
        self.n = len(generators)
        self._red = RowReducer(field)
        self._expr = {}          # pivot col -> coefficient dict over generators
        for i, g in enumerate(generators):
            row = dict(g)
            expr = {i: field.one}
            piv = self._add_tracked(row, expr)

    def _add_tracked(self, row, expr):
        f = self.field
        for c in [c for c in list(row) if c in self._red.pivots]:
            x = row.get(c, 0)
            if x != 0:
                vec_iadd_scaled(row, f.neg(x), self._red.pivots[c], f)
                vec_iadd_scaled(expr, f.neg(x), self._expr[c], f)
        if not row:
            return None
        piv = min(row)
        inv = f.inv(row[piv])
        row = vec_scale(row, inv, f)
        expr = vec_scale(expr, inv, f)
        for c, existing in self._red.pivots.items():
            x = existing.get(piv, 0)
            if x != 0:
                vec_iadd_scaled(existing, f.neg(x), row, f)
                vec_iadd_scaled(self._expr[c], f.neg(x), expr, f)
        self._red.pivots[piv] = row
        self._expr[piv] = expr
        return piv

    @property
    def rank(self):
        return self._red.rank

    def coords(self, vec):
        f = self.field
        row = {c: x for c, x in vec.items() if x != 0}
        out = {}
        for c in [c for c in list(row) if c in self._red.pivots]:
            x = row.get(c, 0)
            if x != 0:
                vec_iadd_scaled(row, f.neg(x), self._red.pivots[c], f)
                vec_iadd_scaled(out, x, self._expr[c], f)
        if row:
            return None
        return out


def left_nullspace(rows, ambient_dim, field=QQ):
    """Subspace of coefficient vectors c with sum_i c_i * rows[i] = 0."""
    red = RowReducer(field)
    exprs = {}               # pivot col -> coefficient dict
    null_rows = []
    for i, r in enumerate(rows):
        row = {c: x for c, x in r.items() if x != 0}
        expr = {i: field.one}
        # pivot rows here are only forward-eliminated, so loop to fixpoint
        while True:
            hit = sorted(c for c in row if c in red.pivots)
            if not hit:
                break
            for c in hit:
                x = row.get(c, 0)
                if x != 0:
                    vec_iadd_scaled(row, field.neg(x), red.pivots[c], field)
                    vec_iadd_scaled(expr, field.neg(x), exprs[c], field)
        if not row:
            null_rows.append(expr)
            continue
        piv = min(row)
        inv = field.inv(row[piv])
        red.pivots[piv] = vec_scale(row, inv, field)
        exprs[piv] = vec_scale(expr, inv, field)
    return Subspace(len(rows), null_rows, field)


class DenseFpReducer:
    """Dense mod-p row echelon accumulator backed by numpy int64 rows.

    Used for big saturations where dict-sparse rational rows are hopeless.
    p must stay below 2^31 so that a single coeff*row product fits in int64.
    """

    def __init__(self, ncols, p):
        if p >= 1 << 31:
            raise ValueError("p too large for the int64 kernel")
        self.ncols = ncols
        self.p = p
        self.pivots = {}         # col -> np.ndarray row (monic at col)

    def reduce(self, row):
        p = self.p
        row = np.array(row, dtype=np.int64) % p
        for c in np.nonzero(row)[0]:
            piv = self.pivots.get(int(c))
            if piv is not None and row[c]:
                row = (row - int(row[c]) * piv) % p
        # the scan above misses fill-in behind the cursor only if pivot rows
        # had support before their pivot column; RREF rows never do
        return row

    def add(self, row):
        p = self.p
        row = self.reduce(row)
        nz = np.nonzero(row)[0]
        if len(nz) == 0:
            return None
        c = int(nz[0])
        row = row * pow(int(row[c]), -1, p) % p
        for pc, prow in self.pivots.items():
            if prow[c]:
                self.pivots[pc] = (prow - int(prow[c]) * row) % p
        self.pivots[c] = row
        return c

    @property
    def rank(self):
        return len(self.pivots)
