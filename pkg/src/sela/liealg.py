"""Type-A root data and the root-graded Lie algebra sl_n(A).

sl_n(A) = [gl_n(A), gl_n(A)] consists of the n x n matrices over A whose
trace lies in [A,A]. It decomposes as L_0 plus the root spaces E_ij(A),
and L_0 itself splits as [A,A]E_kk + sum_i h_i(A) for any fixed k.

Basis keys:
  ('E', i, j, t)  a_t E_ij with i != j (1-indexed matrix positions)
  ('C', r)        c_r E_kk, c_r the r-th reduced basis vector of [A,A] (k=1)
  ('h', i, t)     h_i(a_t) = a_t (E_ii - E_{i+1,i+1})

The basis list is kept in the triangular order L_- < L_0 < L_+ expected by
the enveloping-algebra module.
"""

import random

from .exactla import (LinearSolver, RowReducer, Subspace, nrm,
                      subspace_from_rows, vec_iadd_scaled, vec_scale)
from .algebra import opposite


class RootDatumA:
    """Root system A_{n-1}: simple roots, fundamental weights, Cartan pairing."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("n >= 2 required")
        self.n = n
        self.rank = n - 1

    def cartan(self, i, j):
        # <alpha_j, alpha_i^vee>
        if i == j:
            return 2
        if abs(i - j) == 1:
            return -1
        return 0

    def alpha(self, i):
        """Simple root alpha_i in fundamental-weight coordinates."""
        return Weight(self, tuple(self.cartan(j + 1, i)
                                  for j in range(self.rank)))

    def omega(self, i):
        return Weight(self, tuple(1 if j + 1 == i else 0
                                  for j in range(self.rank)))

    def root_weight(self, i, j):
        """eps_i - eps_j as a Weight (values on the coroots h_m)."""
        vals = []
        for m in range(1, self.n):
            v = (1 if i == m else 0) - (1 if i == m + 1 else 0) \
                - (1 if j == m else 0) + (1 if j == m + 1 else 0)
            vals.append(v)
        return Weight(self, tuple(vals))


class Weight:
    """Integral weight in fundamental-weight coordinates (values on h_i)."""

    def __init__(self, datum, coords):
        self.datum = datum
        self.coords = tuple(coords)
        assert len(self.coords) == datum.rank

    def __add__(self, other):
        return Weight(self.datum, tuple(a + b for a, b in
                                        zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(self.datum, tuple(a - b for a, b in
                                        zip(self.coords, other.coords)))

    def __eq__(self, other):
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Weight%r" % (self.coords,)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    def root_coordinates(self):
        """Express the weight in the simple-root basis (rational in general);
        returns None when not in the root lattice span with this rank."""
        # solve C^T x = coords for the A_{n-1} Cartan matrix C
        from fractions import Fraction
        n = self.datum.rank
        rhs = [Fraction(c) for c in self.coords]
        mat = [[Fraction(self.datum.cartan(i + 1, j + 1)) for j in range(n)]
               for i in range(n)]
        # gaussian elimination, exact
        for col in range(n):
            piv = next(r for r in range(col, n) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / mat[col][col]
            mat[col] = [v * inv for v in mat[col]]
            rhs[col] *= inv
            for r in range(n):
                if r != col and mat[r][col] != 0:
                    f = mat[r][col]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                    rhs[r] -= f * rhs[col]
        return rhs


class GradedLie:
    """sl_n(A) with its weight decomposition and L_0 coordinates."""

    def __init__(self, coeff, n, jacobi_samples=500, check=True):
        self.A = coeff
        self.n = n
        self.datum = RootDatumA(n)
        dA = coeff.dim
        comm = subspace_from_rows(
            [coeff.commutator({i: 1}, {j: 1})
             for i in range(dA) for j in range(i + 1, dA)], dA)
        self.comm_rows = comm.basis_rows()
        self.dim = n * n * dA - dA + len(self.comm_rows)
        if self.dim > 5000:
            raise ValueError("dim sl_n(A) = %d exceeds guard" % self.dim)

        neg, pos = [], []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i > j:
                    neg.extend(('E', i, j, t) for t in range(dA))
                elif i < j:
                    pos.extend(('E', i, j, t) for t in range(dA))
        zero = [('C', r) for r in range(len(self.comm_rows))]
        zero += [('h', i, t) for i in range(1, n) for t in range(dA)]
        self.l0_keys = zero
        self.basis = neg + zero + pos
        self.index = {k: p for p, k in enumerate(self.basis)}
        self.l0_range = (len(neg), len(neg) + len(zero))
        self._weights = [self._weight_of_key(k) for k in self.basis]
        self._solvers = {}
        self._bracket_cache = {}
        if check:
            self._check_hadi0()
            self._check_c_part_ideal()
            self._spot_check_jacobi(jacobi_samples)

    # -- basis bookkeeping -----------------------------------------------

    def _weight_of_key(self, key):
        if key[0] == 'E':
            return self.datum.root_weight(key[1], key[2])
        return Weight(self.datum, (0,) * self.datum.rank)

    def weight_of_index(self, p):
        return self._weights[p]

    def is_l0_index(self, p):
        lo, hi = self.l0_range
        return lo <= p < hi

    def block_of_index(self, p):
        lo, hi = self.l0_range
        return "neg" if p < lo else ("zero" if p < hi else "pos")

    def matrix_form(self, key):
        """The n x n matrix (dict (i,j) -> A-coords) of a basis element."""
        if key[0] == 'E':
            _, i, j, t = key
            return {(i, j): {t: 1}}
        if key[0] == 'C':
            return {(self._split_k(), self._split_k()):
                    dict(self.comm_rows[key[1]])}
        _, i, t = key
        return {(i, i): {t: 1}, (i + 1, i + 1): {t: -1}}

    def _split_k(self):
        return 1        # default split index for the stored basis

    def element_matrix(self, elem):
        out = {}
        for key, c in elem.items():
            for pos, coords in self.matrix_form(key).items():
                cur = out.setdefault(pos, {})
                vec_iadd_scaled(cur, c, coords)
        return {p: v for p, v in out.items() if v}

    def _diag_vector(self, diag_entries):
        """Flatten {i: A-coords} (1-indexed) into one coordinate dict."""
        dA = self.A.dim
        out = {}
        for i, coords in diag_entries.items():
            for t, v in coords.items():
                out[(i - 1) * dA + t] = v
        return out

    def _l0_solver(self, k):
        sol = self._solvers.get(k)
        if sol is None:
            gens = []
            keys = []
            for r in range(len(self.comm_rows)):
                gens.append(self._diag_vector({k: self.comm_rows[r]}))
                keys.append(('C', r))
            for i in range(1, self.n):
                for t in range(self.A.dim):
                    gens.append(self._diag_vector({i: {t: 1}, i + 1: {t: -1}}))
                    keys.append(('h', i, t))
            sol = LinearSolver(gens, self.n * self.A.dim)
            if sol.rank != len(gens):
                raise AssertionError("L0 split is not direct for k=%d" % k)
            self._solvers[k] = (sol, keys)
        return self._solvers[k]

    def decompose_matrix(self, mat):
        """Element dict from an n x n matrix over A; errors if not in sl_n(A)."""
        out = {}
        diag = {}
        for (i, j), coords in mat.items():
            if i == j:
                diag[i] = coords
            else:
                for t, v in coords.items():
                    if v != 0:
                        out[('E', i, j, t)] = nrm(out.get(('E', i, j, t), 0) + v)
        if diag:
            sol, keys = self._l0_solver(self._split_k())
            c = sol.coords(self._diag_vector(diag))
            if c is None:
                raise ValueError("diagonal part not in L0 (trace not in [A,A])")
            for gi, v in c.items():
                if v != 0:
                    out[keys[gi]] = v
        return {k: v for k, v in out.items() if v != 0}

    # -- element builders --------------------------------------------------

    def E(self, i, j, a):
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError("bad root space indices")
        return {('E', i, j, t): v for t, v in a.items() if v != 0}

    def e(self, i, a):
        return self.E(i, i + 1, a)

    def f(self, i, a):
        return self.E(i + 1, i, a)

    def h(self, i, a):
        if not 1 <= i < self.n:
            raise ValueError("index out of range")
        return self.decompose_matrix({(i, i): dict(a),
                                      (i + 1, i + 1): vec_scale(a, -1)})

    def H(self, i, a, b):
        ab = self.A.multiply(a, b)
        ba = self.A.multiply(b, a)
        return self.decompose_matrix({(i, i): ab,
                                      (i + 1, i + 1): vec_scale(ba, -1)})

    # -- bracket -------------------------------------------------------------

    def bracket_basis(self, p, q):
        cached = self._bracket_cache.get((p, q))
        if cached is not None:
            return cached
        m1 = self.matrix_form(self.basis[p])
        m2 = self.matrix_form(self.basis[q])
        prod = self._mat_mult(m1, m2)
        back = self._mat_mult(m2, m1)
        for pos, coords in back.items():
            cur = prod.setdefault(pos, {})
            vec_iadd_scaled(cur, -1, coords)
        prod = {pos: v for pos, v in prod.items() if v}
        out = self.decompose_matrix(prod)
        self._bracket_cache[(p, q)] = out
        return out

    def _mat_mult(self, m1, m2):
        out = {}
        for (i, j), a in m1.items():
            for (j2, k), b in m2.items():
                if j == j2:
                    prod = self.A.multiply(a, b)
                    if prod:
                        cur = out.setdefault((i, k), {})
                        vec_iadd_scaled(cur, 1, prod)
        return {p: v for p, v in out.items() if v}

    def bracket(self, x, y):
        out = {}
        for kx, cx in x.items():
            px = self.index[kx]
            for ky, cy in y.items():
                c = nrm(cx * cy)
                if c != 0:
                    vec_iadd_scaled(out, c, self.bracket_basis(px, self.index[ky]))
        return out

    def l0_coordinates(self, elem, k=None):
        """(c in [A,A] coords of A, list of a_i in A coords) for x in L_0."""
        if k is None:
            k = self._split_k()
        diag = {}
        for key, v in elem.items():
            if key[0] == 'E':
                raise ValueError("element has nonzero weight component")
            for pos, coords in self.matrix_form(key).items():
                cur = diag.setdefault(pos[0], {})
                vec_iadd_scaled(cur, v, coords)
        sol, keys = self._l0_solver(k)
        c = sol.coords(self._diag_vector({i: v for i, v in diag.items() if v}))
        if c is None:
            raise ValueError("not in L0")
        cpart = {}
        apart = [dict() for _ in range(self.n - 1)]
        for gi, v in c.items():
            key = keys[gi]
            if key[0] == 'C':
                vec_iadd_scaled(cpart, v, self.comm_rows[key[1]])
            else:
                apart[key[1] - 1][key[2]] = v
        return cpart, apart

    # -- construction checks ---------------------------------------------

    def _check_hadi0(self):
        # L0 = sum_i [L_alpha_i, L_-alpha_i] as a rank identity
        red = RowReducer()
        dA = self.A.dim
        for i in range(1, self.n):
            for s in range(dA):
                for t in range(dA):
                    br = self.bracket(self.e(i, {s: 1}), self.f(i, {t: 1}))
                    red.add({self.index[k]: v for k, v in br.items()})
        if red.rank != len(self.l0_keys):
            raise AssertionError("L0 is not spanned by [L_a, L_-a]")

    def _check_c_part_ideal(self):
        # [A,A]E_kk is a Lie ideal of L0
        cset = [('C', r) for r in range(len(self.comm_rows))]
        for ckey in cset:
            for key in self.l0_keys:
                br = self.bracket({ckey: 1}, {key: 1})
                if any(out_key[0] != 'C' for out_key in br):
                    raise AssertionError("C part is not a Lie ideal of L0")

    def _spot_check_jacobi(self, samples):
        rng = random.Random(987)
        m = len(self.basis)
        for _ in range(samples):
            x = {self.basis[rng.randrange(m)]: rng.randint(1, 3)}
            y = {self.basis[rng.randrange(m)]: rng.randint(1, 3)}
            z = {self.basis[rng.randrange(m)]: rng.randint(1, 3)}
            total = self.bracket(x, self.bracket(y, z))
            vec_iadd_scaled(total, 1, self.bracket(y, self.bracket(z, x)))
            vec_iadd_scaled(total, 1, self.bracket(z, self.bracket(x, y)))
            if total:
                raise AssertionError("Jacobi identity fails on sample")


def make_sln(coeff, n, **kw):
    return GradedLie(coeff, n, **kw)


def theta(L):
    """The isomorphism sl_n(A) -> sl_n(A^op), x -> -d x^t d.

    Returns (Lop, fn) where fn maps element dicts of L to element dicts of
    Lop. On root vectors: a E_ij -> -a E_{n+1-j, n+1-i}.
    """
    Lop = GradedLie(opposite(L.A), L.n, check=False)
    n = L.n

    def fn(elem):
        mat = L.element_matrix(elem)
        out = {}
        for (i, j), coords in mat.items():
            pos = (n + 1 - j, n + 1 - i)
            cur = out.setdefault(pos, {})
            vec_iadd_scaled(cur, -1, coords)
        return Lop.decompose_matrix({p: v for p, v in out.items() if v})

    return Lop, fn


def theta_star(datum, weight):
    """Induced weight map: omega_i -> omega_{n-i}."""
    return Weight(datum, tuple(reversed(weight.coords)))
