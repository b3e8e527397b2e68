"""Finite-dimensional unital associative algebras by structure constants.

Includes the standard constructors (matrix, generalized quaternion, truncated
polynomial, opposite, JSON import), derived subspaces, tensor powers with
coordinate-wise product, quotients by two-sided ideals, and the symmetric
tensor algebras TS^ell(A) with their distinguished basis and product table.

Convention: the unit 1_A is always basis element 0. Constructors guarantee
this; from_json re-bases automatically when needed.
"""

import itertools
import json
from fractions import Fraction
from math import comb

from .exactla import (QQ, LinearSolver, RowReducer, Subspace, left_nullspace,
                      nrm, subspace_from_rows, vec_iadd_scaled, vec_scale)

_ASSOC_CHECK_DIM = 16     # full basis-triple check up to this dimension


class Algebra:
    """Unital associative algebra over QQ given by sparse structure constants.

    mul maps a basis pair (i, j) to the coordinate dict of b_i * b_j.
    """

    def __init__(self, dim, labels, mul, unit=None, check=True):
        self.dim = dim
        self.labels = list(labels)
        if len(self.labels) != dim:
            raise ValueError("label count != dim")
        self.mul = {k: {c: nrm(v) for c, v in row.items() if v != 0}
                    for k, row in mul.items()}
        self.unit = {0: 1} if unit is None else dict(unit)
        if dim > 0 and self.unit != {0: 1}:
            raise ValueError("unit must be basis element 0; re-base first")
        if check:
            self._check_unit()
            if dim <= _ASSOC_CHECK_DIM:
                self._check_associativity()

    def basis_product(self, i, j):
        return self.mul.get((i, j), {})

    def multiply(self, x, y):
        out = {}
        for i, xi in x.items():
            for j, yj in y.items():
                c = nrm(xi * yj)
                if c != 0:
                    vec_iadd_scaled(out, c, self.basis_product(i, j))
        return out

    def commutator(self, x, y):
        out = self.multiply(x, y)
        vec_iadd_scaled(out, -1, self.multiply(y, x))
        return out

    def power(self, x, k):
        out = dict(self.unit)
        for _ in range(k):
            out = self.multiply(out, x)
        return out

    def basis_vec(self, i):
        return {i: 1}

    def element(self, coords):
        return AlgElement(self, coords)

    def _check_unit(self):
        for i in range(self.dim):
            e = self.basis_vec(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise ValueError("unit law fails on basis element %d" % i)

    def _check_associativity(self):
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_product(i, j)
                for k in range(self.dim):
                    lhs = self.multiply(ij, self.basis_vec(k))
                    rhs = self.multiply(self.basis_vec(i),
                                        self.basis_product(j, k))
                    if lhs != rhs:
                        raise ValueError(
                            "associativity fails on basis triple (%d,%d,%d)"
                            % (i, j, k))

    def is_commutative(self):
        return all(self.basis_product(i, j) == self.basis_product(j, i)
                   for i in range(self.dim) for j in range(i))

    def structure_triples(self):
        out = []
        for (i, j), row in self.mul.items():
            for k, v in row.items():
                out.append((i, j, k, v))
        out.sort(key=lambda t: t[:3])
        return out


class AlgElement:
    """An element of an Algebra; thin wrapper over a coordinate dict."""

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = {k: nrm(v) for k, v in coords.items() if v != 0}

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            assert other.parent is self.parent
            return AlgElement(self.parent,
                              self.parent.multiply(self.coords, other.coords))
        return AlgElement(self.parent, vec_scale(self.coords, nrm(other)))

    __rmul__ = lambda self, c: self * c

    def __add__(self, other):
        out = dict(self.coords)
        vec_iadd_scaled(out, 1, other.coords)
        return AlgElement(self.parent, out)

    def __sub__(self, other):
        out = dict(self.coords)
        vec_iadd_scaled(out, -1, other.coords)
        return AlgElement(self.parent, out)

    def __eq__(self, other):
        return self.parent is other.parent and self.coords == other.coords

    def __repr__(self):
        if not self.coords:
            return "0"
        return " + ".join("%s*%s" % (v, self.parent.labels[k])
                          for k, v in sorted(self.coords.items()))

    def is_zero(self):
        return not self.coords


def rebase(alg, new_basis, labels):
    """Structure constants in a new basis (vectors in the old coordinates)."""
    if len(new_basis) != alg.dim:
        raise ValueError("new basis has wrong size")
    solver = LinearSolver(new_basis, alg.dim)
    if solver.rank != alg.dim:
        raise ValueError("proposed basis is linearly dependent")
    mul = {}
    for i, vi in enumerate(new_basis):
        for j, vj in enumerate(new_basis):
            prod = solver.coords(alg.multiply(vi, vj))
            if prod:
                mul[(i, j)] = prod
    unit = solver.coords(alg.unit)
    if unit != {0: 1}:
        raise ValueError("unit is not element 0 of the proposed basis")
    return Algebra(alg.dim, labels, mul, check=False)


def _rebase_unit_first(alg, unit_coords, labels):
    """Pick a basis starting with the unit, completed greedily by old basis."""
    red = RowReducer()
    red.add(dict(unit_coords))
    chosen = [dict(unit_coords)]
    chosen_labels = ["1"]
    for i in range(alg.dim):
        if red.add({i: 1}) is not None:
            chosen.append({i: 1})
            chosen_labels.append(labels[i])
    return rebase(alg, chosen, chosen_labels)


def matrix_algebra(d):
    """Mat_d(k), re-based so the identity matrix is basis element 0."""
    if d < 1:
        raise ValueError("d >= 1 required")
    idx = {}
    labels = []
    for i in range(d):
        for j in range(d):
            idx[(i, j)] = len(labels)
            labels.append("E%d%d" % (i + 1, j + 1))
    mul = {}
    for (i, j) in idx:
        for (a, b) in idx:
            if j == a:
                mul[(idx[(i, j)], idx[(a, b)])] = {idx[(i, b)]: 1}
    unit = {idx[(i, i)]: 1 for i in range(d)}
    nat = Algebra.__new__(Algebra)
    nat.dim = d * d
    nat.labels = labels
    nat.mul = mul
    nat.unit = unit
    return _rebase_unit_first(nat, unit, labels)


def quaternion_algebra(a, b):
    """Generalized quaternion algebra: i^2 = a, j^2 = b, ij = -ji = k."""
    a, b = nrm(Fraction(a)), nrm(Fraction(b))
    if a == 0 or b == 0:
        raise ValueError("parameters must be nonzero")
    I, J, K = 1, 2, 3
    mul = {
        (I, I): {0: a}, (J, J): {0: b}, (K, K): {0: nrm(-a * b)},
        (I, J): {K: 1}, (J, I): {K: -1},
        (I, K): {J: a}, (K, I): {J: nrm(-a)},
        (J, K): {I: nrm(-b)}, (K, J): {I: b},
    }
    for t in range(4):
        mul[(0, t)] = {t: 1}
        if t:
            mul[(t, 0)] = {t: 1}
    return Algebra(4, ["1", "i", "j", "k"], mul)


def trunc_poly(m):
    """k[x]/(x^m), basis 1, x, ..., x^{m-1}."""
    if m < 1:
        raise ValueError("m >= 1 required")
    mul = {(i, j): {i + j: 1}
           for i in range(m) for j in range(m) if i + j < m}
    return Algebra(m, ["1"] + ["x^%d" % i for i in range(1, m)] if m > 1
                   else ["1"], mul)


def opposite(alg):
    mul = {(j, i): row for (i, j), row in alg.mul.items()}
    return Algebra(alg.dim, alg.labels, mul, check=False)


def tensor_product(algebras):
    """Tensor product with coordinate-wise multiplication."""
    dims = [a.dim for a in algebras]
    total = 1
    for d in dims:
        total *= d
    if total > 10 ** 6:
        raise ValueError("tensor dimension %d exceeds guard" % total)
    if total == 0:
        return Algebra(0, [], {}, unit={}, check=False)
    tuples = list(itertools.product(*[range(d) for d in dims]))
    index = {t: n for n, t in enumerate(tuples)}
    labels = ["(" + ")*(".join(algebras[p].labels[t[p]]
                               for p in range(len(dims))) + ")"
              if len(dims) > 1 else algebras[0].labels[t[0]]
              for t in tuples]
    mul = {}
    for ti in tuples:
        for tj in tuples:
            factors = [algebras[p].basis_product(ti[p], tj[p])
                       for p in range(len(dims))]
            if any(not f for f in factors):
                continue
            out = {}
            for combo in itertools.product(*[f.items() for f in factors]):
                key = index[tuple(c[0] for c in combo)]
                val = 1
                for c in combo:
                    val *= c[1]
                out[key] = nrm(out.get(key, 0) + val)
            out = {k: v for k, v in out.items() if v != 0}
            if out:
                mul[(index[ti], index[tj])] = out
    return Algebra(total, labels, mul, check=False)


def tensor_power(alg, ell):
    if ell < 1:
        raise ValueError("ell >= 1 required")
    return tensor_product([alg] * ell)


def make_algebra(spec):
    """Parse 'matrix:2', 'quaternion:1,-1', 'truncpoly:3', 'opposite:<spec>',
    'field' or an inline/loaded JSON dict."""
    if isinstance(spec, dict):
        return from_json(spec)
    if isinstance(spec, Algebra):
        return spec
    s = spec.strip()
    if s == "field":
        return trunc_poly(1)
    if s.startswith("matrix:"):
        return matrix_algebra(int(s.split(":", 1)[1]))
    if s.startswith("quaternion:"):
        a, b = (Fraction(t) for t in s.split(":", 1)[1].split(","))
        return quaternion_algebra(a, b)
    if s.startswith("truncpoly:"):
        return trunc_poly(int(s.split(":", 1)[1]))
    if s.startswith("opposite:"):
        return opposite(make_algebra(s.split(":", 1)[1]))
    if s.startswith("{"):
        return from_json(json.loads(s))
    with open(s) as fh:
        return from_json(json.load(fh))


def _frac_str(v):
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else \
        "%d/%d" % (f.numerator, f.denominator)


def to_json(alg):
    unit = ["0"] * alg.dim
    for k, v in alg.unit.items():
        unit[k] = _frac_str(v)
    return {
        "dim": alg.dim,
        "labels": list(alg.labels),
        "unit": unit,
        "mul": [[i, j, k, _frac_str(v)] for (i, j, k, v)
                in alg.structure_triples()],
    }


def from_json(obj):
    dim = obj["dim"]
    labels = obj.get("labels") or ["b%d" % i for i in range(dim)]
    mul = {}
    for i, j, k, v in obj["mul"]:
        row = mul.setdefault((i, j), {})
        if k in row:
            raise ValueError("duplicate structure triple (%d,%d,%d)" % (i, j, k))
        row[k] = nrm(Fraction(v))
    unit = {i: nrm(Fraction(v)) for i, v in enumerate(obj["unit"])
            if Fraction(v) != 0}
    if unit == {0: 1}:
        return Algebra(dim, labels, mul)
    # re-base so the unit becomes basis element 0
    raw = Algebra.__new__(Algebra)
    raw.dim, raw.labels, raw.mul, raw.unit = dim, labels, mul, unit
    out = _rebase_unit_first(raw, unit, labels)
    out._check_unit()
    if dim <= _ASSOC_CHECK_DIM:
        out._check_associativity()
    return out


def derived_spaces(alg):
    """commutator span [A,A], the ideal it generates, and the center."""
    n = alg.dim
    comm_rows = [alg.commutator({i: 1}, {j: 1})
                 for i in range(n) for j in range(i + 1, n)]
    commutator_sub = subspace_from_rows(comm_rows, n)
    ideal = saturate_ideal(alg, commutator_sub)
    # center: x with x*b_i - b_i*x = 0 for all i; kernel via left nullspace
    images = []
    for j in range(n):
        img = {}
        for i in range(n):
            d = alg.commutator({j: 1}, {i: 1})
            for k, v in d.items():
                img[i * n + k] = v
        images.append(img)
    center = left_nullspace(images, n * n)
    return {"commutator": commutator_sub, "commutator_ideal": ideal,
            "center": center}


def saturate_ideal(alg, sub):
    """Smallest two-sided ideal containing the given subspace."""
    red = RowReducer()
    queue = list(sub.basis_rows())
    for r in queue:
        red.add(r)
    while queue:
        v = queue.pop()
        for i in range(alg.dim):
            for prod in (alg.multiply({i: 1}, v), alg.multiply(v, {i: 1})):
                if prod and red.add(prod) is not None:
                    queue.append(prod)
    return Subspace.from_reducer(alg.dim, red)


def quotient_by_ideal(alg, sub, label_prefix="q"):
    """Quotient by the two-sided ideal generated by sub.

    Returns (quotient Algebra, project: coords -> coords). The zero algebra
    (dim 0) is returned when the ideal is everything.
    """
    ideal = saturate_ideal(alg, sub)
    if ideal.dim == alg.dim:
        zero = Algebra(0, [], {}, unit={}, check=False)
        return zero, lambda v: {}
    pivots = set(ideal.pivots)
    rep_cols = [c for c in range(alg.dim) if c not in pivots]
    col_of = {c: t for t, c in enumerate(rep_cols)}

    def project(vec):
        r = ideal.reduce(vec)
        return {col_of[c]: v for c, v in r.items()}

    mul = {}
    for a, ca in enumerate(rep_cols):
        for b, cb in enumerate(rep_cols):
            out = project(alg.multiply({ca: 1}, {cb: 1}))
            if out:
                mul[(a, b)] = out
    unit = project(alg.unit)
    labels = ["%s%d" % (label_prefix, t) for t in range(len(rep_cols))]
    raw = Algebra.__new__(Algebra)
    raw.dim, raw.labels, raw.mul, raw.unit = len(rep_cols), labels, mul, unit
    quo = _rebase_unit_first(raw, unit, labels)
    # compose the re-basing with the projection
    solver = LinearSolver(_unit_first_basis(raw, unit), raw.dim)

    def project2(vec):
        return solver.coords(project(vec))

    return quo, project2


def _unit_first_basis(raw, unit):
    red = RowReducer()
    red.add(dict(unit))
    chosen = [dict(unit)]
    for i in range(raw.dim):
        if red.add({i: 1}) is not None:
            chosen.append({i: 1})
    return chosen


class SymTensorAlgebra:
    """TS^ell(A): the S_ell-invariants of A^tensor-ell, coordinate-wise product.

    The distinguished basis consists of the unit tensor together with ordered
    products sym(b_1)...sym(b_j), b_1 <= ... <= b_j (label order), 1 <= j <= ell,
    over non-unit basis elements of A. Its size is C(dim A + ell - 1, ell).
    """

    def __init__(self, base, ell, check=True):
        if ell < 1:
            raise ValueError("ell >= 1 required")
        self.base = base
        self.ell = ell
        self.ambient = tensor_power(base, ell)
        border = sorted(range(1, base.dim), key=lambda i: base.labels[i])
        self.tb_words = [()]
        for j in range(1, ell + 1):
            self.tb_words.extend(
                itertools.combinations_with_replacement(border, j))
        self.dim = len(self.tb_words)
        expected = comb(base.dim + ell - 1, ell)
        if self.dim != expected:
            raise AssertionError("basis size %d != C(%d,%d)" %
                                 (self.dim, base.dim + ell - 1, ell))
        self.tb_vectors = [self._word_vector(w) for w in self.tb_words]
        self.solver = LinearSolver(self.tb_vectors, self.ambient.dim)
        if self.solver.rank != self.dim:
            raise AssertionError(
                "distinguished basis is linearly dependent (rank %d of %d)"
                % (self.solver.rank, self.dim))
        if check:
            self._check_invariance()
        self.algebra = self._build_table()

    # -- construction helpers ------------------------------------------------

    def sym(self, coords):
        """Ambient coordinates of sym_ell(a) for a given by base coordinates."""
        ell, base_dim = self.ell, self.base.dim
        out = {}
        for t, v in coords.items():
            for pos in range(ell):
                amb = t * base_dim ** (ell - 1 - pos)
                out[amb] = nrm(out.get(amb, 0) + v)
        return {k: v for k, v in out.items() if v != 0}

    def _word_vector(self, word):
        vec = {0: 1}
        for t in word:
            vec = self.ambient.multiply(vec, self.sym({t: 1}))
        return vec

    def _check_invariance(self):
        # S_ell is generated by adjacent transpositions; check each basis vector
        ell, d = self.ell, self.base.dim
        for vec in self.tb_vectors:
            for pos in range(ell - 1):
                swapped = {}
                for amb, v in vec.items():
                    digits = []
                    x = amb
                    for _ in range(ell):
                        digits.append(x % d)
                        x //= d
                    digits.reverse()
                    digits[pos], digits[pos + 1] = digits[pos + 1], digits[pos]
                    y = 0
                    for dg in digits:
                        y = y * d + dg
                    swapped[y] = v
                if swapped != vec:
                    raise AssertionError("basis vector not S_ell-invariant")

    def _build_table(self):
        # right multiplication by sym(b_t) expressed on the distinguished basis
        rmul = {}
        for t in range(1, self.base.dim):
            st = self.sym({t: 1})
            cols = []
            for vec in self.tb_vectors:
                c = self.solver.coords(self.ambient.multiply(vec, st))
                if c is None:
                    raise AssertionError("TS is not closed under products")
                cols.append(c)
            rmul[t] = cols
        mul = {}
        for a, wa in enumerate(self.tb_words):
            for b, wb in enumerate(self.tb_words):
                x = {a: 1}
                for t in wb:
                    nxt = {}
                    for k, v in x.items():
                        vec_iadd_scaled(nxt, v, rmul[t][k])
                    x = nxt
                if x:
                    mul[(a, b)] = x
        labels = ["1"] + ["*".join("s(%s)" % self.base.labels[t] for t in w)
                          for w in self.tb_words[1:]]
        return Algebra(self.dim, labels, mul, check=False)

    # -- public operations ---------------------------------------------------

    def sym_tb(self, coords):
        """sym_ell(a) in distinguished-basis coordinates."""
        out = {}
        for t, v in coords.items():
            if t == 0:
                out[0] = nrm(out.get(0, 0) + v * self.ell)
            else:
                w = self.tb_words.index((t,))
                out[w] = nrm(out.get(w, 0) + v)
        return {k: v for k, v in out.items() if v != 0}

    def to_tb(self, ambient_vec):
        """Express an ambient vector in the distinguished basis (None if out)."""
        return self.solver.coords(ambient_vec)

    def from_tb(self, tb_vec):
        out = {}
        for k, v in tb_vec.items():
            vec_iadd_scaled(out, v, self.tb_vectors[k])
        return out


def build_ts(base, ell):
    return SymTensorAlgebra(base, ell)


def check_universal_property(ts, B, rho, family=None):
    """Verify Thm-style factorization: given a Lie homomorphism rho: A -> B
    with rho(1) = ell * 1 that satisfies the (ell+1)-st symmetric identity,
    produce the algebra map phi: TS^ell(A) -> B with phi o sym = rho.

    rho is a list of B-coordinate dicts, one per basis element of A.
    Returns (phi_rows, None) on success or (None, witness) on failure,
    where witness names the violated law.
    """
    from .symid import sym_identity_lhs, spanning_family

    A, ell = ts.base, ts.ell
    unit_img = rho[0]
    ell_one = vec_scale(dict(B.unit), ell)
    if unit_img != ell_one:
        return None, ("unit", "rho(1) != ell*1")

    def rho_of(coords):
        out = {}
        for t, v in coords.items():
            vec_iadd_scaled(out, v, rho[t])
        return out

    for i in range(A.dim):
        for j in range(A.dim):
            lhs = rho_of(A.commutator({i: 1}, {j: 1}))
            rhs = B.commutator(rho[i], rho[j])
            if lhs != rhs:
                return None, ("lie-hom", (i, j))

    if family is None:
        family = spanning_family(A.dim)
    for a in family:
        if sym_identity_lhs(B, rho_of, A, a, ell + 1):
            return None, ("identity", a)

    phi_rows = []
    for w in ts.tb_words:
        img = dict(B.unit)
        for t in w:
            img = B.multiply(img, rho[t])
        phi_rows.append(img)

    def phi(tb_vec):
        out = {}
        for k, v in tb_vec.items():
            vec_iadd_scaled(out, v, phi_rows[k])
        return out

    for a in range(ts.dim):
        for b in range(ts.dim):
            prod = ts.algebra.basis_product(a, b)
            if phi(prod) != B.multiply(phi_rows[a], phi_rows[b]):
                return None, ("multiplicativity", (a, b))
    # phi o sym = rho on basis
    for t in range(A.dim):
        if phi(ts.sym_tb({t: 1})) != rho[t]:
            return None, ("factorization", t)
    return phi_rows, None
