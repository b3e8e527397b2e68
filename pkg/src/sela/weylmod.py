"""Bounded-depth induced modules I(M) and global Weyl module slices.

I(M) = U(L) tensor_{U(L0+L+)} M, truncated to monomials of bounded depth
(height of lambda minus the weight). The submodule generated by the
integrability relations f_i(1)^{ell_i+1} tensor m is saturated inside the
window; whenever an action result sticks out of the window it is dropped
and flagged, and the slice is then reported stable instead of certified,
because elements outside the window could act back into it.
"""

import itertools

from .envelope import pbw_of_graded
from .exactla import RowReducer, left_nullspace, nrm, vec_iadd_scaled
from .seligman import _vectorize, compute_seligman


class SeModule:
    """A module over a computed quotient, as matrices for its basis.

    mats[t] is the sparse matrix (dict col -> dict row -> coeff) of the
    t-th coset representative acting on the coordinate space. The matrices
    are verified against the structure constants and the unit.
    """

    def __init__(self, result, dim, mats, check=True):
        if result.status not in ("certified", "stable", "certified-zero"):
            raise ValueError("module over an inconclusive quotient")
        if result.field.tag != "qq":
            raise ValueError("module matrices need rational coordinates")
        self.result = result
        self.dim = dim
        self.mats = mats
        self._l0_cache = {}
        if check:
            self._verify()

    @classmethod
    def left_regular(cls, result):
        q = result.quotient_dim
        mats = []
        for t in range(q):
            col = {}
            for s in range(q):
                v = result.se_product({t: 1}, {s: 1})
                if v:
                    col[s] = v
            mats.append(col)
        return cls(result, q, mats)

    def _mat_apply(self, mat, vec):
        out = {}
        for c, x in vec.items():
            col = mat.get(c)
            if col:
                vec_iadd_scaled(out, x, col)
        return out

    def _mat_of_coords(self, coords):
        out = {}
        for t, c in coords.items():
            for col, rows in self.mats[t].items():
                cur = out.setdefault(col, {})
                vec_iadd_scaled(cur, c, rows)
        return {c: r for c, r in out.items() if r}

    def _verify(self):
        r = self.result
        q = r.quotient_dim
        # unit representative acts as the identity
        if q:
            unit = self.mats[0]
            for c in range(self.dim):
                if unit.get(c, {}) != {c: 1}:
                    raise ValueError("unit does not act as identity")
        for a in range(q):
            for b in range(q):
                prod = r.se_product({a: 1}, {b: 1})
                lhs = self._mat_of_coords(prod)
                rhs = {}
                for c, rows in self.mats[b].items():
                    acc = {}
                    for m, x in rows.items():
                        vec_iadd_scaled(acc, x, self.mats[a].get(m, {}))
                    if acc:
                        rhs[c] = acc
                if lhs != rhs:
                    raise ValueError("matrices violate structure constants "
                                     "at (%d, %d)" % (a, b))

    def l0_matrix(self, p_local):
        """Action matrix of the p-th local L0 basis vector."""
        mat = self._l0_cache.get(p_local)
        if mat is None:
            r = self.result
            coords = r.se_coords(r.pres.lift_l0({p_local: 1}))
            if coords is None:
                raise ValueError("L0 basis image leaves the representative "
                                 "span; raise the saturation window")
            mat = self._mat_of_coords(coords)
            self._l0_cache[p_local] = mat
        return mat

    def apply_l0_word(self, word_local, vec):
        """(u_1 ... u_k) . vec, leftmost factor applied last."""
        for p in reversed(word_local):
            vec = self._mat_apply(self.l0_matrix(p), vec)
            if not vec:
                break
        return vec


def _root_height(key):
    return key[1] - key[2]        # ('E', i, j, t) with i > j


class InducedModuleSlice:
    """Depth-truncated I(M) with the integrability submodule quotiented out.

    Basis keys are (mono, m): mono a non-decreasing tuple of L_- basis
    indices, m a module coordinate. Weight spaces are graded by
    lambda - (depth in simple roots); per-weight dimensions are reported
    after the windowed saturation of the relations submodule.
    """

    def __init__(self, L, lam, module, depth, max_basis=200000):
        self.L = L
        self.lam = lam
        self.module = module
        self.depth = depth
        self.P = pbw_of_graded(L)
        lo, hi = L.l0_range
        self.lo, self.hi = lo, hi
        self._heights = [_root_height(L.basis[p]) for p in range(lo)]
        self.leaked = False

        self.basis = []
        for mono in self._neg_monomials(depth):
            for m in range(module.dim):
                self.basis.append((mono, m))
        if len(self.basis) > max_basis:
            raise ValueError("slice basis %d exceeds guard" % len(self.basis))
        self.index = {b: t for t, b in enumerate(self.basis)}
        self._saturate()

    def _neg_monomials(self, depth):
        out = [()]
        frontier = [()]
        while frontier:
            nxt = []
            for mono in frontier:
                start = mono[-1] if mono else 0
                for p in range(start, self.lo):
                    cand = mono + (p,)
                    if self._depth_of(cand) <= depth:
                        nxt.append(cand)
            out.extend(nxt)
            frontier = nxt
        return sorted(set(out), key=lambda m: (len(m), m))

    def _depth_of(self, mono):
        return sum(self._heights[p] for p in mono)

    def weight_of(self, key):
        mono, _ = key
        w = self.lam
        for p in mono:
            w = w + self.L.weight_of_index(p)
        return w

    # -- the action --------------------------------------------------------

    def act_index(self, p, key):
        """Action of the p-th full basis vector on a basis pair."""
        mono, m = key
        out = {}
        for word, c in self.P.normal_form((p,) + mono).items():
            cut = 0
            while cut < len(word) and word[cut] < self.lo:
                cut = cut + 1
            negpart = word[:cut]
            mid = cut
            while mid < len(word) and word[mid] < self.hi:
                mid = mid + 1
            if mid < len(word):
                continue                    # a positive factor kills m
            l0word = tuple(q - self.lo for q in word[cut:mid])
            if self._depth_of(negpart) > self.depth:
                self.leaked = True
                continue
            mvec = self.module.apply_l0_word(l0word, {m: 1})
            for m2, x in mvec.items():
                k2 = (negpart, m2)
                y = nrm(out.get(k2, 0) + c * x)
                if y == 0:
                    out.pop(k2, None)
                else:
                    out[k2] = y
        return out

    def act(self, p, vec):
        out = {}
        for key, c in vec.items():
            vec_iadd_scaled(out, c, self.act_index(p, key))
        return out

    def act_element(self, elem, vec):
        """Action of an element dict over full-L basis keys."""
        out = {}
        for key, c in elem.items():
            vec_iadd_scaled(out, c, self.act(self.L.index[key], vec))
        return out

    # -- relations submodule -------------------------------------------------

    def _saturate(self):
        L, P = self.L, self.P
        red = RowReducer()
        queue = []
        ell = self.lam.coords
        for i in range(1, L.n):
            fi = {L.index[k]: v for k, v in L.f(i, dict(L.A.unit)).items()}
            power = {(): 1}
            for _ in range(ell[i - 1] + 1):
                power = P.multiply(P.lift(fi), power)
            for m in range(self.module.dim):
                vec = {}
                for word, c in power.items():
                    if self._depth_of(word) > self.depth:
                        self.leaked = True
                        continue
                    vec[(word, m)] = c
                if vec and red.add(dict(vec)) is not None:
                    queue.append(vec)
        while queue:
            v = queue.pop()
            for p in range(len(L.basis)):
                nv = self.act(p, v)
                if nv and red.add(nv) is not None:
                    queue.append(nv)
        self.relations = red
        self.status = "stable" if self.leaked else "certified"

    # -- reporting -----------------------------------------------------------

    def weight_dims(self):
        """weight coords -> (ambient dim, quotient dim) per weight space."""
        totals = {}
        for key in self.basis:
            w = self.weight_of(key).coords
            totals[w] = totals.get(w, 0) + 1
        ranks = {}
        for piv_key, row in self.relations.pivots.items():
            w = self.weight_of(piv_key).coords
            ranks[w] = ranks.get(w, 0) + 1
        return {w: (t, t - ranks.get(w, 0)) for w, t in totals.items()}

    def quotient_dim_at(self, coords):
        table = self.weight_dims()
        return table.get(tuple(coords), (0, 0))[1]

    def reduce(self, vec):
        return self.relations.reduce(vec)


def induce_bounded(L, lam, module, depth):
    return InducedModuleSlice(L, lam, module, depth)


def weyl_module(L, lam, depth=None, result=None, **kw):
    """Slice of W(lambda) = I(left-regular Se^lambda) to the given depth."""
    if result is None:
        result = compute_seligman(L, lam, **kw)
    if result.status == "inconclusive":
        raise ValueError("quotient did not stabilize; refusing to induce")
    if depth is None:
        depth = sum(lam.coords) + 2
    module = SeModule.left_regular(result)
    s = induce_bounded(L, lam, module, depth)
    s.se_result = result
    return s


def ann_vs_J(L, lam, N, result=None):
    """Truncated comparison of the cyclic vector's annihilator with J^lambda.

    Ann_N = degree-<=N elements of U(L0) killing the highest-weight vector of
    the left-regular induced module; J_N is the saturated ideal window from
    the quotient computation in the same coordinates (no pre-quotient).
    J_N inside Ann_N is exact and must hold; the reverse containment is
    verified at the truncation and reported.
    """
    if result is None:
        result = compute_seligman(L, lam, pre_quotient=False)
    if result.status == "inconclusive":
        raise ValueError("quotient did not stabilize; refusing to compare")
    module = SeModule.left_regular(result)
    pres = result.pres
    if pres.m != pres.d0:
        raise ValueError("comparison needs the full U(L0) coordinates")
    w0 = {0: 1}              # the unit coset: the highest-weight vector

    def act_mono(word):
        return module.apply_l0_word(word, dict(w0))

    # J_N inside Ann_N: every generator kills the cyclic vector
    j_in_ann = True
    witness = None
    for (i, kind, g) in result.generators.items:
        val = {}
        for word, c in g.items():
            vec_iadd_scaled(val, c, act_mono(word))
        if val:
            j_in_ann = False
            witness = ("generator", i, kind)
            break

    # Ann_N inside J_N: null combinations of monomial actions must reduce
    # into the ideal window. The stored reducer may cover a smaller window
    # (the quotient loop stops once its bounds meet), so rebuild the
    # degree-<=N window from the generators here.
    monos = []
    for d in range(N + 1):
        monos.extend(itertools.combinations_with_replacement(
            range(pres.d0), d))
    P0 = pres.P0
    jred = RowReducer()
    for (_i, _kind, g) in result.generators.items:
        gp = pres.project(g)
        if not gp:
            continue
        dg = max(len(w) for w in gp)
        if dg > N:
            continue
        for du in range(N - dg + 1):
            for u in itertools.combinations_with_replacement(
                    range(pres.m), du):
                left = P0.multiply({u: 1}, gp)
                for dv in range(N - dg - du + 1):
                    for v in itertools.combinations_with_replacement(
                            range(pres.m), dv):
                        jred.add(_vectorize(P0.multiply(left, {v: 1}),
                                            result.field))

    images = [act_mono(w) for w in monos]
    ann = left_nullspace(images, len(monos))
    ann_in_j = True
    for expr in ann.basis_rows():
        elem = {monos[t]: c for t, c in expr.items()}
        if not jred.contains(_vectorize(elem, result.field)):
            ann_in_j = False
            if witness is None:
                witness = ("annihilator", elem)
            break
    return {"J_in_Ann": j_in_ann, "Ann_in_J": ann_in_j,
            "ann_dim": ann.dim, "monomials": len(monos),
            "witness": witness}
