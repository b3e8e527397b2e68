"""Level-bounded quotients Se^lambda = U(L0)/J^lambda by truncated saturation.

J^lambda is the two-sided ideal of U(L0) generated by Harish-Chandra
projections of raising/lowering strings one step beyond what the level
lambda allows, together with h_i(1) - ell_i. The quotient dimension is an
upper bound obtained by degree-truncated row saturation; a result is only
called certified when that bound meets a lower bound coming from an
admissible homomorphism into an explicit target algebra (or when 1 lands in
the ideal, or lambda = 0). Anything else is reported as stable or
inconclusive, never silently upgraded.
"""

import itertools
from math import comb

from .algebra import (build_ts, opposite, quotient_by_ideal, tensor_product,
                      trunc_poly)
from .envelope import PbwAlgebra, ef_string_pi0, pbw_of_graded
from .exactla import (DEFAULT_PRIMES, QQ, FieldFp, LinearSolver, RowReducer,
                      Subspace, nrm, subspace_from_rows, vec_iadd_scaled)
from .symid import identity_holds_on_family, spanning_family


def _multiset_count(m, d):
    return 1 if d == 0 else (comb(m + d - 1, d) if m else 0)


def mono_key(mono):
    """Column key for a PBW monomial: high degree first, late monomials first.

    Row reduction pivots on the minimal key, so with this order the surviving
    (non-pivot) columns are the lowest-degree, earliest monomials: those are
    the coset representatives.
    """
    return (-len(mono), tuple(-p for p in mono))


def key_mono(key):
    return tuple(-p for p in key[1])


def dim_bound(L, lam):
    """(ell_max+1)^(dim L0 - (n-1)), an a-priori bound for dim Se^lambda."""
    ell_max = max(lam.coords) if lam.coords else 0
    return (ell_max + 1) ** (len(L.l0_keys) - (L.n - 1))


# -- generators ----------------------------------------------------------


class JLambdaGenerators:
    """Generating family of J^lambda in U(L0), local-index PBW form.

    Monomials are tuples of local L0 indices (position in L.l0_keys); the
    empty monomial carries the constant term. items holds (i, kind, elem)
    with kind in {"string", "h", "relaxed"}.
    """

    def __init__(self, lam, items):
        self.lam = lam
        self.items = items

    def elements(self):
        return [g for (_, _, g) in self.items]


def _localize(P, lo, elem):
    return {tuple(p - lo for p in w): c for w, c in elem.items()}


def _monic_signature(elem):
    if not elem:
        return None
    lead = min(elem, key=mono_key)
    inv = QQ.inv(elem[lead])
    return frozenset((w, nrm(c * inv)) for w, c in elem.items())


def jlambda_generators(L, lam, m_cap=None, relaxed=True, string_guard=200000):
    """pi0(e_i^(ell_i+1) f_i^(ell_i+1))-strings over basis tuples plus the
    h_i(1) - ell_i constants; optionally longer strings as extra reducers.

    Both argument tuples are restricted to non-decreasing basis multisets:
    the e_i(a) commute pairwise and so do the f_i(b), so permuted tuples give
    literally equal elements.
    """
    if not lam.is_dominant():
        raise ValueError("lambda must be dominant")
    ell = lam.coords
    dA = L.A.dim
    P = pbw_of_graded(L)
    lo, _ = L.l0_range
    items = []
    seen = set()
    for i in range(1, L.n):
        li = ell[i - 1]
        lengths = [li + 1]
        cap = m_cap if m_cap is not None else li + 2
        if relaxed:
            for r in range(li + 2, cap + 1):
                if comb(dA + r - 1, r) ** 2 <= string_guard:
                    lengths.append(r)
        for r in lengths:
            kind = "string" if r == li + 1 else "relaxed"
            for a_tup in itertools.combinations_with_replacement(range(dA), r):
                a_list = [{t: 1} for t in a_tup]
                for b_tup in itertools.combinations_with_replacement(
                        range(dA), r):
                    g = ef_string_pi0(P, L, i, a_list,
                                      [{t: 1} for t in b_tup])
                    g = _localize(P, lo, g)
                    sig = _monic_signature(g)
                    if sig is None or sig in seen:
                        continue
                    seen.add(sig)
                    items.append((i, kind, g))
        # h_i(1) - ell_i
        hvec = L.h(i, dict(L.A.unit))
        g = {(L.index[k] - lo,): v for k, v in hvec.items()}
        if li:
            g[()] = -li
        sig = _monic_signature(g)
        if sig not in seen:
            seen.add(sig)
            items.append((i, "h", g))
    return JLambdaGenerators(lam, items)


# -- the U(L0) presentation, optionally pre-quotiented -----------------------


class L0Presentation:
    """U(L0) or U(L0/W0) where W0 is the span of degree-1 generators.

    When the degree-1 homogeneous generators span a Lie ideal W0 of L0, the
    quotient map U(L0) -> U(L0/W0) identifies the saturation problem with one
    in far fewer variables; W0 lies inside J^lambda by construction, so the
    final quotient is unchanged.
    """

    def __init__(self, L, gens, pre_quotient=True):
        self.L = L
        lo, hi = L.l0_range
        self.lo = lo
        self.d0 = hi - lo
        w_rows = []
        if pre_quotient:
            for g in gens.elements():
                if g and all(len(w) == 1 for w in g):
                    w_rows.append({w[0]: c for w, c in g.items()})
        W0 = subspace_from_rows(w_rows, self.d0)
        if W0.dim and not self._is_lie_ideal(W0):
            W0 = subspace_from_rows([], self.d0)
        self.W0 = W0
        pivots = set(W0.pivots)
        self.comp = [p for p in range(self.d0) if p not in pivots]
        self.back = {p: t for t, p in enumerate(self.comp)}
        self.m = len(self.comp)
        self.P0 = PbwAlgebra(self.m, self._bracket_red)
        self._var_images = [self.reduce_vec({p: 1}) for p in range(self.d0)]

    def _local_bracket(self, p, q):
        br = self.L.bracket_basis(self.lo + p, self.lo + q)
        return {self.L.index[k] - self.lo: v for k, v in br.items()}

    def _is_lie_ideal(self, W0):
        for row in W0.basis_rows():
            for q in range(self.d0):
                out = {}
                for p, c in row.items():
                    vec_iadd_scaled(out, c, self._local_bracket(p, q))
                if not W0.contains(out):
                    return False
        return True

    def reduce_vec(self, v):
        """Local L0 coordinates -> reduced coordinates mod W0."""
        r = self.W0.reduce(v)
        return {self.back[p]: c for p, c in r.items()}

    def _bracket_red(self, p, q):
        return self.reduce_vec(self._local_bracket(self.comp[p], self.comp[q]))

    def lift_l0(self, vec_local):
        """Degree-<=1 element of the reduced PBW algebra from local coords."""
        return self.P0.lift(self.reduce_vec(vec_local))

    def project(self, elem):
        """Push a local-index PBW element through U(L0) -> U(L0/W0)."""
        out = {}
        for w, c in elem.items():
            factors = [self.P0.lift(self._var_images[p]) for p in w]
            vec_iadd_scaled(out, c, self.P0.multiply_many(factors))
        return out

    def var_label(self, t):
        key = self.L.l0_keys[self.comp[t]]
        if key[0] == 'h':
            return "h%d(%s)" % (key[1], self.L.A.labels[key[2]])
        return "c%d" % key[1]

    def mono_label(self, mono):
        if not mono:
            return "1"
        return "*".join(self.var_label(t) for t in mono)


# -- saturation ----------------------------------------------------------


class QuotientResult:
    def __init__(self, **kw):
        self.__dict__.update(kw)

    def __repr__(self):
        return ("QuotientResult(dim=%r, status=%r, N=%r)"
                % (self.quotient_dim, self.status, self.n_used))

    def se_coords(self, elem):
        """Coordinates of a reduced-PBW element in the representative basis,
        or None when its residue leaves the representative span."""
        row = _vectorize(elem, self.field)
        rem = self.reducer.reduce(row)
        out = {}
        for k, c in rem.items():
            idx = self.rep_index.get(key_mono(k))
            if idx is None:
                return None
            out[idx] = c
        return out

    def in_ideal(self, elem):
        return self.reducer.contains(_vectorize(elem, self.field))

    def proj_l0(self, l0_elem):
        """Reduced degree-<=1 element from an element dict over L0 keys."""
        vec = {self.pres.L.index[k] - self.pres.lo: v
               for k, v in l0_elem.items()}
        return self.pres.lift_l0(vec)

    def can_h(self, i, a):
        return self.se_coords(self.proj_l0(self.pres.L.h(i, a)))

    def can_H(self, i, a, b):
        return self.se_coords(self.proj_l0(self.pres.L.H(i, a, b)))

    def se_product(self, x, y):
        """Product of two representative-coordinate vectors."""
        f = self.field
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                c = f.mul(ci, cj)
                if c != 0:
                    vec_iadd_scaled(out, c, self.structure.get((i, j), {}), f)
        return out


def _vectorize(elem, field):
    out = {}
    for w, c in elem.items():
        x = field.convert(c)
        if x != 0:
            out[mono_key(w)] = x
    return out


def _saturate(pres, gen_elems, field, N_soft, N_hard, mono_guard,
              row_budget, lower_bound=None):
    """Core loop: returns a dict of raw saturation facts for one field."""
    P0 = pres.P0
    gens = []
    seen = set()
    for g in gen_elems:
        pg = pres.project(g)
        sig = _monic_signature(pg)
        if sig is None or sig in seen:
            continue
        seen.add(sig)
        gens.append(pg)
    red = RowReducer(field)
    done_budget = [-1] * len(gens)
    gu_cache = {}
    dims = []
    notes = []
    rows_used = 0
    status_zero = False
    closure = None
    reps = []
    structure = {}
    N = 0
    while True:
        N += 1
        count = sum(_multiset_count(pres.m, d) for d in range(N + 1))
        if count > mono_guard:
            notes.append("monomial guard hit at N=%d" % N)
            N -= 1
            break
        for gi, g in enumerate(gens):
            dg = P0.degree(g)
            budget = N - dg
            if budget < 0 or budget <= done_budget[gi]:
                continue
            lo_b = done_budget[gi] + 1
            for du in range(budget + 1):
                for u in itertools.combinations_with_replacement(
                        range(pres.m), du):
                    gu = None
                    for dv in range(max(0, lo_b - du), budget - du + 1):
                        for v in itertools.combinations_with_replacement(
                                range(pres.m), dv):
                            if gu is None:
                                gu = gu_cache.get((gi, u))
                                if gu is None:
                                    gu = P0.multiply({u: 1}, g)
                                    gu_cache[(gi, u)] = gu
                            row = P0.multiply(gu, {v: 1})
                            if row_budget is not None and \
                                    rows_used >= row_budget:
                                notes.append("row budget exhausted at N=%d"
                                             % N)
                                dims.append((N, count - red.rank))
                                return dict(reducer=red, dims=dims,
                                            status_zero=False, closure=False,
                                            reps=[], structure={}, n_used=N,
                                            notes=notes, quotient_dim=None,
                                            exhausted=True)
                            rows_used += 1
                            red.add(_vectorize(row, field))
            done_budget[gi] = budget
        q = count - red.rank
        dims.append((N, q))
        if red.contains({mono_key(()): field.one}):
            status_zero = True
            break
        # coset representatives at the current window
        pivots = set(red.pivots)
        reps = sorted((m for d in range(N + 1)
                       for m in itertools.combinations_with_replacement(
                           range(pres.m), d)
                       if mono_key(m) not in pivots),
                      key=lambda m: (len(m), m))
        max_rep = max((len(r) for r in reps), default=0)
        stable = len(dims) >= 2 and dims[-1][1] == dims[-2][1]
        closure = False
        structure = {}
        if 2 * max_rep <= N and (q == lower_bound or stable):
            closure, structure = _closure_check(P0, red, reps, field)
            # stop once the upper bound is tight against the known lower
            # bound, or once nothing moved across a whole level
            if closure and (q == lower_bound or (stable and N >= N_soft)):
                break
        # the window must cover representative products before closure can
        # be decided; when the bounds already meet, grow it just that far
        limit = N_hard
        if lower_bound is not None and q == lower_bound:
            limit = max(N_hard, 2 * max_rep)
        if N >= limit:
            if 2 * max_rep > N:
                notes.append("closure window 2*%d exceeds cap %d"
                             % (max_rep, limit))
            break
    q = dims[-1][1] if dims else None
    return dict(reducer=red, dims=dims, status_zero=status_zero,
                closure=bool(closure), reps=reps, structure=structure,
                n_used=dims[-1][0] if dims else 0, notes=notes,
                quotient_dim=0 if status_zero else q, exhausted=False)


def _closure_check(P0, red, reps, field):
    """Representative products must reduce into the representative span.

    When they do, span(reps) + J_N is closed under multiplication and
    contains 1, so it is all of U(L0) mod J^lambda: the quotient dimension
    upper bound len(reps) is then exact relative to J_N.
    """
    rep_set = {mono_key(r) for r in reps}
    rep_index = {r: t for t, r in enumerate(reps)}
    structure = {}
    for a, r in enumerate(reps):
        for b, s in enumerate(reps):
            prod = P0.multiply({r: 1}, {s: 1})
            rem = red.reduce(_vectorize(prod, field))
            coords = {}
            for k, c in rem.items():
                if k not in rep_set:
                    return False, {}
                coords[rep_index[key_mono(k)]] = c
            if coords:
                structure[(a, b)] = coords
    # a non-associative table means J_N is not yet saturated in the window
    k = len(reps)

    def mulc(x, y):
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                c = field.mul(ci, cj)
                if c != 0:
                    vec_iadd_scaled(out, c, structure.get((i, j), {}), field)
        return out

    for a in range(k):
        for b in range(k):
            ab = structure.get((a, b), {})
            for c in range(k):
                bc = structure.get((b, c), {})
                if mulc(ab, {c: field.one}) != mulc({a: field.one}, bc):
                    return False, {}
    return True, structure


def compute_seligman(L, lam, N_max=None, N_hard=None, scalar_mode="qq",
                     primes=DEFAULT_PRIMES, witness="auto", pre_quotient=True,
                     relaxed=True, m_cap=None, mono_guard=5 * 10 ** 6,
                     row_budget=None, check_algebra=True):
    """Compute Se^lambda = U(L0)/J^lambda with an honest status.

    certified-zero: 1 in the truncated ideal (two primes must agree in fp
    mode). certified: representative closure holds and either lambda = 0 or
    an admissible witness homomorphism attains the same dimension. stable:
    closure holds and the dimension stopped moving, but no lower bound.
    inconclusive: anything else.
    """
    ell_max = max(lam.coords) if lam.coords else 0
    if N_max is None:
        N_max = max(3, ell_max + 2)
    if N_hard is None:
        N_hard = max(N_max, 2 * ell_max)
    gens = jlambda_generators(L, lam, m_cap=m_cap, relaxed=relaxed)
    pres = L0Presentation(L, gens, pre_quotient=pre_quotient)
    bound = dim_bound(L, lam)

    if scalar_mode == "qq":
        fields = [QQ]
    elif scalar_mode == "fp":
        fields = [FieldFp(p) for p in primes]
    else:
        raise ValueError("scalar_mode must be 'qq' or 'fp'")

    # the lower bound is cheap, so establish it before saturating: the loop
    # may stop as soon as the upper bound meets it
    target = None
    cert = None
    if witness == "auto":
        target = _auto_witness(L, lam)
    elif witness is not None:
        target = witness
    if target is not None:
        B, images, desc = target
        try:
            cert = sandwich_certify(L, lam, (B, images), gens=gens)
        except ValueError as exc:
            cert = {"admissible": False, "image_dim": None,
                    "error": str(exc)}
        cert["target"] = desc
        cert["B"] = B
        cert["images"] = images
    lower = 1 if lam.is_zero() else None
    if cert is not None and cert.get("admissible"):
        lower = cert["image_dim"]

    runs = [_saturate(pres, gens.elements(), f, N_max, N_hard,
                      mono_guard, row_budget, lower_bound=lower)
            for f in fields]
    run = runs[0]
    notes = list(run["notes"])
    agree = all(r["dims"] == run["dims"] and
                r["status_zero"] == run["status_zero"] and
                r["closure"] == run["closure"] for r in runs[1:])
    if not agree:
        notes.append("prime runs disagree; reporting inconclusive")

    # monotonicity once every generator is inside the window
    gen_deg = max((pres.P0.degree(pres.project(g))
                   for g in gens.elements()), default=0)
    tail = [(N, d) for N, d in run["dims"] if N >= gen_deg]
    for (_, a), (_, b) in zip(tail, tail[1:]):
        assert b <= a, "quotient dimension increased after saturation"

    result = QuotientResult(
        lam=lam, n=L.n, pres=pres, field=fields[0],
        reducer=run["reducer"], dims_trace=run["dims"],
        n_used=run["n_used"], reps=run["reps"],
        rep_index={r: t for t, r in enumerate(run["reps"])},
        structure=run["structure"], quotient_dim=run["quotient_dim"],
        bound=bound, scalar_mode=scalar_mode,
        primes_used=tuple(primes) if scalar_mode == "fp" else (),
        witness=cert, algebra=None, labels=[], notes=notes,
        generators=gens, status="inconclusive")

    if run["exhausted"] or not agree:
        return result
    if run["status_zero"]:
        result.status = "certified-zero"
        result.quotient_dim = 0
        return result
    if not run["closure"]:
        return result

    q = run["quotient_dim"]
    assert q <= bound, "dimension bound violated"
    result.labels = [pres.mono_label(r) for r in run["reps"]]
    if q and scalar_mode == "qq":
        mul = {k: v for k, v in run["structure"].items() if v}
        result.algebra = _structure_algebra(q, result.labels, mul,
                                            check_algebra)

    if lam.is_zero():
        result.status = "certified"
        return result
    if cert is not None and cert.get("admissible") and \
            cert["image_dim"] == q:
        result.status = "certified"
        return result
    result.status = "stable"
    return result


def _structure_algebra(dim, labels, mul, check):
    from .algebra import Algebra
    return Algebra(dim, labels, mul, check=check and dim <= 16)


# -- witnesses -----------------------------------------------------------


def _star4(coords):
    """Conjugation on the 1,i,j,k basis of a generalized quaternion algebra."""
    out = {}
    for t, c in coords.items():
        out[t] = c if t == 0 else -c
    return {t: c for t, c in out.items() if c}


def _tensor_embed(factors, s, coords):
    """1 x ... x u x ... x 1 coordinates inside the tensor product."""
    stride = 1
    for f in factors[s + 1:]:
        stride *= f.dim
    return {t * stride: c for t, c in coords.items()}


def ts_lambda_target(L, lam):
    """Tensor product of symmetric-tensor factors with its L0 witness map.

    For commutative A the factor at node i is TS^{ell_i}(A); otherwise the
    support of lambda must be totally disconnected and the factors are
    TS^{ell_1}(A), middle TS^{ell_i}(A)/(ideal of symmetrized commutators),
    and TS^{ell_{n-1}}(A^op). Returns (B, images over L0 keys, description).
    """
    A, n = L.A, L.n
    ell = lam.coords
    commutative = A.is_commutative()
    supp = [i + 1 for i, v in enumerate(ell) if v]
    if not commutative:
        for s, t in zip(supp, supp[1:]):
            if t - s == 1:
                raise ValueError(
                    "support of lambda is not totally disconnected")
    factors = []
    rho = {}          # node i -> function A-coords -> factor coords
    slot = {}
    for i in range(1, n):
        li = ell[i - 1]
        if li == 0:
            rho[i] = lambda a: {}
            continue
        base = A if (commutative or i < n - 1) else opposite(A)
        ts = build_ts(base, li)
        if commutative or i == 1 or i == n - 1:
            proj = None
        else:
            rows = [ts.sym_tb(base.commutator({s: 1}, {t: 1}))
                    for s in range(base.dim) for t in range(s + 1, base.dim)]
            quo, proj2 = quotient_by_ideal(
                ts.algebra, subspace_from_rows(rows, ts.dim))
            ts_alg, proj = quo, proj2
        if proj is None:
            alg = ts.algebra
            rho[i] = (lambda ts: lambda a: ts.sym_tb(a))(ts)
        else:
            alg = ts_alg
            rho[i] = (lambda ts, pr: lambda a: pr(ts.sym_tb(a)))(ts, proj)
        if alg.dim == 0:
            raise ValueError("a target factor collapsed to zero")
        slot[i] = len(factors)
        factors.append(alg)
    B = tensor_product(factors) if factors else trunc_poly(1)
    k = 1 if (commutative or ell[0] == 0) else 2
    images = {}
    for key in L.l0_keys:
        c, parts = L.l0_coordinates({key: 1}, k=k)
        img = {}
        for i in range(1, n):
            if ell[i - 1] == 0:
                continue
            val = rho[i](parts[i - 1])
            if val:
                vec_iadd_scaled(img, 1, _tensor_embed(factors, slot[i], val))
        images[key] = img
    desc = "tensor of TS factors, levels %r" % (ell,)
    return B, images, desc


def quaternion_target(L):
    """B = A with eta0(diag(a1..a4)) = a1* + a1 + a2, for the level
    omega_1 + omega_2 quotient of sl_4 over a generalized quaternion algebra."""
    A = L.A
    if A.dim != 4:
        raise ValueError("coefficient algebra is not 4-dimensional")
    images = {}
    for key in L.l0_keys:
        mat = L.element_matrix({key: 1})
        a1 = mat.get((1, 1), {})
        a2 = mat.get((2, 2), {})
        img = dict(_star4(a1))
        vec_iadd_scaled(img, 1, a1)
        vec_iadd_scaled(img, 1, a2)
        images[key] = img
    return A, images, "coefficient algebra via a -> h2(a)"


def _auto_witness(L, lam):
    ell = lam.coords
    candidates = []
    if L.A.is_commutative():
        candidates.append(lambda: ts_lambda_target(L, lam))
    else:
        supp = [i + 1 for i, v in enumerate(ell) if v]
        if all(t - s > 1 for s, t in zip(supp, supp[1:])):
            candidates.append(lambda: ts_lambda_target(L, lam))
        if (L.A.dim == 4 and len(ell) >= 2 and ell[0] == 1 and ell[1] == 1
                and all(v == 0 for v in ell[2:])):
            candidates.append(lambda: quaternion_target(L))
    for make in candidates:
        try:
            return make()
        except ValueError:
            continue
    return None


class EtaExtension:
    """Multiplicative extension of a linear map eta0: L0 -> B to U(L0)."""

    def __init__(self, L, B, images):
        self.L = L
        self.B = B
        self.images = images
        self.lo = L.l0_range[0]

    def check_lie_hom(self):
        L, B = self.L, self.B
        keys = L.l0_keys
        for s in range(len(keys)):
            for t in range(s + 1, len(keys)):
                br = L.bracket({keys[s]: 1}, {keys[t]: 1})
                lhs = self.of_l0(br)
                rhs = B.commutator(self.images[keys[s]],
                                   self.images[keys[t]])
                if lhs != rhs:
                    raise ValueError("eta0 is not a Lie homomorphism on "
                                     "(%r, %r)" % (keys[s], keys[t]))

    def of_l0(self, elem):
        out = {}
        for key, c in elem.items():
            vec_iadd_scaled(out, c, self.images[key])
        return out

    def of_local_pbw(self, elem):
        """Value on a local-index PBW element of U(L0)."""
        keys = self.L.l0_keys
        out = {}
        for w, c in elem.items():
            val = dict(self.B.unit)
            for p in w:
                val = self.B.multiply(val, self.images[keys[p]])
            vec_iadd_scaled(out, c, val)
        return out


def sandwich_certify(L, lam, target, gens=None):
    """Lower-bound certificate: is eta0 admissible, and how big is its image.

    target = (B, images) with images a dict over L0 basis keys. Admissible
    means every J^lambda generator maps to 0 under the multiplicative
    extension; then the unital subalgebra generated by eta0(L0) is a quotient
    of Se^lambda and its dimension bounds dim Se^lambda from below.
    """
    B, images = target
    eta = EtaExtension(L, B, images)
    eta.check_lie_hom()
    if gens is None:
        gens = jlambda_generators(L, lam)
    failures = []
    for (i, kind, g) in gens.items:
        val = eta.of_local_pbw(g)
        if val:
            failures.append((i, kind))
    if failures:
        return {"admissible": False, "image_dim": None,
                "failures": failures[:5]}
    red = RowReducer()
    red.add(dict(B.unit))
    queue = [dict(B.unit)]
    gens_b = [images[k] for k in L.l0_keys if images[k]]
    while queue:
        v = queue.pop()
        for g in gens_b:
            prod = B.multiply(g, v)
            if prod and red.add(prod) is not None:
                queue.append(prod)
    return {"admissible": True, "image_dim": red.rank, "failures": []}


def check_iso(result, B, images):
    """Does eta0 induce an isomorphism Se^lambda -> B?

    Evaluates eta on the coset representatives, then checks unit, linear
    invertibility, and multiplicativity against the computed structure
    constants. Returns (ok, witness) with witness naming the first failure.
    """
    if result.status not in ("certified", "stable"):
        return False, ("status", result.status)
    if result.quotient_dim != B.dim:
        return False, ("dimension", result.quotient_dim, B.dim)
    eta = EtaExtension(result.pres.L, B, images)
    keys = result.pres.L.l0_keys
    comp = result.pres.comp
    vals = []
    for r in result.reps:
        val = dict(B.unit)
        for t in r:
            val = B.multiply(val, images[keys[comp[t]]])
        vals.append(val)
    solver = LinearSolver(vals, B.dim)
    if solver.rank != B.dim:
        return False, ("rank", solver.rank, B.dim)
    if vals[0] != dict(B.unit):
        return False, ("unit", vals[0])
    for (a, b) in itertools.product(range(len(result.reps)), repeat=2):
        lhs = B.multiply(vals[a], vals[b])
        rhs = {}
        for t, c in result.structure.get((a, b), {}).items():
            vec_iadd_scaled(rhs, c, vals[t])
        if lhs != rhs:
            return False, ("product", result.reps[a], result.reps[b])
    return True, None


def symmetric_identity_criterion(L, i, target, ell, family=None):
    """Agreement of two vanishing statements for rho(a) = eta(h_i(a)):
    the order-ell symmetric identity, and the vanishing of eta on the
    Harish-Chandra projections of the length-ell strings at node i."""
    B, images = target
    eta = EtaExtension(L, B, images)
    A = L.A
    rho_images = [eta.of_l0(L.h(i, {t: 1})) for t in range(A.dim)]

    def rho(coords):
        out = {}
        for t, v in coords.items():
            vec_iadd_scaled(out, v, rho_images[t])
        return out

    for s in range(A.dim):
        for t in range(s + 1, A.dim):
            lhs = rho(A.commutator({s: 1}, {t: 1}))
            rhs = B.commutator(rho_images[s], rho_images[t])
            if lhs != rhs:
                raise ValueError("rho is not a Lie homomorphism on basis "
                                 "pair (%d, %d)" % (s, t))
    if family is None:
        family = spanning_family(A.dim, cap=300, extra_random=20)
    direct_ok, _ = identity_holds_on_family(B, rho, A, ell, family)
    P = pbw_of_graded(L)
    lo, _ = L.l0_range
    vanish_ok = True
    for a_tup in itertools.combinations_with_replacement(range(A.dim), ell):
        for b_tup in itertools.combinations_with_replacement(range(A.dim),
                                                             ell):
            g = ef_string_pi0(P, L, i, [{t: 1} for t in a_tup],
                              [{t: 1} for t in b_tup])
            if eta.of_local_pbw(_localize(P, lo, g)):
                vanish_ok = False
                break
        if not vanish_ok:
            break
    return {"direct": direct_ok, "vanishing": vanish_ok,
            "agree": direct_ok == vanish_ok}


def subalgebra_Se_i(result, i):
    """Unital subalgebra of Se^lambda generated by the images of H_i(A,A)."""
    if result.status == "inconclusive":
        raise ValueError("refusing to probe an inconclusive quotient")
    q = result.quotient_dim
    if q == 0:
        return subspace_from_rows([], 0), {"commutative": True}
    A = result.pres.L.A
    gens = []
    for s in range(A.dim):
        for t in range(A.dim):
            v = result.can_H(i, {s: 1}, {t: 1})
            if v is None:
                raise ValueError("H image left the representative span")
            if v:
                gens.append(v)
    red = RowReducer(result.field)
    unit = {0: result.field.one}
    red.add(dict(unit))
    queue = [dict(unit)]
    basis = [dict(unit)]
    while queue:
        v = queue.pop()
        for g in gens:
            prod = result.se_product(g, v)
            if prod and red.add(prod) is not None:
                queue.append(prod)
                basis.append(prod)
    commutative = all(
        result.se_product(x, y) == result.se_product(y, x)
        for x in basis for y in basis)
    sub = Subspace.from_reducer(q, red)
    return sub, {"commutative": commutative}


def mutual_commutation(result, i, j):
    """[Se_i, Se_j] = 0 check on the generating H images."""
    A = result.pres.L.A
    for s in range(A.dim):
        for t in range(A.dim):
            x = result.can_H(i, {s: 1}, {t: 1})
            for u in range(A.dim):
                for v in range(A.dim):
                    y = result.can_H(j, {u: 1}, {v: 1})
                    if result.se_product(x, y) != result.se_product(y, x):
                        return False
    return True
