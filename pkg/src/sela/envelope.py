"""Degree-truncated enveloping algebra arithmetic.

PBW monomials are non-decreasing tuples of basis indices in the triangular
order L_- < L_0 < L_+ inherited from the GradedLie basis list. Elements are
sparse maps {monomial: scalar}. Straightening rewrites v u -> u v + [v, u]
for adjacent out-of-order factors; every rewrite lowers the inversion count
at fixed length or shortens the word, so normal forms are reached and, by
the PBW theorem, unique. Straightening never raises filtration degree, so
products and the projection pi0 are exact within any declared cap.
"""

from math import comb

from .exactla import nrm, vec_iadd_scaled
import itertools


class PbwAlgebra:
    """U(g) arithmetic for a Lie algebra given by indexed structure constants.

    bracket_fn(p, q) must return the coordinates of [x_p, x_q] as a dict over
    basis indices. weights is an optional list of coordinate tuples; monomial
    weights are componentwise sums.
    """

    def __init__(self, size, bracket_fn, weights=None, l0_range=None):
        self.size = size
        self.bracket_fn = bracket_fn
        self.weights = weights or [(0,)] * size
        self.rank = len(self.weights[0]) if size else 1
        self.l0_range = l0_range if l0_range is not None else (0, size)
        self._nf = {}
        self._br = {}

    # -- normal form -------------------------------------------------------

    def _bracket(self, p, q):
        out = self._br.get((p, q))
        if out is None:
            out = {k: nrm(v) for k, v in self.bracket_fn(p, q).items() if v != 0}
            self._br[(p, q)] = out
        return out

    def normal_form(self, word):
        """Normal form of an arbitrary factor sequence as {monomial: coeff}."""
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        spot = None
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                spot = i
                break
        if spot is None:
            out = {word: 1}
        else:
            u, v = word[spot], word[spot + 1]
            out = dict(self.normal_form(word[:spot] + (v, u) + word[spot + 2:]))
            for k, c in self._bracket(u, v).items():
                vec_iadd_scaled(out, c,
                                self.normal_form(word[:spot] + (k,) + word[spot + 2:]))
        self._nf[word] = out
        return out

    # -- element arithmetic --------------------------------------------------

    def multiply(self, x, y, cap=None, allow_truncate=False):
        out = {}
        for wx, cx in x.items():
            for wy, cy in y.items():
                c = nrm(cx * cy)
                if c == 0:
                    continue
                word = wx + wy
                if cap is not None and len(word) > cap and not allow_truncate:
                    raise ValueError("degree cap %d exceeded" % cap)
                vec_iadd_scaled(out, c, self.normal_form(word))
        if cap is not None:
            out = {w: v for w, v in out.items() if len(w) <= cap}
        return out

    def multiply_many(self, factors, cap=None, allow_truncate=False):
        acc = {(): 1}
        for f in factors:
            acc = self.multiply(acc, f, cap, allow_truncate)
        return acc

    def lift(self, coords):
        """Degree-1 element from Lie-algebra coordinates over basis indices."""
        return {(p,): nrm(v) for p, v in coords.items() if v != 0}

    def weight_of_monomial(self, word):
        total = [0] * self.rank
        for p in word:
            w = self.weights[p]
            for i in range(self.rank):
                total[i] += w[i]
        return tuple(total)

    def degree(self, x):
        return max((len(w) for w in x), default=0)

    # -- Harish-Chandra projection -------------------------------------------

    def pi0(self, x):
        """Projection of a weight-0 element onto pure-L0 monomials.

        With the triangular PBW order, a weight-0 normal monomial either has
        all factors in L0 or starts with an L_- factor, so dropping the mixed
        monomials is exactly the projection along (L_- U(L)) cap U(L)_0.
        """
        zero = (0,) * self.rank
        lo, hi = self.l0_range
        out = {}
        for w, c in x.items():
            if self.weight_of_monomial(w) != zero:
                raise ValueError("element has a nonzero-weight monomial")
            if all(lo <= p < hi for p in w):
                out[w] = c
        return out

    # -- enumeration -----------------------------------------------------------

    def monomials(self, max_deg, indices=None, weight=None, guard=5 * 10 ** 6):
        """All PBW monomials of degree <= max_deg over the given indices."""
        if indices is None:
            indices = range(self.size)
        indices = sorted(indices)
        m = len(indices)
        count = sum(1 if d == 0 else (comb(m + d - 1, d) if m else 0)
                    for d in range(max_deg + 1))
        if count > guard:
            raise ValueError(
                "monomial count %d exceeds guard; lower the cap" % count)
        out = []
        for d in range(max_deg + 1):
            for combo in itertools.combinations_with_replacement(indices, d):
                if weight is not None and self.weight_of_monomial(combo) != weight:
                    continue
                out.append(combo)
        return out


def pbw_of_graded(L):
    """PbwAlgebra over the full sl_n(A) basis in its triangular order."""
    idx = L.index

    def bracket_fn(p, q):
        return {idx[k]: v for k, v in L.bracket_basis(p, q).items()}

    weights = [w.coords for w in L._weights]
    return PbwAlgebra(len(L.basis), bracket_fn, weights, l0_range=L.l0_range)


def ef_string_pi0(P, L, i, a_list, b_list):
    """pi0( e_i(a_1)...e_i(a_s) f_i(b_1)...f_i(b_t) ) as a PbwElement.

    The a's and b's are A-coordinate dicts; the result is supported on
    L0 monomials (empty when the weights cannot cancel, i.e. s != t).
    """
    factors = [P.lift({L.index[k]: v for k, v in L.e(i, a).items()})
               for a in a_list]
    factors += [P.lift({L.index[k]: v for k, v in L.f(i, b).items()})
                for b in b_list]
    prod = P.multiply_many(factors)
    if len(a_list) != len(b_list):
        return {}
    return P.pi0(prod)


def l0_element(P, L, elem):
    """Degree-<=1 PbwElement from an L0 element dict of the GradedLie."""
    return P.lift({L.index[k]: v for k, v in elem.items()})
