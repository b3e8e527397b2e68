"""Partition combinatorics of S_ell and the ell-th symmetric identity.

Two independent evaluators are provided: the direct partition-sum form and
the recursive multilinear form g_t. Their agreement on the diagonal is the
central anti-bug check of this module.
"""

import itertools
import random
from math import factorial

from .exactla import vec_iadd_scaled


class PartitionDatum:
    """A partition of ell as multiplicities (p_1,...,p_ell), sum i*p_i = ell,
    with the size and sign of the corresponding conjugacy class of S_ell."""

    def __init__(self, p):
        ell = len(p)
        assert sum((i + 1) * m for i, m in enumerate(p)) == ell
        self.p = tuple(p)
        size = factorial(ell)
        for i, m in enumerate(p):
            size //= (i + 1) ** m * factorial(m)
        self.class_size = size
        self.sign = (-1) ** sum(i * m for i, m in enumerate(p))

    def __repr__(self):
        return "PartitionDatum(p=%r, size=%d, sign=%+d)" % (
            self.p, self.class_size, self.sign)


def partitions(ell):
    """All partitions of ell in multiplicity form."""
    if not 1 <= ell <= 12:
        raise ValueError("ell out of supported range")
    out = []

    def rec(remaining, max_part, mults):
        if remaining == 0:
            p = [0] * ell
            for m in mults:
                p[m - 1] += 1
            out.append(PartitionDatum(p))
            return
        for part in range(min(remaining, max_part), 0, -1):
            rec(remaining - part, part, mults + [part])

    rec(ell, ell, [])
    return out


def sym_identity_lhs(B, rho, A, a, ell):
    """The partition-indexed element of B from the ell-th symmetric identity:
    sum over partitions p of sign * class_size * rho(a)^p1 rho(a^2)^p2 ...

    rho is a callable taking A-coordinates to B-coordinates; a is an
    A-coordinate dict. Returns B coordinates; the zero dict means the
    identity holds at a.
    """
    powers = [None, dict(a)]
    for i in range(2, ell + 1):
        powers.append(A.multiply(powers[-1], a))
    images = [None] + [rho(powers[i]) for i in range(1, ell + 1)]
    # cache rho(a^i)^e for the exponents that actually occur
    need = {}
    parts = partitions(ell)
    for pd in parts:
        for i, m in enumerate(pd.p):
            if m:
                need[i + 1] = max(need.get(i + 1, 0), m)
    pow_cache = {}
    for i, emax in need.items():
        acc = dict(B.unit)
        for e in range(1, emax + 1):
            acc = B.multiply(acc, images[i])
            pow_cache[(i, e)] = acc
    total = {}
    for pd in parts:
        term = None
        for i, m in enumerate(pd.p):
            if not m:
                continue
            fac = pow_cache[(i + 1, m)]
            term = fac if term is None else B.multiply(term, fac)
        coef = pd.sign * pd.class_size
        vec_iadd_scaled(total, coef, term if term is not None else dict(B.unit))
    return total


def _canon(coords):
    return tuple(sorted(coords.items()))


def recursion_g(B, rho, A, args):
    """The recursive evaluator g_t on a tuple of pairwise-commuting elements.

    g_1 = rho; g_{t+1}(a_1..a_{t+1}) = sum_j rho(a_j) g_t(.. a_j dropped ..)
    - 2 sum_{j<m} g_t(a_j a_m, .. both dropped ..). On the diagonal this
    equals the direct partition sum of order t. Non-commuting inputs are
    refused: the recursion is only stated under the commuting hypothesis.
    """
    args = [dict(a) for a in args]
    for x in range(len(args)):
        for y in range(x + 1, len(args)):
            if A.commutator(args[x], args[y]):
                raise ValueError(
                    "arguments %d and %d do not commute in A" % (x, y))
            if B.commutator(rho(args[x]), rho(args[y])):
                raise ValueError(
                    "rho images of arguments %d and %d do not commute" % (x, y))
    memo = {}

    def g(tup):
        if len(tup) == 1:
            return rho(tup[0])
        key = tuple(sorted(_canon(c) for c in tup))
        hit = memo.get(key)
        if hit is not None:
            return hit
        t = len(tup)
        out = {}
        for j in range(t):
            rest = tup[:j] + tup[j + 1:]
            vec_iadd_scaled(out, 1, B.multiply(rho(tup[j]), g(rest)))
        for j in range(t):
            for m in range(j + 1, t):
                prod = A.multiply(tup[j], tup[m])
                rest = (prod,) + tuple(tup[x] for x in range(t)
                                       if x != j and x != m)
                vec_iadd_scaled(out, -2, g(rest))
        memo[key] = out
        return out

    return g(tuple(args))


def spanning_family(dim, lo=-2, hi=2, cap=5000, extra_random=100, seed=20240601):
    """The identity-testing family: all integer coordinate vectors with
    entries in [lo, hi] (capped), plus a batch of random integer vectors."""
    family = []
    boxes = itertools.product(range(lo, hi + 1), repeat=dim)
    for vec in boxes:
        if any(vec):
            family.append({i: v for i, v in enumerate(vec) if v})
            if len(family) >= cap:
                break
    rng = random.Random(seed)
    for _ in range(extra_random):
        family.append({i: v for i, v in
                       enumerate(rng.randint(-9, 9) for _ in range(dim)) if v})
    return family


def scalar_reps(family):
    """Drop scalar multiples: the identity is homogeneous in a, so vanishing
    on one representative per projective class covers the whole family."""
    seen = set()
    reps = []
    from fractions import Fraction
    for a in family:
        if not a:
            continue
        lead = a[min(a)]
        key = tuple(sorted((k, Fraction(v, 1) / lead) for k, v in a.items()))
        if key not in seen:
            seen.add(key)
            reps.append(a)
    return reps


def identity_holds_on_family(B, rho, A, ell, family, dedup=True):
    """Test the ell-th identity over the family; returns (ok, witness)."""
    samples = scalar_reps(family) if dedup else family
    for a in samples:
        if sym_identity_lhs(B, rho, A, a, ell):
            return False, a
    return True, None
