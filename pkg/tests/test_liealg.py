import random

import pytest

from sela.algebra import (matrix_algebra, quaternion_algebra, trunc_poly)
from sela.exactla import vec_iadd_scaled, vec_scale
from sela.liealg import GradedLie, RootDatumA, Weight, make_sln, theta, theta_star


def field():
    return trunc_poly(1)


def test_root_datum_pairings():
    d = RootDatumA(4)
    assert d.alpha(1).coords == (2, -1, 0)
    assert d.alpha(2).coords == (-1, 2, -1)
    assert d.omega(2).coords == (0, 1, 0)
    assert d.root_weight(1, 2) == d.alpha(1)


def test_sl3_field_dim():
    L = make_sln(field(), 3)
    assert L.dim == 8
    assert len(L.l0_keys) == 2


def test_sl2_mat2_dims():
    L = make_sln(matrix_algebra(2), 2)
    assert len(L.l0_keys) == 1 * 4 + 3 == 7
    assert L.dim == 15


def test_commutative_l0_dim():
    for n in (2, 3, 4):
        A = trunc_poly(2)
        L = make_sln(A, n)
        assert len(L.l0_keys) == (n - 1) * A.dim


def test_bracket_e_f_is_H():
    A = quaternion_algebra(1, -1)
    L = make_sln(A, 3)
    rng = random.Random(4)
    for _ in range(10):
        a = {i: rng.randint(-2, 2) for i in range(A.dim)}
        b = {i: rng.randint(-2, 2) for i in range(A.dim)}
        for i in (1, 2):
            assert L.bracket(L.e(i, a), L.f(i, b)) == L.H(i, a, b)


def test_h_of_one_acts_by_cartan():
    A = matrix_algebra(2)
    L = make_sln(A, 3)
    one = dict(A.unit)
    for i in (1, 2):
        for j in (1, 2):
            a = {1: 1}
            br = L.bracket(L.h(i, one), L.e(j, a))
            expect = vec_scale(L.e(j, a), L.datum.cartan(j, i))
            assert br == expect


def test_H_a_1_equals_h_a():
    A = quaternion_algebra(2, 3)
    L = make_sln(A, 4)
    one = dict(A.unit)
    a = {0: 1, 2: -2}
    for i in (1, 2, 3):
        assert L.H(i, a, one) == L.h(i, a)
        assert L.H(i, one, a) == L.h(i, a)


def test_commutator_diagonal_identity():
    # [a,b]E_ii = H_i(a,b) - h_i(ba) for i < n
    A = matrix_algebra(2)
    L = make_sln(A, 3)
    rng = random.Random(5)
    for _ in range(10):
        a = {i: rng.randint(-2, 2) for i in range(A.dim)}
        b = {i: rng.randint(-2, 2) for i in range(A.dim)}
        for i in (1, 2):
            lhs = L.decompose_matrix({(i, i): A.commutator(a, b)})
            rhs = dict(L.H(i, a, b))
            vec_iadd_scaled(rhs, -1, L.h(i, A.multiply(b, a)))
            assert lhs == rhs


def test_jordan_triple_identity():
    # [H_i(a,b), e_i(c)] = e_i(abc + cba)
    A = quaternion_algebra(1, 1)
    L = make_sln(A, 3)
    rng = random.Random(6)
    for _ in range(10):
        a, b, c = ({i: rng.randint(-2, 2) for i in range(A.dim)}
                   for _ in range(3))
        for i in (1, 2):
            lhs = L.bracket(L.H(i, a, b), L.e(i, c))
            jt = A.multiply(A.multiply(a, b), c)
            vec_iadd_scaled(jt, 1, A.multiply(A.multiply(c, b), a))
            assert lhs == L.e(i, jt)


def test_weight_additivity_all_pairs():
    A = trunc_poly(2)
    L = make_sln(A, 3)
    for p, kp in enumerate(L.basis):
        for q, kq in enumerate(L.basis):
            br = L.bracket_basis(p, q)
            w = L.weight_of_index(p) + L.weight_of_index(q)
            for key in br:
                assert L._weight_of_key(key) == w


def test_l0_coordinates_roundtrip():
    A = matrix_algebra(2)
    L = make_sln(A, 4)
    a = {0: 2, 3: -1}
    # h_2(a): c = 0, a_2 = a
    c, parts = L.l0_coordinates(L.h(2, a))
    assert not c and parts[1] == a and not parts[0] and not parts[2]
    # H_1(a,b) with k = 1: c = [a,b], a_1 = ba
    b = {1: 1, 2: 3}
    c, parts = L.l0_coordinates(L.H(1, a, b), k=1)
    assert c == A.commutator(a, b)
    assert parts[0] == A.multiply(b, a)
    assert not parts[1] and not parts[2]
    # pure commutator at E_kk
    x = L.decompose_matrix({(1, 1): A.commutator(a, b)})
    c, parts = L.l0_coordinates(x, k=1)
    assert c == A.commutator(a, b) and all(not p for p in parts)


def test_l0_coordinates_any_k_reassemble():
    A = quaternion_algebra(1, -1)
    L = make_sln(A, 4)
    rng = random.Random(7)
    for k in (1, 2, 3, 4):
        for _ in range(5):
            elem = {key: rng.randint(-2, 2) for key in
                    rng.sample(L.l0_keys, 4)}
            elem = {k2: v for k2, v in elem.items() if v}
            c, parts = L.l0_coordinates(elem, k=k)
            mat = {}
            if c:
                mat[(k, k)] = dict(c)
            for i, a in enumerate(parts, start=1):
                if a:
                    cur = mat.setdefault((i, i), {})
                    vec_iadd_scaled(cur, 1, a)
                    cur2 = mat.setdefault((i + 1, i + 1), {})
                    vec_iadd_scaled(cur2, -1, a)
            mat = {p: v for p, v in mat.items() if v}
            assert L.decompose_matrix(mat) == elem


def test_rejects_weighted_element_in_l0_coords():
    L = make_sln(field(), 3)
    with pytest.raises(ValueError):
        L.l0_coordinates(L.e(1, {0: 1}))


def test_theta_on_root_vectors():
    A = matrix_algebra(2)
    L = make_sln(A, 3)
    Lop, fn = theta(L)
    a = {1: 2, 3: -1}
    assert fn(L.E(1, 2, a)) == vec_scale(Lop.E(2, 3, a), -1)
    # theta fixes the diagonal split subalgebra setwise
    img = fn(L.h(1, dict(A.unit)))
    assert all(key[0] != 'E' for key in img)


def test_theta_bracket_compatibility():
    for A, n in [(matrix_algebra(2), 3), (quaternion_algebra(1, 1), 4)]:
        L = make_sln(A, n)
        Lop, fn = theta(L)
        for p, kp in enumerate(L.basis):
            for kq in L.basis:
                x, y = {kp: 1}, {kq: 1}
                lhs = fn(L.bracket(x, y))
                rhs = Lop.bracket(fn(x), fn(y))
                assert lhs == rhs


def test_theta_involution():
    A = quaternion_algebra(1, -1)
    L = make_sln(A, 3)
    Lop, fn = theta(L)
    _, fn_back = theta(Lop)
    rng = random.Random(8)
    for _ in range(100):
        elem = {key: rng.randint(-3, 3) for key in rng.sample(L.basis, 5)}
        elem = {k: v for k, v in elem.items() if v}
        assert fn_back(fn(elem)) == elem


def test_theta_star():
    d = RootDatumA(4)
    lam = Weight(d, (1, 0, 2))
    assert theta_star(d, lam).coords == (2, 0, 1)
    assert theta_star(d, d.omega(1)) == d.omega(3)
