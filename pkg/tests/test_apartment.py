import random
from fractions import Fraction

import pytest

from padicbuilding import (
    INF,
    PrimeContext,
    Root,
    act_monomial,
    apartment_point,
    dual_flip,
    f_point,
    f_sigma,
    gamma_membership,
    interior_point,
    monomial_compose,
    monomial_element,
    monomial_identity,
    monomial_inverse,
    monomial_matrix,
    nu_translation,
    open_box,
    ray_limit,
    root_eval,
    s_project,
)
from padicbuilding.errors import (
    DomainError,
    IndexOutsidePieceError,
    NotSubPieceError,
    ZeroDiagonalError,
)

from randgen import rand_direction, rand_fraction, rand_monomial, rand_point

CTX = PrimeContext(2, 3)


def test_gauge_normalization():
    x = apartment_point([2, 1], [5, 3])
    assert x.piece == (1, 2)
    assert x.exponents == (Fraction(0), Fraction(2))
    y = apartment_point([1, 3], [Fraction(1, 2), 1])
    assert y.exponents == (0, Fraction(1, 2))
    with pytest.raises(DomainError):
        apartment_point([], [])
    with pytest.raises(DomainError):
        apartment_point([1, 1], [0, 0])


def test_root_eval_examples():
    x = interior_point([0, 1])
    assert root_eval(Root(1, 2), x) == -1
    assert root_eval(Root(1, 2), interior_point([3, 3])) == 0
    x3 = interior_point([0, 1, 2])
    assert root_eval(Root(3, 1), x3) == 2
    with pytest.raises(IndexOutsidePieceError):
        root_eval(Root(1, 2), apartment_point([1], [0]))
    with pytest.raises(DomainError):
        Root(2, 2)


def test_nu_translation_examples():
    m = nu_translation([2, 1], PrimeContext(2, 2))
    assert m.perm == (1, 2)
    assert m.trans == (Fraction(0), Fraction(1))
    # scalar diagonals act trivially in PGL
    c = nu_translation([6, 6, 6], PrimeContext(3, 3))
    assert c.trans == (0, 0, 0)
    m2 = nu_translation([1, 4], PrimeContext(2, 2))
    assert m2.trans == (Fraction(0), Fraction(-2))
    with pytest.raises(ZeroDiagonalError):
        nu_translation([1, 0], PrimeContext(2, 2))


def test_act_monomial_examples():
    w = monomial_element([2, 1], [0, 0])
    x = interior_point([0, 1])
    assert act_monomial(w, x) == interior_point([0, -1])
    assert act_monomial(monomial_identity(2), x) == x
    assert act_monomial(w, apartment_point([1], [0])).piece == (2,)


def test_monomial_group_law():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(2, 5)
        m1 = rand_monomial(rng, n, integral=False)
        m2 = rand_monomial(rng, n, integral=False)
        x = rand_point(rng, n)
        assert act_monomial(monomial_compose(m1, m2), x) == \
            act_monomial(m1, act_monomial(m2, x))
        inv = monomial_inverse(m1)
        assert monomial_compose(m1, inv) == monomial_identity(n)
        assert act_monomial(inv, act_monomial(m1, x)) == x


def test_monomial_matrix_requires_integrality():
    m = monomial_element([1, 2], [0, Fraction(1, 2)])
    with pytest.raises(DomainError):
        monomial_matrix(m, PrimeContext(2, 2))


def test_s_project_examples():
    x = interior_point([0, 1, 2])
    assert s_project(x, [1, 2]) == apartment_point([1, 2], [0, 1])
    assert s_project(x, [1, 2, 3]) == x
    assert s_project(x, [2]) == apartment_point([2], [0])
    with pytest.raises(NotSubPieceError):
        s_project(apartment_point([1, 2], [0, 1]), [3])
    with pytest.raises(NotSubPieceError):
        s_project(x, [])


def test_projection_permutation_compatibility():
    # w o s_I = s_w(I) o w
    rng = random.Random(33)
    for _ in range(300):
        n = rng.randint(2, 5)
        x = rand_point(rng, n, interior=True)
        size = rng.randint(1, n)
        sub = sorted(rng.sample(range(1, n + 1), size))
        w = rand_monomial(rng, n)
        w = monomial_element(w.perm, [0] * n)
        lhs = act_monomial(w, s_project(x, sub))
        rhs = s_project(act_monomial(w, x), [w.apply_index(i) for i in sub])
        assert lhs == rhs


def test_dual_flip():
    assert dual_flip(interior_point([0, 1])) == interior_point([0, -1])
    zero = interior_point([0, 0, 0])
    assert dual_flip(zero) == zero
    rng = random.Random(4)
    for _ in range(100):
        x = rand_point(rng, rng.randint(2, 5))
        assert dual_flip(dual_flip(x)) == x


def test_ray_limit_examples():
    x0 = interior_point([0, 0, 0])
    assert ray_limit(x0, [0, 0, 1]) == apartment_point([1, 2], [0, 0])
    x1 = interior_point([1, 2, 3])
    assert ray_limit(x1, [7, 7, 7]) == x1
    assert ray_limit(x1, [1, 2, 3]) == apartment_point([1], [0])
    with pytest.raises(DomainError):
        ray_limit(apartment_point([1, 2], [0, 0]), [0, 0, 1])


def test_f_point_examples():
    x = interior_point([0, 1])
    assert f_point(x, Root(1, 2)) == 1
    assert f_point(x, Root(2, 1)) == -1
    b = apartment_point([1], [0])
    assert f_point(b, Root(2, 1)) == -INF
    assert f_point(b, Root(1, 2)) == INF


def test_f_sigma_examples():
    x = interior_point([0, 1])
    assert f_sigma([x], Root(1, 2)) == f_point(x, Root(1, 2))
    y = interior_point([0, 0])
    assert f_sigma([y, x], Root(1, 2)) == 1
    b = apartment_point([1], [0])
    assert f_sigma([x, b], Root(1, 2)) == INF
    with pytest.raises(DomainError):
        f_sigma([], Root(1, 2))


def test_f_sigma_monotone():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(2, 4)
        pts = [rand_point(rng, n) for _ in range(4)]
        a = Root(*rng.sample(range(1, n + 1), 2))
        assert f_sigma(pts[:2], a) <= f_sigma(pts, a)


def test_f_point_permutation_equivariance():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(2, 5)
        x = rand_point(rng, n)
        i, j = rng.sample(range(1, n + 1), 2)
        w = rand_monomial(rng, n)
        w = monomial_element(w.perm, [0] * n)
        lhs = f_point(act_monomial(w, x), Root(w.apply_index(i), w.apply_index(j)))
        assert lhs == f_point(x, Root(i, j))


def test_gamma_membership_examples():
    # n=2, I={1}, box x_2 in (-1, 1)
    box = open_box([(-1, 1)])
    assert gamma_membership(interior_point([0, 5]), box, [1]) is True
    assert gamma_membership(interior_point([0, -5]), box, [1]) is False
    assert gamma_membership(apartment_point([1], [0]), box, [1]) is True
    # reachable boundary point by construction: s_I(u + delta) for u = center
    box3 = open_box([(0, 2), (0, 2)])
    y = apartment_point([1, 2], [0, 1])
    assert gamma_membership(y, box3, [1, 2]) is True
    # piece not containing I
    assert gamma_membership(apartment_point([2], [0]), box, [1]) is False
    with pytest.raises(DomainError):
        gamma_membership(interior_point([0, 0]), box, [1, 2])
    with pytest.raises(DomainError):
        gamma_membership(interior_point([0, 0]), box, [])


def test_gamma_membership_box_edges_are_strict():
    # I = {1,2}: the x_2 coordinate must lie strictly inside the interval
    box = open_box([(0, 2), (-9, 9)])
    inside = apartment_point([1, 2], [0, 1])
    edge = apartment_point([1, 2], [0, 2])
    assert gamma_membership(inside, box, [1, 2]) is True
    assert gamma_membership(edge, box, [1, 2]) is False


def test_gamma_membership_accepts_constructed_witnesses():
    # any point assembled as s_J(u + delta) from a box element must be a member
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(2, 5)
        centers = [rand_fraction(rng) for _ in range(n - 1)]
        box = open_box([(c - rng.randint(1, 3), c + rng.randint(1, 3))
                        for c in centers])
        size = rng.randint(1, n - 1)
        piece = sorted(rng.sample(range(1, n + 1), size))
        u = [Fraction(0)] + [c + Fraction(rng.randint(-1, 1), 2) for c in centers]
        delta = [Fraction(0) if i in piece else Fraction(rng.randint(0, 5))
                 for i in range(1, n + 1)]
        sup = sorted(set(piece) | {i for i in range(1, n + 1) if rng.random() < 0.5})
        y = s_project(interior_point([a + b for a, b in zip(u, delta)]), sup)
        assert gamma_membership(y, box, piece) is True


def _tail_threshold(x0, d, box, piece):
    # s beyond which the off-J constraints of the box system are slack
    dmin = min(d)
    bound = max(abs(hi) + abs(lo) for lo, hi in box.intervals) \
        + max(abs(e) for e in x0.exponents) + 1
    gaps = [d[j - 1] - dmin for j in range(1, len(d) + 1) if d[j - 1] > dmin]
    return int(2 * bound / min(gaps)) + 1 if gaps else 1


def test_ray_limit_consistent_with_gamma_membership():
    rng = random.Random(14)
    for _ in range(60):
        n = rng.randint(3, 4)
        x0 = rand_point(rng, n, interior=True)
        d = rand_direction(rng, n)
        limit = ray_limit(x0, d)
        big = set(limit.piece)
        size = rng.randint(1, len(big))
        sub = sorted(rng.sample(sorted(big), size))
        if len(sub) == n:
            continue
        centers = [rand_fraction(rng) for _ in range(n - 1)]
        box = open_box([(c - rng.randint(1, 4), c + rng.randint(1, 4))
                        for c in centers])
        s0 = _tail_threshold(x0, d, box, sub)
        at = lambda s: interior_point([e + s * t for e, t in zip(x0.exponents, d)])
        member_limit = gamma_membership(limit, box, sub)
        member_tail = gamma_membership(at(s0), box, sub)
        assert member_limit == member_tail
        # membership along the ray is monotone: once in, stays in
        states = [gamma_membership(at(s), box, sub) for s in range(1, 8)]
        for a, b in zip(states, states[1:]):
            assert b or not a
