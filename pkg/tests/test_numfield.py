import random
from fractions import Fraction

import pytest

from modfol.errors import DomainError, SingularMatrixError
from modfol.numfield import NFElement, NumberField, nf_kernel, nf_rref, nf_solve
from modfol.polys import parse_poly


@pytest.fixture
def golden_ratio_field():
    # x^2 - x - 1; generator is one of (1 +- sqrt5)/2 depending on embedding
    return NumberField(parse_poly("x^2 - x - 1"))


@pytest.fixture
def sqrt2_field():
    return NumberField(parse_poly("x^2 - 2"))


class TestFieldArithmetic:
    def test_generator_satisfies_minpoly(self, golden_ratio_field):
        a = golden_ratio_field.gen()
        assert a * a == a + 1

    def test_inverse_of_generator(self, golden_ratio_field):
        # 1/phi = phi - 1 in Q[x]/(x^2-x-1)
        a = golden_ratio_field.gen()
        assert a.inverse() == a - 1
        assert (1 / a) == a - 1

    def test_field_axioms_random(self, sqrt2_field):
        rng = random.Random(31)
        K = sqrt2_field

        def rand_elt():
            return K.element([Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                              for _ in range(2)])

        for _ in range(25):
            x, y, z = rand_elt(), rand_elt(), rand_elt()
            assert (x + y) * z == x * z + y * z
            assert x * (y * z) == (x * y) * z
            if not x.is_zero():
                assert x * x.inverse() == K.one()
                assert (y / x) * x == y

    def test_pow(self, sqrt2_field):
        a = sqrt2_field.gen()
        assert a ** 2 == 2
        assert a ** 4 == 4
        assert a ** (-2) == Fraction(1, 2)

    def test_cubic_field(self):
        K = NumberField(parse_poly("x^3 - x - 1"))
        a = K.gen()
        assert a ** 3 == a + 1
        assert (a ** 2 + 1) * (a ** 2 + 1).inverse() == K.one()

    def test_degree_one_field(self):
        K = NumberField(parse_poly("x - 3"))
        a = K.gen()
        assert a == 3
        assert a.as_fraction() == 3
        assert (a * a + 1).as_fraction() == 10

    def test_rational_detection(self, golden_ratio_field):
        a = golden_ratio_field.gen()
        assert not a.is_rational()
        assert (a + (1 - a)).is_rational()
        with pytest.raises(DomainError):
            a.as_fraction()

    def test_reducible_rejected(self):
        with pytest.raises(DomainError):
            NumberField(parse_poly("x^2 - 1"))

    def test_mixed_rational_ops(self, golden_ratio_field):
        a = golden_ratio_field.gen()
        assert 2 * a - a == a
        assert (a + Fraction(1, 2)) - Fraction(1, 2) == a
        assert a - 1 == -(1 - a)


class TestLinearAlgebra:
    def test_solve_known(self, golden_ratio_field):
        K = golden_ratio_field
        a = K.gen()
        # (phi - 1) x = 1 -> x = 1/(phi-1) = phi
        sol = nf_solve(K, [[a - 1]], [K.one()])
        assert sol == [a]

    def test_solve_random_roundtrip(self, sqrt2_field):
        rng = random.Random(32)
        K = sqrt2_field

        def rand_elt():
            return K.element([rng.randint(-4, 4) for _ in range(2)])

        for _ in range(10):
            n = rng.randint(1, 3)
            rows = [[rand_elt() for _ in range(n)] for _ in range(n)]
            x = [rand_elt() for _ in range(n)]
            rhs = [sum((rows[i][j] * x[j] for j in range(n)), K.zero())
                   for i in range(n)]
            try:
                sol = nf_solve(K, rows, rhs)
            except SingularMatrixError:
                continue
            assert sol == x

    def test_kernel(self, golden_ratio_field):
        K = golden_ratio_field
        a = K.gen()
        # rank-1 matrix [[1, a]] has kernel spanned by (-a, 1)
        basis = nf_kernel(K, [[K.one(), a]])
        assert len(basis) == 1
        v = basis[0]
        assert v[0] + a * v[1] == K.zero()
        assert v[1] == K.one()

    def test_rref_pivots(self, sqrt2_field):
        K = sqrt2_field
        a = K.gen()
        rows = [[a, a * a], [K.one(), a]]     # second row = first / a
        rref, pivots = nf_rref(K, rows)
        assert pivots == [0]
        assert rref[0][0] == K.one() and rref[0][1] == a


class TestRealEmbeddings:
    def test_totally_real(self, golden_ratio_field):
        assert golden_ratio_field.is_totally_real()
        assert NumberField(parse_poly("x^2 - 2")).is_totally_real()
        assert not NumberField(parse_poly("x^2 + 1")).is_totally_real()
        assert not NumberField(parse_poly("x^3 - 2")).is_totally_real()

    def test_embedding_count_and_order(self, golden_ratio_field):
        embs = golden_ratio_field.real_embeddings()
        assert len(embs) == 2
        a = golden_ratio_field.gen()
        # embeddings ordered by image of generator: (1-sqrt5)/2 < (1+sqrt5)/2
        assert embs[0].sign(a) == -1
        assert embs[1].sign(a) == 1

    def test_sign_exactness(self, golden_ratio_field):
        K = golden_ratio_field
        a = K.gen()
        emb = K.real_embeddings()[1]          # phi = (1+sqrt5)/2
        assert emb.sign(a - 1) == 1           # phi > 1
        assert emb.sign(a - 2) == -1          # phi < 2
        assert emb.sign(a * a - a - 1) == 0   # exactly zero
        # golden ratio identity: 1/phi = phi - 1
        assert emb.compare(1 / a, a - 1) == 0

    def test_approx_accuracy(self, sqrt2_field):
        K = sqrt2_field
        a = K.gen()
        emb = K.real_embeddings()[1]          # +sqrt2
        eps = Fraction(1, 10 ** 30)
        ap = emb.approx(a, eps)
        # |ap^2 - 2| <= |ap - s||ap + s| <= eps * 4
        assert abs(ap * ap - 2) < 4 * eps

    def test_approx_of_rational_combination(self, golden_ratio_field):
        K = golden_ratio_field
        a = K.gen()
        emb = K.real_embeddings()[1]
        # phi^2 = phi + 1, so value is exactly phi + 1 ~ 2.618
        ap = emb.approx(a * a, Fraction(1, 10 ** 6))
        assert Fraction(26, 10) < ap < Fraction(27, 10)

    def test_to_float(self, sqrt2_field):
        emb = sqrt2_field.real_embeddings()[1]
        assert abs(emb.to_float(sqrt2_field.gen()) - 2 ** 0.5) < 1e-12

    def test_degree_one_embedding(self):
        K = NumberField(parse_poly("x - 3"))
        embs = K.real_embeddings()
        assert len(embs) == 1
        assert embs[0].sign(K.gen() - 2) == 1
        assert embs[0].sign(K.gen() - 3) == 0
        assert embs[0].approx(K.gen(), Fraction(1, 100)) is not None

    def test_cubic_real_embeddings(self):
        # x^3 - x - 1 has exactly one real root (plastic number ~ 1.3247)
        K = NumberField(parse_poly("x^3 - x - 1"))
        embs = K.real_embeddings()
        assert len(embs) == 1
        a = K.gen()
        assert embs[0].sign(a - 1) == 1
        assert embs[0].sign(a - 2) == -1
