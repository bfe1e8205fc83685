import random
from fractions import Fraction

import pytest

from modfol.congruence import curve_data, mat_mul, moebius_apply
from modfol.errors import DomainError
from modfol.linalg import QMatrix
from modfol.modsym import ModularSymbolSpace

from oracles import random_gamma0_element


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


@pytest.fixture(scope="module")
def spaces():
    return {N: ModularSymbolSpace(N) for N in (2, 11, 23, 37)}


class TestDimensions:
    def test_dimension_formula_sweep(self):
        for N in range(1, 41):
            space = ModularSymbolSpace(N)
            data = curve_data(N)
            assert space.dim == 2 * data["genus"] + data["nu_inf"] - 1, N
            assert space.cuspidal_dim == 2 * data["genus"], N

    def test_golden_dimensions(self, spaces):
        assert spaces[2].dim == 1 and spaces[2].cuspidal_dim == 0
        assert spaces[11].dim == 3 and spaces[11].cuspidal_dim == 2
        assert spaces[23].dim == 5 and spaces[23].cuspidal_dim == 4
        assert spaces[37].dim == 5 and spaces[37].cuspidal_dim == 4


class TestPaths:
    def rand_point(self, rng):
        if rng.random() < 0.15:
            return None
        return Fraction(rng.randint(-12, 12), rng.randint(1, 12))

    def test_antisymmetry_and_concatenation(self, spaces):
        rng = random.Random(50)
        for N, space in spaces.items():
            for _ in range(12):
                x, y, z = (self.rand_point(rng) for _ in range(3))
                assert space.path(x, y) == vec_neg(space.path(y, x))
                assert vec_add(space.path(x, y), space.path(y, z)) == \
                    space.path(x, z)
                assert space.path(x, x) == space.zero_vector()

    def test_group_invariance(self, spaces):
        rng = random.Random(51)
        for N, space in spaces.items():
            for _ in range(12):
                x, y = self.rand_point(rng), self.rand_point(rng)
                gamma = random_gamma0_element(rng, N)
                gx = moebius_apply(gamma, x)
                gy = moebius_apply(gamma, y)
                assert space.path(gx, gy) == space.path(x, y), (N, gamma, x, y)

    def test_boundary_of_paths(self, spaces):
        from modfol.congruence import cusp_class_key
        rng = random.Random(52)
        for N, space in spaces.items():
            pos = {k: i for i, k in enumerate(space.cusp_keys)}
            for _ in range(12):
                x, y = self.rand_point(rng), self.rand_point(rng)
                b = space.boundary_of(space.path(x, y))
                expected = [Fraction(0)] * len(space.cusp_keys)

                def key_of(pt):
                    if pt is None:
                        return cusp_class_key((1, 0), N)
                    return cusp_class_key((pt.numerator, pt.denominator), N)

                expected[pos[key_of(y)]] += 1
                expected[pos[key_of(x)]] -= 1
                assert list(b) == expected

    def test_zero_to_infinity_nonzero(self, spaces):
        # the path 0 -> oo crosses distinct cusp classes at these levels
        for N in (2, 11, 23, 37):
            v = spaces[N].path(Fraction(0), None)
            assert any(x != 0 for x in v)
            assert not spaces[N].is_cuspidal(v)


class TestLoops:
    def test_loop_class_is_homomorphism(self, spaces):
        rng = random.Random(53)
        for N, space in spaces.items():
            if space.cuspidal_dim == 0:
                continue
            for _ in range(10):
                g1 = random_gamma0_element(rng, N)
                g2 = random_gamma0_element(rng, N)
                lhs = space.loop_class(mat_mul(g1, g2))
                rhs = vec_add(space.loop_class(g1), space.loop_class(g2))
                assert lhs == rhs, (N, g1, g2)

    def test_parabolic_and_central_are_trivial(self, spaces):
        for N, space in spaces.items():
            zero = tuple([Fraction(0)] * space.cuspidal_dim)
            assert space.loop_class((1, 1, 0, 1)) == zero
            assert space.loop_class((-1, 0, 0, -1)) == zero
            assert space.loop_class((1, 0, N, 1)) is not None

    def test_rejects_outsiders(self, spaces):
        with pytest.raises(DomainError):
            spaces[11].loop_class((0, -1, 1, 0))

    def test_homology_generators(self):
        for N in (11, 14, 23, 37):
            space = ModularSymbolSpace(N)
            gens = space.homology_generators()
            assert len(gens) == space.cuspidal_dim
            rows = [list(coords) for _, coords in gens]
            if rows:
                assert QMatrix.from_rows(rows).rank() == space.cuspidal_dim
            for gamma, coords in gens:
                from modfol.congruence import gamma0_contains
                assert gamma0_contains(gamma, N)
                assert space.loop_class(gamma) == coords

    def test_genus_zero_generators_empty(self):
        assert ModularSymbolSpace(2).homology_generators() == []


class TestCuspidal:
    def test_express_roundtrip(self, spaces):
        rng = random.Random(54)
        for N, space in spaces.items():
            basis = space.cuspidal_basis()
            if not basis:
                continue
            for _ in range(8):
                coeffs = [Fraction(rng.randint(-4, 4)) for _ in basis]
                vec = tuple(sum(c * b[i] for c, b in zip(coeffs, basis))
                            for i in range(space.dim))
                assert list(space.express_cuspidal(vec)) == coeffs

    def test_express_rejects_noncuspidal(self, spaces):
        space = spaces[11]
        v = space.path(Fraction(0), None)
        with pytest.raises(DomainError):
            space.express_cuspidal(v)
