import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from skewchain.fields import GF, QQ, QuadraticField, parse_fraction
from skewchain.linalg import NotInvertible
from skewchain.rings import (
    PartialField,
    Ring,
    RingMismatch,
    dyadic,
    format_element,
    gf3_quaternion_partial_field,
    gf3_quaternions,
    in_group,
    is_fundamental,
    matrix_partial_field,
    opposite,
    opposite_transfer,
    parse_element,
    partial_field_from_descriptor,
    quaternionic_unimodular,
    quaternions,
    regular,
    ring_from_descriptor,
)

from helpers import RINGS, rand_element
from oracles import hamilton

H = quaternions()
R3 = gf3_quaternions()
ALL_RINGS = dict(RINGS, Z=Ring("integers"), D=Ring("dyadic"))


def _rand(ring, rng):
    if ring.kind == "integers":
        return ring(rng.randint(-9, 9))
    if ring.kind == "dyadic":
        return ring(Fraction(rng.randint(-9, 9), 2 ** rng.randint(0, 3)))
    return rand_element(ring, rng)


def q(*c):
    return H.quat(*(parse_fraction(x) if isinstance(x, str) else x for x in c))


class TestMul:
    def test_ij_is_k(self):
        assert H.quat(0, 1) * H.quat(0, 0, 1) == H.quat(0, 0, 0, 1)

    def test_quaternion_relations(self):
        i, j, k = H.quat(0, 1), H.quat(0, 0, 1), H.quat(0, 0, 0, 1)
        minus_one = -H.one
        assert i * i == j * j == k * k == i * j * k == minus_one

    def test_gf3_zero_divisor(self):
        a = R3.quat(1, 1, 1, 0)
        b = R3.quat(1, -1, -1, 0)
        assert a * b == R3.zero
        assert a and b

    def test_identity(self):
        rng = random.Random(1)
        for ring in ALL_RINGS.values():
            for _ in range(20):
                x = _rand(ring, rng)
                assert ring.one * x == x == x * ring.one

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            H.one * R3.one

    def test_matches_hamilton_formula(self):
        rng = random.Random(2)
        for _ in range(300):
            a, b = rand_element(H, rng), rand_element(H, rng)
            want = hamilton(tuple(Fraction(int(c.numerator), int(c.denominator)) for c in a.coords),
                            tuple(Fraction(int(c.numerator), int(c.denominator)) for c in b.coords))
            assert (a * b).coords == tuple(parse_fraction(x) for x in want)

    def test_noncommutative_order(self):
        i, j = H.quat(0, 1), H.quat(0, 0, 1)
        assert i * j == -(j * i)


@pytest.mark.parametrize("name", sorted(ALL_RINGS))
def test_ring_axioms_random_triples(name):
    ring = ALL_RINGS[name]
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(1000):
        a, b, c = _rand(ring, rng), _rand(ring, rng), _rand(ring, rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a + (-a) == ring.zero


class TestConjugate:
    def test_conjugate_and_norm(self):
        x = q(1, 1, 1, 1)
        assert x.conjugate() == q(1, -1, -1, -1)
        assert x.norm_sq() == 4

    def test_half_norm(self):
        assert q("1/2", "1/2", "1/2", "1/2").norm_sq() == 1

    def test_zero(self):
        assert H.zero.norm_sq() == 0

    def test_norm_is_product_with_conjugate(self):
        rng = random.Random(3)
        for _ in range(200):
            x = rand_element(H, rng)
            prod = x * x.conjugate()
            assert prod.coords[1:] == (0, 0, 0)
            assert prod.coords[0] == x.norm_sq()

    def test_conjugate_reverses_products(self):
        rng = random.Random(4)
        for ring in (H, RINGS["H(sqrt5)"], R3):
            for _ in range(200):
                a, b = rand_element(ring, rng), rand_element(ring, rng)
                assert (a * b).conjugate() == b.conjugate() * a.conjugate()

    def test_unsupported_kind(self):
        with pytest.raises(TypeError):
            RINGS["M2Q"].one.norm_sq()


class TestGroups:
    def test_dyadic(self):
        pf = dyadic()
        assert in_group(pf, pf.ring(Fraction(1, 4)))
        assert not in_group(pf, pf.ring(3))
        assert in_group(pf, pf.ring(-8))

    def test_qu(self):
        pf = quaternionic_unimodular()
        assert in_group(pf, q("1/2", "1/2", "1/2", "1/2"))
        assert not in_group(pf, q(1, 1, 0, 0))

    def test_regular(self):
        pf = regular()
        assert not in_group(pf, pf.ring(2))
        assert in_group(pf, pf.ring(-1))

    def test_units_delegates_to_invertibility(self):
        pf = gf3_quaternion_partial_field()
        assert not in_group(pf, R3.quat(1, 1, 1, 0))
        assert in_group(pf, R3.quat(1, 1, 0, 0))  # norm 2, a unit mod 3

    def test_minus_one_is_member(self):
        for pf in (dyadic(), regular(), quaternionic_unimodular(), matrix_partial_field(2),
                   gf3_quaternion_partial_field(),
                   PartialField(H, "generated", (H.quat(0, 1), H.quat(0, 0, 1)))):
            assert in_group(pf, -pf.ring.one)

    def test_generated_group_is_q8(self):
        pf = PartialField(H, "generated", (H.quat(0, 1), H.quat(0, 0, 1)))
        members = [x for x in (H.quat(*c) for c in product((-1, 0, 1), repeat=4)) if x
                   and in_group(pf, x)]
        assert len(members) == 8

    @given(st.integers(-6, 6), st.integers(-6, 6), st.booleans(), st.booleans())
    def test_dyadic_closure(self, m, n, s1, s2):
        pf = dyadic()
        g = pf.ring(Fraction(2) ** m * (-1 if s1 else 1))
        h = pf.ring(Fraction(2) ** n * (-1 if s2 else 1))
        assert in_group(pf, g * h) and in_group(pf, g.inverse())

    def test_closure_random_members(self):
        rng = random.Random(5)
        cases = [
            (quaternionic_unimodular(), [q("1/2", "1/2", "1/2", "1/2"), q(0, 1), q("3/5", "4/5"),
                                         q("1/2", "-1/2", "1/2", "-1/2"), q(0, "3/5", 0, "4/5")]),
            (matrix_partial_field(2), [RINGS["M2Q"].mat([[1, 2], [3, 4]]),
                                       RINGS["M2Q"].mat([[0, 1], [-1, 5]])]),
            (gf3_quaternion_partial_field(), [R3.quat(1, 1, 0, 0), R3.quat(0, 1, 1, 0)]),
            (regular(), [Ring("integers")(-1)]),
        ]
        for pf, gens in cases:
            assert all(in_group(pf, g) for g in gens)
            for _ in range(100):
                g, h = rng.choice(gens), rng.choice(gens)
                assert in_group(pf, g * h)
                assert in_group(pf, g.inverse())


class TestOpposite:
    def test_reversed_product(self):
        Hop = opposite(H)
        i, j = opposite_transfer(q(0, 1)), opposite_transfer(q(0, 0, 1))
        assert i.ring == Hop
        assert (i * j).coords == (-q(0, 0, 0, 1)).coords

    def test_double_opposite(self):
        rng = random.Random(6)
        back = opposite(opposite(H))
        assert back == H
        for _ in range(50):
            a, b = rand_element(H, rng), rand_element(H, rng)
            x = opposite_transfer(opposite_transfer(a))
            y = opposite_transfer(opposite_transfer(b))
            assert (x * y).coords == (a * b).coords

    def test_commutative(self):
        rng = random.Random(7)
        Q = RINGS["Q"]
        for _ in range(50):
            a, b = rand_element(Q, rng), rand_element(Q, rng)
            assert (a.to_op() * b.to_op()).coords == (a * b).coords


class TestFundamental:
    def test_qu_real_half(self):
        assert is_fundamental(quaternionic_unimodular(), q("1/2", "1/2", "1/2", "1/2"))

    def test_one(self):
        for pf in (regular(), dyadic(), quaternionic_unimodular()):
            assert is_fundamental(pf, pf.ring.one)

    def test_regular_minus_one(self):
        pf = regular()
        assert not is_fundamental(pf, -pf.ring.one)

    def test_dyadic_half(self):
        pf = dyadic()
        assert is_fundamental(pf, pf.ring(Fraction(1, 2)))
        assert is_fundamental(pf, pf.ring(2))

    def test_not_an_element(self):
        with pytest.raises(ValueError):
            is_fundamental(regular(), Ring("integers")(3))


def test_gf3_quaternions_exhaustive():
    assert R3.dim == 4 and R3.field == GF(3)
    elements = [R3.quat(*c) for c in product(range(3), repeat=4)]
    assert len(elements) == 81
    units = zero_divisors = 0
    for x in elements:
        is_zero = not x
        is_unit = x.is_unit()
        is_zd = (not is_zero) and any(y and not (x * y) for y in elements)
        assert is_zero + is_unit + is_zd == 1
        units += is_unit
        zero_divisors += is_zd
    # a quaternion is a unit mod 3 exactly when its norm is nonzero mod 3
    assert units == sum(1 for x in elements if x.norm_sq() % 3)
    assert R3.quat(1, 1, 1, 0) * R3.quat(1, 2, 2, 0) == R3.zero
    assert units + zero_divisors == 80


class TestInverse:
    def test_inverse_every_ring(self):
        rng = random.Random(8)
        for ring in RINGS.values():
            for _ in range(30):
                x = rand_element(ring, rng)
                if x.is_unit():
                    assert x * x.inverse() == ring.one == x.inverse() * x

    def test_non_unit(self):
        with pytest.raises(NotInvertible):
            R3.quat(1, 1, 1, 0).inverse()
        with pytest.raises(NotInvertible):
            Ring("integers")(2).inverse()

    def test_dyadic_inverse(self):
        D = Ring("dyadic")
        assert D(Fraction(1, 4)).inverse() == D(4)
        with pytest.raises(NotInvertible):
            D(3).inverse()

    def test_element_validation(self):
        with pytest.raises(ValueError):
            Ring("integers")(Fraction(1, 2))
        with pytest.raises(ValueError):
            Ring("dyadic")(Fraction(1, 3))


class TestLiterals:
    @pytest.mark.parametrize("name", sorted(RINGS))
    def test_round_trip(self, name):
        ring = RINGS[name]
        rng = random.Random(9)
        assert ring_from_descriptor(ring.descriptor()) == ring
        for _ in range(20):
            x = rand_element(ring, rng)
            assert parse_element(ring, format_element(x)) == x

    def test_rational_literal(self):
        assert format_element(q("1/2", 0, 0, "-3/4")) == ["1/2", 0, 0, "-3/4"]

    def test_opposite_descriptor(self):
        assert ring_from_descriptor(H.op().descriptor()) == H.op()

    def test_group_descriptor(self):
        pf = partial_field_from_descriptor(H, {"kind": "generated", "generators": [[0, 1, 0, 0]]})
        assert in_group(pf, q(0, -1))
        with pytest.raises(ValueError):
            partial_field_from_descriptor(H, {"kind": "units", "extra": 1})

    def test_bad_descriptors(self):
        with pytest.raises(ValueError):
            ring_from_descriptor({"kind": "octonions"})
        with pytest.raises(ValueError):
            ring_from_descriptor({"kind": "quaternions", "field": {"kind": "rationals"}, "x": 1})
        with pytest.raises(ValueError):
            parse_element(H, [1, 2, 3])


class TestFields:
    def test_quadratic_norm_identity(self):
        K = QuadraticField(5)
        rng = random.Random(10)
        for _ in range(100):
            a = K.random(rng)
            conj = (a[0], -a[1])
            assert K.mul(a, conj) == (a[0] ** 2 - 5 * a[1] ** 2, 0)

    def test_quadratic_sqrt(self):
        K = QuadraticField(5)
        x = (parse_fraction("3/2"), parse_fraction("1/2"))  # ((1 + sqrt5)/2)^2
        r = K.sqrt(x)
        assert K.mul(r, r) == x and K.sign(r) > 0
        assert K.sqrt((parse_fraction(2), parse_fraction(0))) is None

    def test_quadratic_sign(self):
        K = QuadraticField(5)
        assert K.sign((parse_fraction(3), parse_fraction(-1))) == 1  # 3 - sqrt5 > 0
        assert K.sign((parse_fraction(2), parse_fraction(-1))) == -1

    def test_bad_fields(self):
        with pytest.raises(ValueError):
            QuadraticField(4)
        with pytest.raises(ValueError):
            GF(9)

    def test_gf_coerce_fraction(self):
        assert GF(5).coerce(Fraction(1, 2)) == 3
        assert QQ.parse("-3/6") == parse_fraction("-1/2")
