#include <cmath>

#include "doctest.h"

#include "bimoebius/bicomplex.hpp"
#include "test_util.hpp"

using namespace bimo;
using testutil::Rng;

namespace {

bool reals_are(const Bicomplex& w, double x1, double x2, double x3, double x4) {
    const auto x = w.reals();
    return x[0] == x1 && x[1] == x2 && x[2] == x3 && x[3] == x4;
}

}  // namespace

TEST_CASE("cartesian and idempotent views convert both ways") {
    // w = i2: P1 = -i, P2 = +i.
    const Bicomplex w1 = Bicomplex::from_cartesian({0, 0}, {1, 0});
    CHECK(w1.p1() == Complex(0, -1));
    CHECK(w1.p2() == Complex(0, 1));

    // Real unit is idempotent-symmetric.
    const Bicomplex w2 = Bicomplex::from_cartesian({1, 0}, {0, 0});
    CHECK(w2.p1() == Complex(1, 0));
    CHECK(w2.p2() == Complex(1, 0));

    // w = j (z1 = 0, z2 = i): P1 = 1, P2 = -1, i.e. j = e1 - e2.
    const Bicomplex w3 = Bicomplex::from_cartesian({0, 0}, {0, 1});
    CHECK(w3.p1() == Complex(1, 0));
    CHECK(w3.p2() == Complex(-1, 0));

    const Bicomplex w4 = Bicomplex::from_reals(1, 2, 3, 4);
    CHECK(w4.p1() == Complex(5, -1));
    CHECK(w4.p2() == Complex(-3, 5));
    CHECK(w4.z1() == Complex(1, 2));
    CHECK(w4.z2() == Complex(3, 4));
    CHECK(reals_are(w4, 1, 2, 3, 4));
    CHECK(w4 == Bicomplex::from_cartesian({1, 2}, {3, 4}));

    CHECK(reals_are(Bicomplex::from_reals(1, 0, 0, 0), 1, 0, 0, 0));
    const Bicomplex j = Bicomplex::from_reals(0, 0, 0, 1);
    CHECK(j.p1() == Complex(1, 0));
    CHECK(j.p2() == Complex(-1, 0));

    // Dyadic round trips are exact.
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const Complex z1 = rng.gauss_int(-64, 64), z2 = rng.gauss_int(-64, 64);
        const Bicomplex w = Bicomplex::from_cartesian(z1, z2);
        CHECK(w.z1() == z1);
        CHECK(w.z2() == z2);
        CHECK(Bicomplex::from_idempotent(w.p1(), w.p2()) == w);
    }
}

TEST_CASE("unit multiplication table") {
    const Bicomplex one(1.0), i1 = unit_i1(), i2 = unit_i2(), j = unit_j();
    CHECK(i1 * i1 == Bicomplex(-1.0));
    CHECK(i2 * i2 == Bicomplex(-1.0));
    CHECK(j * j == one);
    CHECK(i1 * i2 == j);
    CHECK(i2 * i1 == j);
    CHECK(i1 * j == -i2);
    CHECK(j * i1 == -i2);
    CHECK(i2 * j == -i1);
    CHECK(j * i2 == -i1);
    CHECK(one * i1 == i1);
}

TEST_CASE("idempotent basis identities are exact") {
    const Bicomplex e1 = idem_e1(), e2 = idem_e2();
    CHECK(e1 * e1 == e1);
    CHECK(e2 * e2 == e2);
    CHECK(e1 * e2 == Bicomplex(0.0));
    CHECK(e1 + e2 == Bicomplex(1.0));
    CHECK(e1 - e2 == unit_j());
    // e1 = (1+j)/2 in cartesian coordinates.
    CHECK(reals_are(e1, 0.5, 0, 0, 0.5));
    CHECK(reals_are(e2, 0.5, 0, 0, -0.5));
}

TEST_CASE("ring axioms hold exactly on the integer grid") {
    Rng rng(12);
    for (int k = 0; k < 300; ++k) {
        const Bicomplex u = rng.grid_value(), v = rng.grid_value(), t = rng.grid_value();
        CHECK(u + v == v + u);
        CHECK((u + v) + t == u + (v + t));
        CHECK(u * v == v * u);
        CHECK((u * v) * t == u * (v * t));
        CHECK(u * (v + t) == u * v + u * t);
        CHECK(u - v == u + (-v));
        CHECK(u + Bicomplex(0.0) == u);
        CHECK(u * Bicomplex(1.0) == u);
    }
}

TEST_CASE("ring axioms hold within tolerance on random reals") {
    Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        const Bicomplex u = rng.value(), v = rng.value(), t = rng.value();
        CHECK(approx_equal((u + v) + t, u + (v + t), 1e-12, 1e-12));
        CHECK(approx_equal((u * v) * t, u * (v * t), 1e-12, 1e-12));
        CHECK(approx_equal(u * (v + t), u * v + u * t, 1e-12, 1e-12));
    }
}

TEST_CASE("the three conjugations") {
    const Bicomplex w = Bicomplex::from_reals(1, 2, 3, 4);
    // conj2 negates z2: 1+2i1-3i2-4j.
    CHECK(conj2(w) == Bicomplex::from_reals(1, 2, -3, -4));
    // conj1 bars each cartesian component: (1-2i1) + (3-4i1)i2.
    CHECK(conj1(w) == Bicomplex::from_reals(1, -2, 3, -4));
    // conj3 bars z1 and negates-bars z2.
    CHECK(conj3(w) == Bicomplex::from_reals(1, -2, -3, 4));

    Rng rng(14);
    for (int k = 0; k < 200; ++k) {
        const Bicomplex u = rng.grid_value();
        CHECK(conj1(conj1(u)) == u);
        CHECK(conj2(conj2(u)) == u);
        CHECK(conj3(conj3(u)) == u);
        CHECK(conj3(u) == conj1(conj2(u)));
        CHECK(conj3(u) == conj2(conj1(u)));
    }
}

TEST_CASE("complex square norm") {
    CHECK(cn(idem_e1()) == Complex(0, 0));

    // w = 2e1 + 4e2 has cartesian view z1 = 3, z2 = -i1.
    const Bicomplex w = Bicomplex::from_idempotent({2, 0}, {4, 0});
    CHECK(w.z1() == Complex(3, 0));
    CHECK(w.z2() == Complex(0, -1));
    CHECK(cn(w) == Complex(8, 0));

    // z2 = i1*z1 lands on the null cone: CN = 0 exactly.
    const Complex z1(2, 1);
    const Bicomplex nc = Bicomplex::from_cartesian(z1, Complex(0, 1) * z1);
    CHECK(cn(nc) == Complex(0, 0));
    CHECK(is_singular(nc, 0.0));

    Rng rng(15);
    for (int k = 0; k < 1000; ++k) {
        const Bicomplex u = rng.value(10.0), v = rng.value(10.0);
        // CN is the component product by representation.
        CHECK(cn(u) == u.p1() * u.p2());
        CHECK(approx_equal(cn(u * v), cn(u) * cn(v), 1e-10, 1e-12));
        // CN(w) = z1^2 + z2^2 in the cartesian view.
        const Complex via_z = u.z1() * u.z1() + u.z2() * u.z2();
        CHECK(approx_equal(cn(u), via_z, 1e-10, 1e-12));
    }
}

TEST_CASE("square moduli land in their stated planes") {
    // e1 is conj3-invariant: |e1|^2_j = e1 = (1+j)/2 as a duplex number.
    const SquareModuli me = square_moduli(idem_e1());
    CHECK(me.mod_j_sq[0] == 0.5);
    CHECK(me.mod_j_sq[1] == 0.5);

    const Bicomplex h = Bicomplex::from_reals(1, 1, 1, 1);
    CHECK(euclid_norm(h) == 2.0);
    const SquareModuli mh = square_moduli(h);
    CHECK(mh.mod_j_sq[0] == 4.0);  // Re |w|^2_j is the squared norm

    const SquareModuli m0 = square_moduli(Bicomplex(0.0));
    CHECK(m0.mod_i1_sq == Complex(0, 0));
    CHECK(m0.mod_i2_sq == std::array<double, 2>{0, 0});
    CHECK(m0.mod_j_sq == std::array<double, 2>{0, 0});

    Rng rng(16);
    for (int k = 0; k < 500; ++k) {
        const Bicomplex w = rng.value(10.0);
        CHECK(square_moduli(w).mod_i1_sq == cn(w));

        // w * conj1(w) lies in C(i2): x2 = x4 = 0 exactly.
        const auto ri2 = (w * conj1(w)).reals();
        CHECK(ri2[1] == 0.0);
        CHECK(ri2[3] == 0.0);

        // w * conj3(w) lies in the duplex plane: x2 = x3 = 0 exactly.
        const auto rj = (w * conj3(w)).reals();
        CHECK(rj[1] == 0.0);
        CHECK(rj[2] == 0.0);

        // Re |w|^2_j recovers the squared Euclidean norm.
        const double n = euclid_norm(w);
        CHECK(std::abs(square_moduli(w).mod_j_sq[0] - n * n) <= 1e-12 * std::max(1.0, n * n));
    }
}

TEST_CASE("euclidean norm") {
    CHECK(euclid_norm(Bicomplex::from_cartesian({3, 4}, {0, 0})) == 5.0);
    CHECK(euclid_norm(idem_e1()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const Bicomplex w = rng.value(10.0);
        const double via_p =
            std::sqrt((std::norm(w.p1()) + std::norm(w.p2())) / 2.0);
        CHECK(euclid_norm(w) == doctest::Approx(via_p).epsilon(1e-12));
    }
}

TEST_CASE("null-cone predicate is exact at eps = 0 and scale-aware otherwise") {
    CHECK(is_singular(idem_e1(), 0.0));
    CHECK(is_singular(idem_e1()));
    CHECK(is_singular(Bicomplex(0.0), 0.0));
    CHECK_FALSE(is_singular(Bicomplex::from_cartesian({1, 1}, {0, 0}), 0.0));

    // Component tiny relative to the default threshold.
    CHECK(is_singular(Bicomplex::from_idempotent({1e-15, 0}, {1, 0})));
    CHECK_FALSE(is_singular(Bicomplex::from_idempotent({1e-9, 0}, {1, 0})));
    CHECK(is_singular(Bicomplex::from_idempotent({1e-9, 0}, {1, 0}), 1e-8));
    // Scale awareness: the same small component next to a huge one.
    CHECK(is_singular(Bicomplex::from_idempotent({1e-3, 0}, {1e12, 0})));
}

TEST_CASE("ring inversion") {
    const Bicomplex w = Bicomplex::from_idempotent({2, 0}, {4, 0});
    CHECK(invert(w) == Bicomplex::from_idempotent({0.5, 0}, {0.25, 0}));
    CHECK(w * invert(w) == Bicomplex(1.0));

    // i2^{-1} = -i2.
    CHECK(invert(unit_i2()) == -unit_i2());
    CHECK(unit_i2() * invert(unit_i2()) == Bicomplex(1.0));

    CHECK_THROWS_AS(invert(idem_e1()), SingularOperand);
    CHECK_THROWS_AS(invert(Bicomplex(0.0)), SingularOperand);

    Rng rng(18);
    for (int k = 0; k < 500; ++k) {
        const Bicomplex u = rng.nonsingular();
        CHECK(approx_equal(u * invert(u), Bicomplex(1.0), 1e-10, 1e-12));
        CHECK(approx_equal(invert(invert(u)), u, 1e-10, 1e-12));
    }
}

TEST_CASE("zero divisors multiply to zero") {
    Rng rng(19);
    for (int k = 0; k < 100; ++k) {
        const Bicomplex u = Bicomplex::from_idempotent(rng.annulus(0.1, 5.0), {0, 0});
        const Bicomplex v = Bicomplex::from_idempotent({0, 0}, rng.annulus(0.1, 5.0));
        CHECK(u * v == Bicomplex(0.0));
        CHECK(is_singular(u, 0.0));
        CHECK(is_singular(v, 0.0));
        CHECK(u != Bicomplex(0.0));
        CHECK(v != Bicomplex(0.0));
    }
}

TEST_CASE("subalgebra tags") {
    CHECK(subalgebra_of(Bicomplex::from_reals(3, 4, 0, 0)) == Subalgebra::C_i1);
    CHECK(subalgebra_of(Bicomplex::from_reals(3, 0, 4, 0)) == Subalgebra::C_i2);
    CHECK(subalgebra_of(Bicomplex::from_reals(3, 0, 0, 4)) == Subalgebra::Duplex);
    CHECK(subalgebra_of(Bicomplex(5.0)) == Subalgebra::Real);
    CHECK(subalgebra_of(Bicomplex::from_reals(0, 0, 0, 0)) == Subalgebra::Real);
    CHECK(subalgebra_of(Bicomplex::from_reals(1, 1, 1, 0)) == Subalgebra::GeneralT);
    CHECK(std::string(to_string(Subalgebra::Duplex)) == "Duplex");
}

TEST_CASE("construction rejects non-finite input and folds negative zero") {
    CHECK_THROWS_AS(Bicomplex(std::nan("")), NonFiniteValue);
    CHECK_THROWS_AS(Bicomplex(Complex(1.0, HUGE_VAL)), NonFiniteValue);
    CHECK_THROWS_AS(Bicomplex::from_idempotent({HUGE_VAL, 0}, {0, 0}), NonFiniteValue);
    CHECK_THROWS_AS(Bicomplex::from_reals(0, 0, std::nan(""), 0), NonFiniteValue);

    const Bicomplex z = Bicomplex::from_reals(-0.0, 0.0, -0.0, 0.0);
    for (double x : z.reals()) CHECK_FALSE(std::signbit(x));
    const Bicomplex nz = -Bicomplex(0.0);
    CHECK_FALSE(std::signbit(nz.p1().real()));
    CHECK(nz == Bicomplex(0.0));
}

TEST_CASE("approximate equality") {
    const Bicomplex u = Bicomplex(1.0);
    CHECK(approx_equal(u, Bicomplex(1.0 + 1e-14)));
    CHECK_FALSE(approx_equal(u, Bicomplex(1.0 + 1e-9)));
    CHECK(approx_equal(Bicomplex(0.0), Bicomplex(1e-16)));
}
