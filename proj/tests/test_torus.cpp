#include <doctest.h>

#include "qsl/torus.hpp"
#include "testutil.hpp"

using namespace qsl;

namespace {
const QScalar Q = QScalar::q();
}

TEST_CASE("torus ring arithmetic") {
    int n = 2;
    auto k1 = TorusElement::k(n, 1), k2 = TorusElement::k(n, 2);
    auto k1inv = TorusElement::k(n, 1, -1);
    CHECK(k1 * k1inv == TorusElement::one(n));
    CHECK((k1 + k2) * (k1 - k2) == k1 * k1 - k2 * k2);
    CHECK((k1 * Q) * (k1 * Q) == (k1 * k1) * (Q * Q));
    CHECK((k1 - k1).is_zero());
    CHECK_THROWS(k1 * TorusElement::k(3, 1));

    testutil::Rng rng(101);
    for (int t = 0; t < 25; ++t) {
        auto a = testutil::rand_torus(rng, 3), b = testutil::rand_torus(rng, 3),
             c = testutil::rand_torus(rng, 3);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + TorusElement::zero(3) == a);
        CHECK(a * TorusElement::one(3) == a);
    }
}

TEST_CASE("weyl action on torus") {
    int n = 2;
    auto s1 = WeylElement::simple_reflection(n + 1, 1);
    CHECK(weyl_act_torus(s1, TorusElement::k(n, 1)) == TorusElement::k(n, 1, -1));
    CHECK(weyl_act_torus(s1, TorusElement::k(n, 2)) ==
          TorusElement::k(n, 1) * TorusElement::k(n, 2));

    testutil::Rng rng(102);
    for (int t = 0; t < 20; ++t) {
        int r = static_cast<int>(testutil::rand_int(rng, 1, 4));
        auto a = testutil::rand_torus(rng, r), b = testutil::rand_torus(rng, r);
        auto w1 = testutil::rand_weyl(rng, r + 1), w2 = testutil::rand_weyl(rng, r + 1);
        CHECK(weyl_act_torus(w1, a * b) == weyl_act_torus(w1, a) * weyl_act_torus(w1, b));
        CHECK(weyl_act_torus(w1 * w2, a) == weyl_act_torus(w1, weyl_act_torus(w2, a)));
        CHECK(weyl_act_torus(WeylElement::identity(r + 1), a) == a);
    }
}

TEST_CASE("gamma twist") {
    int n = 2;
    RootSystem sys(n);
    auto r = rho(sys);
    auto k1sq = TorusElement::k(n, 1, 2);
    CHECK(gamma_twist(r, k1sq) == k1sq * Q.pow(2));
    auto k12sq = TorusElement::k(n, 1, 2) * TorusElement::k(n, 2, 2);
    CHECK(gamma_twist(r, k12sq) == k12sq * Q.pow(4));

    testutil::Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        int rk = static_cast<int>(testutil::rand_int(rng, 1, 4));
        RootSystem s(rk);
        auto a = testutil::rand_torus(rng, rk), b = testutil::rand_torus(rng, rk);
        auto nu = rho(s);
        CHECK(gamma_twist(nu.scaled(Rat(-1)), gamma_twist(nu, a)) == a);
        CHECK(gamma_twist(nu, a * b) == gamma_twist(nu, a) * gamma_twist(nu, b));
        CHECK(gamma_twist(nu, a + b) == gamma_twist(nu, a) + gamma_twist(nu, b));
    }

    // half a simple root pairs fractionally with the adjacent root
    auto half_a1 = simple_root(sys, 1).scaled(Rat(1) / 2);
    CHECK_THROWS_AS(gamma_twist(half_a1, TorusElement::k(n, 2)), std::domain_error);
}

TEST_CASE("evaluation at a weight") {
    int n = 2;
    auto k1sq = TorusElement::k(n, 1, 2) * Q.pow(2);
    CHECK(evaluate_at_weight(k1sq, {3, 5}) == Q.pow(2 + 2 * 3));
    CHECK(evaluate_at_weight(TorusElement::one(n), {7, 9}) == QScalar(1));
    auto k12sq = TorusElement::k(n, 1, 2) * TorusElement::k(n, 2, 2) * Q.pow(4);
    CHECK(evaluate_at_weight(k12sq, {3, 5}) == Q.pow(4 + 2 * 3 + 2 * 5));

    testutil::Rng rng(104);
    for (int t = 0; t < 20; ++t) {
        int rk = static_cast<int>(testutil::rand_int(rng, 1, 4));
        auto a = testutil::rand_torus(rng, rk), b = testutil::rand_torus(rng, rk);
        std::vector<long> m(rk);
        for (auto& x : m) x = testutil::rand_int(rng, -4, 4);
        CHECK(evaluate_at_weight(a * b, m) ==
              evaluate_at_weight(a, m) * evaluate_at_weight(b, m));
        CHECK(evaluate_at_weight(a + b, m) ==
              evaluate_at_weight(a, m) + evaluate_at_weight(b, m));
    }
}

TEST_CASE("specialization") {
    CHECK(specialize(Q.pow(2) + Q.pow(-2), Specialization(Rat(2))) == Rat(17, 4));
    CHECK(specialize((Q - Q.pow(-1)).inverse(), Specialization(Rat(2))) == Rat(2, 3));
    CHECK_THROWS(Specialization(Rat(1)));
    CHECK_THROWS(Specialization(Rat(-1)));
    CHECK_THROWS(Specialization(Rat(0)));
    // vanishing denominator at an admissible q
    Rat half(1, 2);
    CHECK_THROWS(specialize((Q - QScalar(half)).inverse(), Specialization(half)));
}

TEST_CASE("inverse-shift substitution") {
    int n = 2;
    auto k1sq = TorusElement::k(n, 1, 2) * Q.pow(2);
    CHECK(substitute_inverse_shifted(k1sq) == TorusElement::k(n, 1, -2) * Q.pow(-2));

    testutil::Rng rng(105);
    for (int t = 0; t < 20; ++t) {
        int rk = static_cast<int>(testutil::rand_int(rng, 1, 4));
        auto a = testutil::rand_torus(rng, rk);
        CHECK(substitute_inverse_shifted(substitute_inverse_shifted(a)) == a);
        auto b = testutil::rand_torus(rng, rk);
        CHECK(substitute_inverse_shifted(a * b) ==
              substitute_inverse_shifted(a) * substitute_inverse_shifted(b));
    }
}

TEST_CASE("diagonal collapse") {
    int n = 2;
    auto t = TorusElement::k(n, 1) * TorusElement::k(n, 2, -1);
    CHECK(collapse_diagonal(t) == TorusElement::one(1));
    auto u = TorusElement::k(n, 1, 2) * TorusElement::k(n, 2, 2);
    CHECK(collapse_diagonal(u) == TorusElement::k(1, 1, 4));

    testutil::Rng rng(106);
    for (int t2 = 0; t2 < 15; ++t2) {
        int rk = static_cast<int>(testutil::rand_int(rng, 1, 4));
        auto a = testutil::rand_torus(rng, rk), b = testutil::rand_torus(rng, rk);
        CHECK(collapse_diagonal(a * b) == collapse_diagonal(a) * collapse_diagonal(b));
        CHECK(collapse_diagonal(a + b) == collapse_diagonal(a) + collapse_diagonal(b));
    }
}

TEST_CASE("evenness matches lattice membership") {
    testutil::Rng rng(107);
    for (int n = 1; n <= 5; ++n) {
        RootSystem sys(n);
        auto lat = intersect_2lambda(sys);
        for (int t = 0; t < 30; ++t) {
            auto m = testutil::rand_kmonomial(rng, n);
            bool lattice_says = lat.contains(m.weight());
            CHECK(TorusElement::monomial(m, QScalar(1)).is_even() == lattice_says);
        }
        CHECK(testutil::rand_even_torus(rng, n).is_even());
    }
    // rank 1: every monomial is even
    CHECK(TorusElement::k(1, 1).is_even());
    // rank 2: K1 alone is not
    CHECK(!TorusElement::k(2, 1).is_even());
    CHECK(TorusElement::k(2, 1, 2).is_even());
}

TEST_CASE("index reversal") {
    int n = 3;
    CHECK(reverse_indices(TorusElement::k(n, 1)) == TorusElement::k(n, 3));
    CHECK(reverse_indices(TorusElement::k(n, 2)) == TorusElement::k(n, 2));
    testutil::Rng rng(108);
    for (int t = 0; t < 15; ++t) {
        int rk = static_cast<int>(testutil::rand_int(rng, 1, 4));
        auto a = testutil::rand_torus(rng, rk), b = testutil::rand_torus(rng, rk);
        CHECK(reverse_indices(reverse_indices(a)) == a);
        CHECK(reverse_indices(a * b) == reverse_indices(a) * reverse_indices(b));
        // reversal commutes with the shifted inversion
        CHECK(reverse_indices(substitute_inverse_shifted(a)) ==
              substitute_inverse_shifted(reverse_indices(a)));
    }
    auto r1 = testutil::rand_torus(rng, 1);
    CHECK(reverse_indices(r1) == r1);
}

TEST_CASE("torus string forms") {
    int n = 2;
    CHECK(TorusElement::zero(n).str() == "0");
    CHECK(TorusElement::one(n).str() == "1");
    CHECK(TorusElement::k(n, 1).str() == "K1");
    CHECK((TorusElement::k(n, 1, 2) * Q.pow(2)).str() == "(q^2)*K1^2");
}
