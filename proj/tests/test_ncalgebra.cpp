#include "qsl/ncalgebra.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qsl/rootdata.hpp"

using namespace qsl;

namespace {

QScalar kap() { return (QScalar::q() - QScalar::q_power(-1)).inverse(); }

NCElement gen(Gen g) { return NCElement::generator(g); }

NCWord rand_word(std::mt19937_64& rng, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen), letter(0, 3);
    NCWord w(len(rng));
    for (auto& g : w) g = static_cast<Gen>(letter(rng));
    return w;
}

// F...F, then a K-block of a single sign, then E...E
bool in_normal_form(const NCWord& w) {
    size_t i = 0;
    while (i < w.size() && w[i] == Gen::F) ++i;
    if (i < w.size() && (w[i] == Gen::K || w[i] == Gen::Kinv)) {
        Gen sign = w[i];
        while (i < w.size() && w[i] == sign) ++i;
    }
    while (i < w.size() && w[i] == Gen::E) ++i;
    return i == w.size();
}

// a random word of grading degree 0: shuffled E^k F^k with K-letters mixed in
NCWord rand_degree0_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(0, 2), coin(0, 1);
    int k = small(rng), j = small(rng);
    NCWord w;
    for (int t = 0; t < k; ++t) {
        w.push_back(Gen::E);
        w.push_back(Gen::F);
    }
    for (int t = 0; t < j; ++t) w.push_back(coin(rng) ? Gen::K : Gen::Kinv);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

}  // namespace

TEST_CASE("normalization of the basic relation words") {
    // EF = FE + (K - K^{-1})/(q - q^{-1})
    NCElement expect = NCElement::word({Gen::F, Gen::E}) + NCElement::word({Gen::K}, kap()) -
                       NCElement::word({Gen::Kinv}, kap());
    CHECK(normalize(NCElement::word({Gen::E, Gen::F})) == expect);

    // KE = q^2 EK, as an identity between normalized products
    CHECK(multiply(gen(Gen::K), gen(Gen::E)) ==
          multiply(gen(Gen::E), gen(Gen::K)) * QScalar::q_power(2));

    // already-normal words are left alone
    NCElement fe = NCElement::word({Gen::F, Gen::E});
    CHECK(normalize(fe) == fe);
    CHECK(multiply(gen(Gen::F), gen(Gen::E)) == fe);
    NCElement fke = NCElement::word({Gen::F, Gen::F, Gen::Kinv, Gen::Kinv, Gen::E});
    CHECK(normalize(fke) == fke);

    // K-cancellation
    CHECK(normalize(NCElement::word({Gen::K, Gen::Kinv})) == NCElement::scalar(QScalar(1)));
    CHECK(normalize(NCElement::word({Gen::Kinv, Gen::K, Gen::E})) == gen(Gen::E));
}

TEST_CASE("product reassociation lands on one normal form") {
    NCElement left = multiply(gen(Gen::E), multiply(gen(Gen::F), gen(Gen::E)));
    NCElement right = multiply(multiply(gen(Gen::E), gen(Gen::F)), gen(Gen::E));
    CHECK(left == right);
    for (const auto& [w, c] : left.terms()) CHECK(in_normal_form(w));
}

TEST_CASE("commutators") {
    CHECK(commutator(gen(Gen::K), gen(Gen::Kinv)).is_zero());
    NCElement expect =
        NCElement::word({Gen::K}, kap()) - NCElement::word({Gen::Kinv}, kap());
    CHECK(commutator(gen(Gen::E), gen(Gen::F)) == expect);
    CHECK(commutator(gen(Gen::F), gen(Gen::E)) == -expect);
}

TEST_CASE("projection onto the torus part") {
    CHECK(pi_projection(NCElement::word({Gen::F, Gen::E})) == TorusElement(1));

    TorusElement expect(1);
    expect = expect + TorusElement::monomial(KMonomial(std::vector<long>{1}), kap());
    expect = expect + TorusElement::monomial(KMonomial(std::vector<long>{-1}), -kap());
    CHECK(pi_projection(NCElement::word({Gen::E, Gen::F})) == expect);

    TorusElement k3(1);
    k3 = k3 + TorusElement::monomial(KMonomial(std::vector<long>{3}), QScalar(1));
    CHECK(pi_projection(NCElement::word({Gen::K, Gen::K, Gen::K})) == k3);

    CHECK_THROWS_AS(pi_projection(gen(Gen::E)), std::invalid_argument);
    CHECK_THROWS_AS(pi_projection(NCElement::word({Gen::F, Gen::K})), std::invalid_argument);
}

TEST_CASE("projection is an algebra homomorphism in degree zero") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        NCElement a = NCElement::word(rand_degree0_word(rng));
        NCElement b = NCElement::word(rand_degree0_word(rng));
        CHECK(pi_projection(multiply(a, b)) == pi_projection(a) * pi_projection(b));
    }
}

TEST_CASE("casimir element") {
    NCElement c = casimir();
    QScalar k2 = kap() * kap();
    NCElement expect = NCElement::word({Gen::F, Gen::E}) +
                       NCElement::word({Gen::K}, QScalar::q() * k2) +
                       NCElement::word({Gen::Kinv}, QScalar::q_power(-1) * k2);
    CHECK(c == expect);

    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) CHECK(commutator(c, gen(g)).is_zero());
    CHECK(is_central(c));
    CHECK_FALSE(is_central(gen(Gen::E)));
    CHECK_FALSE(is_central(gen(Gen::K)));

    TorusElement pc(1);
    pc = pc + TorusElement::monomial(KMonomial(std::vector<long>{1}), QScalar::q() * k2);
    pc = pc + TorusElement::monomial(KMonomial(std::vector<long>{-1}), QScalar::q_power(-1) * k2);
    CHECK(pi_projection(c) == pc);

    // the shift by -rho straightens the image into a reflection-invariant one
    RootSystem sys(1);
    TorusElement hc = gamma_twist(-rho(sys), pi_projection(c));
    TorusElement flat(1);
    flat = flat + TorusElement::monomial(KMonomial(std::vector<long>{1}), k2);
    flat = flat + TorusElement::monomial(KMonomial(std::vector<long>{-1}), k2);
    CHECK(hc == flat);
    CHECK(weyl_act_torus(WeylElement::simple_reflection(2, 1), hc) == hc);
    CHECK_FALSE(weyl_act_torus(WeylElement::simple_reflection(2, 1), pi_projection(c)) ==
                pi_projection(c));
}

TEST_CASE("unit decision") {
    QScalar two(2), q = QScalar::q();
    // units: nonzero scalars times a K-power, in any disguise
    CHECK(is_unit(NCElement::word({Gen::K, Gen::K, Gen::K}, two)));
    CHECK(is_unit(NCElement::word({Gen::Kinv, Gen::Kinv}, QScalar(-5))));
    CHECK(is_unit(NCElement::scalar(QScalar(7))));
    CHECK(is_unit(NCElement::scalar(q)));
    CHECK(is_unit(NCElement::scalar((q + QScalar(1)) * q.inverse())));
    CHECK(is_unit(NCElement::word({Gen::K, Gen::Kinv})));
    CHECK(is_unit(NCElement::word({Gen::K, Gen::Kinv, Gen::K})));
    CHECK(is_unit(NCElement::word({Gen::Kinv}, QScalar::q_power(-3))));
    CHECK(is_unit(gen(Gen::K)));
    CHECK(is_unit(gen(Gen::Kinv)));
    // non-units
    CHECK_FALSE(is_unit(gen(Gen::E)));
    CHECK_FALSE(is_unit(gen(Gen::F)));
    CHECK_FALSE(is_unit(NCElement::scalar(QScalar(1)) + gen(Gen::K)));
    CHECK_FALSE(is_unit(gen(Gen::K) + gen(Gen::Kinv)));
    CHECK_FALSE(is_unit(NCElement()));
    CHECK_FALSE(is_unit(NCElement::word({Gen::E, Gen::F})));
    CHECK_FALSE(is_unit(NCElement::word({Gen::F, Gen::E})));
    CHECK_FALSE(is_unit(gen(Gen::K) + gen(Gen::E)));
    CHECK_FALSE(is_unit(NCElement::word({Gen::E, Gen::E, Gen::E}, two)));
    CHECK_FALSE(is_unit(NCElement::word({Gen::E, Gen::Kinv})));
}

TEST_CASE("rewriting terminates within the pair-count bound") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        NCWord w = rand_word(rng, 12);
        long bound = rewrite_bound(w);
        for (int strategy : {0, 1}) {
            long chain = 0;
            normalize(NCElement::word(w), strategy, &chain);
            CHECK(chain <= bound);
        }
    }
}

TEST_CASE("two rewriting strategies agree") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        NCElement e = NCElement::word(rand_word(rng, 10));
        NCElement a = normalize(e, 0);
        NCElement b = normalize(e, 1);
        CHECK(a == b);
        for (const auto& [w, c] : a.terms()) CHECK(in_normal_form(w));
        CHECK(normalize(a) == a);
    }
}

TEST_CASE("rewriting preserves the grading") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 60; ++trial) {
        NCWord w = rand_word(rng, 10);
        NCElement n = normalize(NCElement::word(w));
        REQUIRE_FALSE(n.is_zero());
        CHECK(n.degree_set() == std::set<long>{word_degree(w)});
    }
    // sums of equal-degree words keep a one-element degree set
    NCElement mixed = NCElement::word({Gen::E, Gen::F, Gen::K}) +
                      NCElement::word({Gen::F, Gen::Kinv, Gen::E}) +
                      NCElement::word({Gen::K, Gen::E, Gen::F, Gen::K, Gen::Kinv});
    CHECK(normalize(mixed).degree_set() == std::set<long>{0});
}

TEST_CASE("element parsing") {
    NCElement expect = NCElement::word({Gen::F, Gen::F, Gen::Kinv, Gen::E}, QScalar(2)) +
                       NCElement::word({Gen::K}, kap());
    CHECK(parse_nc("2*F^2*K^-1*E + (1/(q-q^-1))*K") == expect);

    CHECK(parse_nc("E*F - F*E") == NCElement::word({Gen::E, Gen::F}) -
                                       NCElement::word({Gen::F, Gen::E}));
    CHECK(parse_nc("K^0") == NCElement::scalar(QScalar(1)));
    CHECK(parse_nc("q^2*E") == NCElement::word({Gen::E}, QScalar::q_power(2)));
    CHECK(parse_nc("-3*K + 3*K").is_zero());
    CHECK(parse_nc("2^3") == NCElement::scalar(QScalar(8)));
    CHECK(parse_nc(" ( E + F ) * K ") ==
          NCElement::word({Gen::E, Gen::K}) + NCElement::word({Gen::F, Gen::K}));
    CHECK(parse_nc("F/(2*K)") == NCElement::word({Gen::F, Gen::Kinv}, QScalar(1) / QScalar(2)));

    CHECK_THROWS_AS(parse_nc("E^-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("1/E"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("1/(K + 1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("(K"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("E F"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("q^q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_nc("x"), std::invalid_argument);
}

TEST_CASE("printed form parses back") {
    std::mt19937_64 rng(1618);
    std::vector<NCElement> samples{casimir(), normalize(NCElement::word({Gen::E, Gen::F})),
                                   NCElement(), NCElement::scalar(QScalar(-3)),
                                   parse_nc("2*F^2*K^-1*E + (1/(q-q^-1))*K")};
    for (int trial = 0; trial < 20; ++trial)
        samples.push_back(NCElement::word(rand_word(rng, 8)));
    for (const auto& e : samples) CHECK(parse_nc(e.str()) == e);
}

TEST_CASE("natural representation") {
    NaturalRep rep = natural_rep(2);
    REQUIRE(rep.E.size() == 2);
    CHECK(rep.E[0] == RepMatrix::unit(3, 0, 1));
    CHECK(rep.F[1] == RepMatrix::unit(3, 2, 1));
    CHECK(rep.K[0].is_diagonal());
    CHECK(rep.K[0].at(0, 0) == QScalar::q());
    CHECK(rep.K[0].at(1, 1) == QScalar::q_power(-1));
    CHECK(rep.K[0].at(2, 2) == QScalar(1));

    // K_1 E_1 K_1^{-1} = q^2 E_1
    CHECK(rep.K[0] * rep.E[0] * rep.Kinv[0] == rep.E[0] * QScalar::q_power(2));
    // E_1 F_1 - F_1 E_1 = (K_1 - K_1^{-1})/(q - q^{-1})
    CHECK(rep.E[0] * rep.F[0] - rep.F[0] * rep.E[0] == (rep.K[0] - rep.Kinv[0]) * kap());

    NaturalRep rep3 = natural_rep(3);
    CHECK(rep3.E[0] * rep3.E[2] == rep3.E[2] * rep3.E[0]);

    CHECK_THROWS_AS(natural_rep(0), std::invalid_argument);
}

TEST_CASE("defining relations hold in the natural representation") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(check_relations(n));
    }
}
