#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qsl/charspec.hpp"
#include "qsl/invariants.hpp"
#include "qsl/json_io.hpp"
#include "qsl/ncalgebra.hpp"
#include "qsl/qscalar.hpp"
#include "qsl/rootdata.hpp"

using namespace qsl;

TEST_CASE("laurent json round trip") {
    LaurentZ zero;
    CHECK(laurent_from_json(laurent_to_json(zero)) == zero);
    CHECK(laurent_to_json(zero) == Json::array());

    LaurentZ p = LaurentZ::monomial(Int(3), 2) + LaurentZ::monomial(Int(-1), -4) +
                 LaurentZ::monomial(Int(7), 0);
    CHECK(laurent_from_json(laurent_to_json(p)) == p);

    Json j = laurent_to_json(p);
    REQUIRE(j.size() == 3);
    // entries ascend by exponent, coefficients are decimal strings
    CHECK(j[0][0].get<long>() == -4);
    CHECK(j[0][1].get<std::string>() == "-1");
    CHECK(j[2][0].get<long>() == 2);
    CHECK(j[2][1].get<std::string>() == "3");
}

TEST_CASE("qscalar json round trip") {
    std::vector<QScalar> samples;
    samples.push_back(QScalar(0));
    samples.push_back(QScalar(5));
    samples.push_back(QScalar(-3) / QScalar(7));
    samples.push_back(QScalar::q());
    QScalar q = QScalar::q();
    samples.push_back((q - q.inverse()).inverse());          // kappa
    samples.push_back((q + QScalar(1)) / (q.pow(3) - q));    // needs reduction
    samples.push_back(q.pow(-5) * QScalar(2) - QScalar(1) / (q + QScalar(2)));
    for (const QScalar& s : samples) {
        Json j = qscalar_to_json(s);
        REQUIRE(j.contains("num"));
        REQUIRE(j.contains("den"));
        CHECK(qscalar_from_json(j) == s);
    }
    // denominator of an integer scalar is the constant 1
    Json j5 = qscalar_to_json(QScalar(5));
    CHECK(j5["den"] == Json::array({Json::array({0, "1"})}));
}

TEST_CASE("torus element json round trip") {
    TorusElement e = to_sigma(2, 1).body;
    Json j = torus_to_json(e);
    CHECK(torus_from_json(j, 2) == e);
    REQUIRE(j.size() == 7);
    // terms are sorted by exponent vector; each carries the full rank
    for (const auto& term : j) REQUIRE(term["exps"].size() == 2);
    CHECK(j[0]["exps"] == Json::array({-2, -2}));

    TorusElement empty(3);
    CHECK(torus_to_json(empty) == Json::array());
    CHECK(torus_from_json(Json::array(), 3) == empty);

    TorusElement k = TorusElement::k(4, 2, -3);
    CHECK(torus_from_json(torus_to_json(k), 4) == k);

    // wrong rank in an exps entry is rejected
    CHECK_THROWS_AS((void)torus_from_json(j, 3), std::invalid_argument);
}

TEST_CASE("invariant json round trip") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {4, 5}}) {
        InvariantElement inv = to_sigma(n, m);
        Json j = invariant_to_json(inv);
        CHECK(j["n"].get<int>() == n);
        CHECK(j["m"].get<int>() == m);
        CHECK(invariant_from_json(j) == inv);
    }
}

TEST_CASE("lattice vector json round trip") {
    RootSystem sys(3);
    std::vector<LatticeVector> vecs = {simple_root(sys, 1), fundamental_weight(sys, 2),
                                       rho(sys), LatticeVector::from_alpha_int(3, {1, 0, 1})};
    for (const LatticeVector& v : vecs) {
        Json j = latvec_to_json(v);
        REQUIRE(j.size() == 4);  // n+1 epsilon coordinates
        CHECK(latvec_from_json(j) == v);
    }
    // coordinates are exact fraction strings
    Json jr = latvec_to_json(rho(RootSystem(1)));
    CHECK(jr[0].get<std::string>() == "1/2");
    CHECK(jr[1].get<std::string>() == "-1/2");
}

TEST_CASE("nc element json round trip") {
    std::vector<NCElement> samples;
    samples.push_back(NCElement::scalar(QScalar(0)));
    samples.push_back(casimir());
    samples.push_back(normalize(NCElement::generator(Gen::E) * NCElement::generator(Gen::F)));
    samples.push_back(parse_nc("(E + q*F)*K^-2 - 3"));
    for (const NCElement& e : samples) {
        CHECK(ncelement_from_json(ncelement_to_json(e)) == e);
    }
    Json j = ncelement_to_json(NCElement::word({Gen::F, Gen::Kinv, Gen::E}));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["word"] == Json::array({"F", "K^-1", "E"}));
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS((void)laurent_from_json(Json::parse(R"([[0, "x"]])")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)qscalar_from_json(Json::parse(R"({"num": []})")),
                    std::invalid_argument);
    // zero denominator
    CHECK_THROWS_AS((void)qscalar_from_json(Json::parse(R"({"num": [[0,"1"]], "den": []})")),
                    std::domain_error);
    CHECK_THROWS_AS((void)latvec_from_json(Json::parse(R"(["1/0", "0"])")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ncelement_from_json(Json::parse(
                        R"([{"word": ["E", "Q"], "coeff": {"num": [[0,"1"]], "den": [[0,"1"]]}}])")),
                    std::invalid_argument);
}
