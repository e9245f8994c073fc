#include "qsl/json_io.hpp"

#include <stdexcept>

namespace qsl {

Json laurent_to_json(const LaurentZ& p) {
    Json arr = Json::array();
    for (long e = p.lo(); e <= p.hi(); ++e) {
        Int c = p.coeff(e);
        if (c == 0) continue;
        arr.push_back(Json::array({e, c.get_str()}));
    }
    return arr;
}

LaurentZ laurent_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("laurent: expected an array");
    LaurentZ p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("laurent: expected [exponent, coefficient] pairs");
        long e = pair[0].get<long>();
        Int c(pair[1].get<std::string>());
        p = p + LaurentZ::monomial(c, e);
    }
    return p;
}

Json qscalar_to_json(const QScalar& s) {
    return Json{{"num", laurent_to_json(s.num())}, {"den", laurent_to_json(s.den())}};
}

QScalar qscalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("scalar JSON needs num and den");
    return QScalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json torus_to_json(const TorusElement& t) {
    Json arr = Json::array();
    for (const auto& [m, c] : t.terms()) {
        Json exps = Json::array();
        for (long e : m.exps()) exps.push_back(e);
        arr.push_back(Json{{"exps", std::move(exps)}, {"coeff", qscalar_to_json(c)}});
    }
    return arr;
}

TorusElement torus_from_json(const Json& j, int rank) {
    if (!j.is_array()) throw std::invalid_argument("torus element: expected an array");
    TorusElement t(rank);
    for (const auto& term : j) {
        std::vector<long> exps = term.at("exps").get<std::vector<long>>();
        if (static_cast<int>(exps.size()) != rank)
            throw std::invalid_argument("torus element: rank mismatch");
        t = t + TorusElement::monomial(KMonomial(std::move(exps)),
                                       qscalar_from_json(term.at("coeff")));
    }
    return t;
}

Json invariant_to_json(const InvariantElement& inv) {
    return Json{{"n", inv.n}, {"m", inv.m}, {"body", torus_to_json(inv.body)}};
}

InvariantElement invariant_from_json(const Json& j) {
    InvariantElement inv;
    inv.n = j.at("n").get<int>();
    inv.m = j.at("m").get<int>();
    inv.body = torus_from_json(j.at("body"), inv.n);
    return inv;
}

Json latvec_to_json(const LatticeVector& v) {
    Json arr = Json::array();
    for (const Rat& c : v.coords()) arr.push_back(to_string(c));
    return arr;
}

LatticeVector latvec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("lattice vector: expected an array");
    std::vector<Rat> coords;
    for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
    return LatticeVector::from_epsilon(std::move(coords));
}

namespace {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::E: return "E";
        case Gen::F: return "F";
        case Gen::K: return "K";
        default: return "K^-1";
    }
}

Gen gen_from_name(const std::string& s) {
    if (s == "E") return Gen::E;
    if (s == "F") return Gen::F;
    if (s == "K") return Gen::K;
    if (s == "K^-1") return Gen::Kinv;
    throw std::invalid_argument("unknown generator symbol: " + s);
}

}  // namespace

Json ncelement_to_json(const NCElement& e) {
    Json arr = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json word = Json::array();
        for (Gen g : w) word.push_back(gen_name(g));
        arr.push_back(Json{{"word", std::move(word)}, {"coeff", qscalar_to_json(c)}});
    }
    return arr;
}

NCElement ncelement_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("nc element: expected an array");
    NCElement e;
    for (const auto& term : j) {
        NCWord w;
        for (const auto& g : term.at("word")) w.push_back(gen_from_name(g.get<std::string>()));
        e = e + NCElement::word(std::move(w), qscalar_from_json(term.at("coeff")));
    }
    return e;
}

}  // namespace qsl
