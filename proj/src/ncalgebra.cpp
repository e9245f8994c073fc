#include "qsl/ncalgebra.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qsl {

namespace {

bool ktype(Gen g) { return g == Gen::K || g == Gen::Kinv; }

const QScalar& kappa() {  // 1/(q - q^{-1})
    static const QScalar k = (QScalar::q() - QScalar::q_power(-1)).inverse();
    return k;
}

bool rule_applies(const NCWord& w, size_t i) {
    Gen a = w[i], b = w[i + 1];
    if (a == Gen::E && (b == Gen::F || ktype(b))) return true;
    if (ktype(a) && b == Gen::F) return true;
    return ktype(a) && ktype(b) && a != b;
}

// The continuations of one rewrite at position i: (new word, coefficient factor).
std::vector<std::pair<NCWord, QScalar>> apply_rule(const NCWord& w, size_t i) {
    Gen a = w[i], b = w[i + 1];
    std::vector<std::pair<NCWord, QScalar>> out;
    auto swapped = [&] {
        NCWord v = w;
        std::swap(v[i], v[i + 1]);
        return v;
    };
    auto spliced = [&](Gen mid) {  // replace the pair by a single letter
        NCWord v(w.begin(), w.begin() + i);
        v.push_back(mid);
        v.insert(v.end(), w.begin() + i + 2, w.end());
        return v;
    };
    if (a == Gen::E && b == Gen::F) {
        out.emplace_back(swapped(), QScalar(1));
        out.emplace_back(spliced(Gen::K), kappa());
        out.emplace_back(spliced(Gen::Kinv), -kappa());
        return out;
    }
    if (a == Gen::E && ktype(b)) {  // EK -> q^{-2} KE, EK^{-1} -> q^{2} K^{-1}E
        out.emplace_back(swapped(), QScalar::q_power(b == Gen::K ? -2 : 2));
        return out;
    }
    if (ktype(a) && b == Gen::F) {  // KF -> q^{-2} FK, K^{-1}F -> q^{2} FK^{-1}
        out.emplace_back(swapped(), QScalar::q_power(a == Gen::K ? -2 : 2));
        return out;
    }
    // KK^{-1} or K^{-1}K: drop the pair
    NCWord v(w.begin(), w.begin() + i);
    v.insert(v.end(), w.begin() + i + 2, w.end());
    out.emplace_back(std::move(v), QScalar(1));
    return out;
}

}  // namespace

long word_degree(const NCWord& w) {
    long d = 0;
    for (Gen g : w) {
        if (g == Gen::E) ++d;
        if (g == Gen::F) --d;
    }
    return d;
}

long rewrite_bound(const NCWord& w) {
    long b = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            Gen x = w[i], y = w[j];
            if (x == Gen::E && y == Gen::F) ++b;
            else if (x == Gen::E && ktype(y)) ++b;
            else if (ktype(x) && y == Gen::F) ++b;
            else if (ktype(x) && ktype(y) && x != y) ++b;
        }
    }
    return b;
}

void NCElement::add_term(NCWord w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCElement NCElement::scalar(const QScalar& c) {
    NCElement e;
    e.add_term({}, c);
    return e;
}

NCElement NCElement::generator(Gen g) { return word({g}); }

NCElement NCElement::word(NCWord w, const QScalar& c) {
    NCElement e;
    e.add_term(std::move(w), c);
    return e;
}

std::set<long> NCElement::degree_set() const {
    std::set<long> s;
    for (const auto& [w, c] : terms_) s.insert(word_degree(w));
    return s;
}

NCElement NCElement::operator+(const NCElement& o) const {
    NCElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCElement NCElement::operator-(const NCElement& o) const {
    NCElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCElement NCElement::operator*(const NCElement& o) const {
    NCElement r;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(std::move(w), ca * cb);
        }
    }
    return r;
}

NCElement NCElement::operator*(const QScalar& c) const {
    NCElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : terms_) r.terms_.emplace(w, cc * c);
    return r;
}

NCElement NCElement::operator-() const {
    NCElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

std::string NCElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        if (w.empty()) {
            out += (cs.find_first_of("+-/* ") == std::string::npos) ? cs : "(" + cs + ")";
            continue;
        }
        if (!(c == QScalar(1))) out += "(" + cs + ")*";
        size_t i = 0;
        bool lead = true;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            long run = static_cast<long>(j - i);
            if (!lead) out += "*";
            lead = false;
            switch (w[i]) {
                case Gen::E: out += "E"; break;
                case Gen::F: out += "F"; break;
                case Gen::K: out += "K"; break;
                case Gen::Kinv: out += "K"; run = -run; break;
            }
            if (run != 1) out += "^" + std::to_string(run);
            i = j;
        }
    }
    return out;
}

NCElement normalize(const NCElement& e, int strategy, long* chain_out) {
    if (strategy != 0 && strategy != 1) throw std::invalid_argument("unknown strategy");
    NCElement out;
    long max_chain = 0;
    std::vector<std::tuple<NCWord, QScalar, long>> work;
    work.reserve(e.terms_.size());
    for (const auto& [w, c] : e.terms_) work.emplace_back(w, c, 0);
    while (!work.empty()) {
        auto [w, c, depth] = std::move(work.back());
        work.pop_back();
        if (depth > max_chain) max_chain = depth;
        size_t pos = w.size();  // sentinel: no rule applies
        if (strategy == 0) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (rule_applies(w, i)) {
                    pos = i;
                    break;
                }
        } else {
            for (size_t i = w.size(); i-- > 1;)
                if (rule_applies(w, i - 1)) {
                    pos = i - 1;
                    break;
                }
        }
        if (pos == w.size()) {
            out.add_term(std::move(w), c);
            continue;
        }
        for (auto& [nw, f] : apply_rule(w, pos)) work.emplace_back(std::move(nw), c * f, depth + 1);
    }
    if (chain_out) *chain_out = max_chain;
    return out;
}

NCElement multiply(const NCElement& a, const NCElement& b) { return normalize(a * b); }

NCElement commutator(const NCElement& a, const NCElement& b) { return normalize(a * b - b * a); }

TorusElement pi_projection(const NCElement& e) {
    for (const auto& [w, c] : e.terms())
        if (word_degree(w) != 0)
            throw std::invalid_argument("projection needs a degree-0 element");
    TorusElement t(1);
    NCElement n = normalize(e);
    for (const auto& [w, c] : n.terms()) {
        long b = 0;
        bool pure = true;
        for (Gen g : w) {
            if (g == Gen::K) ++b;
            else if (g == Gen::Kinv) --b;
            else {
                pure = false;
                break;
            }
        }
        if (pure) t = t + TorusElement::monomial(KMonomial(std::vector<long>{b}), c);
    }
    return t;
}

NCElement casimir() {
    QScalar d2inv = (kappa() * kappa());  // 1/(q - q^{-1})^2
    NCElement c = NCElement::word({Gen::F, Gen::E});
    c = c + NCElement::word({Gen::K}, QScalar::q() * d2inv);
    c = c + NCElement::word({Gen::Kinv}, QScalar::q_power(-1) * d2inv);
    return c;
}

bool is_unit(const NCElement& e) {
    NCElement n = normalize(e);
    if (n.terms().size() != 1) return false;
    const auto& [w, c] = *n.terms().begin();
    for (Gen g : w)
        if (!ktype(g)) return false;
    return !c.is_zero();
}

bool is_central(const NCElement& e) {
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv})
        if (!commutator(e, NCElement::generator(g)).is_zero()) return false;
    return true;
}

namespace {

// inverse of a unit: single normal term c K^b -> c^{-1} K^{-b}
NCElement unit_inverse(const NCElement& e) {
    NCElement n = normalize(e);
    if (n.terms().size() != 1) throw std::invalid_argument("division by a non-unit");
    const auto& [w, c] = *n.terms().begin();
    NCWord inv;
    inv.reserve(w.size());
    for (Gen g : w) {
        if (!ktype(g)) throw std::invalid_argument("division by a non-unit");
        inv.push_back(g == Gen::K ? Gen::Kinv : Gen::K);
    }
    return NCElement::word(std::move(inv), c.inverse());
}

NCElement nc_pow(const NCElement& base, long e) {
    if (e < 0) return nc_pow(unit_inverse(base), -e);
    NCElement r = NCElement::scalar(QScalar(1));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument(msg + " at position " + std::to_string(pos));
    }

    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    NCElement primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            NCElement v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return NCElement::scalar(QScalar(integer()));
        ++pos;
        switch (c) {
            case 'q': return NCElement::scalar(QScalar::q());
            case 'E': return NCElement::generator(Gen::E);
            case 'F': return NCElement::generator(Gen::F);
            case 'K': return NCElement::generator(Gen::K);
            default: --pos; fail("unexpected character");
        }
    }

    NCElement factor() {
        if (eat('-')) return -factor();
        NCElement base = primary();
        if (peek() == '^') {
            ++pos;
            return nc_pow(base, integer());
        }
        return base;
    }

    NCElement term() {
        NCElement v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v = v * factor();
            } else if (c == '/') {
                ++pos;
                v = v * unit_inverse(factor());
            } else {
                return v;
            }
        }
    }

    NCElement expr() {
        NCElement v = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v = v + term();
            } else if (c == '-') {
                ++pos;
                v = v - term();
            } else {
                return v;
            }
        }
    }
};

}  // namespace

NCElement parse_nc(const std::string& text) {
    Parser p{text};
    NCElement v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

RepMatrix RepMatrix::identity(int size) {
    RepMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = QScalar(1);
    return m;
}

RepMatrix RepMatrix::unit(int size, int r, int c) {
    RepMatrix m(size);
    m.at(r, c) = QScalar(1);
    return m;
}

RepMatrix RepMatrix::operator+(const RepMatrix& o) const {
    if (size_ != o.size_) throw std::invalid_argument("size mismatch");
    RepMatrix r(size_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RepMatrix RepMatrix::operator-(const RepMatrix& o) const {
    if (size_ != o.size_) throw std::invalid_argument("size mismatch");
    RepMatrix r(size_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
    if (size_ != o.size_) throw std::invalid_argument("size mismatch");
    RepMatrix r(size_);
    for (int i = 0; i < size_; ++i) {
        for (int k = 0; k < size_; ++k) {
            const QScalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < size_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return r;
}

RepMatrix RepMatrix::operator*(const QScalar& c) const {
    RepMatrix r(size_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool RepMatrix::is_diagonal() const {
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

NaturalRep natural_rep(int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    int N = n + 1;
    NaturalRep rep;
    rep.n = n;
    for (int i = 1; i <= n; ++i) {
        rep.E.push_back(RepMatrix::unit(N, i - 1, i));
        rep.F.push_back(RepMatrix::unit(N, i, i - 1));
        RepMatrix k = RepMatrix::identity(N), kinv = RepMatrix::identity(N);
        k.at(i - 1, i - 1) = QScalar::q();
        k.at(i, i) = QScalar::q_power(-1);
        kinv.at(i - 1, i - 1) = QScalar::q_power(-1);
        kinv.at(i, i) = QScalar::q();
        rep.K.push_back(std::move(k));
        rep.Kinv.push_back(std::move(kinv));
    }
    return rep;
}

bool check_relations(int n) {
    NaturalRep rep = natural_rep(n);
    int N = n + 1;
    RepMatrix id = RepMatrix::identity(N), zero(N);
    QScalar qq = QScalar::q() + QScalar::q_power(-1);
    auto cartan = [](int i, int j) { return i == j ? 2L : (std::abs(i - j) == 1 ? -1L : 0L); };
    for (int i = 1; i <= n; ++i) {
        const RepMatrix &Ki = rep.K[i - 1], &Kiv = rep.Kinv[i - 1];
        if (!Ki.is_diagonal() || !(Ki * Kiv == id) || !(Kiv * Ki == id)) return false;
        for (int j = 1; j <= n; ++j) {
            const RepMatrix &Kj = rep.K[j - 1], &Ej = rep.E[j - 1], &Fj = rep.F[j - 1];
            if (!(Ki * Kj == Kj * Ki)) return false;
            if (!(Ki * Ej == (Ej * Ki) * QScalar::q_power(cartan(i, j)))) return false;
            if (!(Ki * Fj == (Fj * Ki) * QScalar::q_power(-cartan(i, j)))) return false;
            RepMatrix lhs = rep.E[i - 1] * Fj - Fj * rep.E[i - 1];
            RepMatrix rhs = i == j ? (Ki - Kiv) * kappa() : zero;
            if (!(lhs == rhs)) return false;
            if (std::abs(i - j) >= 2) {
                if (!(rep.E[i - 1] * Ej == Ej * rep.E[i - 1])) return false;
                if (!(rep.F[i - 1] * Fj == Fj * rep.F[i - 1])) return false;
            }
            if (std::abs(i - j) == 1) {
                const RepMatrix &Ei = rep.E[i - 1], &Fi = rep.F[i - 1];
                if (!(Ei * Ei * Ej - (Ei * Ej * Ei) * qq + Ej * Ei * Ei == zero)) return false;
                if (!(Fi * Fi * Fj - (Fi * Fj * Fi) * qq + Fj * Fi * Fi == zero)) return false;
            }
        }
    }
    return true;
}

}  // namespace qsl
