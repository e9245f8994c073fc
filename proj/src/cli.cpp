#include "qsl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/charspec.hpp"
#include "qsl/invariants.hpp"
#include "qsl/json_io.hpp"
#include "qsl/ncalgebra.hpp"
#include "qsl/qscalar.hpp"
#include "qsl/rootdata.hpp"
#include "qsl/torus.hpp"

namespace qsl {

namespace {

struct Opts {
    int rank = 0;
    int m = 0;
    bool m_given = false;
    std::string q_str;
    std::string p_str;
    long max_coord = 3;
    std::vector<int> indices;
    bool json = false;
    unsigned long seed = 1;
    std::string expr;
};

std::vector<int> default_indices(int n) {
    // the independent family: 1..n-1 together with n+1
    std::vector<int> ms;
    for (int m = 1; m < n; ++m) ms.push_back(m);
    ms.push_back(n + 1);
    return ms;
}

std::string weight_str(const std::vector<long>& m) {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_lattice(const Opts& o, std::ostream& out) {
    RootSystem sys(o.rank);
    LatticeBasis basis = intersect_2lambda(sys);
    if (o.json) {
        Json jb = Json::array();
        for (const LatticeVector& v : basis.vectors()) jb.push_back(latvec_to_json(v));
        emit(out, Json{{"rank", o.rank}, {"basis", jb}});
    } else {
        for (const LatticeVector& v : basis.vectors()) out << v.str() << "\n";
    }
    return 0;
}

int cmd_sigma(const Opts& o, std::ostream& out) {
    InvariantElement inv = to_sigma(o.rank, o.m);
    if (o.json) {
        emit(out, invariant_to_json(inv));
    } else {
        out << "sigma_" << o.m << " (rank " << o.rank << "):\n" << inv.body.str() << "\n";
    }
    return 0;
}

int cmd_symmetry(const Opts& o, std::ostream& out) {
    std::vector<int> ms;
    if (o.m_given) {
        ms.push_back(o.m);
    } else {
        for (int m = 1; m <= o.rank + 1; ++m) ms.push_back(m);
    }
    Json checks = Json::array();
    bool all = true;
    for (int m : ms) {
        InvariantElement inv = to_sigma(o.rank, m);
        bool w = check_w_invariance(inv);
        bool s = check_self_reciprocity(inv);
        all = all && w && s;
        if (o.json) {
            checks.push_back({{"m", m}, {"weyl_invariant", w}, {"self_reciprocal", s}});
        } else {
            out << "m=" << m << ": weyl=" << (w ? "pass" : "FAIL")
                << " self-reciprocal=" << (s ? "pass" : "FAIL") << "\n";
        }
    }
    if (o.json) {
        emit(out, Json{{"rank", o.rank}, {"checks", checks}, {"all_pass", all}});
    } else {
        out << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? 0 : 2;
}

int cmd_independence(const Opts& o, std::ostream& out) {
    IndependenceReport rep = check_algebraic_independence(o.rank, o.seed);
    bool ok = rep.result == Independence::independent;
    if (o.json) {
        emit(out, Json{{"rank", o.rank},
                       {"seed", o.seed},
                       {"result", ok ? "independent" : "inconclusive"},
                       {"attempts", rep.attempts}});
    } else {
        out << (ok ? "independent" : "inconclusive") << " after " << rep.attempts
            << " attempt(s)\n";
    }
    return ok ? 0 : 2;
}

int cmd_char(const Opts& o, std::ostream& out) {
    std::vector<int> ms = o.indices.empty() ? default_indices(o.rank) : o.indices;
    CharacterTable table = character_table(o.rank, ms, o.max_coord);
    if (o.json) {
        Json rows = Json::array();
        for (size_t w = 0; w < table.weights.size(); ++w) {
            Json vals = Json::array();
            for (const QScalar& v : table.values[w]) vals.push_back(qscalar_to_json(v));
            rows.push_back({{"weight", table.weights[w].m}, {"values", vals}});
        }
        emit(out, Json{{"rank", o.rank},
                       {"indices", ms},
                       {"max_coord", o.max_coord},
                       {"rows", rows}});
    } else {
        for (size_t w = 0; w < table.weights.size(); ++w) {
            for (size_t k = 0; k < ms.size(); ++k) {
                out << "lambda=" << weight_str(table.weights[w].m) << " m=" << ms[k] << ": "
                    << table.values[w][k].str() << "\n";
            }
        }
    }
    return 0;
}

int cmd_distinguish(const Opts& o, std::ostream& out) {
    Rat q_val = parse_rational(o.q_str);
    Rat p_val = parse_rational(o.p_str);
    std::vector<int> ms = o.indices.empty() ? default_indices(o.rank) : o.indices;
    DistinguishResult res = distinguish(o.rank, q_val, p_val, o.max_coord, ms);
    if (res.witness) {
        const SeparationWitness& w = *res.witness;
        if (o.json) {
            emit(out, Json{{"result", "witness"},
                           {"witness",
                            Json{{"weight", w.weight.m},
                                 {"m", w.m_index},
                                 {"q", to_string(w.q_value)},
                                 {"p", to_string(w.p_value)},
                                 {"lhs", to_string(w.lhs)},
                                 {"rhs", to_string(w.rhs)}}},
                           {"max_coord", res.max_coord}});
        } else {
            out << "witness: weight=" << weight_str(w.weight.m) << " m=" << w.m_index
                << " lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs) << "\n";
        }
        return 2;
    }
    if (o.json) {
        emit(out, Json{{"result", "indistinguishable"}, {"max_coord", res.max_coord}});
    } else {
        out << "indistinguishable up to max-coord " << res.max_coord << "\n";
    }
    return 0;
}

int cmd_force(const Opts& o, std::ostream& out) {
    Rat q_val = parse_rational(o.q_str);
    std::vector<Rat> sols = forcing_solutions(q_val);
    bool ident = forcing_identity_holds();
    if (o.json) {
        Json js = Json::array();
        for (const Rat& s : sols) js.push_back(to_string(s));
        emit(out, Json{{"q", to_string(q_val)},
                       {"solutions", js},
                       {"identity_holds", ident}});
    } else {
        out << "solutions:";
        for (const Rat& s : sols) out << " " << to_string(s);
        out << "\nfactorization identity: " << (ident ? "holds" : "FAILS") << "\n";
    }
    return ident ? 0 : 2;
}

NCWord random_word(std::mt19937_64& rng, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> pick(0, 3);
    NCWord w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(static_cast<Gen>(pick(rng)));
    return w;
}

int cmd_nc_check(const Opts& o, std::ostream& out) {
    if (!o.expr.empty()) {
        NCElement e = normalize(parse_nc(o.expr));
        if (o.json) {
            emit(out, Json{{"input", o.expr}, {"normal_form", ncelement_to_json(e)}});
        } else {
            out << e.str() << "\n";
        }
        return 0;
    }

    QScalar q = QScalar::q();
    QScalar kap = (q - q.inverse()).inverse();
    NCElement E = NCElement::generator(Gen::E);
    NCElement F = NCElement::generator(Gen::F);
    NCElement K = NCElement::generator(Gen::K);
    NCElement Kv = NCElement::generator(Gen::Kinv);
    NCElement C = casimir();

    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass) {
        all = all && pass;
        if (o.json) {
            checks.push_back({{"name", name}, {"pass", pass}});
        } else {
            out << name << ": " << (pass ? "pass" : "FAIL") << "\n";
        }
    };

    NCElement ef_expected = multiply(F, E) + K * kap + Kv * (-kap);
    record("EF normal form", normalize(E * F) == ef_expected);

    bool central = is_central(C);
    for (const NCElement& g : {E, F, K, Kv}) {
        central = central && commutator(C, g).is_zero();
    }
    record("casimir centrality", central);

    TorusElement pc_expected =
        TorusElement::monomial(KMonomial(std::vector<long>{1}), q * kap * kap) +
        TorusElement::monomial(KMonomial(std::vector<long>{-1}), q.inverse() * kap * kap);
    record("projection of the casimir", pi_projection(C) == pc_expected);

    TorusElement tw = gamma_twist(-rho(RootSystem(1)), pi_projection(C));
    record("twisted projection is reflection-fixed",
           weyl_act_torus(WeylElement::simple_reflection(2, 1), tw) == tw);

    bool units_ok = true;
    std::vector<NCElement> unit_samples = {K, Kv, K * QScalar(2), multiply(K, Kv),
                                           NCElement::scalar(q * q - QScalar(1))};
    for (const NCElement& u : unit_samples) units_ok = units_ok && is_unit(u);
    std::vector<NCElement> nonunit_samples = {E, F, K + Kv, NCElement::scalar(QScalar(0)),
                                              multiply(E, F)};
    for (const NCElement& u : nonunit_samples) units_ok = units_ok && !is_unit(u);
    record("unit decisions", units_ok);

    std::mt19937_64 rng(o.seed);
    bool confluent = true;
    for (int i = 0; i < 100 && confluent; ++i) {
        NCElement w = NCElement::word(random_word(rng, 10));
        confluent = normalize(w, 0) == normalize(w, 1);
    }
    record("rewrite confluence on 100 random words", confluent);

    if (o.json) {
        emit(out, Json{{"checks", checks}, {"all_pass", all}});
    } else {
        out << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? 0 : 2;
}

int cmd_rep_check(const Opts& o, std::ostream& out) {
    std::vector<int> ranks;
    if (o.rank > 0) {
        ranks.push_back(o.rank);
    } else {
        for (int n = 1; n <= 6; ++n) ranks.push_back(n);
    }
    Json results = Json::array();
    bool all = true;
    for (int n : ranks) {
        bool ok = check_relations(n);
        all = all && ok;
        if (o.json) {
            results.push_back({{"rank", n}, {"pass", ok}});
        } else {
            out << "rank " << n << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (o.json) {
        emit(out, Json{{"results", results}, {"all_pass", all}});
    } else {
        out << (all ? "all relations hold" : "some relations failed") << "\n";
    }
    return all ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations around twisted invariants of quantum sl(n+1)"};
    app.name("qsl");
    Opts o;
    int rc = 0;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };

    CLI::App* lattice = app.add_subcommand(
        "lattice", "basis of the intersection of the root lattice with twice the weight lattice");
    lattice->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    add_json(lattice);
    lattice->callback([&] { rc = cmd_lattice(o, out); });

    CLI::App* sigma = app.add_subcommand("sigma", "the twisted invariant sigma_m");
    sigma->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    sigma->add_option("--m", o.m, "index m in 1..n+1")->required();
    add_json(sigma);
    sigma->callback([&] { rc = cmd_sigma(o, out); });

    CLI::App* symmetry =
        app.add_subcommand("symmetry", "Weyl invariance and self-reciprocity checks");
    symmetry->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    symmetry->add_option("--m", o.m, "single index (default: all of 1..n+1)")
        ->each([&](const std::string&) { o.m_given = true; });
    add_json(symmetry);
    symmetry->callback([&] { rc = cmd_symmetry(o, out); });

    CLI::App* independence =
        app.add_subcommand("independence", "Jacobian certificate of algebraic independence");
    independence->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    independence->add_option("--seed", o.seed, "random seed");
    add_json(independence);
    independence->callback([&] { rc = cmd_independence(o, out); });

    CLI::App* charcmd = app.add_subcommand("char", "central characters over a weight box");
    charcmd->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    charcmd->add_option("--max-coord", o.max_coord, "weight box bound (default 3)");
    charcmd->add_option("--indices", o.indices, "comma-separated m indices")->delimiter(',');
    add_json(charcmd);
    charcmd->callback([&] { rc = cmd_char(o, out); });

    CLI::App* dist = app.add_subcommand(
        "distinguish", "search for a central-character witness separating parameters q and p");
    dist->add_option("--rank", o.rank, "even rank n")->required()->check(CLI::PositiveNumber);
    dist->add_option("--q", o.q_str, "rational q as a/b")->required();
    dist->add_option("--p", o.p_str, "rational p as a/b")->required();
    dist->add_option("--max-coord", o.max_coord, "weight box bound (default 3)");
    dist->add_option("--indices", o.indices, "comma-separated m indices")->delimiter(',');
    add_json(dist);
    dist->callback([&] { rc = cmd_distinguish(o, out); });

    CLI::App* force =
        app.add_subcommand("force", "solve the forcing equation for p given q");
    force->add_option("--q", o.q_str, "rational q as a/b")->required();
    add_json(force);
    force->callback([&] { rc = cmd_force(o, out); });

    CLI::App* nc = app.add_subcommand(
        "nc-check", "rank-1 noncommutative suite, or normalize a given expression");
    nc->add_option("expression", o.expr, "expression in E, F, K, q to normalize");
    nc->add_option("--seed", o.seed, "random seed for the confluence spot-check");
    add_json(nc);
    nc->callback([&] { rc = cmd_nc_check(o, out); });

    CLI::App* rep = app.add_subcommand(
        "rep-check", "verify the defining relations in the natural representation");
    rep->add_option("--rank", o.rank, "single rank (default: 1..6)")->check(CLI::PositiveNumber);
    add_json(rep);
    rep->callback([&] { rc = cmd_rep_check(o, out); });

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace qsl
