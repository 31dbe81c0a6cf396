#ifndef OPERADIC_JSON_IO_HPP
#define OPERADIC_JSON_IO_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "operadic/freealg.hpp"
#include "operadic/presentation.hpp"
#include "operadic/transform.hpp"
#include "operadic/unit_action.hpp"

namespace operadic {

using json = nlohmann::ordered_json;

struct LoadResult {
    OperadPresentation presentation;
    std::vector<std::string> warnings;
};

namespace detail {

inline Scalar parse_rational(const json& j, const std::string& where) {
    if (!j.is_string())
        throw std::invalid_argument(where + ": coefficients must be rational strings, got " +
                                    j.dump());
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument(where + ": unknown key \"" + it.key() + "\"");
    }
}

inline std::size_t gen_index(const std::vector<std::string>& gens, const std::string& label,
                             const std::string& where) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == label) return i;
    throw std::invalid_argument(where + ": unknown generator label \"" + label + "\"");
}

inline Mat parse_side(const json& j, const std::vector<std::string>& gens,
                      const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of terms");
    Mat m(gens.size(), gens.size());
    for (const auto& term : j) {
        if (!term.is_object()) throw std::invalid_argument(where + ": term must be an object");
        reject_unknown_keys(term, {"a", "b", "c"}, where);
        if (!term.contains("a") || !term.contains("b") || !term.contains("c"))
            throw std::invalid_argument(where + ": term needs keys a, b, c");
        std::size_t s = gen_index(gens, term["a"].get<std::string>(), where);
        std::size_t t = gen_index(gens, term["b"].get<std::string>(), where);
        m.at(s, t) += parse_rational(term["c"], where);
    }
    return m;
}

}  // namespace detail

// Parses the presentation file schema. Unknown keys are rejected anywhere;
// a relation list that fails to be linearly independent is row-reduced to a
// basis with a warning rather than rejected.
inline LoadResult presentation_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("presentation: expected a JSON object");
    detail::reject_unknown_keys(
        j, {"name", "generators", "star", "relations", "associative_candidates"},
        "presentation");
    LoadResult out;
    OperadPresentation& p = out.presentation;
    p.name = j.contains("name") ? j["name"].get<std::string>() : "";
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw std::invalid_argument("presentation: \"generators\" must be a nonempty array");
    for (const auto& g : j["generators"]) p.gens.push_back(g.get<std::string>());

    p.star = Vec(p.n());
    if (j.contains("star")) {
        if (!j["star"].is_object())
            throw std::invalid_argument("presentation: \"star\" must be an object");
        for (auto it = j["star"].begin(); it != j["star"].end(); ++it) {
            std::size_t i = detail::gen_index(p.gens, it.key(), "star");
            p.star[i] = detail::parse_rational(it.value(), "star");
        }
    }

    if (!j.contains("relations") || !j["relations"].is_array())
        throw std::invalid_argument("presentation: \"relations\" must be an array");
    for (const auto& rel : j["relations"]) {
        if (!rel.is_object())
            throw std::invalid_argument("relations: entry must be an object");
        detail::reject_unknown_keys(rel, {"left", "right"}, "relations");
        if (!rel.contains("left") || !rel.contains("right"))
            throw std::invalid_argument("relations: entry needs keys left and right");
        p.relations.push_back(RelPair{detail::parse_side(rel["left"], p.gens, "relations.left"),
                                      detail::parse_side(rel["right"], p.gens, "relations.right")});
    }

    Subspace span = relation_subspace(p);
    if (span.dim() != p.relations.size()) {
        out.warnings.push_back("relation list is linearly dependent; reduced " +
                               std::to_string(p.relations.size()) + " entries to a basis of " +
                               std::to_string(span.dim()));
        std::vector<RelPair> reduced;
        for (std::size_t i = 0; i < span.dim(); ++i)
            reduced.push_back(unflatten(span.basis().row(i), p.n()));
        p.relations = std::move(reduced);
    }
    return out;
}

inline json presentation_to_json(const OperadPresentation& p) {
    json j;
    j["name"] = p.name;
    j["generators"] = p.gens;
    if (p.star.dim() == p.n() && !p.star.is_zero()) {
        json star = json::object();
        for (std::size_t i = 0; i < p.n(); ++i)
            if (!p.star[i].is_zero()) star[p.gens[i]] = p.star[i].to_string();
        j["star"] = star;
    }
    json rels = json::array();
    for (const auto& r : p.relations) {
        auto side = [&](const Mat& m) {
            json terms = json::array();
            for (std::size_t s = 0; s < p.n(); ++s)
                for (std::size_t t = 0; t < p.n(); ++t)
                    if (!m.at(s, t).is_zero())
                        terms.push_back({{"a", p.gens[s]},
                                         {"b", p.gens[t]},
                                         {"c", m.at(s, t).to_string()}});
            return terms;
        };
        rels.push_back({{"left", side(r.left)}, {"right", side(r.right)}});
    }
    j["relations"] = rels;
    return j;
}

inline json dual_to_json(const DualResult& d) {
    json j = presentation_to_json(d.presentation);
    json cands = json::array();
    for (std::size_t i : d.associative_candidates) {
        json coord = json::array();
        for (std::size_t k = 0; k < d.presentation.n(); ++k)
            coord.push_back(k == i ? "1" : "0");
        cands.push_back(coord);
    }
    j["associative_candidates"] = cands;
    return j;
}

inline json vec_to_json(const Vec& v) {
    json j = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) j.push_back(v[i].to_string());
    return j;
}

inline json action_to_json(const UnitAction& u, const std::vector<std::string>& gens) {
    json a = json::object(), b = json::object();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!u.alpha[i].is_zero()) a[gens[i]] = u.alpha[i].to_string();
        if (!u.beta[i].is_zero()) b[gens[i]] = u.beta[i].to_string();
    }
    return {{"alpha", a}, {"beta", b}};
}

inline json verdict_to_json(const Verdict& v) {
    json fails = json::array();
    for (const auto& f : v.failures)
        fails.push_back({{"relation", f.relation},
                         {"equation", f.equation},
                         {"residual", vec_to_json(f.residual)}});
    return {{"coherent", v.coherent}, {"compatible", v.compatible}, {"failures", fails}};
}

inline json solution_to_json(const ActionSolutionSet& s, const std::vector<std::string>& gens) {
    json j;
    switch (s.status) {
        case SolStatus::Empty: j["status"] = "Empty"; break;
        case SolStatus::Points: j["status"] = "Points"; break;
        case SolStatus::Family: j["status"] = "Family"; break;
    }
    if (s.status == SolStatus::Points) {
        json pts = json::array();
        for (const auto& u : s.points) pts.push_back(action_to_json(u, gens));
        j["points"] = pts;
    }
    if (s.status == SolStatus::Family) {
        j["particular"] = action_to_json(*s.particular, gens);
        json dirs = json::array();
        for (std::size_t i = 0; i < s.directions->dim(); ++i)
            dirs.push_back(vec_to_json(s.directions->basis().row(i)));
        j["directions"] = dirs;
    }
    if (!s.residual_constraints.empty()) j["residual_constraints"] = s.residual_constraints;
    return j;
}

inline json classify_to_json(const ClassReport& r, const std::vector<std::string>& gens) {
    json j;
    j["class"] = to_string(r.best);
    j["containment"] = r.containment;
    if (r.witness) j["witness"] = action_to_json(*r.witness, gens);
    if (r.basis) {
        json rows = json::array();
        for (std::size_t i = 0; i < r.basis->rows(); ++i)
            rows.push_back(vec_to_json(r.basis->row(i)));
        j["basis"] = rows;
    }
    return j;
}

inline json oracle_to_json(const OracleResult& r) {
    json j;
    j["ok"] = r.ok;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        auto triple = [](const std::array<int, 3>& t) {
            json a = json::array();
            for (int v : t) a.push_back(v < 0 ? "-" : (v ? "x" : "1"));
            return a;
        };
        j["counterexample"] = {{"relation_index", c.relation},
                               {"a_triple", triple(c.a_triple)},
                               {"b_triple", triple(c.b_triple)},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs}};
    }
    return j;
}

}  // namespace operadic

#endif
