#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "operadic/operadic.hpp"

using namespace operadic;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitBadInput = 2;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Scalar> parse_csv(const std::string& s) {
    std::vector<Scalar> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) out.push_back(Rational::from_string(cur));
    if (out.empty()) throw BadInput("empty coordinate list");
    return out;
}

json read_json_source(const std::string& spec) {
    std::string text;
    if (spec == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(spec);
        if (!in) throw BadInput("cannot open file: " + spec);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw BadInput(std::string("JSON parse error: ") + e.what());
    }
}

bool is_catalog_name(const std::string& s) {
    for (const auto& n : catalog_names())
        if (n == s) return true;
    return false;
}

OperadPresentation load_operad(const std::string& spec, const std::string& star_csv) {
    OperadPresentation p;
    if (is_catalog_name(spec)) {
        p = catalog(spec);
    } else {
        LoadResult lr = presentation_from_json(read_json_source(spec));
        for (const auto& w : lr.warnings) std::cerr << "warning: " << w << "\n";
        p = lr.presentation;
    }
    if (!star_csv.empty()) {
        auto coords = parse_csv(star_csv);
        if (coords.size() != p.n())
            throw BadInput("--star needs " + std::to_string(p.n()) + " coordinates");
        p.star = Vec(std::move(coords));
    }
    auto bad = validate(p);
    if (!bad.empty()) {
        std::string msg = "invalid presentation:";
        for (const auto& b : bad) msg += "\n  " + b;
        throw BadInput(msg);
    }
    return p;
}

Vec parse_functional(const std::string& spec, std::size_t n,
                     const std::vector<std::string>& gens) {
    bool looks_like_csv = spec.find(',') != std::string::npos || n == 1;
    try {
        auto coords = parse_csv(spec);
        if (coords.size() != n)
            throw BadInput("expected " + std::to_string(n) + " coordinates, got " +
                           std::to_string(coords.size()));
        return Vec(std::move(coords));
    } catch (const BadInput&) {
        throw;
    } catch (const std::exception& e) {
        if (looks_like_csv) throw BadInput(std::string("bad coordinate list: ") + e.what());
        // a bare token that is not a rational: treat as a JSON file
    }
    json j = read_json_source(spec);
    Vec v(n);
    if (j.is_array()) {
        if (j.size() != n) throw BadInput("action array has wrong length");
        for (std::size_t i = 0; i < n; ++i) v[i] = Rational::from_string(j[i].get<std::string>());
        return v;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::size_t i = 0;
            while (i < n && gens[i] != it.key()) ++i;
            if (i == n) throw BadInput("unknown generator label in action: " + it.key());
            v[i] = Rational::from_string(it.value().get<std::string>());
        }
        return v;
    }
    throw BadInput("action file must hold a JSON array or object");
}

void emit(const json& doc, const std::string& out_path, bool to_stdout) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw BadInput("cannot write file: " + out_path);
        out << doc.dump(2) << "\n";
    }
    if (to_stdout) std::cout << doc.dump(2) << "\n";
}

std::string render_action(const UnitAction& u, const std::vector<std::string>& gens) {
    std::string s = "α:";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += " " + gens[i] + "=" + u.alpha[i].to_string();
    s += "   β:";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += " " + gens[i] + "=" + u.beta[i].to_string();
    return s;
}

Mode parse_mode(const std::string& m) {
    if (m == "coherent") return Mode::Coherent;
    if (m == "compatible") return Mode::Compatible;
    throw BadInput("--mode must be coherent or compatible");
}

std::string pick_operand(const std::string& flag, const std::string& positional) {
    if (!flag.empty()) return flag;
    if (!positional.empty()) return positional;
    throw BadInput("no operad given (use --operad <name|path|-> or a positional argument)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for operads with a splitting of associativity"};
    app.require_subcommand(1);

    std::string operand, positional, alpha_s, beta_s, mode_s = "coherent", out_path, star_s, x_s,
                x0_s, dir_s;
    bool as_json = false;
    std::vector<std::string> factors;

    auto add_common = [&](CLI::App* cmd, bool with_action, bool with_mode) {
        cmd->add_option("--operad", operand, "catalog name, file path, or - for stdin");
        cmd->add_option("operand", positional, "same as --operad");
        cmd->add_option("--star", star_s, "override the distinguished star (csv, generator order)");
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_option("-o,--output", out_path, "write JSON output to a file");
        if (with_action) {
            cmd->add_option("--alpha", alpha_s, "α coordinates (csv or JSON file)");
            cmd->add_option("--beta", beta_s, "β coordinates (csv or JSON file)");
        }
        if (with_mode) cmd->add_option("--mode", mode_s, "coherent or compatible");
    };

    CLI::App* c_catalog = app.add_subcommand("catalog", "list built-in operads");
    c_catalog->add_flag("--json", as_json);

    CLI::App* c_show = app.add_subcommand("show", "print a presentation as JSON");
    add_common(c_show, false, false);

    CLI::App* c_check = app.add_subcommand("check", "test the coherence equations for an action");
    add_common(c_check, true, true);

    CLI::App* c_solve = app.add_subcommand("solve", "solve for all unit actions");
    add_common(c_solve, false, true);

    CLI::App* c_classify = app.add_subcommand("classify", "classify against the canonical spaces");
    add_common(c_classify, false, false);

    CLI::App* c_product = app.add_subcommand("product", "black-square product of presentations");
    c_product->add_option("factors", factors, "two or more operads")->expected(-2);
    c_product->add_flag("--json", as_json);
    c_product->add_option("-o,--output", out_path);

    CLI::App* c_dual = app.add_subcommand("dual", "Koszul dual via the signed pairing");
    add_common(c_dual, false, false);

    CLI::App* c_assoc = app.add_subcommand("associative", "associativity tests");
    add_common(c_assoc, false, false);
    c_assoc->add_option("--x", x_s, "operation coordinates (csv)");
    c_assoc->add_option("--x0", x0_s, "line base point (csv)");
    c_assoc->add_option("--dir", dir_s, "line direction (csv)");

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force truncated-free-algebra check");
    add_common(c_oracle, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*c_catalog) {
            json list = json::array();
            for (const auto& name : catalog_names()) {
                OperadPresentation p = catalog(name);
                list.push_back({{"name", name},
                                {"generators", p.gens},
                                {"relation_dim", relation_subspace(p).dim()}});
                if (!as_json)
                    std::cout << name << "  (" << p.n() << " generators, "
                              << relation_subspace(p).dim() << " relations)\n";
            }
            if (as_json) std::cout << list.dump(2) << "\n";
            return 0;
        }

        if (*c_show) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            emit(presentation_to_json(p), out_path, true);
            return 0;
        }

        if (*c_check) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            if (alpha_s.empty() || beta_s.empty()) throw BadInput("check needs --alpha and --beta");
            UnitAction u{parse_functional(alpha_s, p.n(), p.gens),
                         parse_functional(beta_s, p.n(), p.gens)};
            if (!is_normalized(p, u))
                throw BadInput("action is not normalized: α(★) and β(★) must equal 1");
            Mode mode = parse_mode(mode_s);
            Verdict v = check(p, u, mode);
            if (as_json || !out_path.empty()) emit(verdict_to_json(v), out_path, as_json);
            if (!as_json) {
                std::cout << (mode == Mode::Coherent ? "coherent: " : "compatible: ")
                          << (v.passed(mode) ? "true" : "false") << "\n";
                for (const auto& f : v.failures)
                    std::cout << "  relation " << f.relation << " fails " << f.equation
                              << ", residual " << f.residual.to_string() << "\n";
            }
            return v.passed(mode) ? 0 : kExitFalse;
        }

        if (*c_solve) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            Mode mode = parse_mode(mode_s);
            ActionSolutionSet s = solve(p, mode);
            if (as_json || !out_path.empty())
                emit(solution_to_json(s, p.gens), out_path, as_json);
            if (!as_json) {
                switch (s.status) {
                    case SolStatus::Empty:
                        std::cout << "Empty";
                        if (!s.residual_constraints.empty())
                            std::cout << "  (" << s.residual_constraints << ")";
                        std::cout << "\n";
                        break;
                    case SolStatus::Points:
                        for (const auto& u : s.points)
                            std::cout << render_action(u, p.gens) << "\n";
                        break;
                    case SolStatus::Family:
                        std::cout << "Family of dimension " << s.directions->dim() << "\n";
                        std::cout << "  particular: " << render_action(*s.particular, p.gens)
                                  << "\n";
                        if (!s.residual_constraints.empty())
                            std::cout << "  unresolved: " << s.residual_constraints << "\n";
                        break;
                }
            }
            return s.status == SolStatus::Empty ? kExitFalse : 0;
        }

        if (*c_classify) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            ClassReport r = classify(p);
            if (as_json || !out_path.empty())
                emit(classify_to_json(r, p.gens), out_path, as_json);
            if (!as_json) {
                std::cout << "class: " << to_string(r.best) << "\n";
                if (r.witness)
                    std::cout << "witness: " << render_action(*r.witness, p.gens) << "\n";
                std::cout << "containment: " << (r.containment ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (*c_product) {
            if (factors.size() < 2) throw BadInput("product needs at least two operands");
            OperadPresentation acc = load_operad(factors[0], "");
            for (std::size_t i = 1; i < factors.size(); ++i)
                acc = black_square(acc, load_operad(factors[i], ""));
            emit(presentation_to_json(acc), out_path, out_path.empty() || as_json);
            return 0;
        }

        if (*c_dual) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            DualResult d = dual(p);
            emit(dual_to_json(d), out_path, as_json || out_path.empty());
            if (!as_json) {
                std::cerr << "associative candidates:";
                for (std::size_t i : d.associative_candidates)
                    std::cerr << " " << d.presentation.gens[i];
                std::cerr << "\n";
            }
            return 0;
        }

        if (*c_assoc) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            if (!x_s.empty()) {
                Vec x(parse_csv(x_s));
                bool ok = check_associative(p, x);
                std::cout << "associative: " << (ok ? "true" : "false") << "\n";
                return ok ? 0 : kExitFalse;
            }
            if (x0_s.empty() || dir_s.empty())
                throw BadInput("associative needs --x, or --x0 with --dir");
            Vec x0(parse_csv(x0_s)), d(parse_csv(dir_s));
            LineSearchResult r = find_associative_on_line(p, x0, d);
            if (r.all_t) {
                std::cout << "associative for every t\n";
            } else {
                std::cout << "associative at t ∈ {";
                for (std::size_t i = 0; i < r.roots.size(); ++i)
                    std::cout << (i ? ", " : "") << r.roots[i].to_string();
                std::cout << "}\n";
            }
            return 0;
        }

        if (*c_oracle) {
            OperadPresentation p = load_operad(pick_operand(operand, positional), star_s);
            if (alpha_s.empty() || beta_s.empty())
                throw BadInput("oracle needs --alpha and --beta");
            UnitAction u{parse_functional(alpha_s, p.n(), p.gens),
                         parse_functional(beta_s, p.n(), p.gens)};
            if (!is_normalized(p, u))
                throw BadInput("action is not normalized: α(★) and β(★) must equal 1");
            Mode mode = parse_mode(mode_s);
            OracleResult r = oracle(p, u, mode);
            if (as_json || !out_path.empty()) emit(oracle_to_json(r), out_path, as_json);
            if (!as_json) {
                std::cout << (mode == Mode::Coherent ? "coherent" : "compatible")
                          << " (oracle): " << (r.ok ? "true" : "false") << "\n";
                if (r.counterexample)
                    std::cout << "counterexample: "
                              << oracle_to_json(r)["counterexample"].dump() << "\n";
            }
            return r.ok ? 0 : kExitFalse;
        }
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
