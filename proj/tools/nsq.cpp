// Command-line front end: expression evaluation over the two word algebras,
// table and basis emitters, and the named verification suites.
// Exit codes: 0 success / all clauses pass, 1 verification failure, 2 usage
// or evaluation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _WIN32
#include <io.h>
#define NSQ_ISATTY _isatty(1)
#else
#include <unistd.h>
#define NSQ_ISATTY isatty(1)
#endif

#include "nsq/checks.hpp"
#include "nsq/expr.hpp"
#include "nsq/generators.hpp"
#include "nsq/isobaric.hpp"
#include "nsq/json_io.hpp"
#include "nsq/nsymm.hpp"
#include "nsq/primitives.hpp"
#include "nsq/words.hpp"

namespace {

using nsq::Json;

bool use_color() {
    static const bool on = NSQ_ISATTY && std::getenv("NO_COLOR") == nullptr;
    return on;
}

std::string pass_tag(bool pass) {
    if (!use_color()) return pass ? "[PASS]" : "[FAIL]";
    return pass ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

const char* kind_slug(nsq::Value::Kind k) {
    using K = nsq::Value::Kind;
    switch (k) {
        case K::scalar: return "scalar";
        case K::n_element: return "words";
        case K::q_element: return "qsymm";
        case K::n_tensor: return "words_tensor";
        case K::q_tensor: return "qsymm_tensor";
    }
    return "value";
}

Json json_value(const nsq::Value& v) {
    using K = nsq::Value::Kind;
    Json out = {{"kind", kind_slug(v.kind)}};
    switch (v.kind) {
        case K::scalar: out["value"] = nsq::rat_string(v.scalar); break;
        case K::n_element: out["value"] = nsq::json_of(v.nel); break;
        case K::q_element: out["value"] = nsq::json_of(v.qel); break;
        case K::n_tensor: out["value"] = nsq::json_of(v.nten); break;
        case K::q_tensor: out["value"] = nsq::json_of(v.qten); break;
    }
    return out;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int run_verify(const std::string& suite, int maxweight, int n, unsigned seed,
               bool json) {
    nsq::VerifyReport rep = nsq::run_verify_suite(suite, maxweight, n, seed);
    if (json) {
        emit(nsq::json_of(rep));
    } else {
        for (const nsq::SuiteClause& c : rep.clauses)
            std::cout << pass_tag(c.pass) << " " << c.name << ": " << c.witness
                      << "\n";
        size_t passed = 0;
        for (const nsq::SuiteClause& c : rep.clauses) passed += c.pass ? 1 : 0;
        std::cout << "suite " << rep.suite << ": "
                  << (rep.all_pass ? "PASS" : "FAIL") << " (" << passed << "/"
                  << rep.clauses.size() << " clauses, maxweight "
                  << rep.maxweight << ")\n";
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for the algebras of noncommutative and "
                 "quasisymmetric functions"};
    app.require_subcommand(1);

    int bound = 12;
    std::string format = "pretty";
    unsigned seed = 0;
    app.add_option("--bound", bound, "largest allowed intermediate weight")
        ->check(CLI::Range(1, 64));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    app.add_option("--seed", seed, "seed for randomized suite clauses");

    auto* c_eval = app.add_subcommand("eval", "evaluate an expression");
    std::string text;
    c_eval->add_option("expr", text, "expression text")->required();

    int weight = 0;
    auto* c_lyndon = app.add_subcommand("lyndon", "list Lyndon words of a weight");
    c_lyndon->add_option("--weight", weight)->required()->check(CLI::Range(1, 64));
    auto* c_basis = app.add_subcommand(
        "basis-prim", "primitive basis elements attached to Lyndon words");
    c_basis->add_option("--weight", weight)->required()->check(CLI::Range(1, 64));
    auto* c_gens = app.add_subcommand(
        "gens", "free generators attached to Lyndon words");
    c_gens->add_option("--weight", weight)->required()->check(CLI::Range(1, 64));
    auto* c_matrix = app.add_subcommand(
        "matrix", "pairing matrix of primitives against generators");
    c_matrix->add_option("--weight", weight)->required()->check(CLI::Range(1, 64));
    auto* c_index = app.add_subcommand(
        "index", "index of the bracketing span inside the primitive lattice");
    c_index->add_option("--weight", weight)->required()->check(CLI::Range(1, 64));

    auto* c_iso = app.add_subcommand("isobaric", "decomposition table entries");
    std::string iso_kind;
    int degree = 0;
    c_iso->add_option("kind", iso_kind, "L (commutator) or N (additive)")
        ->required()
        ->check(CLI::IsMember({"L", "N"}));
    c_iso->add_option("--degree", degree)->required()->check(CLI::Range(2, 12));

    auto* c_verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite;
    int maxweight = 0;
    int family_n = 0;
    c_verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(nsq::verify_suite_names()));
    c_verify->add_option("--maxweight", maxweight,
                         "weight bound (0 = suite default)");
    c_verify->add_option("--n", family_n,
                         "family parameter for the structure suite");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    bool json = format == "json";

    try {
        if (*c_eval) {
            nsq::ExprPtr ast = nsq::parse_expression(text);
            nsq::Value v = nsq::evaluate(*ast, {bound});
            if (json) emit(json_value(v));
            else std::cout << nsq::print_value(v) << "\n";
            return 0;
        }
        if (*c_lyndon) {
            auto words = nsq::enumerate_lyndon(weight);
            if (json) {
                Json arr = Json::array();
                for (const auto& w : words) arr.push_back(nsq::json_of(w));
                emit(arr);
            } else {
                std::string out = "[";
                for (size_t i = 0; i < words.size(); ++i) {
                    if (i) out += ",";
                    out += nsq::to_string(words[i]);
                }
                std::cout << out << "]\n";
            }
            return 0;
        }
        if (*c_basis || *c_gens) {
            bool prim = static_cast<bool>(*c_basis);
            Json arr = Json::array();
            for (const auto& a : nsq::enumerate_lyndon(weight)) {
                if (json) {
                    Json row = {{"alpha", nsq::json_of(a)}};
                    row["element"] = prim ? nsq::json_of(nsq::build_P(a))
                                          : nsq::json_of(nsq::build_E(a));
                    arr.push_back(row);
                } else if (prim) {
                    std::cout << "Palpha(" << nsq::to_string(a)
                              << ") = " << nsq::to_string(nsq::build_P(a)) << "\n";
                } else {
                    std::cout << "E(" << nsq::to_string(a)
                              << ") = " << nsq::to_string(nsq::build_E(a)) << "\n";
                }
            }
            if (json)
                emit({{"weight", weight},
                      {prim ? "basis" : "generators", arr}});
            return 0;
        }
        if (*c_matrix) {
            nsq::IntMatrix m = nsq::pairing_matrix(weight);
            auto words = nsq::enumerate_lyndon(weight);
            if (json) {
                Json order = Json::array();
                for (const auto& w : words) order.push_back(nsq::json_of(w));
                emit({{"weight", weight},
                      {"order", order},
                      {"matrix", nsq::json_of(m)}});
            } else {
                std::string head = "wll order:";
                for (const auto& w : words) head += " " + nsq::to_string(w);
                std::cout << head << "\n";
                for (const auto& row : m) {
                    std::string line;
                    for (const auto& e : row) {
                        if (!line.empty()) line += " ";
                        line += e.get_str();
                    }
                    std::cout << line << "\n";
                }
            }
            return 0;
        }
        if (*c_index) {
            auto idx = nsq::frlie_index(weight);
            std::string val = idx ? idx->get_str() : "infinite";
            if (json) emit({{"weight", weight}, {"index", val}});
            else std::cout << val << "\n";
            return 0;
        }
        if (*c_iso) {
            bool comm = iso_kind == "L";
            Json arr = Json::array();
            for (int d = 2; d <= degree; ++d)
                for (int u = 1; u < d; ++u) {
                    int v = d - u;
                    nsq::AlgebraElement el = comm ? nsq::commutator_entry(u, v)
                                                  : nsq::additive_entry(u, v);
                    if (json) {
                        arr.push_back({{"u", u},
                                       {"v", v},
                                       {"element", nsq::json_of(el)}});
                    } else {
                        std::cout << iso_kind << "(" << u << "," << v
                                  << ") = " << nsq::to_string(el) << "\n";
                    }
                }
            if (json)
                emit({{"kind", iso_kind}, {"degree", degree}, {"entries", arr}});
            return 0;
        }
        if (*c_verify) return run_verify(suite, maxweight, family_n, seed, json);
    } catch (const nsq::ExprError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
