// ftft: command-line front end. Exit codes: 0 pass, 1 fail, 2 structural or usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "ftft/catalog.hpp"
#include "ftft/errors.hpp"
#include "ftft/io.hpp"
#include "ftft/repro.hpp"

using namespace ftft;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json report_json(const Report& r) {
    Json j;
    j["kind"] = "report";
    j["verdict"] = r.ok() ? "PASS" : "FAIL";
    Json cs = Json::array();
    for (const auto& c : r.clauses()) {
        Json x;
        x["id"] = c.id;
        x["verdict"] = c.pass ? "PASS" : "FAIL";
        x["notes"] = c.notes;
        cs.push_back(x);
    }
    j["clauses"] = cs;
    Json flags = Json::object();
    for (const auto& [k, v] : r.flags) flags[k] = v;
    j["flags"] = flags;
    return j;
}

int cmd_check(const std::string& file, const std::string& clause, bool json) {
    Document d = load_document(file);
    Report r = check_document(d);
    if (!clause.empty()) {
        if (!r.has(clause)) {
            std::string ids;
            for (const auto& c : r.clauses()) ids += " " + c.id;
            throw Usage("no clause '" + clause + "' for kind " + kind_of(d) + "; clauses:" + ids);
        }
        r = r.only(clause);
    }
    if (json)
        std::cout << dump(report_json(r));
    else
        std::cout << kind_of(d) << " " << file << "\n" << r.str();
    return r.ok() ? kPass : kFail;
}

// Fixture parameters arrive as leftover "--key value" or "--key=value" pairs.
FixtureParams parse_params(const std::vector<std::string>& rest) {
    FixtureParams out;
    for (size_t i = 0; i < rest.size(); ++i) {
        const std::string& a = rest[i];
        if (a.rfind("--", 0) != 0 || a.size() < 3) throw Usage("unexpected argument '" + a + "'");
        std::string key = a.substr(2), value;
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= rest.size()) throw Usage("missing value for --" + key);
            value = rest[++i];
        }
        out[key] = value;
    }
    return out;
}

int cmd_fixture(const std::string& name, const std::vector<std::string>& rest, std::string out, bool list) {
    if (list) {
        for (const auto& e : fixture_catalog()) {
            std::cout << e.name;
            for (const auto& [k, v] : e.defaults) std::cout << " --" << k << " " << v;
            std::cout << "\n    " << e.help << "\n";
        }
        return kPass;
    }
    if (name.empty()) throw Usage("fixture name required (see --list)");
    Document d = make_fixture(name, parse_params(rest));
    std::string text = dump(to_json(d));
    if (out.empty())
        if (const char* dir = std::getenv("FTFT_FIXTURE_DIR"); dir && *dir) out = std::string(dir) + "/" + name + ".json";
    if (out.empty() || out == "-") {
        std::cout << text;
        return kPass;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw StructuralError("cannot write " + out);
    f << text;
    std::cerr << "wrote " << out << "\n";
    return kPass;
}

int cmd_reproduce(const std::string& suite, bool json, bool timing) {
    ReproReport r = run_suite(suite);
    if (json)
        std::cout << dump(r.to_json(timing));
    else
        std::cout << r.str(timing);
    return r.ok() ? kPass : kFail;
}

SkeletalTwoGroup base_of(const Document& d) {
    if (auto g = std::get_if<SkeletalTwoGroup>(&d)) return *g;
    if (auto m = std::get_if<TwoGroupMapFile>(&d)) return m->base;
    throw StructuralError("expected a skeletal_2group file, got " + kind_of(d));
}

std::string bits_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

int cmd_enumerate(const std::string& file, bool json) {
    SkeletalTwoGroup g = base_of(load_document(file));
    auto classes = enumerate_extension_maps(g);
    Json arr = Json::array();
    for (const auto& c : classes) {
        if (json) {
            Json x;
            x["Gamma"] = c.gamma;
            x["Xi_class"] = c.xi_class;
            x["Xi"] = c.data.xi;
            arr.push_back(x);
        } else {
            std::cout << "Gamma=" << bits_str(c.gamma) << " Xi_class=" << c.xi_class << "\n";
        }
    }
    if (json) std::cout << dump(arr);
    return kPass;
}

StellarAlgebra stellar_of(const Document& d) {
    if (auto s = std::get_if<StellarAlgebra>(&d)) return *s;
    if (auto s = std::get_if<StarAlgebra>(&d)) return stellar_from_star(*s);
    throw StructuralError("expected a stellar or star_algebra file, got " + kind_of(d));
}

int cmd_morita(const std::string& a, const std::string& b, size_t bound, bool json) {
    StellarAlgebra s1 = stellar_of(load_document(a)), s2 = stellar_of(load_document(b));
    for (const auto* s : {&s1, &s2})
        if (Report r = check_stellar(*s); !r.ok()) {
            std::cout << r.str();
            return kFail;
        }
    MoritaSearchResult r = morita_search_stellar(s1, s2, bound);
    if (json) {
        Json j;
        j["verdict"] = verdict_name(r.verdict);
        j["candidates"] = r.candidates;
        j["notes"] = r.notes;
        if (r.witness) j["witness"] = to_json(r.witness->n);
        std::cout << dump(j);
    } else {
        std::cout << verdict_name(r.verdict) << "\n";
        for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    }
    return kPass;
}

int cmd_cohomology(const std::string& file, int degree, bool json) {
    if (degree != 2) throw Usage("only degree 2 is supported");
    Document d = load_document(file);
    FiniteGroup g;
    if (auto f = std::get_if<FermionicGroup>(&d))
        g = f->group;
    else if (auto t = std::get_if<SkeletalTwoGroup>(&d))
        g = t->pi0;
    else
        throw StructuralError("expected a fermionic_group or skeletal_2group file, got " + kind_of(d));
    H2Data h = h2_z2(g);
    const size_t classes = size_t(1) << h.dim();
    // the brute-force cross-check only fits small groups
    std::optional<BruteH2> brute;
    try {
        brute = brute_h2_parallel(g);
    } catch (const UnsupportedInput&) {
    }
    const bool agree = !brute || brute->classes == classes;
    if (json) {
        Json j;
        j["order"] = g.order();
        j["dim"] = h.dim();
        j["classes"] = classes;
        if (brute) {
            j["cocycles"] = brute->cocycles;
            j["brute_classes"] = brute->classes;
        }
        j["verdict"] = agree ? "PASS" : "FAIL";
        std::cout << dump(j);
    } else {
        std::cout << "H^2(G; Z/2) order=" << g.order() << " dim=" << h.dim() << " classes=" << classes;
        if (brute)
            std::cout << " cocycles=" << brute->cocycles << " brute_classes=" << brute->classes;
        else
            std::cout << " brute=skipped";
        std::cout << "\n" << (agree ? "PASS" : "FAIL") << "\n";
    }
    return agree ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for fermionic groups, superalgebras and 2D/1D TFT data"};
    app.require_subcommand(1);

    std::string file, clause, name, out, suite = "quick", file_b;
    bool json = false, timing = false, list = false;
    size_t bound = 4;
    int degree = 2;

    auto* check = app.add_subcommand("check", "Validate a JSON file");
    check->add_option("file", file)->required();
    check->add_option("--clause", clause, "Report a single clause");
    check->add_flag("--json", json);

    auto* fixture = app.add_subcommand("fixture", "Write a catalog fixture");
    fixture->add_option("name", name);
    fixture->add_option("-o,--output", out, "Output file (- for stdout)");
    fixture->add_flag("--list", list, "List fixtures and parameters");
    fixture->allow_extras();

    auto* reproduce = app.add_subcommand("reproduce", "Run the reproduction suite");
    reproduce->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    reproduce->add_flag("--json", json);
    reproduce->add_flag("--timing", timing, "Include elapsed times (not reproducible)");

    auto* two = app.add_subcommand("two-group", "Skeletal 2-group tools");
    two->require_subcommand(1);
    auto* enumerate = two->add_subcommand("enumerate", "Classes of maps to the Z/2 point");
    enumerate->add_option("file", file)->required();
    enumerate->add_flag("--json", json);

    auto* morita = app.add_subcommand("morita-search", "Search for a stellar Morita equivalence");
    morita->add_option("a", file)->required();
    morita->add_option("b", file_b)->required();
    morita->add_option("--bound", bound, "Largest candidate bimodule dimension");
    morita->add_flag("--json", json);

    auto* coh = app.add_subcommand("cohomology", "Group cohomology with Z/2 coefficients");
    coh->add_option("--group", file)->required();
    coh->add_option("--degree", degree);
    coh->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check) return cmd_check(file, clause, json);
        if (*fixture) return cmd_fixture(name, fixture->remaining(), out, list);
        if (*reproduce) return cmd_reproduce(suite, json, timing);
        if (*enumerate) return cmd_enumerate(file, json);
        if (*morita) return cmd_morita(file, file_b, bound, json);
        if (*coh) return cmd_cohomology(file, degree, json);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
