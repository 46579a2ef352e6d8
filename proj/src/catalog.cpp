#include "ftft/catalog.hpp"

#include "ftft/errors.hpp"

namespace ftft {

namespace {

long as_int(const FixtureParams& p, const std::string& key) {
    const std::string& v = p.at(key);
    try {
        size_t used = 0;
        long x = std::stol(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw StructuralError("parameter --" + key + " expects an integer, got \"" + v + "\"");
}

int as_sign(const FixtureParams& p, const std::string& key) {
    long x = as_int(p, key);
    if (x != 1 && x != -1) throw StructuralError("parameter --" + key + " must be 1 or -1");
    return int(x);
}

int as_bit(const FixtureParams& p, const std::string& key) {
    long x = as_int(p, key);
    if (x != 0 && x != 1) throw StructuralError("parameter --" + key + " must be 0 or 1");
    return int(x);
}

Field as_field(const FixtureParams& p) {
    const std::string& f = p.at("field");
    if (f == "R") return Field::R;
    if (f == "C") return Field::C;
    throw StructuralError("parameter --field must be R or C");
}

Tft2dFile tft_file(const BundleFixture& f) { return {f.bundle, f.dagger, f.lambda}; }

StarAlgebra named_star(const std::string& name) {
    if (name == "C") return conjugation_star(share(ground_field(Field::C)));
    if (name == "cl1-plus") return clifford1_star(1);
    if (name == "cl1-minus") return clifford1_star(-1);
    if (name == "m2") return matrix_adjoint_star(2);
    throw StructuralError("unknown star structure \"" + name + "\" (C, cl1-plus, cl1-minus, m2)");
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"clifford", "Cl_{p,q} with generators squaring to +1 (p) and -1 (q)",
                 {{"p", "1"}, {"q", "1"}, {"field", "R"}},
                 [](const FixtureParams& p) -> Document {
                     return clifford(int(as_int(p, "p")), int(as_int(p, "q")), as_field(p));
                 }});
    c.push_back({"complex-clifford", "complex Clifford algebra Cl_n", {{"n", "1"}},
                 [](const FixtureParams& p) -> Document { return complex_clifford(int(as_int(p, "n"))); }});
    c.push_back({"matrix", "End of the super vector space of dimension m|n", {{"m", "1"}, {"n", "1"}, {"field", "C"}},
                 [](const FixtureParams& p) -> Document {
                     return matrix_superalgebra(int(as_int(p, "m")), int(as_int(p, "n")), as_field(p));
                 }});
    c.push_back({"parity-extension", "A[x] with x odd, x^2 = 1, for A = Cl_{p,q} over R", {{"p", "1"}, {"q", "0"}},
                 [](const FixtureParams& p) -> Document {
                     return parity_extension(clifford(int(as_int(p, "p")), int(as_int(p, "q")), Field::R));
                 }});
    c.push_back({"group", "fermionic group by name (trivial, pin1-, pin1+, q8, z2c-x-z2t, z2c-x-z2, d4)",
                 {{"name", "q8"}}, [](const FixtureParams& p) -> Document { return fixture_group(p.at("name")); }});
    c.push_back({"fermionic-tensor", "fermionic tensor product of two named groups", {{"left", "pin1-"}, {"right", "pin1-"}},
                 [](const FixtureParams& p) -> Document {
                     return fermionic_tensor(fixture_group(p.at("left")), fixture_group(p.at("right"))).group;
                 }});
    c.push_back({"two-group", "skeletal 2-group by name (point, bz, bz2, o2, pin2-base, z2-swap, spin1-rz2f)",
                 {{"name", "o2"}}, [](const FixtureParams& p) -> Document { return fixture_two_group(p.at("name")); }});
    c.push_back({"extension", "the index-th extension class (Gamma, Xi) of a named base 2-group",
                 {{"base", "o2"}, {"index", "0"}},
                 [](const FixtureParams& p) -> Document {
                     SkeletalTwoGroup base = fixture_two_group(p.at("base"));
                     auto all = enumerate_extension_maps(base);
                     long k = as_int(p, "index");
                     if (k < 0 || size_t(k) >= all.size())
                         throw StructuralError("extension index out of range (" + std::to_string(all.size()) + " classes)");
                     return TwoGroupMapFile{base, all[size_t(k)].data};
                 }});
    c.push_back({"star", "star algebra by name (C, cl1-plus, cl1-minus, m2)", {{"name", "cl1-plus"}},
                 [](const FixtureParams& p) -> Document { return named_star(p.at("name")); }});
    c.push_back({"stellar", "stellar algebra induced by a named star structure", {{"name", "cl1-plus"}},
                 [](const FixtureParams& p) -> Document { return stellar_from_star(named_star(p.at("name"))); }});
    c.push_back({"stellar-complex", "C with M = C (or Pi C when shifted) and sigma(z) = a conj(z)",
                 {{"a", "1"}, {"shifted", "0"}},
                 [](const FixtureParams& p) -> Document {
                     return stellar_complex(Scalar::parse(p.at("a")), as_bit(p, "shifted") == 1);
                 }});
    c.push_back({"regular-pairing", "<a, b> = a b* on a named star algebra", {{"name", "cl1-plus"}},
                 [](const FixtureParams& p) -> Document { return regular_pairing(named_star(p.at("name"))); }});
    c.push_back({"trivial-theory", "fermionic group algebra as a 2D theory over a named group", {{"group", "q8"}},
                 [](const FixtureParams& p) -> Document { return tft_file(trivial_theory(fixture_group(p.at("group")))); }});
    c.push_back({"pin-minus-tft", "Pin1+ internal symmetry (Pin- spacetime), A_1 = C or Cl_1",
                 {{"xt-parity", "0"}, {"xt-square", "1"}, {"dagger-sign", "1"}, {"cl1", "0"}},
                 [](const FixtureParams& p) -> Document {
                     return tft_file(pin_tft(as_bit(p, "xt-parity"), as_sign(p, "xt-square"), as_sign(p, "dagger-sign"),
                                             as_bit(p, "cl1") == 1));
                 }});
    c.push_back({"pin-plus-tft", "Pin1- internal symmetry (Pin+ spacetime), A_1 = C", {{"xt-parity", "1"}},
                 [](const FixtureParams& p) -> Document { return tft_file(pin1_minus_tft(as_bit(p, "xt-parity"))); }});
    c.push_back({"spin2-tft", "Spin_2 theory with loop element w x_c", {{"w", "1"}, {"cl1", "0"}, {"order", "0"}},
                 [](const FixtureParams& p) -> Document {
                     return tft_file(spin2_tft(Scalar::parse(p.at("w")), as_bit(p, "cl1") == 1, int(as_int(p, "order"))));
                 }});
    c.push_back({"pin2-minus-tft", "Pin_2^- theory with loop element w x_{T^2} inverted by T", {{"w", "3/5+4/5i"}},
                 [](const FixtureParams& p) -> Document { return tft_file(pin2_minus_tft(Scalar::parse(p.at("w")))); }});
    c.push_back({"tft1d", "1D theory converted from a unitary fermionic representation", {{"name", "pin1-minus-0|2"}},
                 [](const FixtureParams& p) -> Document {
                     for (const auto& fx : rep_fixtures())
                         if (fx.name == p.at("name")) return convert_1d(fx.group, fx.space, fx.rho, fx.section);
                     throw StructuralError("unknown representation fixture \"" + p.at("name") + "\"");
                 }});
    c.push_back({"unitary-rep", "unitary fermionic representation by name", {{"name", "pin1-minus-0|2"}},
                 [](const FixtureParams& p) -> Document {
                     for (const auto& fx : rep_fixtures())
                         if (fx.name == p.at("name")) return UnitaryRepFile{fx.group, fx.space, fx.rho};
                     throw StructuralError("unknown representation fixture \"" + p.at("name") + "\"");
                 }});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& fixture_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

Document make_fixture(const std::string& name, const FixtureParams& params) {
    for (const auto& e : fixture_catalog()) {
        if (e.name != name) continue;
        FixtureParams full = e.defaults;
        for (const auto& [k, v] : params) {
            if (!full.count(k)) throw UnsupportedInput("fixture " + name + " has no parameter --" + k);
            full[k] = v;
        }
        return e.make(full);
    }
    throw UnsupportedInput("unknown fixture \"" + name + "\"");
}

std::vector<std::pair<std::string, FixtureParams>> catalog_samples() {
    std::vector<std::pair<std::string, FixtureParams>> out;
    for (const auto& e : fixture_catalog()) out.push_back({e.name, {}});
    out.push_back({"clifford", {{"p", "0"}, {"q", "2"}}});
    out.push_back({"clifford", {{"p", "1"}, {"q", "1"}, {"field", "C"}}});
    out.push_back({"group", {{"name", "pin1-"}}});
    out.push_back({"group", {{"name", "pin1+"}}});
    out.push_back({"two-group", {{"name", "pin2-base"}}});
    out.push_back({"extension", {{"base", "o2"}, {"index", "3"}}});
    out.push_back({"stellar-complex", {{"a", "i"}}});
    out.push_back({"stellar-complex", {{"shifted", "1"}}});
    out.push_back({"trivial-theory", {{"group", "z2c-x-z2t"}}});
    for (const char* par : {"0", "1"})
        for (const char* sq : {"1", "-1"})
            for (const char* dg : {"1", "-1"})
                out.push_back({"pin-minus-tft", {{"xt-parity", par}, {"xt-square", sq}, {"dagger-sign", dg}}});
    out.push_back({"pin-plus-tft", {{"xt-parity", "0"}}});
    out.push_back({"spin2-tft", {{"w", "-1"}, {"order", "2"}}});
    for (const auto& fx : rep_fixtures()) {
        out.push_back({"tft1d", {{"name", fx.name}}});
        out.push_back({"unitary-rep", {{"name", fx.name}}});
    }
    return out;
}

}  // namespace ftft
