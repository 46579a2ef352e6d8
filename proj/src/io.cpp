#include "ftft/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ftft/errors.hpp"

namespace ftft {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw StructuralError((path.empty() ? std::string("$") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, "missing field \"" + key + "\"");
    return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string sub(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

long read_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long>();
}

std::string read_string(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

Scalar read_scalar(const Json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        return Scalar::parse(read_string(j, path));
    } catch (const StructuralError& e) {
        if (std::string(e.what()).rfind(path, 0) == 0) throw;
        bad(path, e.what());
    }
}

Vec read_vec(const Json& j, const std::string& path) {
    Vec v;
    for (size_t i = 0; i < array_at(j, path).size(); ++i) v.push_back(read_scalar(j[i], sub(path, i)));
    return v;
}

Matrix read_matrix(const Json& j, const std::string& path) {
    array_at(j, path);
    std::vector<Vec> rows;
    for (size_t i = 0; i < j.size(); ++i) rows.push_back(read_vec(j[i], sub(path, i)));
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols) bad(sub(path, i), "ragged matrix row");
    return Matrix::from_rows(rows, cols);
}

std::vector<int> read_ints(const Json& j, const std::string& path) {
    std::vector<int> out;
    for (size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(int(read_int(j[i], sub(path, i))));
    return out;
}

std::vector<Matrix> read_matrices(const Json& j, const std::string& path) {
    std::vector<Matrix> out;
    for (size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(read_matrix(j[i], sub(path, i)));
    return out;
}

Json matrices_json(const std::vector<Matrix>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(to_json(m));
    return a;
}

Json ints_json(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string expect_kind(const Json& j, const std::string& path) { return read_string(field(j, "kind", path), sub(path, "kind")); }

void require_kind(const Json& j, const std::string& kind, const std::string& path) {
    std::string k = expect_kind(j, path);
    if (k != kind) bad(sub(path, "kind"), "expected \"" + kind + "\", got \"" + k + "\"");
}

// ---- groups ----

Json finite_group_json(const FiniteGroup& g) {
    Json j;
    j["elements"] = g.labels;
    j["unit"] = g.labels[size_t(g.unit)];
    Json mult = Json::array();
    for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.labels[size_t(g.mul(a, b))]);
        mult.push_back(row);
    }
    j["mult"] = mult;
    return j;
}

std::vector<std::string> read_labels(const Json& j, const std::string& path) {
    std::vector<std::string> out;
    for (size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(read_string(j[i], sub(path, i)));
    return out;
}

std::vector<std::vector<std::string>> read_table(const Json& j, const std::string& path) {
    std::vector<std::vector<std::string>> out;
    for (size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(read_labels(j[i], sub(path, i)));
    return out;
}

FiniteGroup read_finite_group(const Json& j, const std::string& path) {
    auto labels = read_labels(field(j, "elements", path), sub(path, "elements"));
    auto table = read_table(field(j, "mult", path), sub(path, "mult"));
    std::string unit = read_string(field(j, "unit", path), sub(path, "unit"));
    // reuse the fermionic builder with c = unit for the label bookkeeping
    std::map<std::string, int> theta;
    for (const auto& l : labels) theta[l] = 0;
    try {
        return make_fermionic_group(labels, table, unit, unit, theta).group;
    } catch (const StructuralError& e) {
        bad(path, e.what());
    }
}

FermionicGroup read_group(const Json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return fixture_group(j.get<std::string>());
        } catch (const std::runtime_error& e) {
            bad(path, e.what());
        }
    }
    require_kind(j, "fermionic_group", path);
    auto labels = read_labels(field(j, "elements", path), sub(path, "elements"));
    auto table = read_table(field(j, "mult", path), sub(path, "mult"));
    std::string unit = read_string(field(j, "unit", path), sub(path, "unit"));
    std::string c = read_string(field(j, "c", path), sub(path, "c"));
    const Json& th = field(j, "theta", path);
    if (!th.is_object()) bad(sub(path, "theta"), "expected an object label -> 0/1");
    std::map<std::string, int> theta;
    for (auto it = th.begin(); it != th.end(); ++it) theta[it.key()] = int(read_int(it.value(), sub(sub(path, "theta"), it.key())));
    try {
        return make_fermionic_group(labels, table, unit, c, theta);
    } catch (const StructuralError& e) {
        bad(path, e.what());
    }
}

SkeletalTwoGroup read_two_group(const Json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return fixture_two_group(j.get<std::string>());
        } catch (const std::runtime_error& e) {
            bad(path, e.what());
        }
    }
    require_kind(j, "skeletal_2group", path);
    SkeletalTwoGroup g;
    if (j.contains("name")) g.name = read_string(j["name"], sub(path, "name"));
    g.pi0 = read_finite_group(field(j, "pi0", path), sub(path, "pi0"));
    g.pi1.orders = read_ints(field(j, "pi1", path), sub(path, "pi1"));
    const size_t n = size_t(g.n0()), r = g.pi1.rank();
    const Json& act = field(j, "action", path);
    for (size_t a = 0; a < array_at(act, sub(path, "action")).size(); ++a) {
        IntMatrix m;
        std::string ap = sub(sub(path, "action"), a);
        for (size_t i = 0; i < array_at(act[a], ap).size(); ++i) {
            std::vector<long> row;
            for (size_t k = 0; k < array_at(act[a][i], sub(ap, i)).size(); ++k)
                row.push_back(read_int(act[a][i][k], sub(sub(ap, i), k)));
            if (row.size() != r) bad(sub(ap, i), "action row must have one entry per pi1 generator");
            m.push_back(row);
        }
        if (m.size() != r) bad(ap, "action matrix must be square of size rank(pi1)");
        g.action.push_back(m);
    }
    if (g.action.size() != n) bad(sub(path, "action"), "one action matrix per pi0 element expected");
    const Json& k = field(j, "k", path);
    for (size_t t = 0; t < array_at(k, sub(path, "k")).size(); ++t) {
        PiElem x;
        for (size_t i = 0; i < array_at(k[t], sub(sub(path, "k"), t)).size(); ++i)
            x.push_back(read_int(k[t][i], sub(sub(sub(path, "k"), t), i)));
        if (x.size() != r) bad(sub(sub(path, "k"), t), "k values have one entry per pi1 generator");
        g.k.push_back(g.pi1.normalize(x));
    }
    if (g.k.size() != n * n * n) bad(sub(path, "k"), "k needs |pi0|^3 values");
    return g;
}

// ---- algebras ----

Superalgebra read_algebra(const Json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return algebra_fixture(j.get<std::string>());
        } catch (const std::runtime_error& e) {
            bad(path, e.what());
        }
    }
    require_kind(j, "superalgebra", path);
    std::string f = read_string(field(j, "field", path), sub(path, "field"));
    if (f != "C" && f != "R") bad(sub(path, "field"), "field must be \"C\" or \"R\"");
    Field fld = f == "C" ? Field::C : Field::R;
    std::vector<int> par = read_ints(field(j, "parity", path), sub(path, "parity"));
    const size_t d = par.size();
    for (size_t i = 0; i < d; ++i)
        if (par[i] != 0 && par[i] != 1) bad(sub(sub(path, "parity"), i), "parity must be 0 or 1");
    Superalgebra a(d, par, fld);
    Vec unit = read_vec(field(j, "unit", path), sub(path, "unit"));
    if (unit.size() != d) bad(sub(path, "unit"), "unit has the wrong length");
    const Json& mult = field(j, "mult", path);
    std::string mp = sub(path, "mult");
    if (array_at(mult, mp).size() != d) bad(mp, "mult must be dim x dim x dim");
    for (size_t x = 0; x < d; ++x) {
        if (array_at(mult[x], sub(mp, x)).size() != d) bad(sub(mp, x), "mult must be dim x dim x dim");
        for (size_t y = 0; y < d; ++y) {
            Vec v = read_vec(mult[x][y], sub(sub(mp, x), y));
            if (v.size() != d) bad(sub(sub(mp, x), y), "product has the wrong length");
            for (size_t k = 0; k < d; ++k)
                if (!v[k].is_zero()) a.set(x, y, k, v[k]);
        }
    }
    a.set_unit(unit);
    if (j.contains("name")) a.name = read_string(j["name"], sub(path, "name"));
    return a;
}

AlgPtr read_algebra_ptr(const Json& j, const std::string& path) { return share(read_algebra(j, path)); }

Bimodule read_bimodule(const Json& j, const std::string& path) {
    require_kind(j, "bimodule", path);
    Bimodule m;
    m.left = read_algebra_ptr(field(j, "left", path), sub(path, "left"));
    m.right = read_algebra_ptr(field(j, "right", path), sub(path, "right"));
    m.parity = read_ints(field(j, "parity", path), sub(path, "parity"));
    m.L = read_matrices(field(j, "left_act", path), sub(path, "left_act"));
    m.R = read_matrices(field(j, "right_act", path), sub(path, "right_act"));
    if (j.contains("name")) m.name = read_string(j["name"], sub(path, "name"));
    if (m.L.size() != m.left->dim()) bad(sub(path, "left_act"), "one matrix per basis vector of the left algebra");
    if (m.R.size() != m.right->dim()) bad(sub(path, "right_act"), "one matrix per basis vector of the right algebra");
    for (const auto* ms : {&m.L, &m.R})
        for (const auto& x : *ms)
            if (x.rows() != m.dim() || x.cols() != m.dim()) bad(path, "action matrices must be dim x dim");
    return m;
}

StarAlgebra read_star(const Json& j, const std::string& path) {
    require_kind(j, "star_algebra", path);
    StarAlgebra s{read_algebra_ptr(field(j, "algebra", path), sub(path, "algebra")),
                  read_matrix(field(j, "star", path), sub(path, "star"))};
    if (s.star.rows() != s.alg->dim() || s.star.cols() != s.alg->dim()) bad(sub(path, "star"), "star must be dim x dim");
    return s;
}

StellarAlgebra read_stellar(const Json& j, const std::string& path) {
    if (expect_kind(j, path) == "star_algebra") return stellar_from_star(read_star(j, path));
    require_kind(j, "stellar", path);
    StellarAlgebra s;
    s.alg = read_algebra_ptr(field(j, "algebra", path), sub(path, "algebra"));
    s.m = read_bimodule(field(j, "module", path), sub(path, "module"));
    s.sigma = read_matrix(field(j, "sigma", path), sub(path, "sigma"));
    if (j.contains("star")) s.star = StarAlgebra{s.alg, read_matrix(j["star"], sub(path, "star"))};
    if (s.sigma.rows() != s.m.dim() || s.sigma.cols() != s.m.dim()) bad(sub(path, "sigma"), "sigma must be dim M x dim M");
    return s;
}

HilbertPairing read_pairing(const Json& j, const std::string& path) {
    require_kind(j, "hilbert_pairing", path);
    HilbertPairing p{read_star(field(j, "b", path), sub(path, "b")), read_star(field(j, "a", path), sub(path, "a")),
                     read_bimodule(field(j, "module", path), sub(path, "module")), {}};
    const Json& t = field(j, "table", path);
    std::string tp = sub(path, "table");
    for (size_t i = 0; i < array_at(t, tp).size(); ++i) {
        std::vector<Vec> row;
        for (size_t k = 0; k < array_at(t[i], sub(tp, i)).size(); ++k) row.push_back(read_vec(t[i][k], sub(sub(tp, i), k)));
        p.table.push_back(row);
    }
    return p;
}

// per-element matrices keyed by label; missing entries are zero
std::vector<Matrix> read_labelled(const Json& j, const FermionicGroup& g, size_t n, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object label -> matrix");
    std::vector<Matrix> out(size_t(g.order()), Matrix(n, n));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string p = sub(path, it.key());
        int x;
        try {
            x = g.index(it.key());
        } catch (const StructuralError&) {
            bad(p, "unknown group element");
        }
        out[size_t(x)] = read_matrix(it.value(), p);
        if (out[size_t(x)].rows() != n || out[size_t(x)].cols() != n) bad(p, "matrix has the wrong size");
    }
    return out;
}

Json labelled_json(const FermionicGroup& g, const std::vector<Matrix>& ms, int theta) {
    Json j = Json::object();
    for (int x = 0; x < g.order(); ++x)
        if (theta < 0 || g.theta[size_t(x)] == theta) j[g.label(x)] = to_json(ms[size_t(x)]);
    return j;
}

Tft2dFile read_tft2d(const Json& j, const std::string& path) {
    Tft2dFile t;
    GradedAlgebraBundle& b = t.bundle;
    b.grading = read_group(field(j, "grading", path), sub(path, "grading"));
    b.ambient = read_algebra_ptr(field(j, "ambient", path), sub(path, "ambient"));
    const size_t d = b.ambient->dim();
    const Json& comps = field(j, "components", path);
    std::string cp = sub(path, "components");
    if (!comps.is_object()) bad(cp, "expected an object label -> basis indices");
    b.components.assign(size_t(b.grading.order()), {});
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        int x;
        try {
            x = b.grading.index(it.key());
        } catch (const StructuralError&) {
            bad(sub(cp, it.key()), "unknown group element");
        }
        for (int k : read_ints(it.value(), sub(cp, it.key()))) {
            if (k < 0 || size_t(k) >= d) bad(sub(cp, it.key()), "basis index out of range");
            b.components[size_t(x)].push_back(size_t(k));
        }
    }
    auto vec_d = [&](const char* key) {
        Vec v = read_vec(field(j, key, path), sub(path, key));
        if (v.size() != d) bad(sub(path, key), "ambient vector has the wrong length");
        return v;
    };
    b.i = vec_d("i");
    b.parity = j.contains("parity") ? vec_d("parity") : b.ambient->unit();
    t.dagger = read_matrix(field(j, "dagger", path), sub(path, "dagger"));
    if (t.dagger.rows() != d || t.dagger.cols() != d) bad(sub(path, "dagger"), "dagger must be dim x dim");
    t.lambda = read_vec(field(j, "lambda", path), sub(path, "lambda"));
    if (j.contains("loops")) {
        const Json& loops = j["loops"];
        std::string lp = sub(path, "loops");
        if (!loops.is_object()) bad(lp, "expected an object label -> loop");
        for (auto it = loops.begin(); it != loops.end(); ++it) {
            std::string p = sub(lp, it.key());
            LoopDatum l;
            l.label = it.key();
            l.gamma = int(read_int(field(it.value(), "gamma", p), sub(p, "gamma")));
            l.element = read_vec(field(it.value(), "element", p), sub(p, "element"));
            if (l.element.size() != d) bad(sub(p, "element"), "ambient vector has the wrong length");
            if (it.value().contains("order")) l.order = int(read_int(it.value()["order"], sub(p, "order")));
            if (it.value().contains("action")) l.action = read_ints(it.value()["action"], sub(p, "action"));
            b.loops.push_back(l);
        }
    }
    return t;
}

TftBundle1D read_tft1d(const Json& j, const std::string& path) {
    TftBundle1D t;
    t.h = read_group(field(j, "grading", path), sub(path, "grading"));
    t.p = int(read_int(field(j, "p", path), sub(path, "p")));
    t.q = int(read_int(field(j, "q", path), sub(path, "q")));
    if (t.p < 0 || t.q < 0) bad(path, "p and q must be nonnegative");
    size_t n = size_t(t.p + t.q);
    t.rep = read_labelled(field(j, "rep", path), t.h, n, sub(path, "rep"));
    t.forms = read_labelled(field(j, "forms", path), t.h, n, sub(path, "forms"));
    return t;
}

UnitaryRepFile read_rep(const Json& j, const std::string& path) {
    UnitaryRepFile r;
    r.group = read_group(field(j, "group", path), sub(path, "group"));
    r.space.p = int(read_int(field(j, "p", path), sub(path, "p")));
    r.space.q = int(read_int(field(j, "q", path), sub(path, "q")));
    r.space.h = j.contains("h") ? read_matrix(j["h"], sub(path, "h")) : standard_hermitian(r.space.p, r.space.q).h;
    if (r.space.h.rows() != r.space.dim() || r.space.h.cols() != r.space.dim()) bad(sub(path, "h"), "form has the wrong size");
    r.rho = read_labelled(field(j, "rho", path), r.group, r.space.dim(), sub(path, "rho"));
    return r;
}

TwoGroupMapFile read_map(const Json& j, const std::string& path) {
    TwoGroupMapFile m;
    m.base = read_two_group(field(j, "base", path), sub(path, "base"));
    m.ext.gamma = read_ints(field(j, "Gamma", path), sub(path, "Gamma"));
    const Json& xi = field(j, "Xi", path);
    for (size_t a = 0; a < array_at(xi, sub(path, "Xi")).size(); ++a) m.ext.xi.push_back(read_ints(xi[a], sub(sub(path, "Xi"), a)));
    const size_t n = size_t(m.base.n0());
    if (m.ext.gamma.size() != m.base.pi1.rank()) bad(sub(path, "Gamma"), "one value per pi1 generator expected");
    if (m.ext.xi.size() != n) bad(sub(path, "Xi"), "Xi must be |pi0| x |pi0|");
    for (size_t a = 0; a < n; ++a)
        if (m.ext.xi[a].size() != n) bad(sub(sub(path, "Xi"), a), "Xi must be |pi0| x |pi0|");
    return m;
}

}  // namespace

Json to_json(const Scalar& x) { return x.str(); }

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

Json to_json(const FermionicGroup& g) {
    Json j;
    j["kind"] = "fermionic_group";
    Json fg = finite_group_json(g.group);
    j["elements"] = fg["elements"];
    j["unit"] = fg["unit"];
    j["c"] = g.label(g.c);
    Json th = Json::object();
    for (int x = 0; x < g.order(); ++x) th[g.label(x)] = g.theta[size_t(x)];
    j["theta"] = th;
    j["mult"] = fg["mult"];
    return j;
}

Json to_json(const SkeletalTwoGroup& g) {
    Json j;
    j["kind"] = "skeletal_2group";
    if (!g.name.empty()) j["name"] = g.name;
    j["pi0"] = finite_group_json(g.pi0);
    j["pi1"] = ints_json(g.pi1.orders);
    Json act = Json::array();
    for (const auto& m : g.action) act.push_back(m);
    j["action"] = act;
    Json k = Json::array();
    for (const auto& x : g.k) k.push_back(x);
    j["k"] = k;
    return j;
}

Json to_json(const TwoGroupMapFile& m) {
    Json j;
    j["kind"] = "2group_map";
    j["base"] = to_json(m.base);
    j["Gamma"] = ints_json(m.ext.gamma);
    Json xi = Json::array();
    for (const auto& row : m.ext.xi) xi.push_back(ints_json(row));
    j["Xi"] = xi;
    return j;
}

Json to_json(const Superalgebra& a) {
    Json j;
    j["kind"] = "superalgebra";
    if (!a.name.empty()) j["name"] = a.name;
    j["field"] = a.field() == Field::C ? "C" : "R";
    j["parity"] = ints_json(a.parity());
    j["unit"] = to_json(a.unit());
    Json mult = Json::array();
    for (size_t x = 0; x < a.dim(); ++x) {
        Json row = Json::array();
        for (size_t y = 0; y < a.dim(); ++y) row.push_back(to_json(a.mul(a.basis(x), a.basis(y))));
        mult.push_back(row);
    }
    j["mult"] = mult;
    return j;
}

Json to_json(const Bimodule& m) {
    Json j;
    j["kind"] = "bimodule";
    if (!m.name.empty()) j["name"] = m.name;
    j["left"] = to_json(*m.left);
    j["right"] = to_json(*m.right);
    j["parity"] = ints_json(m.parity);
    j["left_act"] = matrices_json(m.L);
    j["right_act"] = matrices_json(m.R);
    return j;
}

Json to_json(const StarAlgebra& s) {
    Json j;
    j["kind"] = "star_algebra";
    j["algebra"] = to_json(*s.alg);
    j["star"] = to_json(s.star);
    return j;
}

Json to_json(const StellarAlgebra& s) {
    Json j;
    j["kind"] = "stellar";
    j["algebra"] = to_json(*s.alg);
    j["module"] = to_json(s.m);
    j["sigma"] = to_json(s.sigma);
    if (s.star) j["star"] = to_json(s.star->star);
    return j;
}

Json to_json(const HilbertPairing& p) {
    Json j;
    j["kind"] = "hilbert_pairing";
    j["b"] = to_json(p.b);
    j["a"] = to_json(p.a);
    j["module"] = to_json(p.n);
    Json t = Json::array();
    for (const auto& row : p.table) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        t.push_back(r);
    }
    j["table"] = t;
    return j;
}

Json to_json(const Tft2dFile& t) {
    const GradedAlgebraBundle& b = t.bundle;
    Json j;
    j["kind"] = "tft2d";
    j["grading"] = to_json(b.grading);
    j["ambient"] = to_json(*b.ambient);
    Json comps = Json::object();
    for (int x = 0; x < b.grading.order(); ++x) {
        Json idx = Json::array();
        for (size_t k : b.components[size_t(x)]) idx.push_back(k);
        comps[b.grading.label(x)] = idx;
    }
    j["components"] = comps;
    j["i"] = to_json(b.i);
    j["parity"] = to_json(b.parity);
    j["dagger"] = to_json(t.dagger);
    j["lambda"] = to_json(t.lambda);
    Json loops = Json::object();
    for (const auto& l : b.loops) {
        Json x;
        x["gamma"] = l.gamma;
        x["element"] = to_json(l.element);
        x["order"] = l.order;
        x["action"] = ints_json(l.action);
        loops[l.label] = x;
    }
    j["loops"] = loops;
    return j;
}

Json to_json(const TftBundle1D& t) {
    Json j;
    j["kind"] = "tft1d";
    j["grading"] = to_json(t.h);
    j["p"] = t.p;
    j["q"] = t.q;
    j["rep"] = labelled_json(t.h, t.rep, 0);
    j["forms"] = labelled_json(t.h, t.forms, 1);
    return j;
}

Json to_json(const UnitaryRepFile& r) {
    Json j;
    j["kind"] = "unitary_rep";
    j["group"] = to_json(r.group);
    j["p"] = r.space.p;
    j["q"] = r.space.q;
    j["h"] = to_json(r.space.h);
    j["rho"] = labelled_json(r.group, r.rho, -1);
    return j;
}

std::string kind_of(const Document& d) {
    static const char* names[] = {"fermionic_group", "skeletal_2group", "2group_map",    "superalgebra",
                                  "bimodule",        "star_algebra",    "stellar",       "hilbert_pairing",
                                  "tft2d",           "tft1d",           "unitary_rep"};
    return names[d.index()];
}

Json to_json(const Document& d) {
    return std::visit([](const auto& x) { return to_json(x); }, d);
}

Document from_json(const Json& j) {
    const std::string path;
    std::string k = expect_kind(j, path);
    if (k == "fermionic_group") return read_group(j, path);
    if (k == "skeletal_2group") return read_two_group(j, path);
    if (k == "2group_map") return read_map(j, path);
    if (k == "superalgebra") return read_algebra(j, path);
    if (k == "bimodule") return read_bimodule(j, path);
    if (k == "star_algebra") return read_star(j, path);
    if (k == "stellar") return read_stellar(j, path);
    if (k == "hilbert_pairing") return read_pairing(j, path);
    if (k == "tft2d") return read_tft2d(j, path);
    if (k == "tft1d") return read_tft1d(j, path);
    if (k == "unitary_rep") return read_rep(j, path);
    bad(".kind", "unknown kind \"" + k + "\"");
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // report line and column of the failing byte
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw StructuralError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                              ": " + e.what());
    }
    return from_json(j);
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str());
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Report check_document(const Document& d) {
    struct Visitor {
        Report operator()(const FermionicGroup& g) const { return check_fermionic_group(g); }
        Report operator()(const SkeletalTwoGroup& g) const { return check_three_cocycle(g); }
        Report operator()(const TwoGroupMapFile& m) const {
            Report r;
            std::string why;
            r.check("gamma-admissible", gamma_admissible(m.base, m.ext.gamma, &why), why);
            if (r.ok()) r.merge(check_map_data(m.base, to_map_data(m.base, m.ext), point_mod_z2()));
            return r;
        }
        Report operator()(const Superalgebra& a) const { return check_superalgebra(a); }
        Report operator()(const Bimodule& m) const { return check_bimodule(m); }
        Report operator()(const StarAlgebra& s) const { return check_star(s); }
        Report operator()(const StellarAlgebra& s) const { return check_stellar(s); }
        Report operator()(const HilbertPairing& p) const { return check_hilbert_pairing(p); }
        Report operator()(const Tft2dFile& t) const { return check_tft2d_data(t.bundle, t.dagger, t.lambda); }
        Report operator()(const TftBundle1D& t) const { return check_tft1d(t); }
        Report operator()(const UnitaryRepFile& r) const {
            Report out = check_hermitian_space(r.space);
            out.merge(check_unitary_fermionic_rep(r.group, r.space, r.rho));
            return out;
        }
    };
    return std::visit(Visitor{}, d);
}

Superalgebra algebra_fixture(const std::string& name) {
    auto nums = [&](const std::string& prefix) {
        std::vector<int> out;
        std::stringstream ss(name.substr(prefix.size()));
        std::string part;
        while (std::getline(ss, part, '-')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw StructuralError("bad algebra fixture name \"" + name + "\"");
            out.push_back(std::stoi(part));
        }
        return out;
    };
    Superalgebra a;
    if (name == "R")
        a = ground_field(Field::R);
    else if (name == "C")
        a = ground_field(Field::C);
    else if (name == "H")
        a = quaternions();
    else if (name == "C-real")
        a = complex_numbers_real();
    else if (name == "dual")
        a = dual_numbers();
    else if (name.rfind("complex-clifford-", 0) == 0) {
        auto n = nums("complex-clifford-");
        if (n.size() != 1) throw StructuralError("complex-clifford-N expected");
        a = complex_clifford(n[0]);
    } else if (name.rfind("clifford-", 0) == 0) {
        auto n = nums("clifford-");
        if (n.size() != 2) throw StructuralError("clifford-P-Q expected");
        a = clifford(n[0], n[1], Field::R);
    } else if (name.rfind("matrix-real-", 0) == 0) {
        auto n = nums("matrix-real-");
        if (n.size() != 2) throw StructuralError("matrix-real-M-N expected");
        a = matrix_superalgebra(n[0], n[1], Field::R);
    } else if (name.rfind("matrix-", 0) == 0) {
        auto n = nums("matrix-");
        if (n.size() != 2) throw StructuralError("matrix-M-N expected");
        a = matrix_superalgebra(n[0], n[1], Field::C);
    } else {
        throw StructuralError("unknown algebra fixture \"" + name + "\"");
    }
    a.name = name;
    return a;
}

}  // namespace ftft
