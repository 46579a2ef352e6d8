#include "ftft/fgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ftft/errors.hpp"

namespace ftft {

int FiniteGroup::inv(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mult[a][b] == unit) return b;
    throw StructuralError("element " + labels[a] + " has no inverse");
}

int FiniteGroup::index(const std::string& label) const {
    for (int k = 0; k < order(); ++k)
        if (labels[k] == label) return k;
    throw StructuralError("unknown group label '" + label + "'");
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != unit) {
        x = mult[x][a];
        if (++k > order() + 1) return 0;
    }
    return k;
}

void FiniteGroup::check_shape() const {
    int n = order();
    if (n == 0) throw StructuralError("empty group");
    if (unit < 0 || unit >= n) throw StructuralError("unit out of range");
    if (static_cast<int>(mult.size()) != n) throw StructuralError("multiplication table has wrong row count");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n) throw StructuralError("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw StructuralError("multiplication table entry out of range");
    }
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw StructuralError("duplicate group labels");
}

Report FiniteGroup::check_axioms() const {
    Report r;
    int n = order();
    for (int a = 0; a < n; ++a)
        if (mult[unit][a] != a || mult[a][unit] != a) r.fail("unit", "unit fails on " + labels[a]);
    r.pass("unit");
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b) found |= (mult[a][b] == unit && mult[b][a] == unit);
        if (!found) r.fail("inverses", "no two-sided inverse for " + labels[a]);
    }
    r.pass("inverses");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    r.fail("associativity", "(" + labels[a] + "," + labels[b] + "," + labels[c] + ")");
    r.pass("associativity");
    return r;
}

FermionicGroup make_fermionic_group(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<std::string>>& mult, const std::string& unit,
                                    const std::string& c, const std::map<std::string, int>& theta) {
    FermionicGroup g;
    g.group.labels = labels;
    auto idx = [&](const std::string& l) { return g.group.index(l); };
    if (mult.size() != labels.size()) throw StructuralError("multiplication table has wrong row count");
    for (const auto& row : mult) {
        if (row.size() != labels.size()) throw StructuralError("multiplication table is not square");
        std::vector<int> r;
        for (const auto& l : row) r.push_back(idx(l));
        g.group.mult.push_back(std::move(r));
    }
    g.group.unit = idx(unit);
    g.c = idx(c);
    g.theta.assign(labels.size(), 0);
    for (const auto& [l, t] : theta) {
        if (t != 0 && t != 1) throw StructuralError("theta values must be 0 or 1");
        g.theta[idx(l)] = t;
    }
    if (theta.size() != labels.size()) throw StructuralError("theta must be given for every element");
    g.group.check_shape();
    return g;
}

Report check_fermionic_group(const FermionicGroup& g) {
    g.group.check_shape();
    int n = g.order();
    if (g.c < 0 || g.c >= n) throw StructuralError("c out of range");
    if (static_cast<int>(g.theta.size()) != n) throw StructuralError("theta has wrong length");
    Report r = g.group.check_axioms();
    r.check("c-square", g.mul(g.c, g.c) == g.group.unit, "c*c != unit");
    for (int a = 0; a < n; ++a)
        if (g.mul(g.c, a) != g.mul(a, g.c)) r.fail("c-central", "c does not commute with " + g.label(a));
    r.pass("c-central");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.theta[g.mul(a, b)] != ((g.theta[a] + g.theta[b]) & 1))
                r.fail("theta-hom", "theta(" + g.label(a) + g.label(b) + ") != theta(" + g.label(a) + ")+theta(" +
                                        g.label(b) + ")");
    r.pass("theta-hom");
    r.check("theta-c", g.theta[g.c] == 0, "theta(c) != 0");
    return r;
}

FermionicGroup opposite(const FermionicGroup& g) {
    FermionicGroup h = g;
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int p = g.mul(b, a);
            h.group.mult[a][b] = (g.theta[a] & g.theta[b]) ? g.mul(g.c, p) : p;
        }
    return h;
}

namespace {

// Canonical representative of {h, c h}: the one that comes first in element order.
int canonical(const FermionicGroup& h, int x) { return std::min(x, h.mul(h.c, x)); }

}  // namespace

FermionicTensor fermionic_tensor(const FermionicGroup& g, const FermionicGroup& h) {
    if (g.c == g.group.unit || h.c == h.group.unit)
        throw UnsupportedInput("fermionic tensor product needs nontrivial c in both factors");
    FermionicTensor out;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
            if (canonical(h, b) == b) {
                index[{a, b}] = static_cast<int>(out.pairs.size());
                out.pairs.push_back({a, b});
            }
    // (g, c_H h) is identified with (c_G g, h)
    auto normal = [&](int a, int b) -> int {
        int r = canonical(h, b);
        if (r != b) a = g.mul(g.c, a);
        return index.at({a, r});
    };
    int n = static_cast<int>(out.pairs.size());
    FermionicGroup& t = out.group;
    t.group.labels.resize(n);
    t.theta.resize(n);
    t.group.mult.assign(n, std::vector<int>(n));
    for (int k = 0; k < n; ++k) {
        auto [a, b] = out.pairs[k];
        t.group.labels[k] = g.label(a) + "⊗" + h.label(b);
        t.theta[k] = (g.theta[a] + h.theta[b]) & 1;
    }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            auto [a1, b1] = out.pairs[k];
            auto [a2, b2] = out.pairs[l];
            int ga = g.mul(a1, a2);
            if (g.theta[a2] & h.theta[b1]) ga = g.mul(g.c, ga);
            t.group.mult[k][l] = normal(ga, h.mul(b1, b2));
        }
    t.group.unit = normal(g.group.unit, h.group.unit);
    t.c = normal(g.c, h.group.unit);
    return out;
}

BosonicQuotient bosonic_quotient(const FermionicGroup& g) {
    if (g.c == g.group.unit) throw UnsupportedInput("bosonic quotient needs c != unit");
    BosonicQuotient q;
    int n = g.order();
    q.proj.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (q.proj[a] >= 0) continue;
        int k = static_cast<int>(q.section.size());
        q.section.push_back(a);
        q.proj[a] = k;
        q.proj[g.mul(g.c, a)] = k;
    }
    int m = static_cast<int>(q.section.size());
    FermionicGroup& b = q.gb;
    b.group.labels.resize(m);
    b.theta.resize(m);
    b.group.mult.assign(m, std::vector<int>(m));
    q.omega.values.assign(m, std::vector<int>(m, 0));
    for (int k = 0; k < m; ++k) {
        b.group.labels[k] = g.label(q.section[k]);
        b.theta[k] = g.theta[q.section[k]];
    }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            int p = g.mul(q.section[k], q.section[l]);
            int kl = q.proj[p];
            b.group.mult[k][l] = kl;
            q.omega.values[k][l] = (p == q.section[kl]) ? 0 : 1;
        }
    b.group.unit = q.proj[g.group.unit];
    b.c = b.group.unit;
    return q;
}

bool check_cocycle2(const FiniteGroup& g, const Cocycle2& w) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        if (w.values[a][g.unit] || w.values[g.unit][a]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = w.values[b][c] ^ w.values[a][g.mul(b, c)];
                int rhs = w.values[g.mul(a, b)][c] ^ w.values[a][b];
                if (lhs != rhs) return false;
            }
    return true;
}

bool is_coboundary2(const FiniteGroup& g, const Cocycle2& w) {
    int n = g.order();
    std::vector<int> others;
    for (int a = 0; a < n; ++a)
        if (a != g.unit) others.push_back(a);
    if (others.size() > 20) throw UnsupportedInput("group too large for coboundary brute force");
    std::vector<int> sigma(n, 0);
    for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
        for (size_t k = 0; k < others.size(); ++k) sigma[others[k]] = (mask >> k) & 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                ok = (sigma[a] ^ sigma[b] ^ sigma[g.mul(a, b)]) == w.values[a][b];
        if (ok) return true;
    }
    return false;
}

SpacetimeGroup1D spacetime_group_1d(const FermionicGroup& g) {
    if (g.c == g.group.unit) throw UnsupportedInput("spacetime group needs c != unit");
    return SpacetimeGroup1D{opposite(g), g.theta};
}

bool iso_witness_check(const FermionicGroup& g, const FermionicGroup& h, const std::vector<int>& map) {
    int n = g.order();
    if (static_cast<int>(map.size()) != n || h.order() != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : map) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    if (map[g.c] != h.c) return false;
    for (int a = 0; a < n; ++a)
        if (g.theta[a] != h.theta[map[a]]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    return true;
}

std::optional<std::vector<int>> extend_from_generators(const FermionicGroup& g, const std::vector<int>& gens,
                                                       const FermionicGroup& h, const std::vector<int>& images) {
    std::vector<int> map(g.order(), -1);
    map[g.group.unit] = h.group.unit;
    std::vector<int> frontier{g.group.unit};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = g.mul(x, gens[k]);
                int iy = h.mul(map[x], images[k]);
                if (map[y] < 0) {
                    map[y] = iy;
                    next.push_back(y);
                } else if (map[y] != iy) {
                    return std::nullopt;
                }
            }
        frontier = std::move(next);
    }
    if (std::find(map.begin(), map.end(), -1) != map.end()) return std::nullopt;
    return map;
}

GroupFingerprint fingerprint(const FermionicGroup& g) {
    GroupFingerprint f;
    f.order = g.order();
    for (int a = 0; a < g.order(); ++a) {
        int o = g.group.element_order(a);
        f.order_histogram[o]++;
        if (g.theta[a]) {
            f.odd_count++;
            f.odd_order_histogram[o]++;
        }
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        f.center_size += central;
    }
    return f;
}

std::optional<std::vector<int>> find_isomorphism(const FermionicGroup& g, const FermionicGroup& h) {
    int n = g.order();
    if (h.order() != n) return std::nullopt;
    if (n > 8) throw UnsupportedInput("exhaustive isomorphism search limited to order 8");
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> eo_g(n), eo_h(n);
    for (int a = 0; a < n; ++a) {
        eo_g[a] = g.group.element_order(a);
        eo_h[a] = h.group.element_order(a);
    }
    map[g.group.unit] = h.group.unit;
    used[h.group.unit] = true;
    if (g.c != g.group.unit) {
        if (h.c == h.group.unit) return std::nullopt;
        map[g.c] = h.c;
        used[h.c] = true;
    } else if (h.c != h.group.unit) {
        return std::nullopt;
    }
    std::function<bool(int)> rec = [&](int a) -> bool {
        if (a == n) return iso_witness_check(g, h, map);
        if (map[a] >= 0) return rec(a + 1);
        for (int b = 0; b < n; ++b) {
            if (used[b] || eo_g[a] != eo_h[b] || g.theta[a] != h.theta[b]) continue;
            map[a] = b;
            used[b] = true;
            bool consistent = true;
            for (int x = 0; x <= a && consistent; ++x) {
                if (map[x] < 0) continue;
                int p = g.mul(a, x), q = g.mul(x, a);
                if (map[p] >= 0 && map[p] != h.mul(b, map[x])) consistent = false;
                if (map[q] >= 0 && map[q] != h.mul(map[x], b)) consistent = false;
            }
            if (consistent && rec(a + 1)) return true;
            map[a] = -1;
            used[b] = false;
        }
        return false;
    };
    if (rec(0)) return map;
    return std::nullopt;
}

IsoVerdict compare_groups(const FermionicGroup& g, const FermionicGroup& h, std::vector<int>* witness) {
    if (!(fingerprint(g) == fingerprint(h))) return IsoVerdict::NotIsomorphic;
    if (g.order() > 8) return IsoVerdict::FingerprintsAgree;
    auto m = find_isomorphism(g, h);
    if (!m) return IsoVerdict::NotIsomorphic;
    if (witness) *witness = *m;
    return IsoVerdict::Isomorphic;
}

// ---- fixtures ----

namespace {

FermionicGroup from_function(std::vector<std::string> labels, const std::function<int(int, int)>& mul, int c,
                             std::vector<int> theta) {
    FermionicGroup g;
    int n = static_cast<int>(labels.size());
    g.group.labels = std::move(labels);
    g.group.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.group.mult[a][b] = mul(a, b);
    g.group.unit = 0;
    g.c = c;
    g.theta = std::move(theta);
    return g;
}

}  // namespace

FermionicGroup trivial_fermionic() {
    return from_function({"1", "c"}, [](int a, int b) { return a ^ b; }, 1, {0, 0});
}

// 1, T, c, cT as T^0..T^3
FermionicGroup pin1_minus() {
    return from_function({"1", "T", "c", "cT"}, [](int a, int b) { return (a + b) % 4; }, 2, {0, 1, 0, 1});
}

// 1, T, c, cT as bits (T, c)
FermionicGroup pin1_plus() {
    return from_function({"1", "T", "c", "cT"}, [](int a, int b) { return a ^ b; }, 2, {0, 1, 0, 1});
}

FermionicGroup z2c_times_z2(bool odd) {
    int t = odd ? 1 : 0;
    return from_function({"1", "g", "c", "cg"}, [](int a, int b) { return a ^ b; }, 2, {0, t, 0, t});
}

// Elements: sign s (bit 0) and unit u in {1, i, j, k} (bits 1-2); label order 1,-1,i,-i,j,-j,k,-k.
FermionicGroup quaternion_group() {
    // product table of the units with signs: u*v = sgn * w
    static const int w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return from_function(
        {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
        [](int a, int b) {
            int sa = a & 1, ua = a >> 1, sb = b & 1, ub = b >> 1;
            int s = sa ^ sb ^ sg[ua][ub];
            return (w[ua][ub] << 1) | s;
        },
        1, {0, 0, 1, 1, 1, 1, 0, 0});
}

std::vector<std::string> fixture_group_names() {
    return {"trivial", "spin1", "pin1-", "pin1+", "q8", "z2c-x-z2t", "z2c-x-z2", "d4"};
}

FermionicGroup fixture_group(const std::string& name) {
    if (name == "trivial" || name == "spin1") return trivial_fermionic();
    if (name == "pin1-" || name == "z4ft") return pin1_minus();
    if (name == "pin1+") return pin1_plus();
    if (name == "q8") return quaternion_group();
    if (name == "z2c-x-z2t") return z2c_times_z2(true);
    if (name == "z2c-x-z2") return z2c_times_z2(false);
    if (name == "d4") return fermionic_tensor(pin1_plus(), pin1_plus()).group;
    throw UnsupportedInput("unknown group fixture '" + name + "'");
}

}  // namespace ftft
