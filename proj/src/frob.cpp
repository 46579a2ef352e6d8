#include "ftft/frob.hpp"

#include "ftft/errors.hpp"

namespace ftft {

namespace {

Vec unit_vec(size_t n, size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

Vec scale(Vec v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
}

std::vector<char> mask_of(const std::vector<size_t>& idx, size_t n) {
    std::vector<char> m(n, 0);
    for (size_t k : idx) m[k] = 1;
    return m;
}

bool supported_in(const Vec& v, const std::vector<char>& mask) {
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero() && !mask[k]) return false;
    return true;
}

Vec restrict_to(const Vec& v, const std::vector<size_t>& idx) {
    Vec out(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
    return out;
}

// Real subalgebra on the A_1 basis and the components as real (A_1, A_1)-bimodules.
AlgPtr real_unit_algebra(const GradedAlgebraBundle& b) {
    const Superalgebra& A = *b.ambient;
    const auto& idx = b.components[size_t(b.unit())];
    std::vector<size_t> pos(A.dim(), size_t(-1));
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
    std::vector<int> par;
    for (size_t k : idx) par.push_back(A.parity(k));
    Superalgebra a1(idx.size(), par, Field::R);
    for (size_t x = 0; x < idx.size(); ++x)
        for (size_t y = 0; y < idx.size(); ++y)
            for (const auto& [k, v] : A.product(idx[x], idx[y]))
                if (pos[k] != size_t(-1)) a1.set(x, y, pos[k], v);
    a1.set_unit(restrict_to(A.unit(), idx));
    a1.name = "A_1(real)";
    return share(std::move(a1));
}

Bimodule real_component(const GradedAlgebraBundle& b, const AlgPtr& a1, int g) {
    const Superalgebra& A = *b.ambient;
    const auto& one = b.components[size_t(b.unit())];
    const auto& idx = b.components[size_t(g)];
    Bimodule m;
    m.left = m.right = a1;
    for (size_t k : idx) m.parity.push_back(A.parity(k));
    for (size_t x : one) {
        Matrix l(idx.size(), idx.size()), r(idx.size(), idx.size());
        for (size_t c = 0; c < idx.size(); ++c) {
            Vec lv = restrict_to(A.mul(A.basis(x), A.basis(idx[c])), idx);
            Vec rv = restrict_to(A.mul(A.basis(idx[c]), A.basis(x)), idx);
            for (size_t k = 0; k < idx.size(); ++k) {
                l(k, c) = lv[k];
                r(k, c) = rv[k];
            }
        }
        m.L.push_back(l);
        m.R.push_back(r);
    }
    m.name = "A_" + b.grading.label(g);
    return m;
}

Vec power(const Superalgebra& A, const Vec& a, int n) {
    Vec out = A.unit();
    for (int k = 0; k < n; ++k) out = A.mul(out, a);
    return out;
}

}  // namespace

Scalar FrobeniusStructure::operator()(const Vec& a) const {
    Scalar s;
    for (size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) s += lambda[k] * a[k];
    return s;
}

Report check_frobenius(const FrobeniusStructure& f, FrobMode mode) {
    Report r;
    const Superalgebra& A = *f.alg;
    const size_t n = A.dim();
    if (f.lambda.size() != n) throw StructuralError("lambda has the wrong length");
    for (size_t k = 0; k < n; ++k)
        if (A.parity(k) && !f.lambda[k].is_zero()) r.fail("even", "e_" + std::to_string(k));
    r.pass("even");
    Matrix gram(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram(i, j) = f(A.mul(A.basis(i), A.basis(j)));
    r.check("nondegenerate", rank(gram) == n, "lambda(ab) is degenerate");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar rhs = gram(j, i);
            if (mode == FrobMode::BosonicGraded && (A.parity(i) & A.parity(j))) rhs = -rhs;
            if (gram(i, j) != rhs) r.fail("symmetric", "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    r.pass("symmetric");
    return r;
}

int GradedAlgebraBundle::component_of(size_t basis_index) const {
    for (size_t g = 0; g < components.size(); ++g)
        for (size_t k : components[g])
            if (k == basis_index) return int(g);
    return -1;
}

Report check_graded_bundle(const GradedAlgebraBundle& b) {
    Report r;
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    const size_t n = A.dim();
    if (A.field() != Field::R) throw PreconditionError("the ambient algebra must be real");
    r.merge(check_superalgebra(A), "ambient-");

    std::vector<int> comp(n, -1);
    if (b.components.size() != size_t(G.order())) {
        r.fail("decomposition", "one component per group element expected");
        return r;
    }
    for (int g = 0; g < G.order(); ++g)
        for (size_t k : b.components[size_t(g)]) {
            if (k >= n || comp[k] != -1) {
                r.fail("decomposition", "basis index " + std::to_string(k) + " repeated or out of range");
                continue;
            }
            comp[k] = g;
        }
    for (size_t k = 0; k < n; ++k)
        if (comp[k] == -1) r.fail("decomposition", "basis index " + std::to_string(k) + " in no component");
    r.pass("decomposition");
    if (!r.ok("decomposition")) return r;
    std::vector<std::vector<char>> masks;
    for (const auto& c : b.components) masks.push_back(mask_of(c, n));
    const int one = b.unit();
    const auto& m1 = masks[size_t(one)];

    r.check("unit", supported_in(A.unit(), m1), "unit outside A_1");
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            int gh = G.mul(comp[x], comp[y]);
            for (const auto& term : A.product(x, y))
                if (comp[term.first] != gh) {
                    r.fail("grading", "e_" + std::to_string(x) + " e_" + std::to_string(y));
                    break;
                }
        }
    r.pass("grading");

    const Vec& i = b.i;
    bool i_ok = i.size() == n && supported_in(i, m1) && A.degree(i) == 0 &&
                A.mul(i, i) == scale(A.unit(), Scalar(-1));
    r.check("i-central", i_ok, "i must be an even element of A_1 with i^2 = -1");
    if (i_ok) {
        for (size_t k : b.components[size_t(one)])
            if (A.mul(i, A.basis(k)) != A.mul(A.basis(k), i)) r.fail("i-central", "e_" + std::to_string(k));
        for (size_t k = 0; k < n; ++k) {
            Vec lhs = A.mul(A.basis(k), i);
            Vec rhs = A.mul(i, A.basis(k));
            if (G.theta[size_t(comp[k])]) rhs = scale(rhs, Scalar(-1));
            if (lhs != rhs) r.fail("i-commutation", "e_" + std::to_string(k));
        }
    }
    r.pass("i-commutation");

    // A_g (x)_{A_1} A_h -> A_gh
    AlgPtr a1 = real_unit_algebra(b);
    std::vector<Bimodule> mods;
    for (int g = 0; g < G.order(); ++g) mods.push_back(real_component(b, a1, g));
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const std::string note = G.label(g) + "*" + G.label(h);
            int gh = G.mul(g, h);
            const auto& ig = b.components[size_t(g)];
            const auto& ih = b.components[size_t(h)];
            const auto& igh = b.components[size_t(gh)];
            try {
                TensorProduct t = tensor_over(mods[size_t(g)], mods[size_t(h)]);
                Matrix mu = descend(t, igh.size(), [&](size_t x, size_t y) {
                    return restrict_to(A.mul(A.basis(ig[x]), A.basis(ih[y])), igh);
                });
                if (mu.rows() != mu.cols() || !inverse(mu)) r.fail("strong-grading", note);
            } catch (const StructuralError& e) {
                r.fail("strong-grading", note + ": " + e.what());
            }
        }
    r.pass("strong-grading");

    const Vec& x = b.parity;
    if (!b.bosonic()) {
        const auto& mc = masks[size_t(G.c)];
        bool ok = x.size() == n && supported_in(x, mc) && A.degree(x) == 0 && A.mul(x, x) == A.unit();
        r.check("fermion-parity", ok, "(-1)^F must be an even element of A_c squaring to 1");
        if (ok) {
            for (size_t k = 0; k < n; ++k) {
                Vec rhs = A.mul(A.basis(k), x);
                if (A.parity(k)) rhs = scale(rhs, Scalar(-1));
                if (A.mul(x, A.basis(k)) != rhs) r.fail("fermion-parity", "e_" + std::to_string(k));
            }
            RowSpace span(n);
            for (size_t k : b.components[size_t(one)]) span.add(A.mul(A.basis(k), x));
            r.check("fermion-parity", span.rank() == b.components[size_t(G.c)].size(), "A_1 (-1)^F != A_c");
        }
    }

    for (const auto& l : b.loops) {
        const std::string tag = l.label;
        if (l.element.size() != n) throw StructuralError("loop element has the wrong length");
        if (l.gamma && b.bosonic()) throw StructuralError("loops into c need a fermionic grading");
        int target = l.gamma ? G.c : one;
        r.check("loop-grading", supported_in(l.element, masks[size_t(target)]), tag);
        r.check("loop-even", A.degree(l.element) == 0, tag);
        auto inv = A.inverse(l.element);
        r.check("loop-invertible", inv.has_value(), tag);
        if (!inv) continue;
        for (size_t k : b.components[size_t(one)])
            if (A.mul(l.element, A.basis(k)) != A.mul(A.basis(k), l.element))
                r.fail("loop-centrality", tag + " e_" + std::to_string(k));
        // a' = a_gamma (-1)^F, then a' a_g = (-1)^{gamma |a_g|} a_g a'^{+-1}
        Vec ap = l.gamma ? A.mul(l.element, x) : l.element;
        auto api = A.inverse(ap);
        if (!api) continue;
        for (size_t k = 0; k < n; ++k) {
            int s = l.action.empty() ? 1 : l.action[size_t(comp[k])];
            Vec rhs = A.mul(A.basis(k), s > 0 ? ap : *api);
            if (l.gamma && A.parity(k)) rhs = scale(rhs, Scalar(-1));
            if (A.mul(ap, A.basis(k)) != rhs) r.fail("loop-conjugation", tag + " e_" + std::to_string(k));
        }
        if (l.order > 0) r.check("loop-order", power(A, l.element, l.order) == A.unit(), tag);
    }
    if (!b.loops.empty()) {
        r.pass("loop-centrality");
        r.pass("loop-conjugation");
    }
    return r;
}

Vec ComplexView::to_complex(int g, const Vec& u) const {
    const Matrix& q = coord[size_t(g)];
    Vec y = q * restrict_to(u, support[size_t(g)]);
    const size_t d = basis[size_t(g)].size();
    Vec c(d);
    for (size_t k = 0; k < d; ++k) c[k] = y[k] + Scalar::I() * y[d + k];
    return c;
}

Vec ComplexView::to_real(int g, const Vec& c) const {
    Vec out(ambient_dim);
    const auto& bs = basis[size_t(g)];
    const size_t d = bs.size();
    // coord is the inverse of [v_1..v_d, i v_1..i v_d] on the support
    Matrix p = *inverse(coord[size_t(g)]);
    const auto& sup = support[size_t(g)];
    for (size_t k = 0; k < d; ++k) {
        Scalar re(c[k].re), im(c[k].im);
        for (size_t r = 0; r < sup.size(); ++r) out[sup[r]] += re * p(r, k) + im * p(r, d + k);
    }
    return out;
}

ComplexView complex_view(const GradedAlgebraBundle& b) {
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    const size_t n = A.dim();
    ComplexView v;
    v.ambient_dim = n;
    v.unit = b.unit();
    Matrix j = A.left_mult(b.i);
    for (int g = 0; g < G.order(); ++g) {
        const auto& sup = b.components[size_t(g)];
        RowSpace span(n);
        std::vector<Vec> chosen, turned;
        for (size_t k : sup) {
            Vec e = unit_vec(n, k);
            if (!span.add(e)) continue;
            Vec je = j * e;
            span.add(je);
            chosen.push_back(e);
            turned.push_back(je);
        }
        if (2 * chosen.size() != sup.size() || span.rank() != sup.size())
            throw StructuralError("component " + G.label(g) + " is not stable under i");
        std::vector<Vec> cols;
        for (const auto& c : chosen) cols.push_back(restrict_to(c, sup));
        for (const auto& c : turned) cols.push_back(restrict_to(c, sup));
        auto q = inverse(Matrix::from_cols(cols, sup.size()));
        if (!q) throw StructuralError("component " + G.label(g) + " has no complex basis");
        v.support.push_back(sup);
        v.coord.push_back(*q);
        v.basis.push_back(chosen);
    }
    const int one = b.unit();
    const auto& b1 = v.basis[size_t(one)];
    std::vector<int> par1;
    for (const auto& e : b1) par1.push_back(A.degree(e));
    Superalgebra a1(b1.size(), par1, Field::C);
    for (size_t x = 0; x < b1.size(); ++x)
        for (size_t y = 0; y < b1.size(); ++y) {
            Vec c = v.to_complex(one, A.mul(b1[x], b1[y]));
            for (size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero()) a1.set(x, y, k, c[k]);
        }
    a1.set_unit(v.to_complex(one, A.unit()));
    a1.name = "A_1";
    v.a1 = share(std::move(a1));
    v.a1_conj = share(conjugate(*v.a1));
    for (int g = 0; g < G.order(); ++g) {
        const auto& bg = v.basis[size_t(g)];
        Bimodule m;
        m.left = v.a1;
        m.right = G.theta[size_t(g)] ? v.a1_conj : v.a1;
        for (const auto& e : bg) m.parity.push_back(A.degree(e));
        for (size_t x = 0; x < b1.size(); ++x) {
            std::vector<Vec> lcols, rcols;
            for (const auto& e : bg) {
                lcols.push_back(v.to_complex(g, A.mul(b1[x], e)));
                rcols.push_back(v.to_complex(g, A.mul(e, b1[x])));
            }
            m.L.push_back(Matrix::from_cols(lcols, bg.size()));
            m.R.push_back(Matrix::from_cols(rcols, bg.size()));
        }
        m.name = "A_" + G.label(g);
        v.modules.push_back(std::move(m));
    }
    return v;
}

Report check_frobenius_compat(const GradedAlgebraBundle& b, const ComplexView& v, const FrobeniusStructure& f) {
    Report r;
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    const int one = b.unit();
    for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g);
        for (size_t x : b.components[size_t(g)])
            for (size_t y : b.components[size_t(gi)]) {
                Scalar lhs = f(v.to_complex(one, A.mul(A.basis(x), A.basis(y))));
                Scalar rhs = f(v.to_complex(one, A.mul(A.basis(y), A.basis(x))));
                if (G.theta[size_t(g)]) rhs = rhs.conj();
                if (b.bosonic() && (A.parity(x) & A.parity(y))) rhs = -rhs;
                if (lhs != rhs) {
                    r.fail("frobenius-compat", G.label(g) + " e_" + std::to_string(x) + " e_" + std::to_string(y));
                }
            }
    }
    r.pass("frobenius-compat");
    return r;
}

Report check_frobenius_compat(const GradedAlgebraBundle& b, const FrobeniusStructure& f) {
    return check_frobenius_compat(b, complex_view(b), f);
}

Report serre_frobenius_check(const GradedAlgebraBundle& b, const ComplexView& v, const FrobeniusStructure& f) {
    Report r;
    const FermionicGroup& G = b.grading;
    for (int g = 0; g < G.order(); ++g) {
        const Bimodule& m = v.modules[size_t(g)];
        auto ctx = is_invertible(m);
        if (!ctx) {
            r.fail("serre-invertible", G.label(g));
            continue;
        }
        SerreNaturality s;
        try {
            s = serre_naturality(*ctx);
        } catch (const StructuralError& e) {
            r.fail("unit-decomposition", G.label(g) + ": " + e.what());
            continue;
        }
        Vec lam = f.lambda;
        Vec lamb = G.theta[size_t(g)] ? conj(lam) : lam;
        for (size_t k = 0; k < m.dim(); ++k) {
            Vec lhs = s.map.matrix * s.src.pure(lam, m.basis(k));
            Vec rhs = s.dst.pure(m.basis(k), lamb);
            if (m.parity[k] && !b.bosonic()) rhs = scale(rhs, Scalar(-1));
            if (lhs != rhs) r.fail("serre-identity", G.label(g) + " m_" + std::to_string(k));
        }
    }
    r.pass("serre-invertible");
    r.pass("serre-identity");
    r.flags["agrees-with-compat"] = check_frobenius_compat(b, v, f).ok() == r.ok();
    return r;
}

Report serre_frobenius_check(const GradedAlgebraBundle& b, const FrobeniusStructure& f) {
    return serre_frobenius_check(b, complex_view(b), f);
}

AlphaTable standard_alpha(int i_sign) {
    Scalar im = i_sign > 0 ? Scalar::I() : -Scalar::I();
    AlphaTable a;
    for (int t = 0; t < 2; ++t)
        for (int pa = 0; pa < 2; ++pa)
            for (int pb = 0; pb < 2; ++pb) a[size_t(t * 4 + pa * 2 + pb)] = pb ? im : Scalar(1);
    return a;
}

std::string alpha_str(const AlphaTable& a) {
    std::string s;
    for (int t = 0; t < 2; ++t) {
        s += t ? " | theta=1:" : "theta=0:";
        for (int c = 0; c < 4; ++c) s += " (" + std::to_string(c / 2) + "," + std::to_string(c % 2) + ")=" + a[size_t(t * 4 + c)].str();
    }
    return s;
}

namespace {

// <a_g a_h, b_g b_h>_gh = (-1)^{|b_g||b_h| + theta(g)|b_h|} <a_g <a_h, b_h>_h, b_g>_g
void check_mult_unitary(Report& r, const GradedAlgebraBundle& b, const ComplexView& v,
                        const std::vector<HilbertPairing>& p) {
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    const int one = b.unit();
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            int gh = G.mul(g, h);
            const auto& bg = v.basis[size_t(g)];
            const auto& bh = v.basis[size_t(h)];
            bool bad = false;
            for (size_t ag = 0; ag < bg.size() && !bad; ++ag)
                for (size_t ah = 0; ah < bh.size() && !bad; ++ah) {
                    Vec left = v.to_complex(gh, A.mul(bg[ag], bh[ah]));
                    for (size_t cg = 0; cg < bg.size() && !bad; ++cg)
                        for (size_t ch = 0; ch < bh.size() && !bad; ++ch) {
                            Vec right = v.to_complex(gh, A.mul(bg[cg], bh[ch]));
                            Vec lhs = p[size_t(gh)].eval(left, right);
                            Vec inner = v.to_real(one, p[size_t(h)].table[ah][ch]);
                            Vec moved = v.to_complex(g, A.mul(bg[ag], inner));
                            Vec rhs = p[size_t(g)].eval(moved, unit_vec(bg.size(), cg));
                            int pg = A.degree(bg[cg]), ph = A.degree(bh[ch]);
                            if ((pg & ph) ^ (G.theta[size_t(g)] & ph)) rhs = scale(rhs, Scalar(-1));
                            if (lhs != rhs) bad = true;
                        }
                }
            if (bad) r.fail("mult-unitary", G.label(g) + "*" + G.label(h));
        }
    r.pass("mult-unitary");
}

bool same_module(const Bimodule& a, const Bimodule& b) {
    return a.parity == b.parity && a.L == b.L && a.R == b.R && same_algebra(*a.left, *b.left) &&
           same_algebra(*a.right, *b.right);
}

}  // namespace

Report check_tft2d(const TftBundle2D& t) {
    const GradedAlgebraBundle& b = t.bundle;
    const FermionicGroup& G = b.grading;
    Report r = check_graded_bundle(b);
    if (!r.ok("decomposition") || !r.ok("i-central")) return r;
    ComplexView v;
    try {
        v = complex_view(b);
    } catch (const StructuralError& e) {
        r.fail("complex-structure", e.what());
        return r;
    }
    r.pass("complex-structure");
    r.check("semisimple", is_semisimple(*v.a1), "A_1 is not semisimple");
    if (!same_algebra(*t.star.alg, *v.a1)) throw StructuralError("star structure is not on A_1");
    r.merge(check_star(t.star), "star-");
    r.check("stellar", check_stellar(stellar_from_star(t.star)).ok(), "induced stellar structure is invalid");

    const FrobeniusStructure& f = t.frobenius;
    if (!same_algebra(*f.alg, *v.a1)) throw StructuralError("Frobenius structure is not on A_1");
    r.merge(check_frobenius(f, b.bosonic() ? FrobMode::BosonicGraded : FrobMode::Ungraded), "frobenius-");
    for (size_t k = 0; k < v.a1->dim(); ++k) {
        if (v.a1->parity(k)) continue;
        Vec e = v.a1->basis(k);
        if (f(t.star.apply(e)) != f(e).conj()) r.fail("frobenius-stellar", "e_" + std::to_string(k));
    }
    r.pass("frobenius-stellar");
    r.merge(check_frobenius_compat(b, v, f));

    if (t.pairings.size() != size_t(G.order())) throw StructuralError("one pairing per component expected");
    StarAlgebra cstar = conjugate_star(t.star);
    for (int g = 0; g < G.order(); ++g) {
        const HilbertPairing& p = t.pairings[size_t(g)];
        if (!same_module(p.n, v.modules[size_t(g)])) {
            r.fail("pairing-module", G.label(g));
            continue;
        }
        const StarAlgebra& want = G.theta[size_t(g)] ? cstar : t.star;
        if (p.b.star != t.star.star || p.a.star != want.star) r.fail("pairing-stars", G.label(g));
        Report hr = check_hilbert_pairing(p);
        for (const auto& c : hr.failing()) r.fail("hilbert", G.label(g) + ":" + c);
    }
    r.pass("pairing-module");
    r.pass("pairing-stars");
    r.pass("hilbert");
    if (!r.ok("pairing-module")) return r;
    check_mult_unitary(r, b, v, t.pairings);

    const Vec& u = v.a1->unit();
    if (!b.bosonic()) {
        Vec x = v.to_complex(G.c, b.parity);
        r.check("parity-unitary", t.pairings[size_t(G.c)].eval(x, x) == u, "<(-1)^F, (-1)^F> != 1");
    }
    for (const auto& l : b.loops) {
        int target = l.gamma ? G.c : b.unit();
        Vec z = v.to_complex(target, l.element);
        r.check("loop-unitary", t.pairings[size_t(target)].eval(z, z) == u, l.label);
    }
    bool positive = true;
    for (const auto& p : t.pairings) positive = positive && c_star_positive(p);
    r.flags["positive"] = positive;
    return r;
}

Report check_ambient_dagger(const GradedAlgebraBundle& b, const Matrix& d) {
    Report r;
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    const size_t n = A.dim();
    if (d.rows() != n || d.cols() != n) throw StructuralError("dagger has the wrong shape");
    bool real = true;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) real = real && d(x, y).is_real();
    r.check("dagger-real", real, "entries must be rational");
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (!d(x, y).is_zero() && A.parity(x) != A.parity(y)) r.fail("dagger-even", "e_" + std::to_string(y));
    r.pass("dagger-even");
    r.check("dagger-involutive", (d * d).is_identity(), "dagger does not square to 1");
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (d * A.mul(A.basis(x), A.basis(y)) != A.mul(d.col(y), d.col(x)))
                r.fail("dagger-anti-multiplicative", "(" + std::to_string(x) + "," + std::to_string(y) + ")");
    r.pass("dagger-anti-multiplicative");
    r.check("dagger-i", d * b.i == scale(b.i, Scalar(-1)), "i^dagger != -i");
    for (int g = 0; g < G.order(); ++g) {
        auto mask = mask_of(b.components[size_t(G.inv(g))], n);
        for (size_t k : b.components[size_t(g)])
            if (!supported_in(d.col(k), mask)) r.fail("dagger-components", G.label(g));
    }
    r.pass("dagger-components");
    return r;
}

StarAlgebra star_from_ambient_dagger(const ComplexView& v, const Matrix& d, int i_sign) {
    const Superalgebra& a1 = *v.a1;
    const size_t u = size_t(v.unit);
    std::vector<Vec> cols;
    for (size_t k = 0; k < a1.dim(); ++k) {
        Vec c = v.to_complex(int(u), d * v.basis[u][k]);
        if (a1.parity(k)) c = scale(c, i_sign > 0 ? Scalar::I() : -Scalar::I());
        cols.push_back(c);
    }
    return {v.a1, Matrix::from_cols(cols, a1.dim())};
}

std::vector<HilbertPairing> pairings_from_dagger(const GradedAlgebraBundle& b, const ComplexView& v,
                                                 const StarAlgebra& star, const Matrix& d, const AlphaTable& alpha) {
    const Superalgebra& A = *b.ambient;
    const FermionicGroup& G = b.grading;
    StarAlgebra cstar = conjugate_star(star);
    std::vector<HilbertPairing> out;
    for (int g = 0; g < G.order(); ++g) {
        const auto& bg = v.basis[size_t(g)];
        int th = G.theta[size_t(g)];
        HilbertPairing p{star, th ? cstar : star, v.modules[size_t(g)], {}};
        p.table.assign(bg.size(), std::vector<Vec>(bg.size()));
        for (size_t x = 0; x < bg.size(); ++x)
            for (size_t y = 0; y < bg.size(); ++y) {
                Vec val = v.to_complex(b.unit(), A.mul(bg[x], d * bg[y]));
                int pa = A.degree(bg[x]), pb = A.degree(bg[y]);
                p.table[x][y] = scale(val, alpha[size_t(th * 4 + pa * 2 + pb)]);
            }
        out.push_back(std::move(p));
    }
    return out;
}

TftBundle2D construct_from_dagger(const GradedAlgebraBundle& b, const Matrix& d, const Vec& lambda) {
    Report pre = check_graded_bundle(b);
    if (!pre.ok()) throw PreconditionError("graded bundle invalid: " + pre.str());
    pre.merge(check_ambient_dagger(b, d));
    ComplexView v = complex_view(b);
    StarAlgebra star = star_from_ambient_dagger(v, d);
    FrobeniusStructure f{v.a1, lambda};
    pre.merge(check_frobenius(f, b.bosonic() ? FrobMode::BosonicGraded : FrobMode::Ungraded), "frobenius-");
    pre.merge(check_frobenius_compat(b, v, f));
    for (size_t k = 0; k < v.a1->dim(); ++k) {
        if (v.a1->parity(k)) continue;
        Vec e = v.a1->basis(k);
        if (f(star.apply(e)) != f(e).conj()) pre.fail("frobenius-stellar", "e_" + std::to_string(k));
    }
    if (!pre.ok()) throw PreconditionError("construct_from_dagger preconditions fail: " + pre.str());
    return {b, star, pairings_from_dagger(b, v, star, d, standard_alpha()), f, d};
}

Report check_tft2d_data(const GradedAlgebraBundle& b, const Matrix& d, const Vec& lambda) {
    Report r = check_graded_bundle(b);
    if (!r.ok("decomposition") || !r.ok("i-central")) return r;
    r.merge(check_ambient_dagger(b, d));
    try {
        ComplexView v = complex_view(b);
        if (lambda.size() != v.a1->dim()) throw StructuralError("lambda needs one value per complex basis vector of A_1");
        StarAlgebra star = star_from_ambient_dagger(v, d);
        TftBundle2D t{b, star, pairings_from_dagger(b, v, star, d, standard_alpha()), {v.a1, lambda}, d};
        r.merge(check_tft2d(t));
    } catch (const std::runtime_error& e) {
        r.fail("complex-structure", e.what());
    }
    return r;
}

std::vector<AlphaSurvivor> alpha_oracle(const std::vector<AlphaFixture>& fixtures) {
    static const Scalar values[4] = {Scalar(1), Scalar(-1), Scalar::I(), -Scalar::I()};
    std::vector<ComplexView> views;
    for (const auto& f : fixtures) views.push_back(complex_view(f.bundle));
    std::vector<AlphaSurvivor> out;
    for (int sgn_ : {1, -1}) {
        std::vector<StarAlgebra> stars;
        for (size_t k = 0; k < fixtures.size(); ++k)
            stars.push_back(star_from_ambient_dagger(views[k], fixtures[k].dagger, sgn_));
        // unit-coefficient tables, scaled per cell below
        std::vector<std::vector<HilbertPairing>> base;
        AlphaTable ones;
        ones.fill(Scalar(1));
        for (size_t k = 0; k < fixtures.size(); ++k)
            base.push_back(pairings_from_dagger(fixtures[k].bundle, views[k], stars[k], fixtures[k].dagger, ones));
        auto with_alpha = [&](size_t k, const AlphaTable& a) {
            std::vector<HilbertPairing> ps = base[k];
            const FermionicGroup& G = fixtures[k].bundle.grading;
            for (int g = 0; g < G.order(); ++g) {
                auto& p = ps[size_t(g)];
                int th = G.theta[size_t(g)];
                for (size_t x = 0; x < p.n.dim(); ++x)
                    for (size_t y = 0; y < p.n.dim(); ++y)
                        p.table[x][y] = scale(p.table[x][y], a[size_t(th * 4 + p.n.parity[x] * 2 + p.n.parity[y])]);
            }
            return ps;
        };
        // per-sector pruning by the Hilbert module and Hermiticity conditions
        std::vector<std::array<Scalar, 4>> sector[2];
        for (int th = 0; th < 2; ++th)
            for (int code = 0; code < 256; ++code) {
                std::array<Scalar, 4> cells;
                for (int c = 0; c < 4; ++c) cells[size_t(c)] = values[(code >> (2 * c)) & 3];
                AlphaTable a = ones;
                for (int c = 0; c < 4; ++c) a[size_t(th * 4 + c)] = cells[size_t(c)];
                bool ok = true;
                for (size_t k = 0; k < fixtures.size() && ok; ++k) {
                    auto ps = with_alpha(k, a);
                    const FermionicGroup& G = fixtures[k].bundle.grading;
                    for (int g = 0; g < G.order() && ok; ++g)
                        if (G.theta[size_t(g)] == th) ok = check_hilbert_pairing(ps[size_t(g)], false).ok();
                }
                if (ok) sector[th].push_back(cells);
            }
        for (const auto& c0 : sector[0])
            for (const auto& c1 : sector[1]) {
                AlphaTable a;
                for (int c = 0; c < 4; ++c) {
                    a[size_t(c)] = c0[size_t(c)];
                    a[size_t(4 + c)] = c1[size_t(c)];
                }
                bool ok = true;
                for (size_t k = 0; k < fixtures.size() && ok; ++k) {
                    auto ps = with_alpha(k, a);
                    Report r;
                    check_mult_unitary(r, fixtures[k].bundle, views[k], ps);
                    ok = r.ok();
                    for (const auto& p : ps) ok = ok && check_hilbert_pairing(p).ok();
                }
                if (ok) out.push_back({a, sgn_});
            }
    }
    return out;
}

// ---- bundle builder ----

namespace {

size_t idx(const BundleSpec& s, int g, size_t k, int imag) { return (size_t(g) * s.base->dim() + k) * 2 + size_t(imag); }

Vec base_vec(const BundleSpec& s, size_t k, int imag) {
    Vec b = unit_vec(s.base->dim(), k);
    return imag ? scale(b, Scalar::I()) : b;
}

Vec twist(const BundleSpec& s, int g, const Vec& b) {
    return s.twist[size_t(g)] * (s.grading.theta[size_t(g)] ? conj(b) : b);
}

}  // namespace

Vec bundle_element(const BundleSpec& s, int g, const Vec& b) {
    const size_t n = s.base->dim();
    Vec out(2 * n * size_t(s.grading.order()));
    for (size_t k = 0; k < n; ++k) {
        out[idx(s, g, k, 0)] = Scalar(b[k].re);
        out[idx(s, g, k, 1)] = Scalar(b[k].im);
    }
    return out;
}

GradedAlgebraBundle build_bundle(const BundleSpec& s) {
    const Superalgebra& B = *s.base;
    const FermionicGroup& G = s.grading;
    const size_t n = B.dim(), N = size_t(G.order()), dim = 2 * n * N;
    std::vector<int> par(dim);
    for (int g = 0; g < G.order(); ++g)
        for (size_t k = 0; k < n; ++k)
            for (int r = 0; r < 2; ++r) par[idx(s, g, k, r)] = B.parity(k) ^ s.parity[size_t(g)];
    Superalgebra A(dim, par, Field::R);
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            int gh = G.mul(g, h);
            for (size_t k = 0; k < n; ++k)
                for (int r = 0; r < 2; ++r)
                    for (size_t l = 0; l < n; ++l)
                        for (int t = 0; t < 2; ++t) {
                            Vec prod = B.mul(B.mul(base_vec(s, k, r), twist(s, g, base_vec(s, l, t))),
                                             s.omega[size_t(g)][size_t(h)]);
                            Vec amb = bundle_element(s, gh, prod);
                            for (size_t m = 0; m < dim; ++m)
                                if (!amb[m].is_zero()) A.set(idx(s, g, k, r), idx(s, h, l, t), m, amb[m]);
                        }
        }
    A.set_unit(bundle_element(s, G.group.unit, B.unit()));
    A.name = s.name;
    GradedAlgebraBundle out;
    out.grading = G;
    out.ambient = share(std::move(A));
    out.components.resize(N);
    for (int g = 0; g < G.order(); ++g)
        for (size_t k = 0; k < n; ++k)
            for (int r = 0; r < 2; ++r) out.components[size_t(g)].push_back(idx(s, g, k, r));
    out.i = bundle_element(s, G.group.unit, scale(B.unit(), Scalar::I()));
    out.parity = bundle_element(s, G.c, s.parity_scalar);
    return out;
}

Matrix bundle_dagger(const BundleSpec& s, const Matrix& base_dagger, const std::vector<Vec>& d) {
    const Superalgebra& B = *s.base;
    const FermionicGroup& G = s.grading;
    const size_t n = B.dim(), dim = 2 * n * size_t(G.order());
    Matrix out(dim, dim);
    // (b x_g)^dagger = d_g twist_{g^-1}(b^dagger) x_{g^-1}
    for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g);
        for (size_t k = 0; k < n; ++k)
            for (int r = 0; r < 2; ++r) {
                Vec bd = apply_antilinear(base_dagger, base_vec(s, k, r));
                Vec img = B.mul(d[size_t(g)], twist(s, gi, bd));
                Vec amb = bundle_element(s, gi, img);
                for (size_t m = 0; m < dim; ++m) out(m, idx(s, g, k, r)) = amb[m];
            }
    }
    return out;
}

namespace {

BundleSpec plain_spec(const FermionicGroup& g, const AlgPtr& base) {
    BundleSpec s;
    s.grading = g;
    s.base = base;
    const size_t N = size_t(g.order());
    s.parity.assign(N, 0);
    s.twist.assign(N, Matrix::identity(base->dim()));
    s.omega.assign(N, std::vector<Vec>(N, base->unit()));
    s.parity_scalar = base->unit();
    return s;
}

BundleFixture finish(BundleSpec s, const Matrix& base_dagger, const std::vector<Vec>& d) {
    BundleFixture f;
    f.bundle = build_bundle(s);
    f.dagger = bundle_dagger(s, base_dagger, d);
    f.lambda = Vec(s.base->dim());
    f.lambda[0] = Scalar(1);
    f.spec = std::move(s);
    return f;
}

Vec unit_scaled(const AlgPtr& b, const Scalar& z) { return scale(b->unit(), z); }

}  // namespace

BundleFixture trivial_theory(const FermionicGroup& g) {
    auto c = share(ground_field(Field::C));
    BundleSpec s = plain_spec(g, c);
    s.name = "trivial-theory";
    return finish(s, Matrix::identity(1), std::vector<Vec>(size_t(g.order()), c->unit()));
}

BundleFixture pin_tft(int p, int square, int dsign, bool clifford_base) {
    FermionicGroup g = pin1_plus();  // index bits: T = 1, c = 2
    AlgPtr base = clifford_base ? share(complex_clifford(1)) : share(ground_field(Field::C));
    BundleSpec s = plain_spec(g, base);
    s.name = std::string("pin-tft") + (clifford_base ? "-cl1" : "");
    std::vector<Vec> d(4);
    for (int x = 0; x < 4; ++x) {
        int bt = x & 1, ac = x >> 1;
        s.parity[size_t(x)] = p * bt;
        if (clifford_base) {
            // x_c e = -e x_c, x_T e = (-1)^{|x_T|} e x_T
            Matrix t = Matrix::identity(2);
            if ((ac + p * bt) & 1) t(1, 1) = Scalar(-1);
            s.twist[size_t(x)] = t;
        }
        for (int y = 0; y < 4; ++y) {
            int bt2 = y & 1, ac2 = y >> 1;
            int sg = ((p * bt * ac2) & 1) ? -1 : 1;
            if (bt && bt2) sg *= square;
            s.omega[size_t(x)][size_t(y)] = unit_scaled(base, Scalar(sg));
        }
        int ds = ((p * ac * bt) & 1) ? -1 : 1;
        if (bt) ds *= dsign;
        d[size_t(x)] = unit_scaled(base, Scalar(ds));
    }
    return finish(s, Matrix::identity(base->dim()), d);
}

BundleFixture pin1_minus_tft(int p) {
    FermionicGroup g = pin1_minus();  // T^k at index k
    auto c = share(ground_field(Field::C));
    BundleSpec s = plain_spec(g, c);
    s.name = "pin1-minus-tft";
    const int u = p ? -1 : 1;
    for (int k = 0; k < 4; ++k) {
        s.parity[size_t(k)] = (p * k) & 1;
        for (int l = 0; l < 4; ++l) s.omega[size_t(k)][size_t(l)] = unit_scaled(c, Scalar(k + l >= 4 ? u : 1));
    }
    s.parity_scalar = p ? unit_scaled(c, Scalar::I()) : c->unit();
    // x_T^dagger = x_T^-1 = u x_T^3, hence (x_T^k)^dagger = u x_T^{-k} for k > 0
    std::vector<Vec> d(4, unit_scaled(c, Scalar(u)));
    d[0] = c->unit();
    return finish(s, Matrix::identity(1), d);
}

BundleFixture spin2_tft(const Scalar& w, bool clifford_base, int loop_order) {
    FermionicGroup g = trivial_fermionic();
    AlgPtr base = clifford_base ? share(complex_clifford(1)) : share(ground_field(Field::C));
    BundleSpec s = plain_spec(g, base);
    s.name = loop_order == 2 ? "su2-tft" : "spin2-tft";
    if (clifford_base) {
        Matrix t = Matrix::identity(2);
        t(1, 1) = Scalar(-1);
        s.twist[size_t(g.c)] = t;
    }
    BundleFixture f = finish(s, Matrix::identity(base->dim()), std::vector<Vec>(2, base->unit()));
    f.bundle.loops.push_back({"gamma", 1, bundle_element(f.spec, g.c, unit_scaled(base, w)), loop_order, {}});
    return f;
}

BundleFixture pin2_minus_tft(const Scalar& w) {
    BundleFixture f = pin1_minus_tft(0);
    f.spec.name = f.bundle.ambient->name;
    f.bundle.loops.push_back(
        {"gamma", 1, bundle_element(f.spec, 2, unit_scaled(f.spec.base, w)), 0, {1, -1, 1, -1}});
    return f;
}

std::vector<std::string> bundle_fixture_names() {
    return {"trivial-theory", "pin-minus-tft", "pin1-minus-tft", "spin2-tft", "su2-tft", "pin2-minus-tft"};
}

}  // namespace ftft

// ---- one dimension ----

namespace ftft {

std::vector<int> TftBundle1D::parity() const {
    std::vector<int> out(size_t(p + q), 0);
    for (int k = 0; k < q; ++k) out[size_t(p + k)] = 1;
    return out;
}

Report check_tft1d(const TftBundle1D& t) {
    Report r;
    const FermionicGroup& H = t.h;
    const size_t n = size_t(t.p + t.q);
    const auto par = t.parity();
    if (t.rep.size() != size_t(H.order()) || t.forms.size() != size_t(H.order()))
        throw StructuralError("one matrix per group element expected");
    for (int x = 0; x < H.order(); ++x) {
        const Matrix& m = H.theta[size_t(x)] ? t.forms[size_t(x)] : t.rep[size_t(x)];
        if (m.rows() != n || m.cols() != n) throw StructuralError("matrix for " + H.label(x) + " has the wrong shape");
    }
    auto witness = [&](int g, int h, size_t v, size_t w) {
        return "g=" + H.label(g) + " h=" + H.label(h) + " v=" + std::to_string(v) + " w=" + std::to_string(w);
    };

    r.check("rep", t.rep[size_t(H.group.unit)].is_identity(), "R(1) != 1");
    for (int a = 0; a < H.order(); ++a) {
        if (H.theta[size_t(a)]) continue;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (par[i] != par[j] && !t.rep[size_t(a)](i, j).is_zero()) r.fail("rep", "R(" + H.label(a) + ") is not even");
        for (int b = 0; b < H.order(); ++b)
            if (!H.theta[size_t(b)] && t.rep[size_t(H.mul(a, b))] != t.rep[size_t(a)] * t.rep[size_t(b)])
                r.fail("rep", H.label(a) + "*" + H.label(b));
    }
    r.pass("rep");

    for (int g = 0; g < H.order(); ++g) {
        if (!H.theta[size_t(g)]) continue;
        const Matrix& f = t.forms[size_t(g)];
        r.check("nondegenerate", rank(f) == n, "form " + H.label(g));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (par[i] != par[j] && !f(i, j).is_zero()) r.fail("parity-orthogonal", H.label(g));
    }
    r.pass("nondegenerate");
    r.pass("parity-orthogonal");

    // cond1: _{gh}<v,w> = _g<R(h)v, w>; cond2: _{hg}<v,w> = _g<v, R(h^-1)w>
    for (int g = 0; g < H.order(); ++g) {
        if (!H.theta[size_t(g)]) continue;
        const Matrix& f = t.forms[size_t(g)];
        for (int h = 0; h < H.order(); ++h) {
            if (H.theta[size_t(h)]) continue;
            Matrix c1 = t.rep[size_t(h)].transpose() * f;
            Matrix c2 = f * t.rep[size_t(H.inv(h))];
            const Matrix& gh = t.forms[size_t(H.mul(g, h))];
            const Matrix& hg = t.forms[size_t(H.mul(h, g))];
            bool one = true, two = true;
            for (size_t v = 0; v < n; ++v)
                for (size_t w = 0; w < n; ++w) {
                    if (one && gh(v, w) != c1(v, w)) {
                        r.fail("cond1", witness(g, h, v, w));
                        one = false;
                    }
                    if (two && hg(v, w) != c2(v, w)) {
                        r.fail("cond2", witness(g, h, v, w));
                        two = false;
                    }
                }
        }
    }
    r.pass("cond1");
    r.pass("cond2");

    bool displayed = true;
    for (int g = 0; g < H.order(); ++g)
        for (int gp = 0; gp < H.order(); ++gp) {
            if (!H.theta[size_t(g)] || !H.theta[size_t(gp)]) continue;
            int ggp = H.mul(g, gp);
            const Matrix& lhs = t.forms[size_t(H.inv(g))];
            const Matrix& f = t.forms[size_t(H.inv(gp))];
            Matrix derived = (f * t.rep[size_t(H.inv(ggp))]).transpose();
            Matrix shown = (f * t.rep[size_t(ggp)]).transpose();
            bool ok = true;
            for (size_t v = 0; v < n; ++v)
                for (size_t w = 0; w < n; ++w) {
                    Scalar s = (par[v] & par[w]) ? Scalar(-1) : Scalar(1);
                    if (ok && lhs(v, w) != s * derived(v, w)) {
                        r.fail("cond3", witness(g, gp, v, w));
                        ok = false;
                    }
                    if (lhs(v, w) != s * shown(v, w)) displayed = false;
                }
        }
    r.pass("cond3");
    r.flags["cond3-displayed"] = displayed;
    return r;
}

TftBundle1D convert_1d(const FermionicGroup& g, const HermitianSpace& hs, const std::vector<Matrix>& rho, int section) {
    Report pre = check_unitary_fermionic_rep(g, hs, rho);
    if (!pre.ok()) throw PreconditionError("not a unitary fermionic representation: " + pre.str());
    if (!g.theta[size_t(section)]) throw PreconditionError("section element must be time-reversing");
    TftBundle1D t;
    t.h = spacetime_group_1d(g).h1;
    t.p = hs.p;
    t.q = hs.q;
    const size_t n = hs.dim();
    const FermionicGroup& H = t.h;
    t.rep.assign(size_t(H.order()), Matrix(n, n));
    t.forms.assign(size_t(H.order()), Matrix(n, n));
    for (int x = 0; x < H.order(); ++x)
        if (!H.theta[size_t(x)]) t.rep[size_t(x)] = rho[size_t(g.inv(x))];
    // <v, rho(s) w> = v^T h conj(M_s) w
    const Matrix base = hs.h * rho[size_t(section)].conj();
    for (int x = 0; x < H.order(); ++x) {
        if (!H.theta[size_t(x)]) continue;
        int h = H.mul(H.inv(section), x);  // x = s h in H
        t.forms[size_t(x)] = t.rep[size_t(h)].transpose() * base;
    }
    return t;
}

std::vector<Matrix> rep_from_1d(const TftBundle1D& t, const FermionicGroup& g, const HermitianSpace& hs) {
    const size_t n = hs.dim();
    auto hinv = inverse(hs.h);
    if (!hinv) throw PreconditionError("hermitian structure is degenerate");
    std::vector<Matrix> rho(size_t(g.order()), Matrix(n, n));
    for (int x = 0; x < g.order(); ++x) {
        if (g.theta[size_t(x)])
            rho[size_t(x)] = (*hinv * t.forms[size_t(x)]).conj();
        else
            rho[size_t(x)] = t.rep[size_t(g.inv(x))];
    }
    return rho;
}

}  // namespace ftft

namespace ftft {

std::vector<Matrix> generate_rep(const FermionicGroup& g, const std::vector<std::pair<int, Matrix>>& gens, size_t n) {
    std::vector<std::optional<Matrix>> rho(size_t(g.order()));
    rho[size_t(g.group.unit)] = Matrix::identity(n);
    for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < g.order(); ++x) {
            if (!rho[size_t(x)]) continue;
            for (const auto& [t, m] : gens) {
                int y = g.mul(t, x);
                if (rho[size_t(y)]) continue;
                rho[size_t(y)] = m * (g.theta[size_t(t)] ? rho[size_t(x)]->conj() : *rho[size_t(x)]);
                grew = true;
            }
        }
    }
    std::vector<Matrix> out;
    for (auto& m : rho) {
        if (!m) throw StructuralError("generators do not generate the group");
        out.push_back(*m);
    }
    return out;
}

namespace {

Matrix diag(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

}  // namespace

std::vector<RepFixture> rep_fixtures() {
    std::vector<RepFixture> out;
    const Scalar i = Scalar::I();
    Matrix j(2, 2);  // quaternionic structure on C^2
    j(0, 1) = Scalar(-1);
    j(1, 0) = Scalar(1);
    {
        auto g = pin1_minus();
        int t = g.index("T");
        out.push_back({"pin1-minus-0|2", g, standard_hermitian(0, 2), generate_rep(g, {{t, j}}, 2), t});
        Matrix r(3, 3);  // real structure on the even line, quaternionic on the odd plane
        r(0, 0) = Scalar(1);
        r(1, 2) = Scalar(-1);
        r(2, 1) = Scalar(1);
        out.push_back({"pin1-minus-1|2", g, standard_hermitian(1, 2), generate_rep(g, {{t, r}}, 3), t});
    }
    {
        auto g = pin1_plus();
        int t = g.index("T"), c = g.c;
        out.push_back({"pin1-plus-0|1", g, standard_hermitian(0, 1), generate_rep(g, {{t, diag({1})}, {c, diag({-1})}}, 1), t});
        out.push_back({"pin1-plus-1|1", g, standard_hermitian(1, 1),
                       generate_rep(g, {{t, diag({1, -1})}, {c, diag({1, -1})}}, 2), t});
        out.push_back({"pin1-plus-1|0-phase", g, standard_hermitian(1, 0), generate_rep(g, {{t, diag({i})}, {c, diag({1})}}, 1), t});
    }
    {
        // i -> sigma_x (+) j, j -> 1 (+) i j: k acts by sigma_x on the even and by i on the odd part
        auto g = quaternion_group();
        Matrix a(4, 4), b(4, 4);
        a(0, 1) = a(1, 0) = Scalar(1);
        b(0, 0) = b(1, 1) = Scalar(1);
        a(2, 3) = Scalar(-1);
        a(3, 2) = Scalar(1);
        b(2, 3) = -i;
        b(3, 2) = i;
        int gi = g.index("i");
        out.push_back({"q8-2|2", g, standard_hermitian(2, 2), generate_rep(g, {{gi, a}, {g.index("j"), b}}, 4), gi});
    }
    {
        auto g = z2c_times_z2(true);
        int t = -1;
        for (int x = 0; x < g.order(); ++x)
            if (g.theta[size_t(x)]) t = x;
        out.push_back({"z2-odd-1|1", g, standard_hermitian(1, 1),
                       generate_rep(g, {{t, Matrix::identity(2)}, {g.c, diag({1, -1})}}, 2), t});
    }
    return out;
}

}  // namespace ftft
