#include "ftft/stellar.hpp"

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

Vec add(Vec a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::string pair_note(size_t i, size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

AlgPtr conj_op(const Superalgebra& a) { return share(opposite(conjugate(a))); }

Matrix linear_combination(const std::vector<Matrix>& ms, const Vec& x) {
    Matrix out(ms[0].rows(), ms[0].cols());
    for (size_t h = 0; h < ms.size(); ++h)
        if (!x[h].is_zero()) out = out + ms[h].scaled(x[h]);
    return out;
}

}  // namespace

Vec apply_antilinear(const Matrix& f, const Vec& v) { return f * conj(v); }

Report check_star(const StarAlgebra& s) {
    Report r;
    const Superalgebra& A = *s.alg;
    const size_t n = A.dim();
    if (s.star.rows() != n || s.star.cols() != n) throw StructuralError("star matrix has the wrong shape");
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!s.star(k, j).is_zero() && A.parity(k) != A.parity(j)) r.fail("even", "e_" + std::to_string(j));
    r.pass("even");
    r.check("involutive", (s.star * s.star.conj()).is_identity(), "a** != a");
    r.check("unit", s.apply(A.unit()) == A.unit(), "1* != 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec lhs = s.apply(A.mul(A.basis(i), A.basis(j)));
            Vec rhs = A.mul(s.apply(A.basis(j)), s.apply(A.basis(i)));
            if (A.parity(i) & A.parity(j)) rhs = scale(rhs, Scalar(-1));
            if (lhs != rhs) r.fail("anti-multiplicative", pair_note(i, j));
        }
    r.pass("anti-multiplicative");
    return r;
}

Matrix dagger_from_star(const Superalgebra& a, const Matrix& star) {
    Matrix d = star;
    for (size_t j = 0; j < a.dim(); ++j)
        if (a.parity(j))
            for (size_t k = 0; k < a.dim(); ++k) d(k, j) = d(k, j) * -Scalar::I();
    return d;
}

Matrix star_from_dagger(const Superalgebra& a, const Matrix& dagger) {
    Matrix s = dagger;
    for (size_t j = 0; j < a.dim(); ++j)
        if (a.parity(j))
            for (size_t k = 0; k < a.dim(); ++k) s(k, j) = s(k, j) * Scalar::I();
    return s;
}

Report check_dagger(const Superalgebra& a, const Matrix& dagger) {
    Report r;
    const size_t n = a.dim();
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!dagger(k, j).is_zero() && a.parity(k) != a.parity(j)) r.fail("even", "e_" + std::to_string(j));
    r.pass("even");
    r.check("involutive", (dagger * dagger.conj()).is_identity(), "a^dagger^dagger != a");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec lhs = apply_antilinear(dagger, a.mul(a.basis(i), a.basis(j)));
            Vec rhs = a.mul(apply_antilinear(dagger, a.basis(j)), apply_antilinear(dagger, a.basis(i)));
            if (lhs != rhs) r.fail("anti-multiplicative", pair_note(i, j));
        }
    r.pass("anti-multiplicative");
    return r;
}

StarAlgebra conjugation_star(const AlgPtr& a) { return {a, Matrix::identity(a->dim())}; }

StarAlgebra clifford1_star(int sign_) {
    auto a = share(complex_clifford(1));
    Matrix s = Matrix::identity(2);
    s(1, 1) = sign_ > 0 ? Scalar::I() : -Scalar::I();
    return {a, s};
}

StarAlgebra matrix_adjoint_star(int n) {
    auto a = share(matrix_superalgebra(n, 0, Field::C));
    Matrix s(a->dim(), a->dim());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(size_t(j * n + i), size_t(i * n + j)) = Scalar(1);
    return {a, s};
}

StarAlgebra conjugate_star(const StarAlgebra& s) {
    StarAlgebra c{share(conjugate(*s.alg)), s.star.conj()};
    for (size_t j = 0; j < s.alg->dim(); ++j)
        if (s.alg->parity(j))
            for (size_t k = 0; k < s.alg->dim(); ++k) c.star(k, j) = -c.star(k, j);
    return c;
}

Report check_stellar(const StellarAlgebra& s) {
    Report r;
    const Superalgebra& A = *s.alg;
    if (A.field() != Field::C) throw PreconditionError("stellar structures need a complex algebra");
    r.merge(check_bimodule(s.m), "M-");
    r.check("algebras", same_algebra(*s.m.left, A) && same_algebra(*s.m.right, *conj_op(A)),
            "M is not an (A, conj(A)^op)-bimodule");
    if (!r.ok("algebras")) return r;
    r.check("M-invertible", is_invertible(s.m).has_value(), "M has no inverse");
    if (s.sigma.rows() != s.m.dim() || s.sigma.cols() != s.m.dim()) throw StructuralError("sigma has the wrong shape");
    Bimodule target = opposite_bimodule(conjugate_bimodule(s.m));
    Report mr = check_bimodule_map({s.m, target, s.sigma});
    r.merge(mr, "sigma-");
    r.check("sigma-involutive", (s.sigma.conj() * s.sigma).is_identity(), "conj(sigma)^op sigma != 1");
    return r;
}

StellarAlgebra stellar_from_star(const StarAlgebra& s) {
    AlgPtr cop = conj_op(*s.alg);
    AlgebraHom h{cop, s.alg, s.star};
    StellarAlgebra out{s.alg, induced(h), s.star.conj(), s};
    out.m.name = s.alg->name + "_*";
    return out;
}

StellarAlgebra stellar_complex(const Scalar& a, bool shifted) {
    auto c = share(ground_field(Field::C));
    Bimodule m;
    m.left = c;
    m.right = conj_op(*c);
    m.parity = {shifted ? 1 : 0};
    m.L = {Matrix::identity(1)};
    m.R = {Matrix::identity(1)};
    m.name = shifted ? "PiC" : "C";
    Matrix sigma(1, 1);
    sigma(0, 0) = a;
    return {c, m, sigma};
}

StellarAlgebra conjugate_stellar(const StellarAlgebra& s) {
    StellarAlgebra c;
    c.alg = share(conjugate(*s.alg));
    c.m = conjugate_bimodule(s.m);
    c.m.right = conj_op(*c.alg);
    for (size_t a = 0; a < c.m.R.size(); ++a)
        if (s.m.right->parity(a)) c.m.R[a] = c.m.R[a].scaled(Scalar(-1));
    c.sigma = s.sigma.conj();
    for (size_t j = 0; j < s.m.dim(); ++j)
        if (s.m.parity[j])
            for (size_t k = 0; k < s.m.dim(); ++k) c.sigma(k, j) = -c.sigma(k, j);
    c.m.name = "conj(" + s.m.name + ")x";
    return c;
}

Vec TripleTensor::pure(size_t i, size_t j, size_t k) const {
    return t2.pure(t1.pure(unit_vec(t1.n_dim, i), unit_vec(t1.m_dim, j)), unit_vec(t2.m_dim, k));
}

TripleTensor triple_tensor(const Bimodule& n, const Bimodule& m1) {
    TripleTensor t;
    t.t1 = tensor_over(n, m1);
    t.nbar = opposite_bimodule(conjugate_bimodule(n));
    t.t2 = tensor_over(t.t1.result, t.nbar);
    return t;
}

namespace {

Vec triple_vec(const TripleTensor& t, const Vec& x, const Vec& y, const Vec& z) {
    return t.t2.pure(t.t1.pure(x, y), z);
}

int koszul3(int a, int b, int c) { return (a & b) ^ (a & c) ^ (b & c); }

}  // namespace

Report check_stellar_bimodule(const StellarBimodule& b) {
    Report r;
    r.check("stellar-source", check_stellar(b.s1).ok(), "source stellar algebra invalid");
    r.check("stellar-target", check_stellar(b.s2).ok(), "target stellar algebra invalid");
    r.merge(check_bimodule(b.n), "N-");
    r.check("algebras", same_algebra(*b.n.left, *b.s2.alg) && same_algebra(*b.n.right, *b.s1.alg),
            "N is not an (A2, A1)-bimodule");
    if (!r.ok("algebras")) return r;
    r.check("N-invertible", is_invertible(b.n).has_value(), "N has no inverse");
    TripleTensor t = triple_tensor(b.n, b.s1.m);
    const size_t d2 = b.s2.m.dim();
    if (b.phi.rows() != d2 || b.phi.cols() != t.t2.dim()) throw StructuralError("phi has the wrong shape");
    r.merge(check_bimodule_map({t.t2.result, b.s2.m, b.phi}), "phi-");
    r.check("phi-iso", inverse(b.phi).has_value(), "phi is not invertible");
    const Bimodule& n = b.n;
    const Bimodule& m1 = b.s1.m;
    for (size_t i = 0; i < n.dim(); ++i)
        for (size_t j = 0; j < m1.dim(); ++j)
            for (size_t k = 0; k < n.dim(); ++k) {
                Vec lhs = b.s2.sigma * (b.phi * t.pure(i, j, k));
                Vec rhs(d2);
                for (size_t l = 0; l < m1.dim(); ++l) {
                    const Scalar& s = b.s1.sigma(l, j);
                    if (s.is_zero()) continue;
                    Vec v = conj(b.phi * t.pure(k, l, i));
                    rhs = add(rhs, scale(v, s * sign(koszul3(n.parity[i], m1.parity[l], n.parity[k]))));
                }
                if (lhs != rhs)
                    r.fail("hermiticity", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    r.pass("hermiticity");
    return r;
}

bool check_unitary(const Matrix& psi, const StellarBimodule& src, const StellarBimodule& dst) {
    if (!check_bimodule_map({src.n, dst.n, psi}).ok()) return false;
    TripleTensor ts = triple_tensor(src.n, src.s1.m);
    TripleTensor td = triple_tensor(dst.n, dst.s1.m);
    for (size_t i = 0; i < src.n.dim(); ++i)
        for (size_t j = 0; j < src.s1.m.dim(); ++j)
            for (size_t k = 0; k < src.n.dim(); ++k) {
                Vec lhs = dst.phi * triple_vec(td, psi.col(i), unit_vec(src.s1.m.dim(), j), conj(psi.col(k)));
                if (lhs != src.phi * ts.pure(i, j, k)) return false;
            }
    return true;
}

Vec HilbertPairing::eval(const Vec& x, const Vec& y) const {
    Vec out(b.alg->dim());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out = add(out, scale(table[i][j], x[i] * y[j].conj()));
    }
    return out;
}

Report check_hilbert_pairing(const HilbertPairing& p, bool nondegeneracy) {
    Report r;
    const Superalgebra& B = *p.b.alg;
    const Superalgebra& A = *p.a.alg;
    const Bimodule& N = p.n;
    const size_t n = N.dim();
    if (!same_algebra(*N.left, B) || !same_algebra(*N.right, A)) throw StructuralError("pairing module algebras differ");
    if (p.table.size() != n) throw StructuralError("pairing table has the wrong shape");
    for (const auto& row : p.table) {
        if (row.size() != n) throw StructuralError("pairing table has the wrong shape");
        for (const auto& v : row)
            if (v.size() != B.dim()) throw StructuralError("pairing value has the wrong length");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int d = B.degree(p.table[i][j]);
            if (!is_zero(p.table[i][j]) && d != (N.parity[i] ^ N.parity[j])) r.fail("parity", pair_note(i, j));
        }
    r.pass("parity");
    for (size_t x = 0; x < B.dim(); ++x) {
        Vec bx = B.basis(x), bstar = p.b.apply(bx);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                // <b n_i, n_j> = b <n_i, n_j>
                if (p.eval(N.L[x].col(i), N.basis(j)) != B.mul(bx, p.table[i][j]))
                    r.fail("left-linear", "b=" + std::to_string(x) + " " + pair_note(i, j));
                // <n_i, b n_j> = (-1)^{|b||n_j|} <n_i, n_j> b*
                Vec rhs = B.mul(p.table[i][j], bstar);
                if (B.parity(x) & N.parity[j]) rhs = scale(rhs, Scalar(-1));
                if (p.eval(N.basis(i), N.L[x].col(j)) != rhs)
                    r.fail("right-antilinear", "b=" + std::to_string(x) + " " + pair_note(i, j));
            }
    }
    r.pass("left-linear");
    r.pass("right-antilinear");
    for (size_t x = 0; x < A.dim(); ++x) {
        Vec astar = p.a.apply(A.basis(x));
        Matrix ra = N.right_op(astar);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                // <n_i a, n_j> = (-1)^{|a||n_j|} <n_i, n_j a*>
                Vec rhs = p.eval(N.basis(i), ra.col(j));
                if (A.parity(x) & N.parity[j]) rhs = scale(rhs, Scalar(-1));
                if (p.eval(N.R[x].col(i), N.basis(j)) != rhs)
                    r.fail("adjoint", "a=" + std::to_string(x) + " " + pair_note(i, j));
            }
    }
    r.pass("adjoint");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec rhs = p.table[j][i];
            if (N.parity[i] & N.parity[j]) rhs = scale(rhs, Scalar(-1));
            if (p.b.apply(p.table[i][j]) != rhs) r.fail("hermitian", pair_note(i, j));
        }
    r.pass("hermitian");
    if (!nondegeneracy) return r;
    try {
        StellarBimodule d = datum_from_pairing(p);
        r.check("nondegenerate", inverse(d.phi).has_value(), "induced map is not an isomorphism");
    } catch (const StructuralError& e) {
        r.fail("nondegenerate", e.what());
    }
    return r;
}

StellarBimodule datum_from_pairing(const HilbertPairing& p) {
    StellarBimodule out{stellar_from_star(p.a), stellar_from_star(p.b), p.n, Matrix()};
    TripleTensor t = triple_tensor(p.n, out.s1.m);
    const size_t db = p.b.alg->dim();
    std::vector<Matrix> fk;
    for (size_t k = 0; k < p.n.dim(); ++k)
        fk.push_back(descend(t.t1, db, [&](size_t i, size_t j) { return p.eval(p.n.R[j].col(i), p.n.basis(k)); }));
    out.phi = descend(t.t2, db, [&](size_t q, size_t k) { return fk[k].col(q); });
    return out;
}

HilbertPairing pairing_from_datum(const StellarBimodule& b, const StarAlgebra& s2, const StarAlgebra& s1) {
    StellarAlgebra e1 = stellar_from_star(s1), e2 = stellar_from_star(s2);
    auto same = [](const StellarAlgebra& x, const StellarAlgebra& y) {
        return x.m.parity == y.m.parity && x.m.L == y.m.L && x.m.R == y.m.R && x.sigma == y.sigma;
    };
    if (!same(b.s1, e1) || !same(b.s2, e2))
        throw UnsupportedInput("pairing form needs stellar algebras coming from star structures");
    TripleTensor t = triple_tensor(b.n, b.s1.m);
    HilbertPairing p{s2, s1, b.n, {}};
    const Vec& one = s1.alg->unit();
    p.table.assign(b.n.dim(), std::vector<Vec>(b.n.dim()));
    for (size_t i = 0; i < b.n.dim(); ++i)
        for (size_t k = 0; k < b.n.dim(); ++k)
            p.table[i][k] = b.phi * triple_vec(t, b.n.basis(i), one, b.n.basis(k));
    return p;
}

HilbertPairing regular_pairing(const StarAlgebra& s) {
    const Superalgebra& A = *s.alg;
    HilbertPairing p{s, s, regular_bimodule(s.alg), {}};
    p.table.assign(A.dim(), std::vector<Vec>(A.dim()));
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j) p.table[i][j] = A.mul(A.basis(i), s.apply(A.basis(j)));
    return p;
}

HilbertPairing parity_pairing(const StarAlgebra& s) {
    HilbertPairing p = regular_pairing(s);
    p.n = parity_bimodule(s.alg);
    return p;
}

ComposedPairing compose_pairings(const HilbertPairing& p2, const HilbertPairing& p1) {
    const Bimodule& n2 = p2.n;
    const Bimodule& n1 = p1.n;
    TensorProduct t = tensor_over(n2, n1);
    const size_t rd = t.raw_dim(), dc = p2.b.alg->dim();
    auto raw_form = [&](size_t x, size_t y) {
        size_t i = x / t.m_dim, j = x % t.m_dim, k = y / t.m_dim, l = y % t.m_dim;
        Vec v = p2.eval(n2.right_op(p1.table[j][l]).col(i), n2.basis(k));
        if (n2.parity[k] & n1.parity[l]) v = scale(v, Scalar(-1));
        return v;
    };
    std::vector<std::vector<Vec>> g(rd, std::vector<Vec>(rd));
    for (size_t x = 0; x < rd; ++x)
        for (size_t y = 0; y < rd; ++y) g[x][y] = raw_form(x, y);
    for (const Vec& rel : t.relations)
        for (size_t y = 0; y < rd; ++y) {
            Vec left(dc), right(dc);
            for (size_t x = 0; x < rd; ++x) {
                if (rel[x].is_zero()) continue;
                left = add(left, scale(g[x][y], rel[x]));
                right = add(right, scale(g[y][x], rel[x].conj()));
            }
            if (!is_zero(left) || !is_zero(right)) throw StructuralError("composed pairing is not balanced");
        }
    ComposedPairing out{t, HilbertPairing{p2.b, p1.a, t.result, {}}};
    out.pairing.table.assign(t.dim(), std::vector<Vec>(t.dim()));
    for (size_t q = 0; q < t.dim(); ++q)
        for (size_t q2 = 0; q2 < t.dim(); ++q2) out.pairing.table[q][q2] = g[t.free_cols[q]][t.free_cols[q2]];
    return out;
}

bool is_unitary(const Matrix& psi, const HilbertPairing& src, const HilbertPairing& dst) {
    if (!check_bimodule_map({src.n, dst.n, psi}).ok()) return false;
    for (size_t i = 0; i < src.n.dim(); ++i)
        for (size_t j = 0; j < src.n.dim(); ++j)
            if (dst.eval(psi.col(i), psi.col(j)) != src.table[i][j]) return false;
    return true;
}

HilbertPairing conjugate_pairing(const HilbertPairing& p) {
    HilbertPairing c{conjugate_star(p.b), conjugate_star(p.a), conjugate_bimodule(p.n), p.table};
    for (size_t i = 0; i < p.n.dim(); ++i)
        for (size_t j = 0; j < p.n.dim(); ++j) {
            Vec v = conj(p.table[i][j]);
            c.table[i][j] = p.n.parity[j] ? scale(v, Scalar(-1)) : v;
        }
    return c;
}

namespace {

// r with v = r * u, when v is a multiple of u
std::optional<Scalar> multiple_of(const Vec& v, const Vec& u) {
    std::optional<Scalar> r;
    for (size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) {
            r = v[k] / u[k];
            break;
        }
    if (!r) return std::nullopt;
    if (scale(u, *r) != v) return std::nullopt;
    return r;
}

bool positive_for_parity(const Scalar& r, int parity) {
    if (parity == 0) return r.is_real() && sgn(r.re) > 0;
    return sgn(r.re) == 0 && sgn(r.im) > 0;
}

}  // namespace

bool c_star_positive(const HilbertPairing& p) {
    for (size_t k = 0; k < p.n.dim(); ++k) {
        auto r = multiple_of(p.table[k][k], p.b.alg->unit());
        if (!r || !positive_for_parity(*r, p.n.parity[k])) return false;
    }
    return true;
}

std::string verdict_name(MoritaVerdict v) {
    switch (v) {
        case MoritaVerdict::Witness: return "WITNESS";
        case MoritaVerdict::None: return "NONE";
        case MoritaVerdict::NoneInField: return "NONE-IN-FIELD";
    }
    return "?";
}

namespace {

RowSpace generated_span(const Superalgebra& a, const std::vector<size_t>& gens) {
    RowSpace span(a.dim());
    std::vector<Vec> todo = {a.unit()};
    span.add(a.unit());
    while (!todo.empty()) {
        Vec x = todo.back();
        todo.pop_back();
        for (size_t g : gens) {
            Vec y = a.mul(x, a.basis(g));
            if (span.add(y)) todo.push_back(y);
        }
    }
    return span;
}

}  // namespace

std::vector<AlgebraHom> monomial_isomorphisms(const AlgPtr& a, const AlgPtr& b) {
    std::vector<AlgebraHom> out;
    if (a->dim() != b->dim() || a->even_dim() != b->even_dim()) return out;
    std::vector<size_t> gens;
    for (size_t k = 0; k < a->dim(); ++k)
        if (!generated_span(*a, gens).contains(a->basis(k))) gens.push_back(k);
    std::vector<Scalar> scalars = {Scalar(1), Scalar(-1)};
    if (b->field() == Field::C) {
        scalars.push_back(Scalar::I());
        scalars.push_back(-Scalar::I());
    }
    std::vector<std::vector<Vec>> options;
    size_t total = 1;
    for (size_t g : gens) {
        std::vector<Vec> opts;
        for (size_t t : b->indices_of_parity(a->parity(g)))
            for (const auto& s : scalars) opts.push_back(scale(b->basis(t), s));
        total *= opts.size();
        if (total > 100000) throw UnsupportedInput("automorphism search space too large");
        options.push_back(std::move(opts));
    }
    std::vector<size_t> choice(gens.size(), 0);
    for (size_t iter = 0; iter < total; ++iter) {
        size_t rest = iter;
        for (size_t g = 0; g < gens.size(); ++g) {
            choice[g] = rest % options[g].size();
            rest /= options[g].size();
        }
        std::vector<Vec> xs = {a->unit()}, ys = {b->unit()};
        RowSpace span(a->dim());
        span.add(a->unit());
        for (size_t w = 0; w < xs.size(); ++w)
            for (size_t g = 0; g < gens.size(); ++g) {
                Vec x = a->mul(xs[w], a->basis(gens[g]));
                if (!span.add(x)) continue;
                xs.push_back(x);
                ys.push_back(b->mul(ys[w], options[g][choice[g]]));
            }
        auto m = solve_map(xs, ys, a->dim(), b->dim());
        if (!m || !inverse(*m)) continue;
        AlgebraHom h{a, b, *m};
        if (!check_algebra_hom(h).ok()) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || o.matrix == h.matrix;
        if (!seen) out.push_back(std::move(h));
    }
    return out;
}

std::vector<Matrix> hermitian_data(const StellarAlgebra& s1, const StellarAlgebra& s2, const Bimodule& n) {
    TripleTensor t = triple_tensor(n, s1.m);
    std::vector<Matrix> hs = hom_even(t.t2.result, s2.m);
    if (hs.empty()) return {};
    const size_t nh = hs.size(), d2 = s2.m.dim(), dn = n.dim(), dm = s1.m.dim();
    // phi_h applied to every triple
    std::vector<std::vector<Vec>> img(nh);
    for (size_t h = 0; h < nh; ++h)
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dm; ++j)
                for (size_t k = 0; k < dn; ++k) img[h].push_back(hs[h] * t.pure(i, j, k));
    auto at = [&](size_t h, size_t i, size_t j, size_t k) -> const Vec& { return img[h][(i * dm + j) * dn + k]; };
    RealSystem sys(nh);
    for (size_t i = 0; i < dn; ++i)
        for (size_t j = 0; j < dm; ++j)
            for (size_t k = 0; k < dn; ++k)
                for (size_t r = 0; r < d2; ++r) {
                    Vec lin(nh), anti(nh);
                    for (size_t h = 0; h < nh; ++h) {
                        lin[h] = (s2.sigma * at(h, i, j, k))[r];
                        for (size_t l = 0; l < dm; ++l) {
                            const Scalar& s = s1.sigma(l, j);
                            if (s.is_zero()) continue;
                            anti[h] -= s * sign(koszul3(n.parity[i], s1.m.parity[l], n.parity[k])) *
                                       at(h, k, l, i)[r].conj();
                        }
                    }
                    sys.add(std::move(lin), std::move(anti));
                }
    std::vector<Matrix> out;
    for (const Vec& x : sys.kernel()) out.push_back(linear_combination(hs, x));
    return out;
}

std::optional<std::string> unit_pairing_obstruction(const StarAlgebra& s2, const StarAlgebra& s1, const AlgebraHom& psi) {
    const Superalgebra& A = *s1.alg;
    const Superalgebra& B = *s2.alg;
    std::vector<size_t> even;
    for (size_t j = 0; j < B.dim(); ++j)
        if (!B.parity(j)) even.push_back(j);
    auto constraint = [&](size_t k) {
        Vec pa = psi.matrix * A.basis(k);
        Vec c = s2.apply(psi.matrix * s1.apply(A.basis(k)));
        std::vector<Vec> cols;
        for (size_t j : even) cols.push_back(add(B.mul(pa, B.basis(j)), scale(B.mul(B.basis(j), c), Scalar(-1))));
        return Matrix::from_cols(cols, B.dim());
    };
    std::vector<Matrix> parts;
    for (size_t k = 0; k < A.dim(); ++k) parts.push_back(constraint(k));
    if (even.empty()) return std::string("B has no even part; <1,1> vanishes; degenerate");
    Matrix all(parts.size() * B.dim(), even.size());
    for (size_t k = 0; k < parts.size(); ++k)
        for (size_t r = 0; r < B.dim(); ++r)
            for (size_t c = 0; c < even.size(); ++c) all(k * B.dim() + r, c) = parts[k](r, c);
    if (!kernel(all).empty()) return std::nullopt;
    for (size_t k = 0; k < A.dim(); ++k) {
        if (!kernel(parts[k]).empty()) continue;
        Vec pa = psi.matrix * A.basis(k);
        Vec c = s2.apply(psi.matrix * s1.apply(A.basis(k)));
        std::string e = A.dim() == 2 ? "e" : "e" + std::to_string(k);
        std::string rel = c == scale(pa, Scalar(-1)) ? " = -<1,1>" + e : " = <1,1>" + e + "'";
        return e + "<1,1>" + rel + " forces <1,1> odd; even pairing vanishes; degenerate";
    }
    return std::string("no even <1,1> satisfies the adjoint relation; degenerate");
}

MoritaSearchResult morita_search_stellar(const StellarAlgebra& s1, const StellarAlgebra& s2, size_t bound,
                                         const std::vector<Bimodule>& extra) {
    if (s1.alg->dim() > bound || s2.alg->dim() > bound)
        throw UnsupportedInput("algebra dimension exceeds the search bound " + std::to_string(bound));
    MoritaSearchResult res;
    std::vector<Bimodule> cands;
    for (const auto& psi : monomial_isomorphisms(s1.alg, s2.alg)) {
        Bimodule n = induced(psi);
        cands.push_back(n);
        cands.push_back(parity_shift(n));
    }
    cands.insert(cands.end(), extra.begin(), extra.end());
    bool undetermined = false;
    for (const Bimodule& n : cands) {
        ++res.candidates;
        if (!same_algebra(*n.left, *s2.alg) || !same_algebra(*n.right, *s1.alg) || !is_invertible(n)) {
            res.notes.push_back(n.name + ": not an invertible (A2, A1)-bimodule");
            continue;
        }
        std::vector<Matrix> sols = hermitian_data(s1, s2, n);
        if (sols.empty()) continue;
        // invertibility is Zariski open, so a few integer combinations find an invertible solution
        std::vector<Matrix> tries = sols;
        for (long t = 0; t < 4; ++t) {
            Vec x(sols.size());
            for (size_t h = 0; h < sols.size(); ++h) {
                long c = 1;
                for (long e = 0; e < t; ++e) c *= long(h + 2);
                x[h] = Scalar(c);
            }
            tries.push_back(linear_combination(sols, x));
        }
        for (const Matrix& phi : tries) {
            if (!inverse(phi)) continue;
            StellarBimodule w{s1, s2, n, phi};
            if (!check_stellar_bimodule(w).ok()) continue;
            res.verdict = MoritaVerdict::Witness;
            res.witness = std::move(w);
            return res;
        }
        undetermined = true;
        res.notes.push_back(n.name + ": Hermitian solutions found but none invertible among tried combinations");
    }
    res.verdict = undetermined ? MoritaVerdict::NoneInField : MoritaVerdict::None;
    if (res.verdict == MoritaVerdict::None && s1.star && s2.star)
        for (const auto& psi : monomial_isomorphisms(s1.alg, s2.alg))
            if (auto why = unit_pairing_obstruction(*s2.star, *s1.star, psi);
                why && std::find(res.notes.begin(), res.notes.end(), *why) == res.notes.end())
                res.notes.push_back(*why);
    return res;
}

std::vector<int> HermitianSpace::parity() const {
    std::vector<int> p(dim(), 0);
    for (int k = 0; k < q; ++k) p[size_t(this->p + k)] = 1;
    return p;
}

Report check_hermitian_space(const HermitianSpace& h) {
    Report r;
    const size_t n = h.dim();
    if (h.h.rows() != n || h.h.cols() != n) throw StructuralError("hermitian form has the wrong shape");
    auto par = h.parity();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (par[i] != par[j] && !h.h(i, j).is_zero()) r.fail("parity-orthogonal", pair_note(i, j));
            Scalar rhs = h.h(j, i).conj();
            if (par[i] & par[j]) rhs = -rhs;
            if (h.h(i, j) != rhs) r.fail("graded-hermitian", pair_note(i, j));
        }
    r.pass("parity-orthogonal");
    r.pass("graded-hermitian");
    r.check("nondegenerate", inverse(h.h).has_value(), "form is degenerate");
    return r;
}

HermitianSpace standard_hermitian(int p, int q) {
    HermitianSpace h{p, q, Matrix::identity(size_t(p + q))};
    for (int k = 0; k < q; ++k) h.h(size_t(p + k), size_t(p + k)) = Scalar::I();
    return h;
}

Report check_unitary_fermionic_rep(const FermionicGroup& g, const HermitianSpace& h, const std::vector<Matrix>& rho) {
    Report r;
    const size_t n = h.dim();
    if (rho.size() != size_t(g.order())) throw StructuralError("one matrix per group element expected");
    for (const auto& m : rho)
        if (m.rows() != n || m.cols() != n) throw StructuralError("representation matrix has the wrong shape");
    auto par = h.parity();
    Matrix grading = Matrix::identity(n);
    for (size_t i = 0; i < n; ++i)
        if (par[i]) grading(i, i) = Scalar(-1);
    for (int x = 0; x < g.order(); ++x)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (par[i] != par[j] && !rho[size_t(x)](i, j).is_zero()) r.fail("even", g.label(x));
    r.pass("even");
    r.check("unit", rho[size_t(g.group.unit)].is_identity(), "rho(1) != 1");
    r.check("grading", rho[size_t(g.c)] == grading, "rho(c) is not the grading operator");
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            const Matrix& ry = rho[size_t(y)];
            Matrix prod = rho[size_t(x)] * (g.theta[size_t(x)] ? ry.conj() : ry);
            if (prod != rho[size_t(g.mul(x, y))]) r.fail("multiplicative", g.label(x) + "*" + g.label(y));
        }
    r.pass("multiplicative");
    Matrix twisted = h.h.conj() * grading;
    for (int x = 0; x < g.order(); ++x) {
        const Matrix& m = rho[size_t(x)];
        Matrix pulled = m.transpose() * h.h * m.conj();
        if (g.theta[size_t(x)] == 0) {
            if (pulled != h.h) r.fail("unitary", g.label(x));
        } else if (pulled != twisted) {
            r.fail("anti-unitary", g.label(x));
        }
    }
    r.pass("unitary");
    r.pass("anti-unitary");
    return r;
}

std::optional<std::string> fermionic_rep_obstruction(const FermionicGroup& g, int p, int q) {
    (void)p;
    for (int x = 0; x < g.order(); ++x) {
        if (!g.theta[size_t(x)] || g.mul(x, x) != g.c) continue;
        // R conj(R) = -1 on the odd part forces |det R|^2 = (-1)^q
        if (q % 2)
            return "antilinear " + g.label(x) + " squares to c, so the odd part needs a quaternionic structure "
                   "and even dimension";
    }
    return std::nullopt;
}

bool c_star_positive(const HermitianSpace& h) {
    auto par = h.parity();
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = 0; j < h.dim(); ++j)
            if (i != j && !h.h(i, j).is_zero()) return false;
    for (size_t i = 0; i < h.dim(); ++i)
        if (!positive_for_parity(h.h(i, i), par[i])) return false;
    return true;
}

}  // namespace ftft
