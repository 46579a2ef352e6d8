#include "ftft/superalgebra.hpp"

#include <sstream>

#include "ftft/errors.hpp"

namespace ftft {

Superalgebra::Superalgebra(size_t dim, std::vector<int> parity, Field field)
    : dim_(dim), parity_(std::move(parity)), field_(field), c_(dim * dim * dim), sparse_(dim * dim), unit_(dim) {
    if (parity_.size() != dim) throw StructuralError("parity vector has wrong length");
    for (int p : parity_)
        if (p != 0 && p != 1) throw StructuralError("parity entries must be 0 or 1");
}

void Superalgebra::set(size_t i, size_t j, size_t k, Scalar v) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw StructuralError("structure constant index out of range");
    auto& terms = sparse_[i * dim_ + j];
    for (auto it = terms.begin(); it != terms.end(); ++it)
        if (it->first == k) {
            terms.erase(it);
            break;
        }
    if (!v.is_zero()) {
        auto it = terms.begin();
        while (it != terms.end() && it->first < k) ++it;
        terms.insert(it, {k, v});
    }
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

Vec Superalgebra::basis(size_t i) const {
    Vec v(dim_);
    v[i] = Scalar(1);
    return v;
}

Vec Superalgebra::mul(const Vec& a, const Vec& b) const {
    Vec out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (const auto& [k, v] : product(i, j)) out[k] += ab * v;
        }
    }
    return out;
}

Matrix Superalgebra::left_mult(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            for (const auto& [k, v] : product(i, j)) m(k, j) += a[i] * v;
    }
    return m;
}

Matrix Superalgebra::right_mult(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            for (const auto& [k, v] : product(j, i)) m(k, j) += a[i] * v;
    }
    return m;
}

int Superalgebra::degree(const Vec& a) const {
    int deg = -1;
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        if (deg >= 0 && deg != parity_[i]) return -1;
        deg = parity_[i];
    }
    return deg;
}

size_t Superalgebra::even_dim() const {
    size_t n = 0;
    for (int p : parity_) n += (p == 0);
    return n;
}

std::vector<size_t> Superalgebra::indices_of_parity(int p) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < dim_; ++i)
        if (parity_[i] == p) out.push_back(i);
    return out;
}

std::optional<Vec> Superalgebra::inverse(const Vec& a) const {
    auto x = solve(left_mult(a), unit_);
    if (!x) return std::nullopt;
    if (mul(*x, a) != unit_) return std::nullopt;
    return x;
}

// ---- validation ----

Report check_superalgebra(const Superalgebra& a) {
    Report r;
    const size_t n = a.dim();
    if (a.unit().size() != n) throw StructuralError("unit vector has wrong length");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [k, v] : a.product(i, j))
                if (a.parity(k) != ((a.parity(i) + a.parity(j)) & 1))
                    r.fail("grading", "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) +
                                          "] breaks the grading");
    r.pass("grading");
    if (a.field() == Field::R) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (const auto& [k, v] : a.product(i, j))
                    if (!v.is_real())
                        r.fail("reality", "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                              std::to_string(k) + "] = " + v.str());
        for (const auto& u : a.unit())
            if (!u.is_real()) r.fail("reality", "unit has imaginary part");
    }
    r.pass("reality");
    if (a.degree(a.unit()) == 1) r.fail("unit", "unit is odd");
    for (size_t j = 0; j < n; ++j) {
        Vec e = a.basis(j);
        if (a.mul(a.unit(), e) != e || a.mul(e, a.unit()) != e)
            r.fail("unit", "unit fails on basis vector " + std::to_string(j));
    }
    r.pass("unit");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec eij = a.mul(a.basis(i), a.basis(j));
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = a.mul(eij, a.basis(k));
                Vec rhs = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
                if (lhs != rhs)
                    r.fail("associativity",
                           "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    r.pass("associativity");
    return r;
}

Report check_algebra_hom(const AlgebraHom& f) {
    const Superalgebra& A = *f.source;
    const Superalgebra& B = *f.target;
    if (f.matrix.rows() != B.dim() || f.matrix.cols() != A.dim()) throw StructuralError("hom matrix has wrong shape");
    Report r;
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t k = 0; k < B.dim(); ++k)
            if (!f.matrix(k, i).is_zero() && B.parity(k) != A.parity(i))
                r.fail("even", "basis vector " + std::to_string(i) + " changes parity");
    r.pass("even");
    r.check("unital", f.matrix * A.unit() == B.unit(), "unit not preserved");
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j) {
            Vec lhs = f.matrix * A.mul(A.basis(i), A.basis(j));
            Vec rhs = B.mul(f.matrix.col(i), f.matrix.col(j));
            if (lhs != rhs) r.fail("multiplicative", "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    r.pass("multiplicative");
    return r;
}

bool iso_witness_check(const Superalgebra& a, const Superalgebra& b, const Matrix& m) {
    if (a.dim() != b.dim() || m.rows() != b.dim() || m.cols() != a.dim()) return false;
    AlgebraHom f{share(a), share(b), m};
    return check_algebra_hom(f).ok() && inverse(m).has_value();
}

// ---- constructions ----

Superalgebra opposite(const Superalgebra& a) {
    Superalgebra o(a.dim(), a.parity(), a.field());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.product(j, i)) o.set(i, j, k, (a.parity(i) & a.parity(j)) ? -v : v);
    o.set_unit(a.unit());
    o.name = a.name + "^op";
    return o;
}

Superalgebra conjugate(const Superalgebra& a) {
    if (a.field() != Field::C) throw PreconditionError("conjugate needs a complex algebra");
    Superalgebra o(a.dim(), a.parity(), a.field());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& [k, v] : a.product(i, j)) o.set(i, j, k, v.conj());
    o.set_unit(conj(a.unit()));
    o.name = "conj(" + a.name + ")";
    return o;
}

Superalgebra tensor(const Superalgebra& a, const Superalgebra& b) {
    if (a.field() != b.field()) throw StructuralError("tensor of algebras over different fields");
    const size_t na = a.dim(), nb = b.dim();
    std::vector<int> par(na * nb);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) par[i * nb + j] = (a.parity(i) + b.parity(j)) & 1;
    Superalgebra t(na * nb, par, a.field());
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t k = 0; k < na; ++k)
                for (size_t l = 0; l < nb; ++l) {
                    bool neg = b.parity(j) & a.parity(k);
                    for (const auto& [m, va] : a.product(i, k))
                        for (const auto& [n, vb] : b.product(j, l)) {
                            Scalar v = va * vb;
                            t.add(i * nb + j, k * nb + l, m * nb + n, neg ? -v : v);
                        }
                }
    Vec u(na * nb);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) u[i * nb + j] = a.unit()[i] * b.unit()[j];
    t.set_unit(u);
    t.name = a.name + "(x)" + b.name;
    return t;
}

Superalgebra direct_sum(const Superalgebra& a, const Superalgebra& b) {
    if (a.field() != b.field()) throw StructuralError("direct sum of algebras over different fields");
    const size_t na = a.dim(), nb = b.dim();
    std::vector<int> par = a.parity();
    par.insert(par.end(), b.parity().begin(), b.parity().end());
    Superalgebra s(na + nb, par, a.field());
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j)
            for (const auto& [k, v] : a.product(i, j)) s.set(i, j, k, v);
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (const auto& [k, v] : b.product(i, j)) s.set(na + i, na + j, na + k, v);
    Vec u = a.unit();
    u.insert(u.end(), b.unit().begin(), b.unit().end());
    s.set_unit(u);
    s.name = a.name + "+" + b.name;
    return s;
}

Superalgebra ground_field(Field f) {
    Superalgebra k(1, {0}, f);
    k.set(0, 0, 0, Scalar(1));
    k.set_unit({Scalar(1)});
    k.name = f == Field::C ? "C" : "R";
    return k;
}

Superalgebra clifford(int p, int q, Field f, int bound) {
    if (p < 0 || q < 0) throw StructuralError("negative Clifford signature");
    if (p + q > bound) throw UnsupportedInput("Clifford algebra larger than the configured bound");
    const int n = p + q;
    const size_t dim = size_t(1) << n;
    std::vector<int> par(dim);
    for (size_t s = 0; s < dim; ++s) par[s] = __builtin_popcountll(s) & 1;
    Superalgebra a(dim, par, f);
    for (size_t s = 0; s < dim; ++s)
        for (size_t t = 0; t < dim; ++t) {
            int sign = 0;
            for (int g = 0; g < n; ++g)
                if ((t >> g) & 1) sign += __builtin_popcountll(s >> (g + 1));
            size_t common = s & t;
            for (int g = p; g < n; ++g)
                if ((common >> g) & 1) ++sign;
            a.set(s, t, s ^ t, Scalar((sign & 1) ? -1 : 1));
        }
    Vec u(dim);
    u[0] = Scalar(1);
    a.set_unit(u);
    a.name = (f == Field::C ? "Cl_C(" : "Cl(") + std::to_string(p) + "," + std::to_string(q) + ")";
    return a;
}

Superalgebra complex_clifford(int n, int bound) {
    Superalgebra a = clifford(n, 0, Field::C, bound);
    a.name = "Cl_C(" + std::to_string(n) + ")";
    return a;
}

Superalgebra matrix_superalgebra(int m, int n, Field f) {
    const size_t N = size_t(m + n);
    auto pa = [&](size_t a) { return a >= size_t(m) ? 1 : 0; };
    std::vector<int> par(N * N);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) par[a * N + b] = (pa(a) + pa(b)) & 1;
    Superalgebra s(N * N, par, f);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b)
            for (size_t d = 0; d < N; ++d) s.set(a * N + b, b * N + d, a * N + d, Scalar(1));
    Vec u(N * N);
    for (size_t a = 0; a < N; ++a) u[a * N + a] = Scalar(1);
    s.set_unit(u);
    s.name = "M(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    return s;
}

Superalgebra complex_numbers_real() {
    Superalgebra c(2, {0, 0}, Field::R);
    c.set(0, 0, 0, Scalar(1));
    c.set(0, 1, 1, Scalar(1));
    c.set(1, 0, 1, Scalar(1));
    c.set(1, 1, 0, Scalar(-1));
    c.set_unit({Scalar(1), Scalar()});
    c.name = "C_R";
    return c;
}

Superalgebra quaternions() {
    // basis 1, i, j, k
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    Superalgebra h(4, {0, 0, 0, 0}, Field::R);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) h.set(a, b, idx[a][b], Scalar(sg[a][b]));
    h.set_unit({Scalar(1), Scalar(), Scalar(), Scalar()});
    h.name = "H";
    return h;
}

Superalgebra dual_numbers() {
    Superalgebra d(2, {0, 0}, Field::R);
    d.set(0, 0, 0, Scalar(1));
    d.set(0, 1, 1, Scalar(1));
    d.set(1, 0, 1, Scalar(1));
    d.set_unit({Scalar(1), Scalar()});
    d.name = "Q[x]/x^2";
    return d;
}

AlgebraHom identity_hom(const AlgPtr& a) { return AlgebraHom{a, a, Matrix::identity(a->dim())}; }

AlgebraHom parity_automorphism(const AlgPtr& a) {
    Matrix m(a->dim(), a->dim());
    for (size_t i = 0; i < a->dim(); ++i) m(i, i) = Scalar(a->parity(i) ? -1 : 1);
    return AlgebraHom{a, a, m};
}

Superalgebra parity_extension(const Superalgebra& a) {
    const size_t n = a.dim();
    std::vector<int> par(2 * n);
    for (size_t s = 0; s < 2; ++s)
        for (size_t i = 0; i < n; ++i) par[s * n + i] = a.parity(i);
    Superalgebra e(2 * n, par, a.field());
    for (size_t s = 0; s < 2; ++s)
        for (size_t t = 0; t < 2; ++t)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    bool neg = s & a.parity(j);
                    for (const auto& [k, v] : a.product(i, j)) e.set(s * n + i, t * n + j, ((s + t) % 2) * n + k, neg ? -v : v);
                }
    Vec u(2 * n);
    for (size_t i = 0; i < n; ++i) u[i] = a.unit()[i];
    e.set_unit(u);
    e.name = a.name + "[x]";
    return e;
}

Matrix clifford_map(int p, int q, const Superalgebra& target, const std::vector<Vec>& images) {
    const int n = p + q;
    if (images.size() != size_t(n)) throw StructuralError("need one image per Clifford generator");
    const size_t dim = size_t(1) << n;
    Matrix m(target.dim(), dim);
    for (size_t s = 0; s < dim; ++s) {
        Vec v = target.unit();
        for (int g = 0; g < n; ++g)
            if ((s >> g) & 1) v = target.mul(v, images[g]);
        for (size_t k = 0; k < target.dim(); ++k) m(k, s) = v[k];
    }
    return m;
}

// ---- invariants ----

Matrix trace_form(const Superalgebra& a) {
    const size_t n = a.dim();
    Vec tr(n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) tr[k] += a.c(k, j, j);
    Matrix t(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [k, v] : a.product(i, j)) t(i, j) += v * tr[k];
    return t;
}

bool is_semisimple(const Superalgebra& a) { return rank(trace_form(a)) == a.dim(); }

std::pair<long, long> signature(const Matrix& sym) {
    Matrix m = sym;
    const size_t n = m.rows();
    long pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; ++step) {
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && !m(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all remaining diagonal entries vanish; use an off-diagonal pair
            size_t a = n, b = n;
            for (size_t i = 0; i < n && a == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && !m(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break;
            // congruence: row/col a += row/col b
            for (size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
            for (size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
            piv = a;
        }
        Scalar d = m(piv, piv);
        (sgn(d.re) > 0 ? pos : neg)++;
        done[piv] = true;
        for (size_t i = 0; i < n; ++i) {
            if (done[i] || m(i, piv).is_zero()) continue;
            Scalar f = m(i, piv) / d;
            for (size_t k = 0; k < n; ++k) m(i, k) -= f * m(piv, k);
            for (size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, piv);
        }
    }
    return {pos, neg};
}

std::vector<Vec> center_basis(const Superalgebra& a, bool graded) {
    const size_t n = a.dim();
    std::vector<Vec> out;
    for (int part = 0; part < (graded ? 2 : 1); ++part) {
        // unknown z supported on the chosen parity (or everywhere when ungraded)
        RowSpace eqs(n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec row(n);
                for (size_t i = 0; i < n; ++i) {
                    if (graded && a.parity(i) != part) continue;
                    int s = graded && (part & a.parity(j)) ? -1 : 1;
                    row[i] = a.c(i, j, k) - Scalar(s) * a.c(j, i, k);
                }
                eqs.add(std::move(row));
            }
        if (graded)
            for (size_t i = 0; i < n; ++i)
                if (a.parity(i) != part) {
                    Vec row(n);
                    row[i] = Scalar(1);
                    eqs.add(std::move(row));
                }
        for (auto& v : eqs.kernel()) out.push_back(std::move(v));
    }
    return out;
}

namespace {

Superalgebra even_part(const Superalgebra& a) {
    auto ev = a.indices_of_parity(0);
    std::vector<int> slot(a.dim(), -1);
    for (size_t k = 0; k < ev.size(); ++k) slot[ev[k]] = int(k);
    Superalgebra e(ev.size(), std::vector<int>(ev.size(), 0), a.field());
    for (size_t i = 0; i < ev.size(); ++i)
        for (size_t j = 0; j < ev.size(); ++j)
            for (const auto& [k, v] : a.product(ev[i], ev[j])) e.set(i, j, size_t(slot[k]), v);
    Vec u(ev.size());
    for (size_t k = 0; k < ev.size(); ++k) u[k] = a.unit()[ev[k]];
    e.set_unit(u);
    return e;
}

// Coefficient c with v = c * unit, if any.
std::optional<Scalar> unit_multiple(const Superalgebra& a, const Vec& v) {
    Matrix u = Matrix::from_cols({a.unit()}, a.dim());
    auto x = solve(u, v);
    if (!x) return std::nullopt;
    return (*x)[0];
}

// Real central simple algebra of dimension 4: division iff the square form on
// trace-zero elements is negative definite.
bool quaternion_division(const Superalgebra& a) {
    const size_t n = a.dim();
    Vec tr(n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) tr[k] += a.c(k, j, j);
    Matrix trm = Matrix::from_rows({tr}, n);
    auto t0 = kernel(trm);
    if (t0.size() != 3) return false;
    Matrix b(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Vec s = a.mul(t0[i], t0[j]);
            Vec s2 = a.mul(t0[j], t0[i]);
            for (size_t k = 0; k < n; ++k) s[k] += s2[k];
            auto c = unit_multiple(a, s);
            if (!c) return false;
            b(i, j) = -*c;
        }
    auto [pos, neg] = signature(b);
    return pos == 3 && neg == 0;
}

bool real_division(const Superalgebra& e, std::string& why) {
    if (!is_semisimple(e)) {
        why = "even part not semisimple";
        return false;
    }
    auto z = center_basis(e, false);
    if (z.size() == 1) {
        if (e.dim() == 1) return true;
        if (e.dim() == 4 && quaternion_division(e)) return true;
        why = "even part is central simple but not R or H";
        return false;
    }
    if (z.size() == 2) {
        // a central element independent of 1 satisfies z^2 = alpha z + beta
        Vec w;
        for (const auto& v : z)
            if (!unit_multiple(e, v)) {
                w = v;
                break;
            }
        Matrix m = Matrix::from_cols({w, e.unit()}, e.dim());
        auto coef = solve(m, e.mul(w, w));
        if (!coef) {
            why = "center is not generated by one element";
            return false;
        }
        Scalar disc = (*coef)[0] * (*coef)[0] + Scalar(4) * (*coef)[1];
        if (sgn(disc.re) >= 0) {
            why = "center splits";
            return false;
        }
        if (e.dim() != 2) {
            why = "even part is a matrix algebra over C";
            return false;
        }
        return true;
    }
    why = "center of the even part is not a field";
    return false;
}

std::optional<std::pair<Vec, Vec>> find_zero_divisors(const Superalgebra& a) {
    std::vector<Vec> cand;
    for (size_t i = 0; i < a.dim(); ++i) cand.push_back(a.basis(i));
    for (size_t i = 0; i < a.dim(); ++i) {
        Vec p = a.unit(), m = a.unit();
        p[i] += Scalar(1);
        m[i] -= Scalar(1);
        if (!is_zero(p)) cand.push_back(p);
        if (!is_zero(m)) cand.push_back(m);
    }
    for (const auto& u : cand)
        for (const auto& v : cand)
            if (is_zero(a.mul(u, v))) return std::make_pair(u, v);
    return std::nullopt;
}

}  // namespace

SuperdivisionResult superdivision(const Superalgebra& a) {
    SuperdivisionResult r;
    r.zero_divisors = find_zero_divisors(a);
    Superalgebra e = even_part(a);
    bool even_ok;
    if (a.field() == Field::C) {
        even_ok = e.dim() == 1;
        if (!even_ok) r.reason = "even part has complex dimension > 1";
    } else {
        even_ok = real_division(e, r.reason);
    }
    if (!even_ok) return r;
    auto odd = a.indices_of_parity(1);
    if (odd.empty()) {
        r.superdivision = true;
        return r;
    }
    if (odd.size() != e.dim()) {
        r.reason = "odd part and even part differ in dimension";
        return r;
    }
    if (!a.inverse(a.basis(odd.front()))) {
        r.reason = "an odd basis vector is not invertible";
        return r;
    }
    r.superdivision = true;
    return r;
}

bool is_superdivision(const Superalgebra& a) { return superdivision(a).superdivision; }

AlgebraFingerprint fingerprint(const Superalgebra& a) {
    AlgebraFingerprint f;
    f.even_dim = a.even_dim();
    f.odd_dim = a.odd_dim();
    f.center_dim = center_basis(a, false).size();
    f.supercenter_dim = center_basis(a, true).size();
    Matrix t = trace_form(a);
    f.trace_rank = rank(t);
    f.semisimple = f.trace_rank == a.dim();
    if (a.field() == Field::R) {
        auto [p, n] = signature(t);
        f.sig_pos = p;
        f.sig_neg = n;
        auto ev = a.indices_of_parity(0);
        Matrix te(ev.size(), ev.size());
        for (size_t i = 0; i < ev.size(); ++i)
            for (size_t j = 0; j < ev.size(); ++j) te(i, j) = t(ev[i], ev[j]);
        auto [ep, en] = signature(te);
        f.even_sig_pos = ep;
        f.even_sig_neg = en;
    }
    return f;
}

std::string AlgebraFingerprint::str() const {
    std::ostringstream os;
    os << "dim " << even_dim << "|" << odd_dim << " center " << center_dim << " supercenter " << supercenter_dim
       << " semisimple " << semisimple << " trace-rank " << trace_rank;
    if (sig_pos >= 0)
        os << " signature (" << sig_pos << "," << sig_neg << ") even (" << even_sig_pos << "," << even_sig_neg << ")";
    return os.str();
}

}  // namespace ftft
