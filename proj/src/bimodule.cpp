#include "ftft/bimodule.hpp"

#include "ftft/errors.hpp"

namespace ftft {

namespace {

Scalar sgn(int k) { return sign(k); }

Vec outer(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

Vec unit_vec(size_t n, size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

void require_same(const Superalgebra& a, const Superalgebra& b, const char* what) {
    if (!same_algebra(a, b)) throw StructuralError(std::string("algebra mismatch: ") + what);
}

}  // namespace

bool same_algebra(const Superalgebra& a, const Superalgebra& b) {
    if (&a == &b) return true;
    if (a.dim() != b.dim() || a.field() != b.field() || a.parity() != b.parity() || a.unit() != b.unit()) return false;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            if (a.product(i, j) != b.product(i, j)) return false;
    return true;
}

Vec Bimodule::basis(size_t i) const { return unit_vec(dim(), i); }

Matrix Bimodule::left_op(const Vec& b) const {
    Matrix m(dim(), dim());
    for (size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) m = m + L[i].scaled(b[i]);
    return m;
}

Matrix Bimodule::right_op(const Vec& a) const {
    Matrix m(dim(), dim());
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) m = m + R[i].scaled(a[i]);
    return m;
}

int Bimodule::degree(const Vec& v) const {
    int deg = -1;
    for (size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        if (deg >= 0 && deg != parity[i]) return -1;
        deg = parity[i];
    }
    return deg;
}

Report check_bimodule(const Bimodule& m) {
    const Superalgebra& B = *m.left;
    const Superalgebra& A = *m.right;
    const size_t n = m.dim();
    if (m.L.size() != B.dim() || m.R.size() != A.dim()) throw StructuralError("action tensor has wrong length");
    for (const auto& x : m.L)
        if (x.rows() != n || x.cols() != n) throw StructuralError("left action matrix has wrong shape");
    for (const auto& x : m.R)
        if (x.rows() != n || x.cols() != n) throw StructuralError("right action matrix has wrong shape");
    Report r;
    for (size_t b = 0; b < B.dim(); ++b)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m.L[b](i, j).is_zero() && m.parity[i] != ((m.parity[j] + B.parity(b)) & 1))
                    r.fail("grading", "left action by basis " + std::to_string(b));
    for (size_t a = 0; a < A.dim(); ++a)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m.R[a](i, j).is_zero() && m.parity[i] != ((m.parity[j] + A.parity(a)) & 1))
                    r.fail("grading", "right action by basis " + std::to_string(a));
    r.pass("grading");
    r.check("unit", m.left_op(B.unit()).is_identity(), "left unit does not act as identity");
    r.check("unit", m.right_op(A.unit()).is_identity(), "right unit does not act as identity");
    for (size_t b1 = 0; b1 < B.dim(); ++b1)
        for (size_t b2 = 0; b2 < B.dim(); ++b2)
            if (m.L[b1] * m.L[b2] != m.left_op(B.mul(B.basis(b1), B.basis(b2))))
                r.fail("left-associative", "(" + std::to_string(b1) + "," + std::to_string(b2) + ")");
    r.pass("left-associative");
    for (size_t a1 = 0; a1 < A.dim(); ++a1)
        for (size_t a2 = 0; a2 < A.dim(); ++a2)
            if (m.R[a2] * m.R[a1] != m.right_op(A.mul(A.basis(a1), A.basis(a2))))
                r.fail("right-associative", "(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
    r.pass("right-associative");
    for (size_t b = 0; b < B.dim(); ++b)
        for (size_t a = 0; a < A.dim(); ++a)
            if (m.L[b] * m.R[a] != m.R[a] * m.L[b])
                r.fail("commute", "left " + std::to_string(b) + " and right " + std::to_string(a));
    r.pass("commute");
    return r;
}

Report check_bimodule_map(const BimoduleMap& f) {
    Report r;
    const Bimodule& s = f.source;
    const Bimodule& t = f.target;
    if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) throw StructuralError("map matrix has wrong shape");
    if (!same_algebra(*s.left, *t.left) || !same_algebra(*s.right, *t.right)) {
        r.fail("algebras", "source and target live over different algebras");
        return r;
    }
    r.pass("algebras");
    for (size_t i = 0; i < t.dim(); ++i)
        for (size_t j = 0; j < s.dim(); ++j)
            if (!f.matrix(i, j).is_zero() && t.parity[i] != s.parity[j])
                r.fail("even", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") changes parity");
    r.pass("even");
    for (size_t b = 0; b < s.L.size(); ++b)
        if (f.matrix * s.L[b] != t.L[b] * f.matrix) r.fail("left-linear", "left basis " + std::to_string(b));
    r.pass("left-linear");
    for (size_t a = 0; a < s.R.size(); ++a)
        if (f.matrix * s.R[a] != t.R[a] * f.matrix) r.fail("right-linear", "right basis " + std::to_string(a));
    r.pass("right-linear");
    return r;
}

bool is_bimodule_iso(const BimoduleMap& f) { return check_bimodule_map(f).ok() && inverse(f.matrix).has_value(); }

// ---- relative tensor product ----

Vec TensorProduct::pure(const Vec& n, const Vec& m) const { return project(outer(n, m)); }

Vec TensorProduct::lift(const Vec& q) const {
    Vec v(raw_dim());
    for (size_t k = 0; k < free_cols.size(); ++k) v[free_cols[k]] = q[k];
    return v;
}

TensorProduct tensor_over(const Bimodule& n, const Bimodule& m) {
    require_same(*n.right, *m.left, "tensor_over middle algebra");
    const Superalgebra& B = *m.left;
    TensorProduct t;
    t.n_dim = n.dim();
    t.m_dim = m.dim();
    const size_t raw = t.raw_dim();
    RowSpace rel(raw);
    for (size_t k = 0; k < B.dim(); ++k)
        for (size_t i = 0; i < n.dim(); ++i) {
            Vec nb = n.R[k].col(i);
            for (size_t j = 0; j < m.dim(); ++j) {
                Vec v = outer(nb, unit_vec(m.dim(), j));
                Vec bm = outer(unit_vec(n.dim(), i), m.L[k].col(j));
                for (size_t c = 0; c < raw; ++c) v[c] -= bm[c];
                rel.add(std::move(v));
            }
        }
    t.relations = rel.rows();
    std::vector<int> slot(raw, -1);
    std::vector<bool> is_piv(raw, false);
    for (size_t p : rel.pivots()) is_piv[p] = true;
    for (size_t c = 0; c < raw; ++c)
        if (!is_piv[c]) {
            slot[c] = int(t.free_cols.size());
            t.free_cols.push_back(c);
        }
    t.proj = Matrix(t.free_cols.size(), raw);
    for (size_t q = 0; q < t.free_cols.size(); ++q) t.proj(q, t.free_cols[q]) = Scalar(1);
    for (size_t k = 0; k < rel.rank(); ++k) {
        size_t p = rel.pivots()[k];
        for (size_t q = 0; q < t.free_cols.size(); ++q) t.proj(q, p) = -rel.rows()[k][t.free_cols[q]];
    }

    Bimodule& r = t.result;
    r.left = n.left;
    r.right = m.right;
    r.name = n.name + "(x)" + m.name;
    for (size_t c : t.free_cols) r.parity.push_back((n.parity[c / t.m_dim] + m.parity[c % t.m_dim]) & 1);
    const size_t d = t.free_cols.size();
    for (size_t b = 0; b < n.L.size(); ++b) {
        Matrix x(d, d);
        for (size_t q = 0; q < d; ++q) {
            size_t i = t.free_cols[q] / t.m_dim, j = t.free_cols[q] % t.m_dim;
            Vec v = t.pure(n.L[b].col(i), unit_vec(m.dim(), j));
            for (size_t k = 0; k < d; ++k) x(k, q) = v[k];
        }
        r.L.push_back(std::move(x));
    }
    for (size_t a = 0; a < m.R.size(); ++a) {
        Matrix x(d, d);
        for (size_t q = 0; q < d; ++q) {
            size_t i = t.free_cols[q] / t.m_dim, j = t.free_cols[q] % t.m_dim;
            Vec v = t.pure(unit_vec(n.dim(), i), m.R[a].col(j));
            for (size_t k = 0; k < d; ++k) x(k, q) = v[k];
        }
        r.R.push_back(std::move(x));
    }
    return t;
}

Matrix descend(const TensorProduct& src, size_t out_dim, const std::function<Vec(size_t, size_t)>& raw_image) {
    std::vector<Vec> img(src.raw_dim());
    for (size_t i = 0; i < src.n_dim; ++i)
        for (size_t j = 0; j < src.m_dim; ++j) {
            img[src.raw(i, j)] = raw_image(i, j);
            if (img[src.raw(i, j)].size() != out_dim) throw StructuralError("raw image has wrong length");
        }
    for (const auto& rel : src.relations) {
        Vec acc(out_dim);
        for (size_t c = 0; c < rel.size(); ++c)
            if (!rel[c].is_zero())
                for (size_t k = 0; k < out_dim; ++k) acc[k] += rel[c] * img[c][k];
        if (!is_zero(acc)) throw StructuralError("map is not balanced over the middle algebra");
    }
    Matrix out(out_dim, src.dim());
    for (size_t q = 0; q < src.dim(); ++q)
        for (size_t k = 0; k < out_dim; ++k) out(k, q) = img[src.free_cols[q]][k];
    return out;
}

Matrix tensor_maps(const Matrix& f, const Matrix& g, const TensorProduct& src, const TensorProduct& dst) {
    if (f.cols() != src.n_dim || g.cols() != src.m_dim || f.rows() != dst.n_dim || g.rows() != dst.m_dim)
        throw StructuralError("tensor_maps: shapes do not match the tensor products");
    return descend(src, dst.dim(), [&](size_t i, size_t j) { return dst.pure(f.col(i), g.col(j)); });
}

std::vector<Matrix> hom_even(const Bimodule& m, const Bimodule& n) {
    require_same(*m.left, *n.left, "hom_even left algebra");
    require_same(*m.right, *n.right, "hom_even right algebra");
    const size_t rows = n.dim(), cols = m.dim();
    std::vector<int> var(rows * cols, -1);
    std::vector<std::pair<size_t, size_t>> vars;
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (n.parity[r] == m.parity[c]) {
                var[r * cols + c] = int(vars.size());
                vars.push_back({r, c});
            }
    RowSpace eqs(vars.size());
    auto add_eqs = [&](const Matrix& sm, const Matrix& tm) {
        // X sm - tm X = 0
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) {
                Vec row(vars.size());
                bool any = false;
                for (size_t k = 0; k < cols; ++k)
                    if (var[r * cols + k] >= 0 && !sm(k, c).is_zero()) {
                        row[var[r * cols + k]] += sm(k, c);
                        any = true;
                    }
                for (size_t k = 0; k < rows; ++k)
                    if (var[k * cols + c] >= 0 && !tm(r, k).is_zero()) {
                        row[var[k * cols + c]] -= tm(r, k);
                        any = true;
                    }
                if (any) eqs.add(std::move(row));
            }
    };
    for (size_t b = 0; b < m.L.size(); ++b) add_eqs(m.L[b], n.L[b]);
    for (size_t a = 0; a < m.R.size(); ++a) add_eqs(m.R[a], n.R[a]);
    std::vector<Matrix> out;
    for (const auto& v : eqs.kernel()) {
        Matrix x(rows, cols);
        for (size_t k = 0; k < vars.size(); ++k) x(vars[k].first, vars[k].second) = v[k];
        out.push_back(std::move(x));
    }
    return out;
}

// ---- constructions ----

Bimodule regular_bimodule(const AlgPtr& a) {
    Bimodule m;
    m.left = m.right = a;
    m.parity = a->parity();
    for (size_t i = 0; i < a->dim(); ++i) {
        m.L.push_back(a->left_mult(a->basis(i)));
        m.R.push_back(a->right_mult(a->basis(i)));
    }
    m.name = a->name;
    return m;
}

Bimodule induced(const AlgebraHom& phi) {
    Bimodule m;
    m.left = phi.target;
    m.right = phi.source;
    const Superalgebra& B = *phi.target;
    m.parity = B.parity();
    for (size_t i = 0; i < B.dim(); ++i) m.L.push_back(B.left_mult(B.basis(i)));
    for (size_t a = 0; a < phi.source->dim(); ++a) m.R.push_back(B.right_mult(phi.matrix.col(a)));
    m.name = B.name + "_phi";
    return m;
}

Bimodule parity_bimodule(const AlgPtr& a) {
    Bimodule m = induced(parity_automorphism(a));
    m.name = a->name + "_(-1)^F";
    return m;
}

Bimodule parity_shift(const Bimodule& m) {
    Bimodule p = m;
    for (auto& x : p.parity) x ^= 1;
    for (size_t b = 0; b < p.L.size(); ++b)
        if (m.left->parity(b)) p.L[b] = p.L[b].scaled(Scalar(-1));
    p.name = "Pi" + m.name;
    return p;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    require_same(*a.left, *b.left, "direct sum left algebra");
    require_same(*a.right, *b.right, "direct sum right algebra");
    Bimodule s;
    s.left = a.left;
    s.right = a.right;
    s.parity = a.parity;
    s.parity.insert(s.parity.end(), b.parity.begin(), b.parity.end());
    const size_t na = a.dim(), n = a.dim() + b.dim();
    auto block = [&](const Matrix& x, const Matrix& y) {
        Matrix z(n, n);
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < na; ++j) z(i, j) = x(i, j);
        for (size_t i = 0; i < b.dim(); ++i)
            for (size_t j = 0; j < b.dim(); ++j) z(na + i, na + j) = y(i, j);
        return z;
    };
    for (size_t k = 0; k < a.L.size(); ++k) s.L.push_back(block(a.L[k], b.L[k]));
    for (size_t k = 0; k < a.R.size(); ++k) s.R.push_back(block(a.R[k], b.R[k]));
    s.name = a.name + "+" + b.name;
    return s;
}

Bimodule change_basis(const Bimodule& m, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv) throw PreconditionError("change of basis is not invertible");
    Bimodule out = m;
    for (size_t k = 0; k < p.cols(); ++k) {
        int d = m.degree(p.col(k));
        if (d < 0) throw PreconditionError("change of basis column is not homogeneous");
        out.parity[k] = d;
    }
    for (auto& x : out.L) x = *pinv * x * p;
    for (auto& x : out.R) x = *pinv * x * p;
    return out;
}

Bimodule opposite_bimodule(const Bimodule& m) {
    Bimodule o;
    o.left = share(opposite(*m.right));
    o.right = share(opposite(*m.left));
    o.parity = m.parity;
    const size_t n = m.dim();
    for (size_t a = 0; a < m.R.size(); ++a) {
        Matrix x = m.R[a];
        for (size_t j = 0; j < n; ++j)
            if (m.right->parity(a) & m.parity[j])
                for (size_t i = 0; i < n; ++i) x(i, j) = -x(i, j);
        o.L.push_back(std::move(x));
    }
    for (size_t b = 0; b < m.L.size(); ++b) {
        Matrix x = m.L[b];
        for (size_t j = 0; j < n; ++j)
            if (m.left->parity(b) & m.parity[j])
                for (size_t i = 0; i < n; ++i) x(i, j) = -x(i, j);
        o.R.push_back(std::move(x));
    }
    o.name = m.name + "^op";
    return o;
}

Bimodule conjugate_bimodule(const Bimodule& m) {
    if (m.left->field() != Field::C) throw PreconditionError("conjugate needs complex algebras");
    Bimodule c;
    c.left = share(conjugate(*m.left));
    c.right = share(conjugate(*m.right));
    c.parity = m.parity;
    for (const auto& x : m.L) c.L.push_back(x.conj());
    for (const auto& x : m.R) c.R.push_back(x.conj());
    c.name = "conj(" + m.name + ")";
    return c;
}

Bimodule external_tensor(const Bimodule& m1, const Bimodule& m2) {
    Bimodule t;
    t.left = share(tensor(*m1.left, *m2.left));
    t.right = share(tensor(*m1.right, *m2.right));
    const size_t d1 = m1.dim(), d2 = m2.dim(), n = d1 * d2;
    for (size_t i = 0; i < d1; ++i)
        for (size_t j = 0; j < d2; ++j) t.parity.push_back((m1.parity[i] + m2.parity[j]) & 1);
    // (b1 (x) b2)(x1 (x) x2) = (-1)^{|b2||x1|} b1 x1 (x) b2 x2
    for (size_t b1 = 0; b1 < m1.L.size(); ++b1)
        for (size_t b2 = 0; b2 < m2.L.size(); ++b2) {
            Matrix x(n, n);
            int pb2 = m2.left->parity(b2);
            for (size_t i = 0; i < d1; ++i)
                for (size_t j = 0; j < d2; ++j) {
                    Scalar s = sgn(pb2 & m1.parity[i]);
                    for (size_t k = 0; k < d1; ++k) {
                        if (m1.L[b1](k, i).is_zero()) continue;
                        for (size_t l = 0; l < d2; ++l)
                            if (!m2.L[b2](l, j).is_zero()) x(k * d2 + l, i * d2 + j) += s * m1.L[b1](k, i) * m2.L[b2](l, j);
                    }
                }
            t.L.push_back(std::move(x));
        }
    // (x1 (x) x2)(a1 (x) a2) = (-1)^{|x2||a1|} x1 a1 (x) x2 a2
    for (size_t a1 = 0; a1 < m1.R.size(); ++a1)
        for (size_t a2 = 0; a2 < m2.R.size(); ++a2) {
            Matrix x(n, n);
            int pa1 = m1.right->parity(a1);
            for (size_t i = 0; i < d1; ++i)
                for (size_t j = 0; j < d2; ++j) {
                    Scalar s = sgn(pa1 & m2.parity[j]);
                    for (size_t k = 0; k < d1; ++k) {
                        if (m1.R[a1](k, i).is_zero()) continue;
                        for (size_t l = 0; l < d2; ++l)
                            if (!m2.R[a2](l, j).is_zero()) x(k * d2 + l, i * d2 + j) += s * m1.R[a1](k, i) * m2.R[a2](l, j);
                    }
                }
            t.R.push_back(std::move(x));
        }
    t.name = m1.name + "[x]" + m2.name;
    return t;
}

Bimodule ev_bimodule(const AlgPtr& a, bool op_first) {
    const Superalgebra& A = *a;
    Superalgebra aop = opposite(A);
    Bimodule m;
    m.left = share(ground_field(A.field()));
    m.right = share(op_first ? tensor(aop, A) : tensor(A, aop));
    m.parity = A.parity();
    m.L.push_back(Matrix::identity(A.dim()));
    const size_t n = A.dim();
    for (size_t a1 = 0; a1 < n; ++a1)
        for (size_t a2 = 0; a2 < n; ++a2) {
            Matrix x(n, n);
            for (size_t j = 0; j < n; ++j) {
                Vec v;
                int s;
                if (op_first) {
                    // x . (a1^op (x) a2) = (-1)^{|a1||x|} a1 x a2
                    v = A.mul(A.mul(A.basis(a1), A.basis(j)), A.basis(a2));
                    s = A.parity(a1) & A.parity(j);
                } else {
                    // x . (a1 (x) a2^op) = (-1)^{|a2|(|x|+|a1|)} a2 x a1
                    v = A.mul(A.mul(A.basis(a2), A.basis(j)), A.basis(a1));
                    s = A.parity(a2) & (A.parity(j) ^ A.parity(a1));
                }
                for (size_t i = 0; i < n; ++i) x(i, j) = s ? -v[i] : v[i];
            }
            m.R.push_back(std::move(x));
        }
    m.name = "ev(" + A.name + ")";
    return m;
}

Bimodule serre(const AlgPtr& a) {
    const Superalgebra& A = *a;
    const size_t n = A.dim();
    Bimodule m;
    m.left = m.right = a;
    m.parity = A.parity();
    for (size_t a1 = 0; a1 < n; ++a1) {
        Matrix l(n, n), r(n, n);
        for (size_t t = 0; t < n; ++t)
            for (size_t s = 0; s < n; ++s) {
                Scalar cl = A.c(s, a1, t);
                if (!cl.is_zero()) l(s, t) = (A.parity(a1) & (A.parity(t) ^ A.parity(s))) ? -cl : cl;
                r(s, t) = A.c(a1, s, t);
            }
        m.L.push_back(std::move(l));
        m.R.push_back(std::move(r));
    }
    m.name = A.name + "*";
    return m;
}

std::optional<Matrix> solve_map(const std::vector<Vec>& in, const std::vector<Vec>& out, size_t in_dim,
                                size_t out_dim) {
    if (in.size() != out.size()) throw StructuralError("solve_map: input and output counts differ");
    Matrix a = Matrix::from_cols(in, in_dim);
    if (rank(a) != in_dim) return std::nullopt;
    Matrix at = a.transpose();
    Matrix x(out_dim, in_dim);
    for (size_t r = 0; r < out_dim; ++r) {
        Vec rhs(in.size());
        for (size_t k = 0; k < in.size(); ++k) rhs[k] = out[k][r];
        auto sol = solve(at, rhs);
        if (!sol) return std::nullopt;
        for (size_t c = 0; c < in_dim; ++c) x(r, c) = (*sol)[c];
    }
    return x;
}

// ---- adjoints ----

Adjunction right_adjoint(const Bimodule& m) {
    const Superalgebra& A = *m.left;
    const Superalgebra& B = *m.right;
    const size_t na = A.dim(), nm = m.dim();
    const size_t nv = na * nm;  // F(r, c) at r * nm + c
    Adjunction adj;
    adj.m = m;
    std::vector<int> map_parity;
    std::vector<size_t> keys;
    for (int p = 0; p < 2; ++p) {
        RowSpace eqs(nv);
        for (size_t r = 0; r < na; ++r)
            for (size_t c = 0; c < nm; ++c)
                if (A.parity(r) != ((m.parity[c] + p) & 1)) eqs.add(unit_vec(nv, r * nm + c));
        // F(a m) = (-1)^{|a| p} a F(m)
        for (size_t a = 0; a < na; ++a) {
            Matrix la = A.left_mult(A.basis(a));
            Scalar s = sgn(A.parity(a) & p);
            for (size_t c = 0; c < nm; ++c)
                for (size_t r = 0; r < na; ++r) {
                    Vec row(nv);
                    for (size_t k = 0; k < nm; ++k) row[r * nm + k] += m.L[a](k, c);
                    for (size_t k = 0; k < na; ++k) row[k * nm + c] -= s * la(r, k);
                    eqs.add(std::move(row));
                }
        }
        std::vector<bool> is_piv(nv, false);
        for (size_t q : eqs.pivots()) is_piv[q] = true;
        auto ker = eqs.kernel();
        size_t idx = 0;
        for (size_t f = 0; f < nv; ++f) {
            if (is_piv[f]) continue;
            Matrix x(na, nm);
            for (size_t v = 0; v < nv; ++v) x(v / nm, v % nm) = ker[idx][v];
            adj.maps.push_back(std::move(x));
            map_parity.push_back(p);
            keys.push_back(f);
            ++idx;
        }
    }
    const size_t nr = adj.maps.size();
    auto coords = [&](const Matrix& x, const std::string& what) {
        Vec v(nr);
        Matrix back(na, nm);
        for (size_t k = 0; k < nr; ++k) {
            v[k] = x(keys[k] / nm, keys[k] % nm);
            if (!v[k].is_zero()) back = back + adj.maps[k].scaled(v[k]);
        }
        if (back != x) adj.report.fail("closed", what + " leaves HOM_A(M, A)");
        return v;
    };

    Bimodule& mr = adj.mr;
    mr.left = m.right;
    mr.right = m.left;
    mr.parity = map_parity;
    mr.name = m.name + "^R";
    for (size_t b = 0; b < B.dim(); ++b) {
        Matrix l(nr, nr);
        for (size_t k = 0; k < nr; ++k) {
            // (b f)(m) = (-1)^{|b|(|f|+|m|)} f(m b)
            Matrix x = adj.maps[k] * m.R[b];
            for (size_t c = 0; c < nm; ++c)
                if (B.parity(b) & (map_parity[k] ^ m.parity[c]))
                    for (size_t r = 0; r < na; ++r) x(r, c) = -x(r, c);
            Vec v = coords(x, "left action");
            for (size_t q = 0; q < nr; ++q) l(q, k) = v[q];
        }
        mr.L.push_back(std::move(l));
    }
    for (size_t a = 0; a < na; ++a) {
        Matrix rr(nr, nr);
        Matrix ra = A.right_mult(A.basis(a));
        for (size_t k = 0; k < nr; ++k) {
            // (f a)(m) = (-1)^{|a||m|} f(m) a
            Matrix x = ra * adj.maps[k];
            for (size_t c = 0; c < nm; ++c)
                if (A.parity(a) & m.parity[c])
                    for (size_t r = 0; r < na; ++r) x(r, c) = -x(r, c);
            Vec v = coords(x, "right action");
            for (size_t q = 0; q < nr; ++q) rr(q, k) = v[q];
        }
        mr.R.push_back(std::move(rr));
    }
    adj.report.pass("closed");
    if (!adj.report.ok()) return adj;
    adj.report.merge(check_bimodule(mr), "adjoint-");

    adj.m_mr = tensor_over(m, mr);
    adj.mr_m = tensor_over(mr, m);
    // ev(m (x) f) = (-1)^{|m||f|} f(m)
    auto ev_raw = [&](size_t i, size_t k) {
        Vec v = adj.maps[k].col(i);
        if (m.parity[i] & map_parity[k])
            for (auto& x : v) x = -x;
        return v;
    };
    try {
        adj.ev = descend(adj.m_mr, na, ev_raw);
    } catch (const StructuralError& e) {
        adj.report.fail("ev-balanced", e.what());
        return adj;
    }
    adj.report.pass("ev-balanced");
    adj.report.merge(check_bimodule_map(BimoduleMap{adj.m_mr.result, regular_bimodule(m.left), adj.ev}), "ev-");

    // coev(1) = sum c_{kj} f_k (x) m_j, even
    std::vector<std::pair<size_t, size_t>> vars;
    for (size_t k = 0; k < nr; ++k)
        for (size_t j = 0; j < nm; ++j)
            if (map_parity[k] == m.parity[j]) vars.push_back({k, j});
    std::vector<Vec> rows;
    Vec rhs;
    // snake on M: sum c_{kj} ev(m_i (x) f_k) m_j = m_i
    for (size_t i = 0; i < nm; ++i) {
        std::vector<Vec> cols;
        for (auto [k, j] : vars) cols.push_back(m.act_left(ev_raw(i, k), m.basis(j)));
        for (size_t r = 0; r < nm; ++r) {
            Vec row(vars.size());
            for (size_t v = 0; v < vars.size(); ++v) row[v] = cols[v][r];
            rows.push_back(std::move(row));
            rhs.push_back(Scalar(i == r ? 1 : 0));
        }
    }
    // b z = z b in the quotient
    for (size_t b = 0; b < B.dim(); ++b) {
        std::vector<Vec> cols;
        for (auto [k, j] : vars) {
            Vec lz = adj.mr_m.pure(mr.L[b].col(k), m.basis(j));
            Vec zr = adj.mr_m.pure(unit_vec(nr, k), m.R[b].col(j));
            for (size_t q = 0; q < lz.size(); ++q) lz[q] -= zr[q];
            cols.push_back(std::move(lz));
        }
        for (size_t q = 0; q < adj.mr_m.dim(); ++q) {
            Vec row(vars.size());
            for (size_t v = 0; v < vars.size(); ++v) row[v] = cols[v][q];
            rows.push_back(std::move(row));
            rhs.push_back(Scalar());
        }
    }
    auto sol = solve(Matrix::from_rows(rows, vars.size()), rhs);
    if (!sol) {
        adj.report.fail("snake-left", "no coevaluation satisfies the snake identity on M");
        return adj;
    }
    adj.report.pass("snake-left");
    Vec raw(adj.mr_m.raw_dim());
    for (size_t v = 0; v < vars.size(); ++v) raw[adj.mr_m.raw(vars[v].first, vars[v].second)] = (*sol)[v];
    adj.coev = adj.mr_m.project(raw);
    adj.coev_map = Matrix(adj.mr_m.dim(), B.dim());
    for (size_t b = 0; b < B.dim(); ++b) {
        Vec bz = adj.mr_m.result.act_left(B.basis(b), adj.coev);
        for (size_t q = 0; q < bz.size(); ++q) adj.coev_map(q, b) = bz[q];
    }
    adj.report.merge(check_bimodule_map(BimoduleMap{regular_bimodule(m.right), adj.mr_m.result, adj.coev_map}),
                     "coev-");
    // snake on M^R: sum c_{kj} f_k ev(m_j (x) f_l) = f_l
    for (size_t l = 0; l < nr; ++l) {
        Vec acc(nr);
        for (size_t v = 0; v < vars.size(); ++v) {
            if ((*sol)[v].is_zero()) continue;
            auto [k, j] = vars[v];
            Vec fa = mr.act_right(unit_vec(nr, k), ev_raw(j, l));
            for (size_t q = 0; q < nr; ++q) acc[q] += (*sol)[v] * fa[q];
        }
        if (acc != unit_vec(nr, l)) adj.report.fail("snake-right", "fails on adjoint basis vector " + std::to_string(l));
    }
    adj.report.pass("snake-right");
    return adj;
}

MoritaContext make_context(const Bimodule& m, const Bimodule& n, const std::function<Vec(size_t, size_t)>& eps_raw,
                           const std::function<Vec(size_t, size_t)>& eta_raw) {
    MoritaContext c;
    c.m = m;
    c.n = n;
    c.mn = tensor_over(m, n);
    c.nm = tensor_over(n, m);
    c.eps = descend(c.mn, m.left->dim(), eps_raw);
    c.eta = descend(c.nm, m.right->dim(), eta_raw);
    return c;
}

Report check_morita_context(const MoritaContext& c) {
    Report r;
    BimoduleMap eps{c.mn.result, regular_bimodule(c.m.left), c.eps};
    BimoduleMap eta{c.nm.result, regular_bimodule(c.m.right), c.eta};
    r.merge(check_bimodule_map(eps), "eps-");
    r.merge(check_bimodule_map(eta), "eta-");
    r.check("eps-iso", inverse(c.eps).has_value(), "eps is not invertible");
    r.check("eta-iso", inverse(c.eta).has_value(), "eta is not invertible");
    const size_t nm = c.m.dim(), nn = c.n.dim();
    for (size_t i = 0; i < nm; ++i)
        for (size_t k = 0; k < nn; ++k)
            for (size_t j = 0; j < nm; ++j) {
                Vec lhs = c.m.act_right(c.m.basis(i), c.eta_pair(c.n.basis(k), c.m.basis(j)));
                Vec rhs = c.m.act_left(c.eps_pair(c.m.basis(i), c.n.basis(k)), c.m.basis(j));
                if (lhs != rhs) r.fail("assoc-M", "(" + std::to_string(i) + "," + std::to_string(k) + "," +
                                                      std::to_string(j) + ")");
            }
    r.pass("assoc-M");
    for (size_t k = 0; k < nn; ++k)
        for (size_t i = 0; i < nm; ++i)
            for (size_t l = 0; l < nn; ++l) {
                Vec lhs = c.n.act_right(c.n.basis(k), c.eps_pair(c.m.basis(i), c.n.basis(l)));
                Vec rhs = c.n.act_left(c.eta_pair(c.n.basis(k), c.m.basis(i)), c.n.basis(l));
                if (lhs != rhs) r.fail("assoc-N", "(" + std::to_string(k) + "," + std::to_string(i) + "," +
                                                      std::to_string(l) + ")");
            }
    r.pass("assoc-N");
    return r;
}

std::optional<MoritaContext> is_invertible(const Bimodule& m) {
    Adjunction adj = right_adjoint(m);
    if (!adj.ok()) return std::nullopt;
    if (!inverse(adj.ev)) return std::nullopt;
    auto eta = inverse(adj.coev_map);
    if (!eta) return std::nullopt;
    MoritaContext c;
    c.m = m;
    c.n = adj.mr;
    c.mn = adj.m_mr;
    c.nm = adj.mr_m;
    c.eps = adj.ev;
    c.eta = *eta;
    return c;
}

MoritaContext parity_context(const AlgPtr& a) {
    Bimodule x = parity_bimodule(a);
    auto mult = [a](size_t i, size_t j) {
        Vec v = a->mul(a->basis(i), a->basis(j));
        if (a->parity(j))
            for (auto& s : v) s = -s;
        return v;
    };
    return make_context(x, x, mult, mult);
}

MoritaContext shift_context(const AlgPtr& a) {
    Bimodule p = parity_shift(regular_bimodule(a));
    // pi m (x) pi m' -> (-1)^{|m|} m m'
    auto mult = [a](size_t i, size_t j) {
        Vec v = a->mul(a->basis(i), a->basis(j));
        if (a->parity(i))
            for (auto& s : v) s = -s;
        return v;
    };
    return make_context(p, p, mult, mult);
}

SerreNaturality serre_naturality(const MoritaContext& c, const Vec* unit_lift) {
    const Bimodule& m = c.m;
    const Bimodule& n = c.n;
    const Superalgebra& A = *m.left;
    const Superalgebra& B = *m.right;
    SerreNaturality out;
    Bimodule as = serre(m.left);
    Bimodule bs = serre(m.right);
    out.src = tensor_over(as, m);
    out.dst = tensor_over(m, bs);

    auto z = solve(c.eps, A.unit());
    if (!z) throw PreconditionError("no unit decomposition: eps does not reach 1");
    Vec lift = c.mn.lift(*z);
    if (unit_lift) {
        if (c.eps * c.mn.project(*unit_lift) != A.unit())
            throw PreconditionError("supplied unit decomposition does not map to 1");
        lift = *unit_lift;
    }
    // eps on raw pairs
    std::vector<std::vector<Vec>> eraw(m.dim(), std::vector<Vec>(n.dim()));
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t k = 0; k < n.dim(); ++k) eraw[i][k] = c.eps * c.mn.project(outer(m.basis(i), n.basis(k)));
    auto eps_vec = [&](const Vec& mv, size_t k) {
        Vec acc(A.dim());
        for (size_t i = 0; i < m.dim(); ++i)
            if (!mv[i].is_zero())
                for (size_t r = 0; r < A.dim(); ++r) acc[r] += mv[i] * eraw[i][k][r];
        return acc;
    };

    auto raw_image = [&](size_t t, size_t j) {
        Vec acc(out.dst.raw_dim());
        for (size_t i = 0; i < m.dim(); ++i)
            for (size_t k = 0; k < n.dim(); ++k) {
                const Scalar& coef = lift[c.mn.raw(i, k)];
                if (coef.is_zero()) continue;
                // (n_k f_t m_j)(b_s) = (-1)^{|n|(|f|+|m|+|b|)} f_t(eps(m_j b_s (x) n_k))
                Vec g(B.dim());
                for (size_t s = 0; s < B.dim(); ++s) {
                    Scalar v = eps_vec(m.R[s].col(j), k)[t];
                    if (v.is_zero()) continue;
                    g[s] = (n.parity[k] & (A.parity(t) ^ m.parity[j] ^ B.parity(s))) ? -v : v;
                }
                Vec term = outer(m.basis(i), g);
                for (size_t q = 0; q < acc.size(); ++q) acc[q] += coef * term[q];
            }
        return out.dst.project(acc);
    };
    out.map = BimoduleMap{out.src.result, out.dst.result, descend(out.src, out.dst.dim(), raw_image)};
    out.report.merge(check_bimodule_map(out.map), "map-");
    out.report.check("iso", inverse(out.map.matrix).has_value(), "Serre naturality map is not invertible");
    return out;
}

ParityNaturality parity_naturality(const Bimodule& m) {
    ParityNaturality out;
    Bimodule ax = parity_bimodule(m.right);
    Bimodule bx = parity_bimodule(m.left);
    out.src = tensor_over(m, ax);
    out.dst = tensor_over(bx, m);
    const Vec& ub = m.left->unit();
    auto raw_image = [&](size_t i, size_t j) {
        Vec v = out.dst.pure(ub, m.R[j].col(i));
        if ((m.parity[i] + m.right->parity(j)) & 1)
            for (auto& s : v) s = -s;
        return v;
    };
    out.map = BimoduleMap{out.src.result, out.dst.result, descend(out.src, out.dst.dim(), raw_image)};
    return out;
}

DualData dual_bimodule(const Bimodule& m) {
    DualData d;
    d.op = opposite_bimodule(m);
    AlgPtr bop = d.op.right;
    Bimodule lhs_mod = external_tensor(regular_bimodule(bop), m);
    Bimodule rhs_mod = external_tensor(d.op, regular_bimodule(m.right));
    d.lhs = tensor_over(ev_bimodule(m.left, true), lhs_mod);
    d.rhs = tensor_over(ev_bimodule(m.right, true), rhs_mod);
    const Vec& ub = m.left->unit();
    const Vec& ua = m.right->unit();
    std::vector<Vec> in, out;
    for (size_t j = 0; j < m.dim(); ++j) {
        in.push_back(d.lhs.pure(ub, outer(ub, m.basis(j))));
        out.push_back(d.rhs.pure(ua, outer(m.basis(j), ua)));
    }
    auto x = solve_map(in, out, d.lhs.dim(), d.rhs.dim());
    if (!x) {
        d.report.fail("filling", "1 (x) 1 (x) m -> 1 (x) m^op (x) 1 does not define a map");
        return d;
    }
    d.report.pass("filling");
    d.filling = BimoduleMap{d.lhs.result, d.rhs.result, *x};
    d.report.merge(check_bimodule_map(d.filling), "filling-");
    d.report.check("filling-iso", inverse(*x).has_value(), "filling is not invertible");
    return d;
}

// ---- random semisimple bimodules ----

namespace {

Bimodule vector_space(const AlgPtr& k, int p, int q) {
    Bimodule m;
    m.left = m.right = k;
    for (int i = 0; i < p + q; ++i) m.parity.push_back(i >= p);
    m.L.push_back(Matrix::identity(p + q));
    m.R.push_back(Matrix::identity(p + q));
    m.name = "C^" + std::to_string(p) + "|" + std::to_string(q);
    return m;
}

// C^{1|1} as a left module over End(C^{1|1}) or Cl_1, right C.
Bimodule defining_module(const AlgPtr& alg, const AlgPtr& k, bool clifford_action) {
    Bimodule m;
    m.left = alg;
    m.right = k;
    m.parity = {0, 1};
    if (clifford_action) {
        Matrix e(2, 2);
        e(0, 1) = e(1, 0) = Scalar(1);
        m.L = {Matrix::identity(2), e};
    } else {
        for (size_t ab = 0; ab < 4; ++ab) {
            Matrix x(2, 2);
            x(ab / 2, ab % 2) = Scalar(1);
            m.L.push_back(x);
        }
    }
    m.R = {Matrix::identity(2)};
    m.name = clifford_action ? "C^1|1(Cl1)" : "C^1|1";
    return m;
}

Matrix random_even_basis(std::mt19937_64& rng, const std::vector<int>& parity) {
    const size_t n = parity.size();
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        Matrix p(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (parity[i] == parity[j]) p(i, j) = Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
        if (inverse(p)) return p;
    }
}

}  // namespace

Bimodule random_semisimple_bimodule(std::mt19937_64& rng, size_t max_dim) {
    AlgPtr k = share(ground_field(Field::C));
    AlgPtr cl1 = share(complex_clifford(1));
    AlgPtr cc = share(direct_sum(ground_field(Field::C), ground_field(Field::C)));
    AlgPtr m11 = share(matrix_superalgebra(1, 1, Field::C));
    std::uniform_int_distribution<int> pick(0, 8);
    Bimodule m;
    for (;;) {
        switch (pick(rng)) {
            case 0: {
                std::uniform_int_distribution<int> d(0, 2);
                int p = d(rng), q = d(rng);
                if (p + q == 0) p = 1;
                m = vector_space(k, p, q);
                break;
            }
            case 1: m = regular_bimodule(cl1); break;
            case 2: m = regular_bimodule(cc); break;
            case 3: m = parity_bimodule(cl1); break;
            case 4: {
                Matrix swap(2, 2);
                swap(0, 1) = swap(1, 0) = Scalar(1);
                m = induced(AlgebraHom{cc, cc, swap});
                break;
            }
            case 5: m = defining_module(m11, k, false); break;
            case 6: m = opposite_bimodule(defining_module(m11, k, false)); break;
            case 7: m = defining_module(cl1, k, true); break;
            default: m = direct_sum(regular_bimodule(cl1), parity_shift(regular_bimodule(cl1))); break;
        }
        if (m.dim() <= max_dim) break;
    }
    if (std::bernoulli_distribution(0.5)(rng)) m = parity_shift(m);
    return change_basis(m, random_even_basis(rng, m.parity));
}

}  // namespace ftft
