#include "ftft/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "ftft/errors.hpp"

namespace ftft {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw StructuralError("ragged rows");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw StructuralError("ragged columns");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const {
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw StructuralError("matrix product dimension mismatch");
    Matrix m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
        }
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (c_ != v.size()) throw StructuralError("matrix-vector dimension mismatch");
    Vec out(r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k)
            if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw StructuralError("matrix sum dimension mismatch");
    Matrix m = *this;
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw StructuralError("matrix difference dimension mismatch");
    Matrix m = *this;
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x.conj();
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const { return r_ == c_ && *this == identity(r_); }

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vec conj(const Vec& v) {
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i].conj();
    return w;
}

// ---- RowSpace ----

Vec RowSpace::reduce(Vec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        size_t p = piv_[k];
        if (v[p].is_zero()) continue;
        Scalar f = v[p];
        const Vec& r = rows_[k];
        for (size_t j = p; j < n_; ++j)
            if (!r[j].is_zero()) v[j] -= f * r[j];
    }
    return v;
}

bool RowSpace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool RowSpace::add(Vec row) {
    if (row.size() != n_) throw StructuralError("row length mismatch");
    row = reduce(std::move(row));
    size_t p = 0;
    while (p < n_ && row[p].is_zero()) ++p;
    if (p == n_) return false;
    Scalar inv = row[p].inv();
    for (size_t j = p; j < n_; ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    // clear the new pivot column from existing rows
    for (auto& r : rows_) {
        if (r[p].is_zero()) continue;
        Scalar f = r[p];
        for (size_t j = p; j < n_; ++j)
            if (!row[j].is_zero()) r[j] -= f * row[j];
    }
    auto it = std::lower_bound(piv_.begin(), piv_.end(), p);
    size_t pos = it - piv_.begin();
    piv_.insert(it, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

std::vector<Vec> RowSpace::kernel() const {
    std::vector<bool> is_piv(n_, false);
    for (size_t p : piv_) is_piv[p] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < n_; ++f) {
        if (is_piv[f]) continue;
        Vec v(n_);
        v[f] = Scalar(1);
        for (size_t k = 0; k < rows_.size(); ++k)
            if (!rows_[k][f].is_zero()) v[piv_[k]] = -rows_[k][f];
        out.push_back(std::move(v));
    }
    return out;
}

// ---- dense wrappers ----

Rref rref(const Matrix& a) {
    RowSpace rs(a.cols());
    for (size_t i = 0; i < a.rows(); ++i) rs.add(a.row(i));
    Rref out{Matrix(a.rows(), a.cols()), rs.pivots()};
    for (size_t k = 0; k < rs.rank(); ++k)
        for (size_t j = 0; j < a.cols(); ++j) out.R(k, j) = rs.rows()[k][j];
    return out;
}

size_t rank(const Matrix& a) {
    RowSpace rs(a.cols());
    for (size_t i = 0; i < a.rows(); ++i) rs.add(a.row(i));
    return rs.rank();
}

std::vector<Vec> kernel(const Matrix& a) {
    RowSpace rs(a.cols());
    for (size_t i = 0; i < a.rows(); ++i) rs.add(a.row(i));
    return rs.kernel();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw StructuralError("solve: right-hand side length mismatch");
    size_t n = a.cols();
    RowSpace rs(n + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        r.push_back(b[i]);
        rs.add(std::move(r));
    }
    Vec x(n);
    for (size_t k = 0; k < rs.rank(); ++k) {
        size_t p = rs.pivots()[k];
        if (p == n) return std::nullopt;
        x[p] = rs.rows()[k][n];
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    size_t n = a.rows();
    RowSpace rs(2 * n);
    for (size_t i = 0; i < n; ++i) {
        Vec r = a.row(i);
        r.resize(2 * n);
        r[n + i] = Scalar(1);
        rs.add(std::move(r));
    }
    if (rs.rank() != n || (n > 0 && rs.pivots()[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rs.rows()[i][n + j];
    return inv;
}

// ---- real-linear systems ----

void RealSystem::add(Vec a, Vec b, Scalar r) {
    if (a.empty()) a.assign(n, Scalar());
    if (b.empty()) b.assign(n, Scalar());
    if (a.size() != n || b.size() != n) throw StructuralError("RealSystem row length mismatch");
    lin.push_back(std::move(a));
    anti.push_back(std::move(b));
    rhs.push_back(std::move(r));
}

// Unknowns are (u, v) with x = u + i v; each complex row yields a real and an
// imaginary rational row.
Matrix RealSystem::split(Vec* rhs_out) const {
    Matrix m(2 * lin.size(), 2 * n);
    if (rhs_out) rhs_out->assign(2 * lin.size(), Scalar());
    for (size_t r = 0; r < lin.size(); ++r) {
        for (size_t j = 0; j < n; ++j) {
            Scalar cu = lin[r][j] + anti[r][j];
            Scalar cv = (lin[r][j] - anti[r][j]) * Scalar::I();
            m(2 * r, j) = Scalar(cu.re);
            m(2 * r + 1, j) = Scalar(cu.im);
            m(2 * r, n + j) = Scalar(cv.re);
            m(2 * r + 1, n + j) = Scalar(cv.im);
        }
        if (rhs_out) {
            (*rhs_out)[2 * r] = Scalar(rhs[r].re);
            (*rhs_out)[2 * r + 1] = Scalar(rhs[r].im);
        }
    }
    return m;
}

std::vector<Vec> RealSystem::kernel() const {
    std::vector<Vec> out;
    for (const Vec& w : ftft::kernel(split(nullptr))) {
        Vec x(n);
        for (size_t j = 0; j < n; ++j) x[j] = Scalar(w[j].re, w[n + j].re);
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Vec> RealSystem::solve() const {
    Vec b;
    Matrix m = split(&b);
    auto w = ftft::solve(m, b);
    if (!w) return std::nullopt;
    Vec x(n);
    for (size_t j = 0; j < n; ++j) x[j] = Scalar((*w)[j].re, (*w)[n + j].re);
    return x;
}

}  // namespace ftft
