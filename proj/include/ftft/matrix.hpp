#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftft/scalar.hpp"

namespace ftft {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, size_t rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    Vec row(size_t i) const;
    Vec col(size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Vec operator*(const Vec& v) const;
    Matrix transpose() const;
    Matrix conj() const;
    bool is_zero() const;
    bool is_identity() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Incrementally maintained reduced row echelon basis of a row space.
// The result only depends on the span, so insertion order never matters.
class RowSpace {
public:
    explicit RowSpace(size_t ncols) : n_(ncols) {}
    // Returns true if the row enlarged the span.
    bool add(Vec row);
    // Reduce v against the basis; returns the remainder.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    size_t rank() const { return rows_.size(); }
    size_t ncols() const { return n_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return piv_; }
    // Null space of the rows (as linear equations), one vector per free column.
    std::vector<Vec> kernel() const;

private:
    size_t n_;
    std::vector<Vec> rows_;     // sorted by pivot
    std::vector<size_t> piv_;
};

struct Rref {
    Matrix R;
    std::vector<size_t> pivots;
};

Rref rref(const Matrix& a);
size_t rank(const Matrix& a);
std::vector<Vec> kernel(const Matrix& a);
// Some x with A x = b (free variables 0) or nothing if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
bool is_zero(const Vec& v);
Vec conj(const Vec& v);

// Systems that are linear over Q but not over Q(i): A x + B conj(x) = b.
// Solved by splitting x into real and imaginary parts.
struct RealSystem {
    size_t n;
    std::vector<Vec> lin;    // coefficient rows on x
    std::vector<Vec> anti;   // coefficient rows on conj(x)
    Vec rhs;

    explicit RealSystem(size_t nvars) : n(nvars) {}
    void add(Vec a, Vec b, Scalar r = Scalar());
    // Basis over Q of the solution space of the homogeneous system.
    std::vector<Vec> kernel() const;
    std::optional<Vec> solve() const;

private:
    Matrix split(Vec* rhs_out) const;
};

}  // namespace ftft
