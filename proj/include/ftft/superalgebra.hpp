#pragma once
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftft/matrix.hpp"
#include "ftft/report.hpp"

namespace ftft {

enum class Field { C, R };

// Finite-dimensional superalgebra by structure constants e_i e_j = sum_k c(i,j,k) e_k.
class Superalgebra {
public:
    Superalgebra() = default;
    Superalgebra(size_t dim, std::vector<int> parity, Field field);

    size_t dim() const { return dim_; }
    const std::vector<int>& parity() const { return parity_; }
    int parity(size_t i) const { return parity_[i]; }
    Field field() const { return field_; }
    const Vec& unit() const { return unit_; }
    void set_unit(Vec u) { unit_ = std::move(u); }
    const Scalar& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    void set(size_t i, size_t j, size_t k, Scalar v);
    void add(size_t i, size_t j, size_t k, const Scalar& v) { set(i, j, k, c(i, j, k) + v); }
    // Nonzero terms of e_i e_j.
    const std::vector<std::pair<size_t, Scalar>>& product(size_t i, size_t j) const { return sparse_[i * dim_ + j]; }

    Vec basis(size_t i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;   // column j = a e_j
    Matrix right_mult(const Vec& a) const;  // column j = e_j a
    // -1 for inhomogeneous or zero vectors.
    int degree(const Vec& a) const;
    size_t even_dim() const;
    size_t odd_dim() const { return dim_ - even_dim(); }
    std::vector<size_t> indices_of_parity(int p) const;
    std::optional<Vec> inverse(const Vec& a) const;

    std::string name;

private:
    size_t dim_ = 0;
    std::vector<int> parity_;
    Field field_ = Field::C;
    std::vector<Scalar> c_;
    std::vector<std::vector<std::pair<size_t, Scalar>>> sparse_;
    Vec unit_;
};

using AlgPtr = std::shared_ptr<const Superalgebra>;
inline AlgPtr share(Superalgebra a) { return std::make_shared<const Superalgebra>(std::move(a)); }

struct AlgebraHom {
    AlgPtr source, target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_superalgebra(const Superalgebra& a);
Report check_algebra_hom(const AlgebraHom& f);
bool iso_witness_check(const Superalgebra& a, const Superalgebra& b, const Matrix& m);

Superalgebra opposite(const Superalgebra& a);
Superalgebra conjugate(const Superalgebra& a);
Superalgebra tensor(const Superalgebra& a, const Superalgebra& b);
Superalgebra direct_sum(const Superalgebra& a, const Superalgebra& b);
Superalgebra ground_field(Field f);
Superalgebra clifford(int p, int q, Field f, int bound = 5);
Superalgebra complex_clifford(int n, int bound = 5);
// End of the super vector space of dimension m|n.
Superalgebra matrix_superalgebra(int m, int n, Field f);
// C as a purely even 2-dimensional real algebra, basis {1, i}.
Superalgebra complex_numbers_real();
// Purely even quaternions over the rationals, basis {1, i, j, k}.
Superalgebra quaternions();
// Q[x]/x^2 with x even.
Superalgebra dual_numbers();

AlgebraHom identity_hom(const AlgPtr& a);
AlgebraHom parity_automorphism(const AlgPtr& a);
// Basis e_i x^s at index s * dim + i.
Superalgebra parity_extension(const Superalgebra& a);
// Algebra map out of a Clifford algebra determined by generator images.
Matrix clifford_map(int p, int q, const Superalgebra& target, const std::vector<Vec>& images);
// Monomial e_S of clifford(p, q) for a generator bitmask.
inline size_t clifford_monomial(unsigned mask) { return mask; }

// Ungraded trace form tr(L_a L_b) on the basis.
Matrix trace_form(const Superalgebra& a);
bool is_semisimple(const Superalgebra& a);
struct SuperdivisionResult {
    bool superdivision = false;
    std::string reason;
    // (u, v) with u v = 0, u and v nonzero, when such a pair was found
    std::optional<std::pair<Vec, Vec>> zero_divisors;
};
SuperdivisionResult superdivision(const Superalgebra& a);
bool is_superdivision(const Superalgebra& a);

struct AlgebraFingerprint {
    size_t even_dim = 0, odd_dim = 0;
    size_t center_dim = 0, supercenter_dim = 0;
    bool semisimple = false;
    size_t trace_rank = 0;
    // signature of the trace form, only for real algebras; (-1,-1) otherwise
    long sig_pos = -1, sig_neg = -1;
    // same form restricted to the even part
    long even_sig_pos = -1, even_sig_neg = -1;
    bool operator==(const AlgebraFingerprint&) const = default;
    std::string str() const;
};
AlgebraFingerprint fingerprint(const Superalgebra& a);

// Sylvester-style signature of a real symmetric matrix.
std::pair<long, long> signature(const Matrix& sym);
std::vector<Vec> center_basis(const Superalgebra& a, bool graded);

}  // namespace ftft
