#pragma once
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftft/superalgebra.hpp"

namespace ftft {

bool same_algebra(const Superalgebra& a, const Superalgebra& b);

// (left, right)-bimodule. L[b] has column m = e_b . m, R[a] has column m = m . e_a.
struct Bimodule {
    AlgPtr left, right;
    std::vector<int> parity;
    std::vector<Matrix> L, R;
    std::string name;

    size_t dim() const { return parity.size(); }
    Vec basis(size_t i) const;
    Matrix left_op(const Vec& b) const;
    Matrix right_op(const Vec& a) const;
    Vec act_left(const Vec& b, const Vec& m) const { return left_op(b) * m; }
    Vec act_right(const Vec& m, const Vec& a) const { return right_op(a) * m; }
    int degree(const Vec& v) const;
};

Report check_bimodule(const Bimodule& m);

struct BimoduleMap {
    Bimodule source, target;
    Matrix matrix;  // target.dim x source.dim
};
Report check_bimodule_map(const BimoduleMap& f);
bool is_bimodule_iso(const BimoduleMap& f);

// N (x)_B M for N a (C,B)- and M a (B,A)-bimodule. Raw basis n_i (x) m_j sits at
// i * M.dim + j; the quotient basis is the set of non-pivot raw columns.
struct TensorProduct {
    Bimodule result;
    size_t n_dim = 0, m_dim = 0;
    std::vector<size_t> free_cols;   // raw index of each quotient basis vector
    std::vector<Vec> relations;      // echelon basis of the relation span
    Matrix proj;                     // quotient x raw

    size_t raw(size_t i, size_t j) const { return i * m_dim + j; }
    size_t raw_dim() const { return n_dim * m_dim; }
    size_t dim() const { return free_cols.size(); }
    Vec project(const Vec& raw_vec) const { return proj * raw_vec; }
    Vec pure(const Vec& n, const Vec& m) const;
    Vec lift(const Vec& q) const;  // canonical raw representative
};
TensorProduct tensor_over(const Bimodule& n, const Bimodule& m);

// Linear map out of a tensor product given on raw pure basis tensors. Throws
// StructuralError if the raw map does not vanish on the relations.
Matrix descend(const TensorProduct& src, size_t out_dim, const std::function<Vec(size_t, size_t)>& raw_image);

// f (x) g between tensor products, for even f, g.
Matrix tensor_maps(const Matrix& f, const Matrix& g, const TensorProduct& src, const TensorProduct& dst);

// Basis of the even bimodule maps M -> N.
std::vector<Matrix> hom_even(const Bimodule& m, const Bimodule& n);

Bimodule regular_bimodule(const AlgPtr& a);
// B with right A-action through phi: b . a = b phi(a).
Bimodule induced(const AlgebraHom& phi);
// A_{(-1)^F}
Bimodule parity_bimodule(const AlgPtr& a);
// Pi M with b . pi m = (-1)^{|b|} pi (b m).
Bimodule parity_shift(const Bimodule& m);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);
// Same bimodule in the basis given by the columns of the even invertible p.
Bimodule change_basis(const Bimodule& m, const Matrix& p);
Bimodule opposite_bimodule(const Bimodule& m);
Bimodule conjugate_bimodule(const Bimodule& m);
// M1 (x) M2 over (B1 (x) B2, A1 (x) A2) with Koszul signs.
Bimodule external_tensor(const Bimodule& m1, const Bimodule& m2);
// A as a (k, A (x) A^op)-bimodule, or over A^op (x) A when op_first.
Bimodule ev_bimodule(const AlgPtr& a, bool op_first = false);
// A* with (f a1)(a2) = f(a1 a2), (a1 f)(a2) = (-1)^{|a1|(|f|+|a2|)} f(a2 a1).
Bimodule serre(const AlgPtr& a);

// Linear map X with X in[k] = out[k]; nothing if the inputs do not span or the
// data is inconsistent.
std::optional<Matrix> solve_map(const std::vector<Vec>& in, const std::vector<Vec>& out, size_t in_dim, size_t out_dim);

// Right adjoint of an (A,B)-bimodule M: M^R = HOM_A(M, A) as a (B,A)-bimodule.
struct Adjunction {
    Bimodule m, mr;
    std::vector<Matrix> maps;  // basis of M^R, each A.dim x M.dim
    TensorProduct m_mr;        // M (x)_B M^R
    TensorProduct mr_m;        // M^R (x)_A M
    Matrix ev;                 // A.dim x m_mr.dim
    Vec coev;                  // coev(1) in mr_m coordinates
    Matrix coev_map;           // mr_m.dim x B.dim
    Report report;
    bool ok() const { return report.ok(); }
};
Adjunction right_adjoint(const Bimodule& m);

// Invertibility data for an (A,B)-bimodule M with inverse N:
// eps: M (x)_B N -> A and eta: N (x)_A M -> B.
struct MoritaContext {
    Bimodule m, n;
    TensorProduct mn, nm;
    Matrix eps, eta;
    Vec eps_pair(const Vec& mv, const Vec& nv) const { return eps * mn.pure(mv, nv); }
    Vec eta_pair(const Vec& nv, const Vec& mv) const { return eta * nm.pure(nv, mv); }
};
MoritaContext make_context(const Bimodule& m, const Bimodule& n, const std::function<Vec(size_t, size_t)>& eps_raw,
                           const std::function<Vec(size_t, size_t)>& eta_raw);
Report check_morita_context(const MoritaContext& c);
// Context built from the right adjoint; nothing if M is not invertible.
std::optional<MoritaContext> is_invertible(const Bimodule& m);
// A_{(-1)^F} as its own inverse: a1 x (x) a2 x -> (-1)^{|a2|} a1 a2.
MoritaContext parity_context(const AlgPtr& a);
// Pi A as its own inverse through multiplication.
MoritaContext shift_context(const AlgPtr& a);

struct SerreNaturality {
    TensorProduct src;  // A* (x)_A M
    TensorProduct dst;  // M (x)_B B*
    BimoduleMap map;
    Report report;
};
// S_M(f (x) m) = sum_j m_j (x) (n_j f m) with sum_j eps(m_j (x) n_j) = 1 and
// (n f m)(b) = (-1)^{|n|(|f|+|m|+|b|)} f(eps(m b (x) n)). `unit_lift` is an optional
// raw representative in M (x) N of the unit decomposition.
SerreNaturality serre_naturality(const MoritaContext& c, const Vec* unit_lift = nullptr);

struct ParityNaturality {
    TensorProduct src;  // M (x)_A A_{(-1)^F}
    TensorProduct dst;  // B_{(-1)^F} (x)_B M
    BimoduleMap map;
};
// m (x) a x -> (-1)^{|m|+|a|} x (x) m a
ParityNaturality parity_naturality(const Bimodule& m);

// M^op as the dual of M: the filling 1 (x) 1 (x) m -> 1 (x) m^op (x) 1 between
// B (x)_{B^op (x) B} (B^op (x) M) and A (x)_{A^op (x) A} (M^op (x) A).
struct DualData {
    Bimodule op;
    TensorProduct lhs, rhs;
    BimoduleMap filling;
    Report report;
};
DualData dual_bimodule(const Bimodule& m);

// Small random semisimple bimodule (dim <= max_dim) for property tests.
Bimodule random_semisimple_bimodule(std::mt19937_64& rng, size_t max_dim = 4);

}  // namespace ftft
