#pragma once
// Reference computations used to cross-check the library: they reach the same
// answers through different routes (linear solves, ranks, brute force).
#include <optional>
#include <vector>

#include "ftft/bimodule.hpp"
#include "ftft/errors.hpp"
#include "ftft/frob.hpp"
#include "ftft/stellar.hpp"
#include "ftft/superalgebra.hpp"

namespace ftft::reference {

// Serre naturality from its pairing characterisation: S is the unique map with
// <S(f (x) m), n> = f(eps(m (x) n)), where the pairing on M (x)_B B* against N is
// <m' (x) g, n> = (-1)^{|m'|(|g|+|n|)} g(eta(n (x) m')).
inline std::optional<Matrix> serre_by_pairing(const MoritaContext& c, const TensorProduct& src,
                                              const TensorProduct& dst) {
    const Bimodule& m = c.m;
    const Bimodule& n = c.n;
    const Superalgebra& B = *m.right;
    Matrix pair(n.dim(), dst.dim());
    for (size_t q = 0; q < dst.dim(); ++q) {
        size_t i = dst.free_cols[q] / dst.m_dim, s = dst.free_cols[q] % dst.m_dim;
        for (size_t k = 0; k < n.dim(); ++k) {
            Scalar v = c.eta_pair(n.basis(k), m.basis(i))[s];
            if (m.parity[i] & (B.parity(s) ^ n.parity[k])) v = -v;
            pair(k, q) = v;
        }
    }
    if (rank(pair) != dst.dim()) return std::nullopt;
    Matrix out(dst.dim(), src.dim());
    for (size_t q = 0; q < src.dim(); ++q) {
        size_t t = src.free_cols[q] / src.m_dim, j = src.free_cols[q] % src.m_dim;
        Vec rhs(n.dim());
        for (size_t k = 0; k < n.dim(); ++k) rhs[k] = c.eps_pair(m.basis(j), n.basis(k))[t];
        auto y = solve(pair, rhs);
        if (!y) return std::nullopt;
        for (size_t r = 0; r < dst.dim(); ++r) out(r, q) = (*y)[r];
    }
    return out;
}

inline size_t commutant_dim(const std::vector<Matrix>& ops, size_t n) {
    RowSpace eqs(n * n);
    for (const auto& x : ops)
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                Vec row(n * n);
                for (size_t k = 0; k < n; ++k) {
                    row[r * n + k] += x(k, c);
                    row[k * n + c] -= x(r, k);
                }
                eqs.add(std::move(row));
            }
    return n * n - eqs.rank();
}

inline size_t action_rank(const std::vector<Matrix>& ops, size_t n) {
    RowSpace rs(n * n);
    for (const auto& x : ops) {
        Vec v(n * n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) v[r * n + c] = x(r, c);
        rs.add(std::move(v));
    }
    return rs.rank();
}

// Over semisimple algebras an (A,B)-bimodule is invertible iff both actions are
// faithful and each algebra is the full commutant of the other.
inline bool invertible_by_rank(const Bimodule& m) {
    const size_t n = m.dim(), a = m.left->dim(), b = m.right->dim();
    return action_rank(m.L, n) == a && action_rank(m.R, n) == b && commutant_dim(m.R, n) == a &&
           commutant_dim(m.L, n) == b;
}

// a = x * vol in the parity extension of Cl(p,q)
inline Vec parity_extension_element(const Superalgebra& ext, int n_gen) {
    Vec x = ext.basis(ext.dim() / 2);
    Vec vol = ext.basis((size_t(1) << n_gen) - 1);
    return ext.mul(x, vol);
}

// Explicit isomorphism from the predicted algebra to parity_extension(Cl(p,q)):
// Cl(p,q+1), Cl(p,q) x Cl(p,q), Cl(p,q) (x) C or Cl(p+1,q) by (p - q) mod 4.
inline bool parity_extension_witness(int p, int q) {
    Superalgebra cl = clifford(p, q, Field::R);
    Superalgebra ext = parity_extension(cl);
    const int n = p + q;
    std::vector<Vec> gens;
    for (int g = 0; g < n; ++g) gens.push_back(ext.basis(size_t(1) << g));
    Vec a = parity_extension_element(ext, n);
    const int r = (((p - q) % 4) + 4) % 4;
    if (r == 1) {
        auto g = gens;
        g.push_back(a);
        return iso_witness_check(clifford(p, q + 1, Field::R), ext, clifford_map(p, q + 1, ext, g));
    }
    if (r == 3) {
        auto g = gens;
        g.insert(g.begin() + p, a);
        return iso_witness_check(clifford(p + 1, q, Field::R), ext, clifford_map(p + 1, q, ext, g));
    }
    Matrix base = clifford_map(p, q, ext, gens);
    const size_t d = cl.dim();
    if (r == 0) {
        Superalgebra sum = direct_sum(cl, cl);
        Vec e1 = ext.unit(), e2 = ext.unit();
        for (size_t k = 0; k < ext.dim(); ++k) {
            e1[k] = (e1[k] + a[k]) * Scalar(1, 2);
            e2[k] = (e2[k] - a[k]) * Scalar(1, 2);
        }
        Matrix m(ext.dim(), 2 * d);
        for (size_t s = 0; s < d; ++s) {
            Vec v1 = ext.mul(base.col(s), e1), v2 = ext.mul(base.col(s), e2);
            for (size_t k = 0; k < ext.dim(); ++k) {
                m(k, s) = v1[k];
                m(k, d + s) = v2[k];
            }
        }
        return iso_witness_check(sum, ext, m);
    }
    Superalgebra t = tensor(cl, complex_numbers_real());
    Matrix m(ext.dim(), 2 * d);
    for (size_t s = 0; s < d; ++s) {
        Vec v1 = base.col(s), v2 = ext.mul(base.col(s), a);
        for (size_t k = 0; k < ext.dim(); ++k) {
            m(k, 2 * s) = v1[k];
            m(k, 2 * s + 1) = v2[k];
        }
    }
    return iso_witness_check(t, ext, m);
}

// +1 or -1 when a^2 = +-1, 0 otherwise
inline int parity_extension_square(int p, int q) {
    Superalgebra ext = parity_extension(clifford(p, q, Field::R));
    Vec a = parity_extension_element(ext, p + q);
    Vec sq = ext.mul(a, a);
    Vec u = ext.unit();
    if (sq == u) return 1;
    for (auto& x : u) x = -x;
    return sq == u ? -1 : 0;
}

struct RepSearch {
    size_t candidates = 0;
    size_t solutions = 0;
};

// Every antilinear R on C^{0|q} with entries in {0, +-1, +-i}, plus all
// unit-modulus Gaussian rationals with denominator <= 65 when q = 1, tried as
// the image of the generator t.
inline RepSearch antilinear_rep_search(const FermionicGroup& g, int t, size_t q) {
    std::vector<Scalar> entries{Scalar(0), Scalar(1), Scalar(-1), Scalar::I(), -Scalar::I()};
    if (q == 1)
        for (long c = 2; c <= 65; ++c)
            for (long a = 1; a < c; ++a)
                for (long b = 1; b < c; ++b)
                    if (a * a + b * b == c * c)
                        for (int sa : {1, -1})
                            for (int sb : {1, -1}) entries.push_back(Scalar(mpq_class(sa * a, c), mpq_class(sb * b, c)));
    HermitianSpace h = standard_hermitian(0, int(q));
    RepSearch out;
    const size_t cells = q * q;
    std::vector<size_t> idx(cells, 0);
    for (bool more = true; more;) {
        Matrix r(q, q);
        for (size_t k = 0; k < cells; ++k) r(k / q, k % q) = entries[idx[k]];
        ++out.candidates;
        if (inverse(r)) {
            try {
                if (check_unitary_fermionic_rep(g, h, generate_rep(g, {{t, r}}, q)).ok()) ++out.solutions;
            } catch (const StructuralError&) {
            }
        }
        more = false;
        for (size_t k = 0; k < cells; ++k) {
            if (++idx[k] < entries.size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }
    return out;
}

}  // namespace ftft::reference
