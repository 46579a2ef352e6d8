#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ftft/bimodule.hpp"
#include "ftft/fgroup.hpp"

namespace ftft {

// Antilinear maps are stored as matrices applied after entrywise conjugation:
// f(v) = F conj(v).
Vec apply_antilinear(const Matrix& f, const Vec& v);

struct StarAlgebra {
    AlgPtr alg;
    Matrix star;
    Vec apply(const Vec& a) const { return apply_antilinear(star, a); }
};
Report check_star(const StarAlgebra& s);
// a* = a^dagger on even and a* = i a^dagger on odd elements.
Matrix dagger_from_star(const Superalgebra& a, const Matrix& star);
Matrix star_from_dagger(const Superalgebra& a, const Matrix& dagger);
// (ab)^dagger = b^dagger a^dagger without signs.
Report check_dagger(const Superalgebra& a, const Matrix& dagger);

StarAlgebra conjugation_star(const AlgPtr& a);  // e_i* = e_i on a purely even basis
StarAlgebra clifford1_star(int sign);           // Cl_1 over C with e* = +-i e
StarAlgebra matrix_adjoint_star(int n);         // M_n(C), conjugate transpose
// conj(a)* = (-1)^{|a|} conj(a*)
StarAlgebra conjugate_star(const StarAlgebra& s);

struct StellarAlgebra {
    AlgPtr alg;
    Bimodule m;      // (A, conj(A)^op)
    Matrix sigma;    // M -> conj(M)^op in the bases m_j and conj(m_j)^op
    std::optional<StarAlgebra> star;  // set when built from a star structure
};
Report check_stellar(const StellarAlgebra& s);
StellarAlgebra stellar_from_star(const StarAlgebra& s);
// C with M = C or Pi C and sigma(z) = a conj(z).
StellarAlgebra stellar_complex(const Scalar& a, bool shifted = false);
// Structure on conj(A): conj(m) x -> (-1)^{|m|} conj(sigma(m)) x.
StellarAlgebra conjugate_stellar(const StellarAlgebra& s);

// N (x)_{A1} M1 (x)_{conj(A1)^op} conj(N)^op, with the raw triple map.
struct TripleTensor {
    TensorProduct t1, t2;
    Bimodule nbar;  // conj(N)^op
    // n_i (x) m_j (x) conj(n_k)^op in t2 coordinates
    Vec pure(size_t i, size_t j, size_t k) const;
};
TripleTensor triple_tensor(const Bimodule& n, const Bimodule& m1);

// Stellar (S2, S1)-bimodule: N is an (A2, A1)-bimodule and phi maps the triple
// tensor to M2.
struct StellarBimodule {
    StellarAlgebra s1, s2;
    Bimodule n;
    Matrix phi;  // M2.dim x triple.dim
};
Report check_stellar_bimodule(const StellarBimodule& b);
// phi' o (psi (x) 1 (x) conj(psi)^op) == phi
bool check_unitary(const Matrix& psi, const StellarBimodule& src, const StellarBimodule& dst);

// Sesquilinear N x N -> B for a (B, A)-bimodule N over star algebras; linear on
// the left, antilinear on the right.
struct HilbertPairing {
    StarAlgebra b, a;
    Bimodule n;
    std::vector<std::vector<Vec>> table;  // <n_i, n_j>
    Vec eval(const Vec& x, const Vec& y) const;
};
Report check_hilbert_pairing(const HilbertPairing& p, bool nondegeneracy = true);
// phi(n (x) a (x) conj(n')^op) = <n a, n'>
StellarBimodule datum_from_pairing(const HilbertPairing& p);
// <n, n'> = phi(n (x) 1 (x) conj(n')^op)
HilbertPairing pairing_from_datum(const StellarBimodule& b, const StarAlgebra& s2, const StarAlgebra& s1);
// <a, b> = a b* on A, and the same on A_{(-1)^F}.
HilbertPairing regular_pairing(const StarAlgebra& s);
HilbertPairing parity_pairing(const StarAlgebra& s);
// Pairing on N2 (x)_B N1:
// <n2 (x) n1, n2' (x) n1'> = (-1)^{|n2'||n1'|} <n2 <n1, n1'>, n2'>.
struct ComposedPairing {
    TensorProduct t;
    HilbertPairing pairing;
};
ComposedPairing compose_pairings(const HilbertPairing& p2, const HilbertPairing& p1);
// <psi x, psi y>' == <x, y>
bool is_unitary(const Matrix& psi, const HilbertPairing& src, const HilbertPairing& dst);
// <conj n1, conj n2> = (-1)^{|n2|} conj <n1, n2>
HilbertPairing conjugate_pairing(const HilbertPairing& p);
// Diagonal values <n_k, n_k> are r * 1 with r in Q+ for even and i Q+ for odd n_k.
bool c_star_positive(const HilbertPairing& p);

enum class MoritaVerdict { Witness, None, NoneInField };
std::string verdict_name(MoritaVerdict v);
struct MoritaSearchResult {
    MoritaVerdict verdict = MoritaVerdict::None;
    std::optional<StellarBimodule> witness;
    size_t candidates = 0;
    std::vector<std::string> notes;
};
// Algebra isomorphisms sending a generating set to scalar multiples of basis
// vectors (scalars 1, -1, i, -i).
std::vector<AlgebraHom> monomial_isomorphisms(const AlgPtr& a, const AlgPtr& b);
// Hermitian bimodule isomorphisms phi on a fixed candidate N, as a Q-basis of
// the real solution space of the Hermiticity system.
std::vector<Matrix> hermitian_data(const StellarAlgebra& s1, const StellarAlgebra& s2, const Bimodule& n);
// For N induced by psi: A1 -> A2, the value x = <1, 1> must satisfy
// psi(a) x = x psi(a*)*. Returns the reason when no even x survives, in which
// case every pairing on N is degenerate.
std::optional<std::string> unit_pairing_obstruction(const StarAlgebra& s2, const StarAlgebra& s1, const AlgebraHom& psi);
// notes carry unit_pairing_obstruction for each monomial isomorphism when no witness exists
MoritaSearchResult morita_search_stellar(const StellarAlgebra& s1, const StellarAlgebra& s2, size_t bound = 4,
                                         const std::vector<Bimodule>& extra = {});

// Super Hermitian space C^{p|q}: <v, w> = v^T h conj(w).
struct HermitianSpace {
    int p = 0, q = 0;
    Matrix h;
    std::vector<int> parity() const;
    size_t dim() const { return size_t(p + q); }
};
Report check_hermitian_space(const HermitianSpace& h);
HermitianSpace standard_hermitian(int p, int q);  // identity on the even part, i on the odd part
// rho[g] acts linearly for theta(g) = 0 and as rho[g] conj(.) for theta(g) = 1.
Report check_unitary_fermionic_rep(const FermionicGroup& g, const HermitianSpace& h, const std::vector<Matrix>& rho);
// Reason no representation on C^{p|q} exists, when a determinant argument shows it.
std::optional<std::string> fermionic_rep_obstruction(const FermionicGroup& g, int p, int q);
bool c_star_positive(const HermitianSpace& h);

}  // namespace ftft
