#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ftft/fgroup.hpp"
#include "ftft/stellar.hpp"

namespace ftft {

enum class FrobMode { Ungraded, BosonicGraded };

struct FrobeniusStructure {
    AlgPtr alg;
    Vec lambda;  // lambda(e_k)
    Scalar operator()(const Vec& a) const;
};
Report check_frobenius(const FrobeniusStructure& f, FrobMode mode);

// Loop of the fermionically skeletal model, presented by its element at the unit.
// gamma = 1 when the loop is sent to c, in which case a_gamma lies in A_c.
struct LoopDatum {
    std::string label;
    int gamma = 1;
    Vec element;
    int order = 0;            // 0 for an infinite cyclic loop group
    std::vector<int> action;  // +1 / -1 per group element (g gamma g^-1 = gamma^{+-1}); empty means trivial
};

// Algebra graded over the objects of a fermionic group, stored as one real
// superalgebra. Each component is spanned by a subset of the ambient basis.
struct GradedAlgebraBundle {
    FermionicGroup grading;
    AlgPtr ambient;
    std::vector<std::vector<size_t>> components;  // indexed by group element
    Vec i;       // in A_1
    Vec parity;  // (-1)^F in A_c; ignored when c is the unit
    std::vector<LoopDatum> loops;

    bool bosonic() const { return grading.c == grading.group.unit; }
    int component_of(size_t basis_index) const;
    int unit() const { return grading.group.unit; }
};
Report check_graded_bundle(const GradedAlgebraBundle& b);

// Complex views of the components: A_1 as a complex superalgebra and A_g as an
// (A_1, conj^{theta(g)}(A_1))-bimodule, in complex bases chosen inside the
// ambient basis.
struct ComplexView {
    AlgPtr a1;
    AlgPtr a1_conj;
    std::vector<std::vector<Vec>> basis;  // ambient vectors, per component
    std::vector<Bimodule> modules;
    std::vector<Matrix> coord;            // real coordinates solver per component
    Vec to_complex(int g, const Vec& ambient_vec) const;
    Vec to_real(int g, const Vec& coords) const;
    size_t ambient_dim = 0;
    std::vector<std::vector<size_t>> support;
    int unit = 0;
};
ComplexView complex_view(const GradedAlgebraBundle& b);

// lambda(a_g a_{g^-1}) = conj^{theta(g)} lambda(a_{g^-1} a_g), with the Koszul sign when c = 1.
Report check_frobenius_compat(const GradedAlgebraBundle& b, const ComplexView& v, const FrobeniusStructure& f);
Report check_frobenius_compat(const GradedAlgebraBundle& b, const FrobeniusStructure& f);
// S(lambda (x) a_g) = (-1)^{|a_g|} a_g (x) conj(lambda) per component, without
// the sign when c = 1; flag
// "agrees-with-compat" records the comparison with check_frobenius_compat.
Report serre_frobenius_check(const GradedAlgebraBundle& b, const ComplexView& v, const FrobeniusStructure& f);
Report serre_frobenius_check(const GradedAlgebraBundle& b, const FrobeniusStructure& f);

// Coefficients of <a_g, b_g> = alpha a_g b_g^dagger, indexed theta * 4 + |a_g| * 2 + |b_g|.
using AlphaTable = std::array<Scalar, 8>;
AlphaTable standard_alpha(int i_sign = 1);
std::string alpha_str(const AlphaTable& a);

struct TftBundle2D {
    GradedAlgebraBundle bundle;
    StarAlgebra star;                     // on the complex view of A_1
    std::vector<HilbertPairing> pairings; // per component
    FrobeniusStructure frobenius;
    std::optional<Matrix> dagger;         // ambient real *-structure, when built from one
};
Report check_tft2d(const TftBundle2D& t);

// Z/2-graded real *-structure: real-linear, involutive, (ab)^dagger = b^dagger a^dagger,
// i^dagger = -i and A_g^dagger = A_{g^-1}.
Report check_ambient_dagger(const GradedAlgebraBundle& b, const Matrix& dagger);
// Star on the complex A_1: a* = a^dagger on even and i_sign * i a^dagger on odd elements.
StarAlgebra star_from_ambient_dagger(const ComplexView& v, const Matrix& dagger, int i_sign = 1);
std::vector<HilbertPairing> pairings_from_dagger(const GradedAlgebraBundle& b, const ComplexView& v,
                                                 const StarAlgebra& star, const Matrix& dagger, const AlphaTable& alpha);
// Throws PreconditionError listing the failing clauses.
TftBundle2D construct_from_dagger(const GradedAlgebraBundle& b, const Matrix& dagger, const Vec& lambda);
// Report-returning variant for file input: bundle, dagger and all check_tft2d
// clauses, with the standard alpha table.
Report check_tft2d_data(const GradedAlgebraBundle& b, const Matrix& dagger, const Vec& lambda);

struct AlphaFixture {
    GradedAlgebraBundle bundle;
    Matrix dagger;
};
struct AlphaSurvivor {
    AlphaTable table;
    int i_sign = 1;  // convention a* = i_sign * i a^dagger on odd elements
};
// Brute force over {+-1, +-i}^8 for both conventions of the odd star.
std::vector<AlphaSurvivor> alpha_oracle(const std::vector<AlphaFixture>& fixtures);

// Mixed-group bundles over a complex base algebra B = A_1:
// A_g = B x_g, x_g b = twist_g(conj^{theta(g)} b) x_g, x_g x_h = omega(g,h) x_{gh},
// (-1)^F = z x_c and x_g^dagger = d_g x_{g^-1}.
struct BundleSpec {
    FermionicGroup grading;
    AlgPtr base;
    std::vector<int> parity;                 // |x_g|
    std::vector<Matrix> twist;               // per g, complex matrix on B
    std::vector<std::vector<Vec>> omega;     // values in B
    Vec parity_scalar;                       // z
    std::string name;
};
GradedAlgebraBundle build_bundle(const BundleSpec& s);
// Ambient vector of b x_g for b in B.
Vec bundle_element(const BundleSpec& s, int g, const Vec& b);
// Real *-structure from an antilinear dagger on B and the coefficients d_g.
Matrix bundle_dagger(const BundleSpec& s, const Matrix& base_dagger, const std::vector<Vec>& d);

// Fixtures. All use lambda(1) = 1 on A_1.
struct BundleFixture {
    BundleSpec spec;
    GradedAlgebraBundle bundle;
    Matrix dagger;
    Vec lambda;
};
BundleFixture trivial_theory(const FermionicGroup& g);
// Pin1+ with A_1 = C or Cl_1, |x_T|, x_T^2 = square, x_T^dagger = dagger_sign x_T.
BundleFixture pin_tft(int xt_parity, int xt_square, int dagger_sign, bool clifford_base = false);
// Pin1- (Z/4) with A_1 = C; x_T^4 = -1 and (-1)^F = i x_T^2 when x_T is odd.
BundleFixture pin1_minus_tft(int xt_parity);
// Spin_2: objects {1, c}, loop a_gamma = w x_c. A_1 = Cl_1 gives the twisted-centrality failure.
BundleFixture spin2_tft(const Scalar& w, bool clifford_base = false, int loop_order = 0);
// Pin_2^-: Z/4 objects, loop a_gamma = w x_{T^2} inverted by T.
BundleFixture pin2_minus_tft(const Scalar& w);
std::vector<std::string> bundle_fixture_names();

// 1D theories. Bilinear mode: representation R of H_0 on C^{p|q} (even part
// first) and bilinear forms _g<v, w> = v^T F_g w for theta(g) = 1.
struct TftBundle1D {
    FermionicGroup h;
    int p = 0, q = 0;
    std::vector<Matrix> rep;    // per element, used for theta = 0
    std::vector<Matrix> forms;  // per element, used for theta = 1
    std::vector<int> parity() const;
};
// Clauses rep, cond1, cond2, cond3, nondegenerate, parity-orthogonal. cond3 is
// _{g^-1}<v, w> = (-1)^{|v||w|} _{g'^-1}<w, R((g g')^-1) v>; the variant with
// R(g g') is recorded in flag "cond3-displayed".
Report check_tft1d(const TftBundle1D& t);
// From a unitary fermionic representation of G to a bilinear-mode theory on
// H = opposite(G): R(h) = rho(h^-1), and the form at the section element s is
// _s<v, w> = <v, rho(s) w>; the other forms follow from cond1.
TftBundle1D convert_1d(const FermionicGroup& g, const HermitianSpace& h, const std::vector<Matrix>& rho, int section);
// Reverse direction: rho(g) = R(g^-1) on the even part and the antilinear
// rho(g) with <v, rho(g) w> = _g<v, w> on the odd part.
std::vector<Matrix> rep_from_1d(const TftBundle1D& t, const FermionicGroup& g, const HermitianSpace& h);

// Representation generated by images of group generators, using
// rho(t x) = rho(t) conj^{theta(t)}(rho(x)). Throws StructuralError if the
// generators do not generate.
std::vector<Matrix> generate_rep(const FermionicGroup& g, const std::vector<std::pair<int, Matrix>>& gens, size_t n);
struct RepFixture {
    std::string name;
    FermionicGroup group;
    HermitianSpace space;
    std::vector<Matrix> rho;
    int section = -1;  // a time-reversing element
};
std::vector<RepFixture> rep_fixtures();

}  // namespace ftft
