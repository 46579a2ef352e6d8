#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ftft/fgroup.hpp"
#include "ftft/gf2.hpp"
#include "ftft/report.hpp"

namespace ftft {

// Element of a finitely generated abelian group given by cyclic orders
// (0 encodes Z). Stored reduced: component i lies in [0, order_i) for order_i > 0.
using PiElem = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

struct Abelian {
    std::vector<int> orders;
    size_t rank() const { return orders.size(); }
    PiElem zero() const { return PiElem(orders.size(), 0); }
    PiElem normalize(PiElem x) const;
    PiElem add(const PiElem& a, const PiElem& b) const;
    PiElem neg(const PiElem& a) const;
    PiElem apply(const IntMatrix& m, const PiElem& x) const;  // m acts on generators
    bool is_zero(const PiElem& x) const { return normalize(x) == zero(); }
};

// Skeletal 2-group (pi0, pi1, action, k). Action is a matrix per pi0 element;
// k is indexed by (a * n + b) * n + c.
struct SkeletalTwoGroup {
    std::string name;
    FiniteGroup pi0;
    Abelian pi1;
    std::vector<IntMatrix> action;
    std::vector<PiElem> k;

    int n0() const { return pi0.order(); }
    const PiElem& kval(int a, int b, int c) const { return k[(size_t(a) * n0() + b) * n0() + c]; }
    PiElem& kval(int a, int b, int c) { return k[(size_t(a) * n0() + b) * n0() + c]; }
    PiElem act(int g, const PiElem& x) const { return pi1.apply(action[g], x); }
};

// Builds a 2-group with zero associator and trivial action.
SkeletalTwoGroup make_two_group(const FiniteGroup& pi0, std::vector<int> pi1_orders);

Report check_three_cocycle(const SkeletalTwoGroup& tg);

struct TwoGroupMapData {
    std::vector<int> F0;
    IntMatrix F1;               // target rank x source rank
    std::vector<PiElem> Xi;     // indexed a * n0 + b, values in target pi1
};

Report check_map_data(const SkeletalTwoGroup& src, const TwoGroupMapData& m, const SkeletalTwoGroup& tgt);

// The target *//Z2: trivial pi0, pi1 = Z/2.
SkeletalTwoGroup point_mod_z2();

// Extension data (Gamma, Xi) into *//Z2^c as bit patterns.
struct ExtensionData {
    std::vector<int> gamma;                 // value on each pi1 generator
    std::vector<std::vector<int>> xi;       // n0 x n0
};

TwoGroupMapData to_map_data(const SkeletalTwoGroup& gb, const ExtensionData& e);

// Normalized Z/2-valued 2-cochains on pi0 encoded as bit vectors of length
// (n-1)^2 over the non-unit pairs.
struct CochainSpace {
    const FiniteGroup* g;
    std::vector<int> nonunit;       // indices of non-unit elements
    std::vector<int> slot;          // element -> position in nonunit, -1 for unit
    explicit CochainSpace(const FiniteGroup& grp);
    size_t dim2() const { return nonunit.size() * nonunit.size(); }
    Bits encode(const std::vector<std::vector<int>>& xi) const;
    std::vector<std::vector<int>> decode(const Bits& b) const;
    Bits coboundary1(const std::vector<int>& sigma) const;  // d sigma
    // Each row is the linear functional (d xi)(a,b,c) on 2-cochains.
    std::vector<Bits> cocycle_equations(std::vector<std::array<int, 3>>* triples = nullptr) const;
    Gf2Space coboundaries() const;
};

struct H2Data {
    Gf2Space boundaries;
    std::vector<Bits> complement;   // cocycles representing a basis of H^2
    size_t dim() const { return complement.size(); }
};
H2Data h2_z2(const FiniteGroup& g);

struct ExtensionClass {
    std::vector<int> gamma;
    size_t xi_class;                // bit pattern over the H^2 basis
    ExtensionData data;
};

// Admissible Gamma values in counting order, each with its torsor of Xi classes.
std::vector<ExtensionClass> enumerate_extension_maps(const SkeletalTwoGroup& gb);
// Class index of a valid (Gamma, Xi); nothing if not admissible.
std::optional<size_t> classify_extension(const SkeletalTwoGroup& gb, const ExtensionData& e);
bool gamma_admissible(const SkeletalTwoGroup& gb, const std::vector<int>& gamma, std::string* why = nullptr);

// Fermionically skeletal model Z2^c x| G_b built from (Gamma, Xi).
struct FermTwoGroupModel {
    SkeletalTwoGroup base;
    ExtensionData ext;
    // objects are (g, e), index 2 * g + e
    int object_count() const { return 2 * base.n0(); }
    int tensor(int o1, int o2) const;
    // Hom(o1, o2) = {gamma : Gamma(gamma) = e1 + e2} when same pi0 class
    bool hom_nonempty(int o1, int o2) const;
    bool in_hom(int o1, int o2, const PiElem& gamma) const;
    PiElem tensor_morphism(int o1, const PiElem& g1, const PiElem& g2) const;
    PiElem associator(int o1, int o2, int o3) const;
    std::string object_label(int o) const;
    int gamma_of(const PiElem& x) const;
};

FermTwoGroupModel build_ferm_skeletal(const SkeletalTwoGroup& gb, const ExtensionData& e);
Report check_ferm_model(const FermTwoGroupModel& m);

// Semidirect product N x| G for N a discrete finite abelian group (all of
// N's structure lives in pi0), with action given by tables.
struct SemidirectAction {
    std::vector<std::vector<int>> rho;      // per g in pi0(G): automorphism of N as permutation
    std::vector<int> rho_gamma;             // per pi1(G) generator: element of N
    std::vector<std::vector<int>> R;        // n0(G) x n0(G) -> N
};

struct SemidirectProduct {
    FiniteGroup n;
    SkeletalTwoGroup g;
    SemidirectAction act;
    // objects (x, g) with index g * |N| + x
    int object_count() const { return n.order() * g.n0(); }
    int tensor(int o1, int o2) const;
    int shift(const PiElem& gamma) const;  // element of N that gamma moves objects by
    bool hom_nonempty(int o1, int o2) const;
    // Number of morphisms o1 -> o2, or -1 if infinite.
    long hom_size(int o1, int o2) const;
    PiElem associator(int o1, int o2, int o3) const;
    bool skeletal() const;
    SkeletalTwoGroup skeletalize() const;
};

SemidirectProduct semidirect_product(const FiniteGroup& n, const SkeletalTwoGroup& g, const SemidirectAction& a);
Report check_semidirect(const SemidirectProduct& s);
bool is_contractible(const SemidirectProduct& s);
SemidirectAction action_from_extension(const SkeletalTwoGroup& gb, const ExtensionData& e);

struct Spin2ActionData {
    std::vector<int> theta;                 // 1 where g sends eta to c eta^{-1}
    std::vector<std::vector<int>> xi_op;
};
// theta is read off the action on the first pi1 generator when not supplied.
Spin2ActionData spin2_action_data(const SkeletalTwoGroup& gb, const ExtensionData& e,
                                  std::optional<std::vector<int>> theta = std::nullopt);

// Brute-force H^2(G; Z/2) over all normalized cochains. Serial reference and
// OpenMP version; both return (number of cocycles, number of classes).
struct BruteH2 {
    size_t cocycles = 0;
    size_t classes = 0;
};
BruteH2 brute_h2_serial(const FiniteGroup& g);
BruteH2 brute_h2_parallel(const FiniteGroup& g);

// Fixtures: "point", "bz", "bz2", "o2", "pin2-base", "z2-swap", "spin1-rz2f".
SkeletalTwoGroup fixture_two_group(const std::string& name);
std::vector<std::string> fixture_two_group_names();
SkeletalTwoGroup discrete_two_group(const FiniteGroup& g);

}  // namespace ftft
