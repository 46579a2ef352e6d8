#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftft/report.hpp"

namespace ftft {

// Finite group as a full multiplication table on indices 0..n-1.
struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mult;
    int unit = 0;

    int order() const { return static_cast<int>(labels.size()); }
    int mul(int a, int b) const { return mult[a][b]; }
    int inv(int a) const;
    int index(const std::string& label) const;  // throws StructuralError
    int element_order(int a) const;

    // Shape checks only (square, entries in range, unit in range).
    void check_shape() const;
    // Group axioms, reported per clause.
    Report check_axioms() const;
};

struct FermionicGroup {
    FiniteGroup group;
    int c = 0;
    std::vector<int> theta;

    int order() const { return group.order(); }
    int mul(int a, int b) const { return group.mul(a, b); }
    int inv(int a) const { return group.inv(a); }
    const std::string& label(int a) const { return group.labels[a]; }
    int index(const std::string& l) const { return group.index(l); }
};

// Build from labels; throws StructuralError on malformed tables.
FermionicGroup make_fermionic_group(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<std::string>>& mult,
                                    const std::string& unit, const std::string& c,
                                    const std::map<std::string, int>& theta);

// Normalized Z/2-valued 2-cochain on a group (values are powers of c).
struct Cocycle2 {
    std::vector<std::vector<int>> values;
};

Report check_fermionic_group(const FermionicGroup& g);

FermionicGroup opposite(const FermionicGroup& g);

struct FermionicTensor {
    FermionicGroup group;
    // Component pair (g, h) of every element; h is the canonical
    // representative of its {h, c_H h} class.
    std::vector<std::pair<int, int>> pairs;
};
FermionicTensor fermionic_tensor(const FermionicGroup& g, const FermionicGroup& h);

struct BosonicQuotient {
    FermionicGroup gb;          // c = unit
    Cocycle2 omega;
    std::vector<int> section;   // G_b index -> G index
    std::vector<int> proj;      // G index -> G_b index
};
BosonicQuotient bosonic_quotient(const FermionicGroup& g);

bool check_cocycle2(const FiniteGroup& g, const Cocycle2& w);
// Brute force over normalized 1-cochains; fine for the small groups used here.
bool is_coboundary2(const FiniteGroup& g, const Cocycle2& w);

struct SpacetimeGroup1D {
    FermionicGroup h1;
    std::vector<int> to_o1;  // theta as the map to O_1 = Z/2
};
SpacetimeGroup1D spacetime_group_1d(const FermionicGroup& g);

bool iso_witness_check(const FermionicGroup& g, const FermionicGroup& h, const std::vector<int>& map);

// Extend an assignment on generators to a map by closing under products.
// Returns nothing if the generators do not generate or the assignment is
// inconsistent as a function.
std::optional<std::vector<int>> extend_from_generators(const FermionicGroup& g, const std::vector<int>& gens,
                                                       const FermionicGroup& h, const std::vector<int>& images);

struct GroupFingerprint {
    int order = 0;
    int odd_count = 0;
    std::map<int, int> order_histogram;       // element order -> count
    std::map<int, int> odd_order_histogram;
    int center_size = 0;
    bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const FermionicGroup& g);

enum class IsoVerdict { Isomorphic, NotIsomorphic, FingerprintsAgree };
// Exhaustive search up to order 8, fingerprints above.
IsoVerdict compare_groups(const FermionicGroup& g, const FermionicGroup& h, std::vector<int>* witness = nullptr);
std::optional<std::vector<int>> find_isomorphism(const FermionicGroup& g, const FermionicGroup& h);

// Library fixtures.
FermionicGroup trivial_fermionic();   // {1, c}
FermionicGroup pin1_minus();          // Z/4, T^2 = c
FermionicGroup pin1_plus();           // Z/2 x Z/2, T^2 = 1
FermionicGroup quaternion_group();    // Q8, c = -1, i and j odd
FermionicGroup z2c_times_z2(bool odd);  // Z/2^c x Z/2 with the second factor odd or even
FermionicGroup fixture_group(const std::string& name);
std::vector<std::string> fixture_group_names();

}  // namespace ftft
